// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "latcheck/commands.hpp"
#include "latcheck/decide.hpp"
#include "latcheck/json_io.hpp"
#include "latcheck/lattice.hpp"
#include "latcheck/oracle.hpp"
#include "latcheck/theorems.hpp"
#include "oracles.hpp"

using namespace latcheck;

namespace {

struct Outcome {
	bool pass = true;
	std::string failure;
	std::ostringstream detail;

	// Records a failed requirement; keeps the first message.
	void require(bool ok, const std::string &what)
	{
		if (ok || !pass)
			return;
		pass = false;
		failure = what;
	}
};

int failures = 0;

void criterion(int n, double limit_s, const std::function<void(Outcome &)> &body)
{
	Outcome o;
	const auto start = std::chrono::steady_clock::now();
	try {
		body(o);
	} catch (const std::exception &e) {
		o.require(false, std::string("exception: ") + e.what());
	}
	const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	if (limit_s > 0)
		o.require(secs < limit_s, "exceeded the time limit");
	if (!o.pass)
		++failures;
	char t[32];
	std::snprintf(t, sizeof t, "%.2fs", secs);
	std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << (o.pass ? o.detail.str() : o.failure)
	          << "  [" << t << "]" << std::endl;
}

void theorem(Outcome &o, const std::string &name, const std::vector<MatrixOperator> &ms, std::uint64_t seed,
             std::size_t samples = 100)
{
	auto r = check_theorem(name, ms, seed, samples);
	o.require(r.violations == 0, name + ": " + r.detail);
	o.require(r.applicable > 0, name + ": no applicable instances");
	o.detail << name << " applicable=" << r.applicable << " checks=" << r.checks << " violations=" << r.violations
	         << "; ";
}

Verdict decide_matrix(const MatrixOperator &t, Property p)
{
	switch (p) {
	case Property::dp:
		return decide_dp_matrix(t);
	case Property::beta:
		return decide_beta_matrix(t);
	case Property::beta0:
		return decide_beta0_matrix(t);
	default:
		return decide_beta_plus_matrix(t);
	}
}

Verdict oracle_matrix(const MatrixOperator &t, Property p)
{
	switch (p) {
	case Property::dp:
		return oracle_dp(t);
	case Property::beta:
		return oracle_beta(t);
	case Property::beta0:
		return oracle_beta0(t);
	default:
		return oracle_beta_plus(t);
	}
}

std::string run_cli(const std::string &args)
{
	const std::string cmd = std::string(LATCHECK_CLI) + " " + args;
	FILE *p = popen(cmd.c_str(), "r");
	if (!p)
		throw std::runtime_error("cannot run " + cmd);
	std::string out;
	char buf[4096];
	std::size_t k;
	while ((k = fread(buf, 1, sizeof buf, p)) > 0)
		out.append(buf, k);
	pclose(p);
	return out;
}

} // namespace

int main()
{
	const auto exhaustive = corpus("exhaustive");
	const Property props[] = {Property::dp, Property::beta, Property::beta0, Property::beta_plus};

	criterion(1, 120, [&](Outcome &o) {
		std::size_t comparisons = 0, disagreements = 0, certificates = 0;
		for (const auto &t : exhaustive)
			for (auto p : props) {
				auto d = decide_matrix(t, p), q = oracle_matrix(t, p);
				++comparisons;
				if (d.status != q.status) {
					++disagreements;
					o.require(false, "disagreement on " + to_json(t).dump() + " for " + std::string(to_string(p)));
				}
				for (const auto *v : {&d, &q})
					if (v->status == Status::fails) {
						o.require(v->witness && verify_certificate(t, p, *v->witness), "certificate rejected");
						++certificates;
					}
				if (q.status == Status::holds)
					o.require(q.search_report.exhausted_patterns, "oracle holds without exhausting the patterns");
			}
		o.detail << exhaustive.size() << " matrices, " << comparisons << " comparisons, " << disagreements
		         << " disagreements, " << certificates << " certificates re-verified";
	});

	criterion(2, 60, [&](Outcome &o) {
		auto ms = random_invertible(1000, 6, 2024);
		o.require(ms.size() == 1000, "corpus size");
		theorem(o, "thm3.4", ms, 2024);
	});

	criterion(3, 0, [&](Outcome &o) { theorem(o, "thm4.2", exhaustive, 3); });

	criterion(4, 0, [&](Outcome &o) {
		theorem(o, "thm2.4", exhaustive, 4);
		theorem(o, "prop3.3", exhaustive, 4);
		theorem(o, "prop3.6", exhaustive, 4);
	});

	criterion(5, 0, [&](Outcome &o) {
		theorem(o, "cor2.3", exhaustive, 5);
		theorem(o, "kernel_ideal", exhaustive, 5);
	});

	criterion(6, 5, [&](Outcome &o) {
		for (std::size_t n : {1, 2, 8}) {
			auto inst = gallery("ex4.4", {n, {3, 4}});
			const auto &t = std::get<MatrixOperator>(inst.op);
			const SearchBudget budget{1000, 0};
			auto bp = run_property(inst.op, Property::beta_plus, budget);
			auto b = run_property(inst.op, Property::beta, budget);
			auto dp = run_property(inst.op, Property::dp, budget);
			o.require(bp.status == Status::holds, "β₊ does not hold");
			o.require(b.status == Status::fails && verify_certificate(t, Property::beta, *b.witness),
			          "β has no verified witness");
			o.require(dp.status == Status::fails && verify_certificate(t, Property::dp, *dp.witness),
			          "DP has no verified witness");
			// e = -1 on the negative grid points, 1 on the positive ones.
			CoordVector e(2 * n, Rational(1)), abs_e(2 * n, Rational(1));
			for (std::size_t i = 0; i < n; ++i)
				e[i] = -1;
			o.require(is_zero(Element(t.apply(e))), "Te != 0");
			o.require(!is_zero(Element(t.apply(abs_e))), "T|e| = 0");
			GalleryConfig g{"ex4.4", {n, {3, 4}}, 0, 1000, Format::json};
			auto rep = Json::parse(cmd_gallery(g).output);
			for (const auto &c : rep.at("certificates"))
				o.require(c.at("verified") == true, "report certificate not verified");
			for (const auto &c : rep.at("claims"))
				o.require(c.at("outcome") == "agrees", "claim diverges");
		}
		o.detail << "n=1,2,8: β₊ holds, β and DP fail with verified witnesses, Te = 0 and T|e| != 0";
	});

	criterion(7, 5, [&](Outcome &o) {
		const auto t = std::get<PLRankOperator>(gallery("ex2.5").op);
		o.require(decide_beta_pl_rank(t).status == Status::holds, "β not decided to hold");
		o.require(!image_disjoint_pair(t), "decider found a disjoint image pair");
		// Independent scan: a + b·t on [0,1] for (a,b) in {-4..4}^2.
		std::size_t pairs = 0;
		std::vector<PLFunction> imgs;
		for (long a = -4; a <= 4; ++a)
			for (long b = -4; b <= 4; ++b)
				if (a || b)
					imgs.push_back(t.apply({a, b}));
		for (const auto &f : imgs)
			for (const auto &g : imgs) {
				++pairs;
				o.require(!oracle::pl_disjoint(f, g), "disjoint image pair on the coefficient grid");
			}
		o.detail << "β holds; no nonzero disjoint pair in TX (decider and " << pairs << " grid pairs)";
	});

	criterion(8, 10, [&](Outcome &o) {
		auto inst = gallery("ex2.6");
		const SearchBudget budget{10000, 0};
		auto b = run_property(inst.op, Property::beta, budget);
		o.require(b.status == Status::fails, "β not refuted");
		if (b.witness) {
			const auto &tb = std::get<GermSum>(b.witness->at("Tb"));
			o.require(std::get<GermSum>(b.witness->at("b")) == GermSum::unit(), "witness b is not 1");
			o.require(tb.left.is_zero() && tb.right.is_zero() && tb.lambda == Rational(1), "T1 != (0,0,1)");
		}
		auto dp = run_property(inst.op, Property::dp, budget);
		o.require(dp.status == Status::fails, "no DP refutation");
		if (dp.witness) {
			const auto &x = std::get<GermSum>(dp.witness->at("x"));
			const auto &y = std::get<GermSum>(dp.witness->at("y"));
			const auto tx = std::get<GermSum>(evaluate(inst.op, x));
			const auto ty = std::get<GermSum>(evaluate(inst.op, y));
			o.require(oracle::germ_disjoint_pointwise(x, y), "x, y not pointwise disjoint");
			o.require(!oracle::germ_disjoint_direct(tx, ty), "Tx, Ty disjoint in the direct sum");
		}
		auto rep = Json::parse(cmd_gallery({"ex2.6", {}, 0, 10000, Format::json}).output);
		bool flagged = false;
		for (const auto &c : rep.at("claims"))
			if (c.at("property") == "dp")
				flagged = c.at("outcome") == "diverges";
		o.require(flagged, "divergence not flagged");
		o.detail << "β fails with b = 1, T1 = (0,0,1); DP refuted by a pointwise-verified witness (trials="
		         << dp.search_report.trials << "); divergence from the claimed DP flagged";
	});

	criterion(9, 0, [&](Outcome &o) {
		gen::Rng rng(9);
		const Space spaces[] = {Space::coord(4), Space::pl(0, 1), Space::germ_pointwise(), Space::germ_direct()};
		std::size_t identities = 0, components = 0;
		for (const Space &s : spaces)
			for (int trial = 0; trial < 500; ++trial) {
				auto x = gen::random_element(rng, s), y = gen::random_element(rng, s), z = gen::random_element(rng, s);
				auto inf = [&](const Element &a, const Element &b) { return lat_inf(s, a, b); };
				auto sup = [&](const Element &a, const Element &b) { return lat_sup(s, a, b); };
				const Element zero = s.zero();
				const bool ok[] = {
					inf(x, y) == inf(y, x),
					sup(x, y) == sup(y, x),
					inf(inf(x, y), z) == inf(x, inf(y, z)),
					sup(sup(x, y), z) == sup(x, sup(y, z)),
					inf(x, sup(x, y)) == x,
					sup(x, inf(x, y)) == x,
					inf(add(s, x, z), add(s, y, z)) == add(s, inf(x, y), z),
					inf(scale(s, 3, x), scale(s, 3, y)) == scale(s, 3, inf(x, y)),
					add(s, inf(x, y), sup(x, y)) == add(s, x, y),
					lat_abs(s, x) == add(s, sup(x, zero), sup(scale(s, -1, x), zero)),
					inf(x, sup(y, z)) == sup(inf(x, y), inf(x, z)),
				};
				for (bool b : ok) {
					++identities;
					o.require(b, "lattice identity violated in " + s.name());
				}
				// Every sum of atoms is a component: |x'| ∧ |x - x'| = 0.
				auto atoms = components_of(s, x);
				for (unsigned mask = 1; mask < (1u << std::min<std::size_t>(atoms.size(), 10)); ++mask) {
					Element part = zero;
					for (std::size_t i = 0; i < atoms.size(); ++i)
						if (mask >> i & 1)
							part = add(s, part, atoms[i]);
					++components;
					o.require(is_zero(inf(lat_abs(s, part), lat_abs(s, sub(s, x, part)))),
					          "component identity violated in " + s.name());
				}
			}
		const Space pl = Space::pl(0, 1);
		auto witness = has_component_witness(pl, PLFunction::constant(0, 1, 1),
		                                     PLFunction::tent(0, 1, 0, Rational(1, 2)));
		o.require(witness.status == Status::fails, "1 vs tent does not fail");

		std::size_t region_pairs = 0, point_checks = 0;
		for (int trial = 0; trial < 10000; ++trial) {
			auto a = gen::random_region(rng), b = gen::random_region(rng);
			auto pts = oracle::sample_points({&a, &b});
			while (pts.size() < 1000)
				pts.push_back(Rational(gen::pick(rng, 0, 997), 997));
			const Region u = region_union(a, b), i = region_intersect(a, b), d = region_difference(a, b),
			             c = region_complement(a);
			for (const auto &t : pts) {
				const bool ina = oracle::member(a, t), inb = oracle::member(b, t);
				const bool good = oracle::member(u, t) == (ina || inb) && oracle::member(i, t) == (ina && inb) &&
				                  oracle::member(d, t) == (ina && !inb) && oracle::member(c, t) == !ina;
				++point_checks;
				if (!good) {
					o.require(false, "region algebra disagrees with the membership oracle");
					break;
				}
			}
			o.require(oracle::canonical(u) && oracle::canonical(i) && oracle::canonical(d) && oracle::canonical(c),
			          "non-canonical region");
			++region_pairs;
		}
		o.detail << identities << " identities, " << components << " components, 1 vs tent fails, " << region_pairs
		         << " region pairs x " << point_checks / region_pairs << " points";
	});

	criterion(10, 0, [&](Outcome &o) {
		CheckConfig c{"inline", R"({"kind":"germ_sum","resolution":"3/4"})", {}, 11, 500, Format::json};
		o.require(cmd_check(c).output == cmd_check(c).output, "check output differs");
		GalleryConfig g{"ex2.6", {}, 11, 500, Format::json};
		o.require(cmd_gallery(g).output == cmd_gallery(g).output, "gallery output differs");
		FuzzConfig f;
		f.theorem = "all";
		f.trials = 200;
		f.seed = 11;
		f.format = Format::json;
		o.require(cmd_fuzz(f).output == cmd_fuzz(f).output, "fuzz output differs");
		const std::string args[] = {
			"gallery ex2.6 --format json --seed 11 --budget 2000",
			"gallery ex4.4 --n 8 --format json --seed 11",
			"fuzz --theorem all --trials 300 --seed 11 --format json",
			"oracle-audit --corpus quinary2x2 --format json",
		};
		for (const auto &a : args) {
			auto first = run_cli(a), second = run_cli(a);
			o.require(!first.empty() && first == second, "CLI output differs for: " + a);
			o.require(Json::accept(first), "CLI output is not JSON: " + a);
		}
		o.detail << "in-process and CLI JSON reports byte-identical across repeated runs";
	});

	std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << failures << " failing criteria)"
	          << std::endl;
	return failures ? 1 : 0;
}
