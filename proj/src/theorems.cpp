#include "latcheck/theorems.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "latcheck/decide.hpp"
#include "latcheck/feasibility.hpp"
#include "latcheck/lattice.hpp"
#include "latcheck/oracle.hpp"

namespace latcheck {

namespace {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

void all_matrices(std::size_t m, std::size_t n, long lo, long hi, std::vector<MatrixOperator> &out)
{
	std::vector<long> e(m * n, lo);
	while (true) {
		std::vector<Rational> a(e.begin(), e.end());
		out.emplace_back(m, n, std::move(a));
		std::size_t i = 0;
		while (i < e.size() && e[i] == hi)
			e[i++] = lo;
		if (i == e.size())
			return;
		++e[i];
	}
}

Rational random_rational(Rng &rng, long mag, long max_den)
{
	long p = std::uniform_int_distribution<long>(-mag, mag)(rng);
	long q = std::uniform_int_distribution<long>(1, max_den)(rng);
	return Rational(p, q);
}

Rational random_nonzero(Rng &rng, long mag, long max_den)
{
	Rational r;
	while (r.is_zero())
		r = random_rational(rng, mag, max_den);
	return r;
}

MatrixOperator random_instance(Rng &rng, std::size_t max_n)
{
	const std::size_t n = 1 + rng() % max_n;
	const unsigned kind = rng() % 3;
	while (true) {
		std::vector<Rational> a(n * n);
		if (kind == 2) {
			for (auto &x : a)
				x = random_rational(rng, 3, 3);
		} else {
			std::vector<std::size_t> perm(n);
			std::iota(perm.begin(), perm.end(), 0);
			std::shuffle(perm.begin(), perm.end(), rng);
			for (std::size_t r = 0; r < n; ++r)
				a[r * n + perm[r]] = random_nonzero(rng, 5, 4);
			if (kind == 1 && n > 1) {
				std::size_t r = rng() % n, c = rng() % n;
				if (c == perm[r])
					c = (c + 1) % n;
				a[r * n + c] = random_nonzero(rng, 3, 2);
			}
		}
		MatrixOperator t(n, n, std::move(a));
		if (rank(t) == n)
			return t;
	}
}

// ---- per-instance context ---------------------------------------------

bool holds(const Verdict &v)
{
	return v.status == Status::holds;
}

bool injective(const MatrixOperator &t)
{
	return rank(t) == t.cols();
}

bool bijective(const MatrixOperator &t)
{
	return t.rows() == t.cols() && injective(t);
}

CoordVector random_vector(Rng &rng, std::size_t n)
{
	CoordVector x(n, Rational(0));
	for (auto &c : x)
		if (rng() % 4)
			c = random_nonzero(rng, 3, 2);
	return x;
}

// Random element of the span of `basis` (zero when the basis is empty).
CoordVector random_combination(Rng &rng, const std::vector<CoordVector> &basis, std::size_t n)
{
	CoordVector x(n, Rational(0));
	for (const auto &b : basis) {
		Rational c = random_rational(rng, 3, 1);
		for (std::size_t i = 0; i < n; ++i)
			x[i] += c * b[i];
	}
	return x;
}

// Null space of the rows of t outside `rows`: coefficient vectors whose
// image is supported in `rows`.
std::vector<CoordVector> supported_preimages(const MatrixOperator &t, const std::vector<std::size_t> &rows)
{
	std::vector<std::size_t> keep;
	for (std::size_t r = 0; r < t.rows(); ++r)
		if (!std::binary_search(rows.begin(), rows.end(), r))
			keep.push_back(r);
	if (keep.empty()) {
		std::vector<CoordVector> basis;
		for (std::size_t i = 0; i < t.cols(); ++i)
			basis.push_back(unit_vector(t.cols(), i));
		return basis;
	}
	return kernel_basis(select_rows(t, keep));
}

std::vector<std::size_t> support(const CoordVector &x)
{
	std::vector<std::size_t> s;
	for (std::size_t i = 0; i < x.size(); ++i)
		if (!x[i].is_zero())
			s.push_back(i);
	return s;
}

struct Tally {
	std::size_t applicable = 0, checks = 0, violations = 0;
	std::string detail;
};

// Records one implication check; returns false on a violation.
bool expect(Tally &t, bool ok, const std::string &what)
{
	++t.checks;
	if (!ok) {
		if (t.violations++ == 0)
			t.detail = what;
	}
	return ok;
}

using Check = std::function<void(const MatrixOperator &, Rng &, std::size_t, Tally &)>;

void check_cor23(const MatrixOperator &t, Rng &rng, std::size_t samples, Tally &out)
{
	if (!holds(decide_beta_matrix(t)))
		return;
	++out.applicable;
	const Space y = Space::coord(t.rows());
	const Space x = Space::coord(t.cols());
	for (std::size_t s = 0; s < samples; ++s) {
		CoordVector v = random_vector(rng, t.cols());
		auto abs_v = std::get<CoordVector>(lat_abs(x, v));
		if (!expect(out, width_leq(y, t.apply(abs_v), t.apply(v)), "T|x| is not in the band of Tx"))
			return;
	}
}

void check_kernel_ideal(const MatrixOperator &t, Rng &rng, std::size_t samples, Tally &out)
{
	if (!holds(decide_beta_matrix(t)))
		return;
	auto ker = kernel_basis(t);
	if (ker.empty())
		return;
	++out.applicable;
	for (std::size_t s = 0; s < samples; ++s) {
		CoordVector x = random_combination(rng, ker, t.cols());
		// |y| <= |x| coordinatewise.
		CoordVector y(x.size());
		for (std::size_t i = 0; i < x.size(); ++i)
			y[i] = x[i] * Rational(std::uniform_int_distribution<long>(-4, 4)(rng), 4);
		if (!expect(out, is_zero(Element(t.apply(y))), "|y| <= |x| with Tx = 0 but Ty != 0"))
			return;
	}
}

void check_thm24(const MatrixOperator &t, Rng &rng, std::size_t samples, Tally &out)
{
	if (!holds(decide_beta_matrix(t)) || !injective(t))
		return;
	++out.applicable;
	const Space x = Space::coord(t.cols());
	const Space y = Space::coord(t.rows());
	// Draws until `samples` nonzero disjoint pairs were checked; with one
	// column there are none.
	std::size_t pairs = 0;
	for (std::size_t attempt = 0; pairs < samples && attempt < 50 * samples; ++attempt) {
		// y1 = T x1 for a random x1; y2 ranges over images supported off
		// supp(y1), so y1 ⊥ y2 when both are nonzero.
		CoordVector x1 = random_vector(rng, t.cols());
		auto a = support(t.apply(x1));
		std::vector<std::size_t> b;
		for (std::size_t r = 0; r < t.rows(); ++r)
			if (!std::binary_search(a.begin(), a.end(), r) && rng() % 4)
				b.push_back(r);
		CoordVector x2 = random_combination(rng, supported_preimages(t, b), t.cols());
		auto y1 = t.apply(x1), y2 = t.apply(x2);
		if (is_zero(Element(y1)) || is_zero(Element(y2)) || !disjoint(y, y1, y2))
			continue;
		++pairs;
		if (!expect(out, disjoint(x, x1, x2), "disjoint images with non-disjoint preimages"))
			return;
	}
}

void check_thm32(const MatrixOperator &t, Rng &rng, std::size_t samples, Tally &out)
{
	// Q^n is Dedekind complete and so has sufficiently many components.
	if (!holds(decide_dp_matrix(t)) || !injective(t))
		return;
	++out.applicable;
	const Space x = Space::coord(t.cols());
	const Space y = Space::coord(t.rows());
	for (std::size_t s = 0; s < samples; ++s) {
		CoordVector x0 = random_vector(rng, t.cols());
		auto y0 = t.apply(x0);
		CoordVector x1 = random_combination(rng, supported_preimages(t, support(y0)), t.cols());
		if (!width_leq(y, t.apply(x1), y0))
			continue;
		if (!expect(out, width_leq(x, x1, x0), "Tx ⊲ Tx0 but x is not narrower than x0"))
			return;
	}
}

void check_prop33(const MatrixOperator &t, Rng &, std::size_t, Tally &out)
{
	if (!bijective(t) || !holds(decide_dp_matrix(t)))
		return;
	auto inv = invert(t);
	if (!holds(decide_dp_matrix(inv)))
		return;
	++out.applicable;
	expect(out, holds(decide_beta_matrix(inv)), "d-isomorphism whose inverse fails (β)");
}

void check_thm34(const MatrixOperator &t, Rng &, std::size_t, Tally &out)
{
	if (!bijective(t))
		return;
	++out.applicable;
	expect(out, holds(decide_dp_matrix(t)) == holds(decide_beta_matrix(invert(t))),
	       "DP(T) and (β) for the inverse disagree");
}

void check_prop36(const MatrixOperator &t, Rng &, std::size_t, Tally &out)
{
	if (!bijective(t) || !holds(decide_dp_matrix(t)))
		return;
	++out.applicable;
	expect(out, holds(decide_beta_matrix(t)) == holds(decide_dp_matrix(invert(t))),
	       "(β) for T and DP of the inverse disagree");
}

void check_thm27(const MatrixOperator &t, Rng &, std::size_t, Tally &out)
{
	// Every matrix is regular (difference of its positive and negative parts).
	if (!holds(decide_dp_matrix(t)))
		return;
	++out.applicable;
	expect(out, holds(decide_beta_matrix(t)), "DP matrix failing (β)");
}

void check_thm42(const MatrixOperator &t, Rng &, std::size_t, Tally &out)
{
	++out.applicable;
	expect(out, holds(decide_beta_matrix(t)) == holds(decide_beta0_matrix(t)), "(β) and (β₀) disagree");
}

void check_beta_beta0(const MatrixOperator &t, Rng &, std::size_t, Tally &out)
{
	if (!holds(decide_beta_matrix(t)))
		return;
	++out.applicable;
	expect(out, holds(decide_beta0_matrix(t)), "(β) without (β₀)");
}

void check_beta_beta_plus(const MatrixOperator &t, Rng &, std::size_t, Tally &out)
{
	if (!holds(decide_beta_matrix(t)))
		return;
	++out.applicable;
	expect(out, holds(decide_beta_plus_matrix(t)), "(β) without (β₊)");
}

const std::vector<std::pair<std::string, Check>> &registry()
{
	static const std::vector<std::pair<std::string, Check>> r{
		{"cor2.3", check_cor23},
		{"kernel_ideal", check_kernel_ideal},
		{"thm2.4", check_thm24},
		{"thm2.7", check_thm27},
		{"thm3.2", check_thm32},
		{"prop3.3", check_prop33},
		{"thm3.4", check_thm34},
		{"prop3.6", check_prop36},
		{"thm4.2", check_thm42},
		{"beta_implies_beta0", check_beta_beta0},
		{"beta_implies_beta_plus", check_beta_beta_plus},
	};
	return r;
}

std::string describe_matrix(const MatrixOperator &t)
{
	std::ostringstream os;
	os << '[';
	for (std::size_t r = 0; r < t.rows(); ++r) {
		os << (r ? ",[" : "[");
		for (std::size_t c = 0; c < t.cols(); ++c)
			os << (c ? "," : "") << t.at(r, c);
		os << ']';
	}
	os << ']';
	return os.str();
}

} // namespace

std::vector<MatrixOperator> corpus(std::string_view name)
{
	std::vector<MatrixOperator> out;
	const bool all = name == "exhaustive";
	if (all || name == "ternary3x3")
		for (std::size_t m = 1; m <= 3; ++m)
			for (std::size_t n = 1; n <= 3; ++n)
				all_matrices(m, n, -1, 1, out);
	if (all || name == "quinary2x2")
		all_matrices(2, 2, -2, 2, out);
	if (out.empty())
		throw std::invalid_argument("unknown corpus: " + std::string(name));
	return out;
}

std::vector<MatrixOperator> random_invertible(std::size_t count, std::size_t max_n, std::uint64_t seed)
{
	if (max_n == 0)
		throw std::invalid_argument("max_n must be positive");
	std::vector<MatrixOperator> out;
	out.reserve(count);
	for (std::size_t i = 0; i < count; ++i) {
		Rng rng(splitmix64(seed + i));
		out.push_back(random_instance(rng, max_n));
	}
	return out;
}

const std::vector<std::string> &theorem_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> v;
		for (const auto &[n, _] : registry())
			v.push_back(n);
		return v;
	}();
	return names;
}

TheoremReport check_theorem(std::string_view name, const std::vector<MatrixOperator> &matrices,
                            std::uint64_t seed, std::size_t samples)
{
	const auto &r = registry();
	auto it = std::find_if(r.begin(), r.end(), [&](const auto &e) { return e.first == name; });
	if (it == r.end())
		throw std::invalid_argument("unknown theorem: " + std::string(name));
	TheoremReport report;
	report.theorem = it->first;
	report.seed = seed;
	Tally tally;
	for (std::size_t i = 0; i < matrices.size(); ++i) {
		Rng rng(splitmix64(seed ^ (0x5851f42d4c957f2dULL * (i + 1))));
		const std::size_t before = tally.violations;
		it->second(matrices[i], rng, samples, tally);
		++report.instances;
		if (tally.violations > before && !report.counterexample) {
			report.counterexample = matrices[i];
			tally.detail += " at T = " + describe_matrix(matrices[i]);
		}
	}
	report.applicable = tally.applicable;
	report.checks = tally.checks;
	report.violations = tally.violations;
	report.detail = std::move(tally.detail);
	return report;
}

AuditReport oracle_audit(const std::vector<MatrixOperator> &matrices)
{
	using Decider = Verdict (*)(const MatrixOperator &);
	using Oracle = Verdict (*)(const MatrixOperator &, const OracleBudget &);
	struct Pair {
		Property p;
		Decider decide;
		Oracle oracle;
	};
	static const Pair pairs[] = {
		{Property::dp, decide_dp_matrix, oracle_dp},
		{Property::beta, decide_beta_matrix, oracle_beta},
		{Property::beta0, decide_beta0_matrix, oracle_beta0},
		{Property::beta_plus, decide_beta_plus_matrix, oracle_beta_plus},
	};
	AuditReport report;
	for (const auto &t : matrices) {
		++report.instances;
		bool bad = false;
		std::string why;
		for (const auto &pr : pairs) {
			++report.comparisons;
			Verdict d = pr.decide(t), o = pr.oracle(t, {});
			bool ok = d.status == o.status && o.status != Status::unknown;
			for (const auto *v : {&d, &o})
				if (v->status == Status::fails && !verify_certificate(t, pr.p, *v->witness))
					ok = false;
			if (!ok) {
				++report.disagreements;
				if (!bad)
					why = std::string(to_string(pr.p)) + ": decide=" + std::string(to_string(d.status)) +
					      " oracle=" + std::string(to_string(o.status));
				bad = true;
			}
		}
		if (bad && !report.first_disagreement) {
			report.first_disagreement = t;
			report.detail = why + " at T = " + describe_matrix(t);
		}
	}
	return report;
}

} // namespace latcheck
