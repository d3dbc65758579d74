#include "latcheck/commands.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "latcheck/decide.hpp"
#include "latcheck/json_io.hpp"
#include "latcheck/lattice.hpp"
#include "latcheck/theorems.hpp"

namespace latcheck {

std::uint64_t default_budget()
{
	const char *env = std::getenv("LATCHECK_DEFAULT_BUDGET");
	if (!env || !*env)
		return 10000;
	std::string s(env);
	if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
		throw std::invalid_argument("LATCHECK_DEFAULT_BUDGET must be a non-negative integer, got \"" + s + "\"");
	return std::stoull(s);
}

namespace {

bool pl_rank_decidable(const PLRankOperator &t)
{
	return t.columns.size() <= 2 && t.columns_independent();
}

Verdict decide(const Operator &op, Property p, const SearchBudget &budget)
{
	if (const auto *t = std::get_if<MatrixOperator>(&op)) {
		switch (p) {
		case Property::dp:
			return decide_dp_matrix(*t);
		case Property::beta:
			return decide_beta_matrix(*t);
		case Property::beta0:
			return decide_beta0_matrix(*t);
		case Property::beta_plus:
			return decide_beta_plus_matrix(*t);
		case Property::d_isomorphism:
			return decide_d_isomorphism_matrix(*t);
		}
	}
	if (const auto *t = std::get_if<PLRankOperator>(&op)) {
		if (p == Property::dp)
			return decide_dp_pl_rank(*t);
		if (p != Property::d_isomorphism && pl_rank_decidable(*t)) {
			if (p == Property::beta)
				return decide_beta_pl_rank(*t);
			if (p == Property::beta0)
				return decide_beta0_pl_rank(*t);
			return decide_beta_plus_pl_rank(*t);
		}
	}
	return refute_search(op, p, budget);
}

std::vector<Property> all_properties(const Operator &op)
{
	std::vector<Property> ps{Property::dp, Property::beta, Property::beta0, Property::beta_plus};
	if (std::holds_alternative<MatrixOperator>(op))
		ps.push_back(Property::d_isomorphism);
	return ps;
}

std::string kind_label(const Operator &op)
{
	std::ostringstream os;
	os << kind_name(op);
	if (const auto *t = std::get_if<MatrixOperator>(&op))
		os << ' ' << t->rows() << 'x' << t->cols();
	else if (const auto *t = std::get_if<PLRankOperator>(&op))
		os << " k=" << t->columns.size() << " on " << t->columns[0].domain();
	os << ": " << domain_space(op).name() << " -> " << codomain_space(op).name();
	return os.str();
}

std::string show(const Element &x)
{
	std::ostringstream os;
	os << x;
	return os.str();
}

void render_verdict(std::ostream &os, const Verdict &v)
{
	const Property p = parse_property(v.property);
	os << "  [" << to_string(v.status) << "] " << v.property << ": " << describe(p) << '\n';
	if (v.lemma)
		os << "      decided by: " << *v.lemma << '\n';
	if (v.witness) {
		os << "      witness: " << v.witness->relation << '\n';
		for (const auto &[name, e] : v.witness->elements)
			os << "        " << name << " = " << show(e) << '\n';
	}
	const auto &r = v.search_report;
	os << "      trials=" << r.trials << " seed=" << r.seed << " exhausted_patterns=" << (r.exhausted_patterns ? "yes" : "no")
	   << '\n';
}

std::string dump(const Json &j)
{
	return j.dump(2) + "\n";
}

int exit_for(const std::vector<Verdict> &vs)
{
	for (const auto &v : vs)
		if (v.status == Status::unknown)
			return exit_unknown;
	return exit_decisive;
}

CommandResult input_error(const std::string &msg)
{
	return {exit_input_error, "error: " + msg + "\n"};
}

} // namespace

Verdict run_property(const Operator &op, Property p, const SearchBudget &budget)
{
	Verdict v = decide(op, p, budget);
	v.search_report.seed = budget.seed;
	if (v.status == Status::fails) {
		const bool matrix = std::holds_alternative<MatrixOperator>(op);
		const Property check = p == Property::d_isomorphism && !matrix ? Property::dp : p;
		if (!v.witness || !verify_certificate(op, check, *v.witness))
			throw std::logic_error("refusing to report an unverifiable certificate for " + v.property);
	}
	return v;
}

CommandResult cmd_check(const CheckConfig &cfg)
{
	Operator op = MatrixOperator::identity(1);
	SearchBudget budget;
	try {
		op = operator_from_json(parse_json(cfg.text, cfg.source));
		budget = {cfg.budget ? *cfg.budget : default_budget(), cfg.seed};
	} catch (const InputError &e) {
		return input_error(e.what());
	} catch (const std::invalid_argument &e) {
		return input_error(cfg.source + ": " + e.what());
	}
	auto props = cfg.properties.empty() ? all_properties(op) : cfg.properties;
	std::vector<Verdict> verdicts;
	for (auto p : props)
		verdicts.push_back(run_property(op, p, budget));

	CommandResult res{exit_for(verdicts), {}};
	if (cfg.format == Format::json) {
		Json vs = Json::array();
		for (const auto &v : verdicts)
			vs.push_back(to_json(v));
		res.output = dump(Json{{"command", "check"},
		                       {"source", cfg.source},
		                       {"seed", cfg.seed},
		                       {"budget", budget.trials},
		                       {"operator", to_json(op)},
		                       {"verdicts", std::move(vs)}});
		return res;
	}
	std::ostringstream os;
	os << "check " << cfg.source << "  seed=" << cfg.seed << " budget=" << budget.trials << '\n';
	os << "operator: " << kind_label(op) << '\n';
	for (const auto &v : verdicts)
		render_verdict(os, v);
	res.output = os.str();
	return res;
}

namespace {

struct Extra {
	std::string title;
	bool verified = false;
	std::vector<std::pair<std::string, Element>> elements;
	std::string note;
};

// Fold operator: the odd vector e spans part of the kernel while T|e| != 0, so the
// kernel is not an ideal.
Extra fold_kernel_certificate(const MatrixOperator &t)
{
	const std::size_t n = t.cols() / 2;
	CoordVector e(2 * n, Rational(1));
	for (std::size_t i = 0; i < n; ++i)
		e[i] = -1;
	const Space x = Space::coord(t.cols());
	Element abs_e = lat_abs(x, e);
	Element te = t.apply(e), tabs = t.apply(std::get<CoordVector>(abs_e));
	Extra out{"kernel is not an ideal", is_zero(te) && !is_zero(tabs), {}, {}};
	out.elements = {{"e", e}, {"Te", te}, {"|e|", abs_e}, {"T|e|", tabs}};
	out.note = "Te = 0 but T|e| != 0; e has full support, so (β) would force T to vanish";
	return out;
}

Extra image_scan(const PLRankOperator &t)
{
	Extra out{"image disjointness scan", false, {}, {}};
	if (!pl_rank_decidable(t)) {
		out.note = "not decidable for this operator";
		return out;
	}
	if (auto pair = image_disjoint_pair(t)) {
		out.verified = disjoint(codomain_space(t), t.apply(pair->first), t.apply(pair->second));
		out.elements = {{"a", pair->first}, {"b", pair->second}};
		out.note = "nonzero a, b with Ta ⊥ Tb";
	} else {
		out.verified = true;
		out.note = "no nonzero disjoint pair exists in TX";
	}
	return out;
}

Extra unit_image(const Operator &op)
{
	Element one = GermSum::unit();
	Element t1 = evaluate(op, one);
	const auto &g = std::get<GermSum>(t1);
	Extra out{"image of the unit", g.left.is_zero() && g.right.is_zero() && g.lambda == Rational(1), {}, {}};
	out.elements = {{"1", one}, {"T1", t1}};
	out.note = "T1 = (0, 0, 1) has no function summands, so no left bump is narrower than T1";
	return out;
}

Json to_json(const Extra &x)
{
	Json elems = Json::object();
	for (const auto &[n, e] : x.elements)
		elems[n] = to_json(e);
	return Json{{"title", x.title}, {"verified", x.verified}, {"elements", std::move(elems)}, {"note", x.note}};
}

} // namespace

CommandResult cmd_gallery(const GalleryConfig &cfg)
{
	GalleryInstance inst{"", MatrixOperator::identity(1), {}};
	SearchBudget budget;
	try {
		inst = gallery(cfg.name, cfg.params);
		budget = {cfg.budget ? *cfg.budget : default_budget(), cfg.seed};
	} catch (const std::invalid_argument &e) {
		return input_error(e.what());
	}
	std::vector<Verdict> verdicts;
	std::map<Property, Status> observed;
	for (auto p : all_properties(inst.op)) {
		verdicts.push_back(run_property(inst.op, p, budget));
		observed[p] = verdicts.back().status;
	}
	std::vector<Extra> extras;
	if (const auto *t = std::get_if<MatrixOperator>(&inst.op))
		extras.push_back(fold_kernel_certificate(*t));
	else if (const auto *t = std::get_if<PLRankOperator>(&inst.op))
		extras.push_back(image_scan(*t));
	else
		extras.push_back(unit_image(inst.op));

	struct Row {
		const Claim *claim;
		Status seen;
		std::string outcome;
	};
	std::vector<Row> rows;
	for (const auto &c : inst.claims) {
		Status seen = observed.at(c.property);
		std::string outcome = seen == Status::unknown ? "undecided" : seen == c.expected ? "agrees" : "diverges";
		rows.push_back({&c, seen, outcome});
	}

	CommandResult res{exit_for(verdicts), {}};
	if (cfg.format == Format::json) {
		Json vs = Json::array(), cs = Json::array(), xs = Json::array();
		for (const auto &v : verdicts)
			vs.push_back(to_json(v));
		for (const auto &r : rows)
			cs.push_back(Json{{"property", std::string(to_string(r.claim->property))},
			                  {"claimed", std::string(to_string(r.claim->expected))},
			                  {"observed", std::string(to_string(r.seen))},
			                  {"outcome", r.outcome},
			                  {"source", r.claim->source}});
		for (const auto &x : extras)
			xs.push_back(to_json(x));
		res.output = dump(Json{{"command", "gallery"},
		                       {"name", inst.name},
		                       {"seed", cfg.seed},
		                       {"budget", budget.trials},
		                       {"params", Json{{"n", cfg.params.n}, {"resolution", to_json(cfg.params.resolution)}}},
		                       {"operator", to_json(inst.op)},
		                       {"verdicts", std::move(vs)},
		                       {"claims", std::move(cs)},
		                       {"certificates", std::move(xs)}});
		return res;
	}
	std::ostringstream os;
	os << "gallery " << inst.name << "  seed=" << cfg.seed << " budget=" << budget.trials << '\n';
	os << "operator: " << kind_label(inst.op) << '\n';
	for (const auto &v : verdicts)
		render_verdict(os, v);
	os << "claims:\n";
	for (const auto &r : rows) {
		os << "  " << to_string(r.claim->property) << ": claimed " << to_string(r.claim->expected) << ", observed "
		   << to_string(r.seen) << "  " << r.outcome << " (" << r.claim->source << ")\n";
		if (r.outcome == "diverges")
			os << "    FLAG: the model disagrees with the construction's claim; the witness above re-verifies\n";
	}
	for (const auto &x : extras) {
		os << "certificate: " << x.title << (x.verified ? " [verified]" : " [NOT verified]") << '\n';
		for (const auto &[n, e] : x.elements)
			os << "    " << n << " = " << show(e) << '\n';
		os << "    " << x.note << '\n';
	}
	res.output = os.str();
	return res;
}

namespace {

Json to_json(const TheoremReport &r)
{
	return Json{{"theorem", r.theorem},
	            {"seed", r.seed},
	            {"instances", r.instances},
	            {"applicable", r.applicable},
	            {"checks", r.checks},
	            {"violations", r.violations},
	            {"counterexample", r.counterexample ? to_json(*r.counterexample) : Json(nullptr)},
	            {"detail", r.detail}};
}

} // namespace

CommandResult cmd_fuzz(const FuzzConfig &cfg)
{
	std::vector<std::string> names;
	std::vector<MatrixOperator> matrices;
	try {
		if (cfg.theorem == "all") {
			names = theorem_names();
		} else {
			const auto &known = theorem_names();
			if (std::find(known.begin(), known.end(), cfg.theorem) == known.end())
				throw std::invalid_argument("unknown theorem: " + cfg.theorem);
			names = {cfg.theorem};
		}
		matrices = cfg.corpus ? corpus(*cfg.corpus) : random_invertible(cfg.trials, cfg.max_n, cfg.seed);
	} catch (const std::invalid_argument &e) {
		return input_error(e.what());
	}
	std::vector<TheoremReport> reports;
	for (const auto &n : names)
		reports.push_back(check_theorem(n, matrices, cfg.seed, cfg.samples));

	CommandResult res;
	for (const auto &r : reports)
		if (r.violations)
			res.exit_code = exit_violation;
	const std::string source = cfg.corpus ? *cfg.corpus : "random_invertible";
	if (cfg.format == Format::json) {
		Json rs = Json::array();
		for (const auto &r : reports)
			rs.push_back(to_json(r));
		res.output = dump(Json{{"command", "fuzz"},
		                       {"corpus", source},
		                       {"matrices", matrices.size()},
		                       {"seed", cfg.seed},
		                       {"samples", cfg.samples},
		                       {"reports", std::move(rs)}});
		return res;
	}
	std::ostringstream os;
	os << "fuzz  corpus=" << source << " matrices=" << matrices.size() << " seed=" << cfg.seed
	   << " samples=" << cfg.samples << '\n';
	for (const auto &r : reports) {
		os << "  " << r.theorem << ": instances=" << r.instances << " applicable=" << r.applicable
		   << " checks=" << r.checks << " violations=" << r.violations << '\n';
		if (r.violations)
			os << "    COUNTEREXAMPLE: " << r.detail << '\n';
	}
	res.output = os.str();
	return res;
}

CommandResult cmd_oracle_audit(const AuditConfig &cfg)
{
	std::vector<MatrixOperator> matrices;
	try {
		matrices = corpus(cfg.corpus);
	} catch (const std::invalid_argument &e) {
		return input_error(e.what());
	}
	auto r = oracle_audit(matrices);
	CommandResult res{r.disagreements ? exit_violation : exit_decisive, {}};
	const std::size_t agree = r.comparisons - r.disagreements;
	if (cfg.format == Format::json) {
		res.output = dump(Json{{"command", "oracle-audit"},
		                       {"corpus", cfg.corpus},
		                       {"instances", r.instances},
		                       {"comparisons", r.comparisons},
		                       {"agreements", agree},
		                       {"disagreements", r.disagreements},
		                       {"first_disagreement", r.first_disagreement ? to_json(*r.first_disagreement) : Json(nullptr)},
		                       {"detail", r.detail}});
		return res;
	}
	std::ostringstream os;
	os << "oracle-audit  corpus=" << cfg.corpus << " instances=" << r.instances << '\n';
	os << "  comparisons=" << r.comparisons << " agreements=" << agree << " disagreements=" << r.disagreements
	   << '\n';
	if (r.disagreements)
		os << "  first disagreement: " << r.detail << '\n';
	res.output = os.str();
	return res;
}

} // namespace latcheck
