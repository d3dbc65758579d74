#include "latcheck/json_io.hpp"

#include <algorithm>

namespace latcheck {

InputError::InputError(std::string where, const std::string &what)
: std::runtime_error(where + ": " + what), where_(std::move(where))
{
}

Json parse_json(const std::string &text, const std::string &source)
{
	try {
		return Json::parse(text);
	} catch (const Json::parse_error &e) {
		std::size_t line = 1, col = 1;
		const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
		for (std::size_t i = 0; i < end; ++i) {
			if (text[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
		}
		std::string msg = e.what();
		// Drop nlohmann's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix.
		if (auto pos = msg.find(": "); pos != std::string::npos)
			msg = msg.substr(pos + 2);
		throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col), msg);
	}
}

// ---- writers ----------------------------------------------------------

Json to_json(const Rational &q)
{
	return q.str();
}

Json to_json(const Interval &i)
{
	return Json{{"lo", to_json(i.lo)}, {"hi", to_json(i.hi)}, {"lo_closed", i.lo_closed}, {"hi_closed", i.hi_closed}};
}

Json to_json(const Region &r)
{
	Json parts = Json::array();
	for (const auto &p : r.parts())
		parts.push_back(to_json(p));
	return Json{{"domain", to_json(r.domain())}, {"parts", std::move(parts)}};
}

namespace {

Json rationals(const std::vector<Rational> &v)
{
	Json out = Json::array();
	for (const auto &q : v)
		out.push_back(to_json(q));
	return out;
}

} // namespace

Json to_json(const PLFunction &f)
{
	return Json{{"domain", to_json(f.domain())}, {"breakpoints", rationals(f.breakpoints())}, {"values", rationals(f.values())}};
}

Json to_json(const GermSum &g)
{
	return Json{{"left", to_json(g.left)}, {"right", to_json(g.right)}, {"lambda", to_json(g.lambda)}};
}

Json to_json(const Element &x)
{
	return std::visit(
		[](const auto &v) -> Json {
			if constexpr (std::is_same_v<std::decay_t<decltype(v)>, CoordVector>)
				return rationals(v);
			else
				return to_json(v);
		},
		x);
}

Json to_json(const MatrixOperator &t)
{
	Json rows = Json::array();
	for (std::size_t r = 0; r < t.rows(); ++r) {
		Json row = Json::array();
		for (std::size_t c = 0; c < t.cols(); ++c)
			row.push_back(to_json(t.at(r, c)));
		rows.push_back(std::move(row));
	}
	return Json{{"kind", "matrix"}, {"entries", std::move(rows)}};
}

Json to_json(const Operator &op)
{
	if (const auto *t = std::get_if<MatrixOperator>(&op))
		return to_json(*t);
	if (const auto *t = std::get_if<PLRankOperator>(&op)) {
		Json cols = Json::array();
		for (const auto &c : t->columns)
			cols.push_back(to_json(c));
		return Json{{"kind", "pl_rank"}, {"columns", std::move(cols)}};
	}
	const auto &g = std::get<GermSumOperator>(op);
	return Json{{"kind", "germ_sum"}, {"resolution", to_json(g.resolution)}};
}

Json to_json(const Witness &w)
{
	Json elems = Json::object();
	for (const auto &[name, e] : w.elements)
		elems[name] = to_json(e);
	return Json{{"relation", w.relation}, {"elements", std::move(elems)}};
}

Json to_json(const Verdict &v)
{
	Json j;
	j["property"] = v.property;
	j["status"] = std::string(to_string(v.status));
	j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
	j["lemma"] = v.lemma ? Json(*v.lemma) : Json(nullptr);
	j["search_report"] = Json{{"trials", v.search_report.trials},
	                          {"seed", v.search_report.seed},
	                          {"exhausted_patterns", v.search_report.exhausted_patterns}};
	return j;
}

// ---- readers ----------------------------------------------------------

namespace {

const Json &field(const Json &j, const char *key, const std::string &path)
{
	if (!j.is_object())
		throw InputError(path, "expected an object");
	auto it = j.find(key);
	if (it == j.end())
		throw InputError(path, std::string("missing field \"") + key + "\"");
	return *it;
}

const Json &array_at(const Json &j, const std::string &path)
{
	if (!j.is_array())
		throw InputError(path, "expected an array");
	return j;
}

std::vector<Rational> rationals_from(const Json &j, const std::string &path)
{
	std::vector<Rational> out;
	const auto &a = array_at(j, path);
	for (std::size_t i = 0; i < a.size(); ++i)
		out.push_back(rational_from_json(a[i], path + "[" + std::to_string(i) + "]"));
	return out;
}

template <typename F>
auto rethrow_at(const std::string &path, F f) -> decltype(f())
{
	try {
		return f();
	} catch (const InputError &) {
		throw;
	} catch (const std::invalid_argument &e) {
		throw InputError(path, e.what());
	} catch (const std::domain_error &e) {
		throw InputError(path, e.what());
	}
}

} // namespace

Rational rational_from_json(const Json &j, const std::string &path)
{
	if (j.is_number_integer())
		return Rational(j.get<long>());
	if (!j.is_string())
		throw InputError(path, "expected a rational string \"p/q\" or an integer");
	return rethrow_at(path, [&] { return Rational::parse(j.get<std::string>()); });
}

PLFunction pl_from_json(const Json &j, const std::string &path)
{
	auto t = rationals_from(field(j, "breakpoints", path), path + ".breakpoints");
	auto v = rationals_from(field(j, "values", path), path + ".values");
	auto f = rethrow_at(path, [&] { return PLFunction(t, v); });
	if (j.contains("domain")) {
		const std::string dp = path + ".domain";
		const auto &d = j["domain"];
		Rational lo = rational_from_json(field(d, "lo", dp), dp + ".lo");
		Rational hi = rational_from_json(field(d, "hi", dp), dp + ".hi");
		if (!(lo == f.lo()) || !(hi == f.hi()))
			throw InputError(dp, "domain does not match the first and last breakpoints");
	}
	return f;
}

GermSum germ_from_json(const Json &j, const std::string &path)
{
	auto l = pl_from_json(field(j, "left", path), path + ".left");
	auto r = pl_from_json(field(j, "right", path), path + ".right");
	auto lam = rational_from_json(field(j, "lambda", path), path + ".lambda");
	return rethrow_at(path, [&] { return GermSum(l, r, lam); });
}

Element element_from_json(const Json &j, const Space &s, const std::string &path)
{
	Element x = [&]() -> Element {
		switch (s.model()) {
		case Model::coord:
			return rationals_from(j, path);
		case Model::pl:
			return pl_from_json(j, path);
		default:
			return germ_from_json(j, path);
		}
	}();
	if (!s.admits(x))
		throw InputError(path, "element does not belong to " + s.name());
	return x;
}

Operator operator_from_json(const Json &j, const std::string &path)
{
	const auto &kind_j = field(j, "kind", path);
	if (!kind_j.is_string())
		throw InputError(path + ".kind", "expected a string");
	const auto kind = kind_j.get<std::string>();
	if (kind == "matrix") {
		const std::string ep = path + ".entries";
		const auto &rows = array_at(field(j, "entries", path), ep);
		std::vector<std::vector<Rational>> m;
		for (std::size_t r = 0; r < rows.size(); ++r)
			m.push_back(rationals_from(rows[r], ep + "[" + std::to_string(r) + "]"));
		for (std::size_t r = 1; r < m.size(); ++r)
			if (m[r].size() != m[0].size())
				throw InputError(ep + "[" + std::to_string(r) + "]", "row length differs from row 0");
		return rethrow_at(ep, [&] { return MatrixOperator::from_rows(m); });
	}
	if (kind == "pl_rank") {
		const std::string cp = path + ".columns";
		const auto &cols = array_at(field(j, "columns", path), cp);
		std::vector<PLFunction> fs;
		for (std::size_t i = 0; i < cols.size(); ++i)
			fs.push_back(pl_from_json(cols[i], cp + "[" + std::to_string(i) + "]"));
		return rethrow_at(cp, [&] { return PLRankOperator(std::move(fs)); });
	}
	if (kind == "germ_sum") {
		GermSumOperator g;
		if (j.contains("resolution"))
			g.resolution = rational_from_json(j["resolution"], path + ".resolution");
		if (!(Rational(0) < g.resolution && g.resolution < Rational(1)))
			throw InputError(path + ".resolution", "resolution must lie in (0,1)");
		return g;
	}
	if (kind == "gallery") {
		const auto &name = field(j, "name", path);
		if (!name.is_string())
			throw InputError(path + ".name", "expected a string");
		GalleryParams params;
		if (j.contains("n")) {
			if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
				throw InputError(path + ".n", "expected a positive integer");
			params.n = j["n"].get<std::size_t>();
		}
		if (j.contains("resolution"))
			params.resolution = rational_from_json(j["resolution"], path + ".resolution");
		return rethrow_at(path, [&] { return gallery(name.get<std::string>(), params).op; });
	}
	throw InputError(path + ".kind", "unknown operator kind \"" + kind + "\"");
}

} // namespace latcheck
