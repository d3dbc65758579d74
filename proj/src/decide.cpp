#include "latcheck/decide.hpp"

#include <algorithm>
#include <numeric>

#include "latcheck/feasibility.hpp"
#include "latcheck/lattice.hpp"

namespace latcheck {

namespace {

std::vector<std::size_t> row_support(const MatrixOperator &t, std::size_t r)
{
	std::vector<std::size_t> s;
	for (std::size_t c = 0; c < t.cols(); ++c)
		if (!t.at(r, c).is_zero())
			s.push_back(c);
	return s;
}

CoordVector row_vector(const MatrixOperator &t, std::size_t r)
{
	CoordVector v;
	for (std::size_t c = 0; c < t.cols(); ++c)
		v.push_back(t.at(r, c));
	return v;
}

MatrixOperator transpose(const MatrixOperator &t)
{
	std::vector<Rational> a;
	for (std::size_t c = 0; c < t.cols(); ++c)
		for (std::size_t r = 0; r < t.rows(); ++r)
			a.push_back(t.at(r, c));
	return MatrixOperator(t.cols(), t.rows(), std::move(a));
}

std::string name_of(Property p)
{
	return std::string(to_string(p));
}

} // namespace

Witness dp_witness(const Operator &op, Element x, Element y)
{
	Element tx = evaluate(op, x), ty = evaluate(op, y);
	return {"x ⊥ y but Tx and Ty are not disjoint",
	        {{"x", std::move(x)}, {"y", std::move(y)}, {"Tx", std::move(tx)}, {"Ty", std::move(ty)}}};
}

Witness width_witness(const Operator &op, Property p, Element a, Element b)
{
	Element ta = evaluate(op, a), tb = evaluate(op, b);
	std::string rel;
	switch (p) {
	case Property::beta0:
		rel = "a and b have the same width but Ta and Tb do not";
		break;
	case Property::beta_plus:
		rel = "0 ≤ a ⊲ b with 0 ≤ b but not Ta ⊲ Tb";
		break;
	default:
		rel = "a ⊲ b but not Ta ⊲ Tb";
		break;
	}
	return {rel, {{"a", std::move(a)}, {"b", std::move(b)}, {"Ta", std::move(ta)}, {"Tb", std::move(tb)}}};
}

Verdict decide_dp_matrix(const MatrixOperator &t)
{
	for (std::size_t i = 0; i < t.cols(); ++i)
		for (std::size_t j = i + 1; j < t.cols(); ++j)
			for (std::size_t r = 0; r < t.rows(); ++r)
				if (!t.at(r, i).is_zero() && !t.at(r, j).is_zero())
					return Verdict::fails("dp", dp_witness(t, unit_vector(t.cols(), i), unit_vector(t.cols(), j)));
	return Verdict::holds("dp", "matrix: column supports pairwise disjoint");
}

Verdict decide_beta_matrix(const MatrixOperator &t)
{
	for (std::size_t r = 0; r < t.rows(); ++r) {
		auto s = row_support(t, r);
		if (s.size() < 2)
			continue;
		const std::size_t i = s[0], j = s[1];
		CoordVector b(t.cols(), Rational(0));
		b[i] = t.at(r, j);
		b[j] = -t.at(r, i);
		return Verdict::fails("beta", width_witness(t, Property::beta, unit_vector(t.cols(), i), primitive(b)));
	}
	return Verdict::holds("beta", "matrix: at most one nonzero entry per row");
}

Verdict decide_beta_plus_matrix(const MatrixOperator &t)
{
	for (std::size_t r = 0; r < t.rows(); ++r) {
		// Lexicographically smallest opposite-sign column pair of this row.
		for (std::size_t i = 0; i < t.cols(); ++i)
			for (std::size_t j = i + 1; j < t.cols(); ++j) {
				if (t.at(r, i).sign() * t.at(r, j).sign() >= 0)
					continue;
				CoordVector b(t.cols(), Rational(0));
				b[i] = t.at(r, j).abs();
				b[j] = t.at(r, i).abs();
				return Verdict::fails(
					"beta_plus", width_witness(t, Property::beta_plus, unit_vector(t.cols(), i), primitive(b)));
			}
	}
	return Verdict::holds("beta_plus", "matrix: no row mixes signs");
}

Verdict decide_beta0_matrix(const MatrixOperator &t)
{
	// Same width in Q^n means equal supports S. A row r separates the images
	// iff some b with supp(b) = S has (Tb)_r = 0 while some a with the same
	// support has (Ta)_r != 0. Coordinates of S outside the row's support
	// do not enter the equation, so S ranges over subsets of that support.
	for (std::size_t r = 0; r < t.rows(); ++r) {
		auto row = row_vector(t, r);
		auto nz = row_support(t, r);
		const std::size_t k = nz.size();
		for (std::size_t size = 1; size <= k; ++size) {
			std::vector<std::size_t> idx(size);
			std::iota(idx.begin(), idx.end(), 0);
			while (true) {
				std::vector<std::size_t> support;
				for (auto i : idx)
					support.push_back(nz[i]);
				auto b = zero_on_support(row, support);
				auto a = nonzero_on_support(row, support);
				if (a && b)
					return Verdict::fails("beta0", width_witness(t, Property::beta0, *a, *b));
				std::size_t pos = size;
				while (pos > 0 && idx[pos - 1] == k - size + pos - 1)
					--pos;
				if (pos == 0)
					break;
				++idx[pos - 1];
				for (std::size_t j = pos; j < size; ++j)
					idx[j] = idx[j - 1] + 1;
			}
		}
	}
	return Verdict::holds("beta0", "matrix: support-pattern feasibility (no row admits a same-support split)");
}

Verdict decide_d_isomorphism_matrix(const MatrixOperator &t)
{
	const std::string prop = "d_isomorphism";
	if (t.rows() != t.cols() || rank(t) != t.cols()) {
		auto ker = kernel_basis(t);
		if (!ker.empty()) {
			CoordVector k = primitive(ker[0]);
			return Verdict::fails(prop, {"T has a nonzero kernel vector k, so it is not injective",
			                             {{"k", k}, {"Tk", t.apply(k)}}});
		}
		auto coker = kernel_basis(transpose(t));
		return Verdict::fails(prop, {"w·T = 0 for a nonzero w, so T is not surjective", {{"w", primitive(coker.at(0))}}});
	}
	auto fwd = decide_dp_matrix(t);
	if (fwd.status == Status::fails) {
		fwd.property = prop;
		return fwd;
	}
	auto inv = invert(t);
	auto back = decide_dp_matrix(inv);
	if (back.status == Status::fails) {
		const auto &w = *back.witness;
		Witness out{"y1 ⊥ y2 but T⁻¹y1 and T⁻¹y2 are not disjoint",
		            {{"y1", w.at("x")}, {"y2", w.at("y")}, {"x1", w.at("Tx")}, {"x2", w.at("Ty")}}};
		return Verdict::fails(prop, std::move(out));
	}
	return Verdict::holds(prop, "matrix: bijective; T and T⁻¹ have pairwise disjoint column supports");
}

Verdict decide_dp_pl_rank(const PLRankOperator &t)
{
	const std::size_t k = t.columns.size();
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i + 1; j < k; ++j)
			if (!disjoint(Space::pl(t.columns[0].lo(), t.columns[0].hi()), t.columns[i], t.columns[j]))
				return Verdict::fails("dp", dp_witness(t, unit_vector(k, i), unit_vector(k, j)));
	return Verdict::holds("dp", "pl_rank: columns pairwise disjoint");
}

namespace {

// One coefficient direction of Q^k (k <= 2) together with the set of grid
// segments on which its image does not vanish identically.
struct Direction {
	CoordVector rep;
	std::vector<char> alive;
	bool positive;
	unsigned support;
};

std::vector<Rational> column_grid(const PLRankOperator &t)
{
	std::vector<Rational> grid;
	for (const auto &c : t.columns) {
		std::vector<Rational> merged;
		std::set_union(grid.begin(), grid.end(), c.breakpoints().begin(), c.breakpoints().end(),
		               std::back_inserter(merged));
		grid = std::move(merged);
	}
	return grid;
}

Direction make_direction(const PLRankOperator &t, const std::vector<Rational> &grid, CoordVector v)
{
	Direction d;
	auto img = t.apply(v);
	for (std::size_t s = 0; s + 1 < grid.size(); ++s)
		d.alive.push_back(!(img(grid[s]).is_zero() && img(grid[s + 1]).is_zero()));
	d.positive = std::all_of(v.begin(), v.end(), [](const Rational &c) { return c.sign() >= 0; });
	d.support = 0;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (!v[i].is_zero())
			d.support |= 1u << i;
	d.rep = std::move(v);
	return d;
}

std::vector<Direction> directions(const PLRankOperator &t)
{
	const std::size_t k = t.columns.size();
	if (k > 2)
		throw std::invalid_argument("exact pl_rank decision needs k <= 2 (use refute_search)");
	if (!t.columns_independent())
		throw std::invalid_argument("pl_rank columns are linearly dependent");
	auto grid = column_grid(t);
	std::vector<Direction> out;
	for (std::size_t i = 0; i < k; ++i)
		out.push_back(make_direction(t, grid, unit_vector(k, i)));
	if (k == 1)
		return out;

	const auto &g1 = t.columns[0];
	const auto &g2 = t.columns[1];
	std::vector<Rational> ratios; // c with g1 + c g2 ≡ 0 on some segment
	for (std::size_t s = 0; s + 1 < grid.size(); ++s) {
		Rational u0 = g1(grid[s]), u1 = g1(grid[s + 1]);
		Rational w0 = g2(grid[s]), w1 = g2(grid[s + 1]);
		if (!(u0 * w1 - u1 * w0).is_zero())
			continue; // rank 2: only the zero vector annihilates the segment
		// Rank <= 1: direction (v1, v2) with v1 g1 + v2 g2 = 0 at both ends.
		Rational v1, v2;
		if (!u0.is_zero() || !w0.is_zero()) {
			v1 = w0;
			v2 = -u0;
		} else if (!u1.is_zero() || !w1.is_zero()) {
			v1 = w1;
			v2 = -u1;
		} else {
			continue; // both columns vanish here
		}
		if (v1.is_zero() || v2.is_zero())
			continue; // a unit direction, already listed
		ratios.push_back(v2 / v1);
	}
	std::sort(ratios.begin(), ratios.end());
	ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
	Rational bound(1);
	for (const auto &c : ratios) {
		out.push_back(make_direction(t, grid, primitive({Rational(1), c})));
		bound = max(bound, c.abs() + Rational(1));
	}
	// Any c outside the critical set annihilates exactly the segments where
	// both columns vanish; one of each sign covers the positive cone too.
	out.push_back(make_direction(t, grid, primitive({Rational(1), bound})));
	out.push_back(make_direction(t, grid, primitive({Rational(1), -bound})));
	return out;
}

bool alive_subset(const Direction &a, const Direction &b)
{
	for (std::size_t s = 0; s < a.alive.size(); ++s)
		if (a.alive[s] && !b.alive[s])
			return false;
	return true;
}

template <typename Pred>
Verdict decide_pl_width(const PLRankOperator &t, Property p, Pred hypothesis, bool positive_only)
{
	auto dirs = directions(t);
	const std::string prop = name_of(p);
	for (const auto &b : dirs) {
		if (positive_only && !b.positive)
			continue;
		for (const auto &a : dirs) {
			if (positive_only && !a.positive)
				continue;
			if (!hypothesis(a, b))
				continue;
			bool ok = p == Property::beta0 ? alive_subset(a, b) && alive_subset(b, a) : alive_subset(a, b);
			if (!ok)
				return Verdict::fails(prop, width_witness(t, p, a.rep, b.rep));
		}
	}
	return Verdict::holds(prop, "pl_rank: segment-signature enumeration over " + std::to_string(dirs.size()) +
	                                " coefficient directions");
}

} // namespace

Verdict decide_beta_pl_rank(const PLRankOperator &t)
{
	return decide_pl_width(
		t, Property::beta, [](const Direction &a, const Direction &b) { return (a.support & ~b.support) == 0; },
		false);
}

Verdict decide_beta0_pl_rank(const PLRankOperator &t)
{
	return decide_pl_width(
		t, Property::beta0, [](const Direction &a, const Direction &b) { return a.support == b.support; }, false);
}

Verdict decide_beta_plus_pl_rank(const PLRankOperator &t)
{
	return decide_pl_width(
		t, Property::beta_plus, [](const Direction &a, const Direction &b) { return (a.support & ~b.support) == 0; },
		true);
}

std::optional<std::pair<CoordVector, CoordVector>> image_disjoint_pair(const PLRankOperator &t)
{
	auto dirs = directions(t);
	for (std::size_t i = 0; i < dirs.size(); ++i)
		for (std::size_t j = i; j < dirs.size(); ++j) {
			bool clash = false;
			for (std::size_t s = 0; s < dirs[i].alive.size() && !clash; ++s)
				clash = dirs[i].alive[s] && dirs[j].alive[s];
			if (!clash)
				return std::pair{dirs[i].rep, dirs[j].rep};
		}
	return std::nullopt;
}

bool verify_certificate(const Operator &op, Property p, const Witness &w)
{
	const Space dom = domain_space(op);
	const Space cod = codomain_space(op);
	auto image_matches = [&](const char *x, const char *tx) { return evaluate(op, w.at(x)) == w.at(tx); };
	try {
		switch (p) {
		case Property::dp:
			return image_matches("x", "Tx") && image_matches("y", "Ty") && disjoint(dom, w.at("x"), w.at("y")) &&
			       !disjoint(cod, w.at("Tx"), w.at("Ty"));
		case Property::beta:
			return image_matches("a", "Ta") && image_matches("b", "Tb") && width_leq(dom, w.at("a"), w.at("b")) &&
			       !width_leq(cod, w.at("Ta"), w.at("Tb"));
		case Property::beta0:
			return image_matches("a", "Ta") && image_matches("b", "Tb") && same_width(dom, w.at("a"), w.at("b")) &&
			       !same_width(cod, w.at("Ta"), w.at("Tb"));
		case Property::beta_plus:
			return image_matches("a", "Ta") && image_matches("b", "Tb") && is_positive(dom, w.at("a")) &&
			       is_positive(dom, w.at("b")) && width_leq(dom, w.at("a"), w.at("b")) &&
			       !width_leq(cod, w.at("Ta"), w.at("Tb"));
		case Property::d_isomorphism: {
			const auto *t = std::get_if<MatrixOperator>(&op);
			if (!t)
				return false;
			auto has = [&](const char *n) {
				return std::any_of(w.elements.begin(), w.elements.end(), [&](const auto &e) { return e.first == n; });
			};
			if (has("k"))
				return !is_zero(w.at("k")) && image_matches("k", "Tk") && is_zero(w.at("Tk"));
			if (has("w")) {
				const auto &v = std::get<CoordVector>(w.at("w"));
				return !is_zero(w.at("w")) && v.size() == t->rows() &&
				       is_zero(Element(transpose(*t).apply(v)));
			}
			if (has("y1"))
				return evaluate(op, w.at("x1")) == w.at("y1") && evaluate(op, w.at("x2")) == w.at("y2") &&
				       disjoint(cod, w.at("y1"), w.at("y2")) && !disjoint(dom, w.at("x1"), w.at("x2"));
			return verify_certificate(op, Property::dp, w);
		}
		}
	} catch (const std::exception &) {
		return false;
	}
	return false;
}

} // namespace latcheck
