#include "latcheck/search.hpp"

#include <algorithm>
#include <random>

#include "latcheck/decide.hpp"
#include "latcheck/feasibility.hpp"
#include "latcheck/lattice.hpp"

namespace latcheck {

namespace {

using Rng = std::mt19937_64;

Rational uniform_int(Rng &rng, long lo, long hi)
{
	return Rational(std::uniform_int_distribution<long>(lo, hi)(rng));
}

Rational nonzero_int(Rng &rng, long mag)
{
	long v = std::uniform_int_distribution<long>(1, mag)(rng);
	return Rational(rng() % 2 ? v : -v);
}

// ---- germ-sum elements ------------------------------------------------

// PL function on [0,2] that is 0 outside (c, d), rises to h and, when the
// interval straddles the cut, stays flat across it.
PLFunction bump_function(const Rational &c, const Rational &d, const Rational &h)
{
	const Rational lo = GermSum::domain_lo(), hi = GermSum::domain_hi(), one = GermSum::cut();
	std::vector<Rational> t, v;
	auto push = [&](const Rational &x, const Rational &y) {
		t.push_back(x);
		v.push_back(y);
	};
	if (lo < c)
		push(lo, 0);
	push(c, 0);
	if (c < one && one < d) {
		push(midpoint(c, one), h);
		push(midpoint(one, d), h);
	} else {
		push(midpoint(c, d), h);
	}
	push(d, 0);
	if (d < hi)
		push(hi, 0);
	return PLFunction(std::move(t), std::move(v));
}

// Element of the germ-sum lattice whose cozero set is (c, d), shrunk away
// from the cut when 1 is an endpoint (elements are constant near 1).
GermSum germ_bump(Rational c, Rational d, const Rational &h = 1)
{
	if (d == GermSum::cut())
		d = midpoint(c, d);
	if (c == GermSum::cut())
		c = midpoint(c, d);
	return GermSum::from_pointwise(bump_function(c, d, h));
}

// x = x1 + lambda*1 with x1 = -lambda on [0,s] falling to 0 at p: the
// function is 0 on [0,s] and equals lambda from p on.
GermSum germ_tail_left(const Rational &s, const Rational &p, const Rational &lambda)
{
	PLFunction x1({GermSum::domain_lo(), s, p, GermSum::cut()}, {-lambda, -lambda, 0, 0});
	return {x1, GermSum::zero_right(), lambda};
}

// Mirror image on [1,2]: 0 on [r,2], equal to lambda up to q.
GermSum germ_tail_right(const Rational &q, const Rational &r, const Rational &lambda)
{
	PLFunction x2({GermSum::cut(), q, r, GermSum::domain_hi()}, {0, 0, -lambda, -lambda});
	return {GermSum::zero_left(), x2, lambda};
}

// Random left part on the grid of eighths: arbitrary values up to 6/8,
// zero from 7/8 on.
PLFunction random_left(Rng &rng)
{
	std::vector<Rational> t{GermSum::domain_lo()}, v{uniform_int(rng, -2, 2)};
	for (long k = 1; k <= 6; ++k)
		if (rng() % 3 == 0) {
			t.emplace_back(k, 8);
			v.push_back(uniform_int(rng, -2, 2));
		}
	t.emplace_back(7, 8);
	v.emplace_back(0);
	t.push_back(GermSum::cut());
	v.emplace_back(0);
	return PLFunction(std::move(t), std::move(v));
}

PLFunction random_right(Rng &rng)
{
	std::vector<Rational> t{GermSum::cut(), Rational(9, 8)}, v{Rational(0), Rational(0)};
	for (long k = 10; k <= 15; ++k)
		if (rng() % 3 == 0) {
			t.emplace_back(k, 8);
			v.push_back(uniform_int(rng, -2, 2));
		}
	t.push_back(GermSum::domain_hi());
	v.push_back(uniform_int(rng, -2, 2));
	return PLFunction(std::move(t), std::move(v));
}

GermSum random_germ(Rng &rng)
{
	auto l = rng() % 3 ? random_left(rng) : GermSum::zero_left();
	auto r = rng() % 3 ? random_right(rng) : GermSum::zero_right();
	Rational lam = rng() % 2 ? uniform_int(rng, -2, 2) : Rational(0);
	return {std::move(l), std::move(r), lam};
}

// Open pieces (c, d) of a region, as endpoint pairs.
std::vector<std::pair<Rational, Rational>> pieces(const Region &r)
{
	std::vector<std::pair<Rational, Rational>> out;
	for (const auto &part : r.parts())
		if (!part.is_point())
			out.emplace_back(part.lo, part.hi);
	return out;
}

Region complement_interior(const Space &s, const Element &x)
{
	return region_interior(region_complement(region_closure(cozero(s, x))));
}

// ---- coordinate elements ----------------------------------------------

CoordVector random_coord(Rng &rng, std::size_t n)
{
	CoordVector x(n, Rational(0));
	for (auto &c : x)
		if (rng() % 3) {
			c = nonzero_int(rng, 3);
			if (rng() % 4 == 0)
				c /= Rational(2);
		}
	return x;
}

// Random vector whose support is a random subset of `allowed` (all of it
// when `full`).
CoordVector random_on(Rng &rng, std::size_t n, const std::vector<std::size_t> &allowed, bool full)
{
	CoordVector x(n, Rational(0));
	for (auto i : allowed)
		if (full || rng() % 2)
			x[i] = nonzero_int(rng, 3);
	return x;
}

std::vector<std::size_t> support_of(const CoordVector &x, bool inside)
{
	std::vector<std::size_t> s;
	for (std::size_t i = 0; i < x.size(); ++i)
		if (x[i].is_zero() != inside)
			s.push_back(i);
	return s;
}

// ---- search driver ----------------------------------------------------

class Searcher {
public:
	Searcher(const Operator &op, Property p, const SearchBudget &budget)
	: op_(op), prop_(p), check_(p == Property::d_isomorphism ? Property::dp : p), dom_(domain_space(op)),
	  cod_(codomain_space(op)), rng_(budget.seed), budget_(budget)
	{
		report_.seed = budget.seed;
	}

	Verdict run()
	{
		auto pool = structured_pool();
		for (const auto &b : pool) {
			for (const auto &a : pool)
				if (try_pair(a, b))
					return found();
			for (const auto &a : partners(b))
				if (try_pair(a, b))
					return found();
		}
		if (dom_.model() == Model::coord || dom_.model() == Model::germ_pointwise)
			for (std::uint64_t i = 0; i < budget_.trials; ++i) {
				Element b = random_element();
				Element a = rng_() % 2 ? random_partner(b) : random_element();
				if (positive_only()) {
					a = lat_abs(dom_, a);
					b = lat_abs(dom_, b);
				}
				if (try_pair(a, b))
					return found();
			}
		return Verdict::unknown(std::string(to_string(prop_)), report_);
	}

private:
	bool positive_only() const { return check_ == Property::beta_plus; }

	bool hypothesis(const Element &a, const Element &b) const
	{
		switch (check_) {
		case Property::dp:
			return !is_zero(a) && !is_zero(b) && disjoint(dom_, a, b);
		case Property::beta:
			return width_leq(dom_, a, b);
		case Property::beta0:
			return same_width(dom_, a, b);
		case Property::beta_plus:
			return is_positive(dom_, a) && is_positive(dom_, b) && width_leq(dom_, a, b);
		default:
			return false;
		}
	}

	bool violated(const Element &ta, const Element &tb) const
	{
		switch (check_) {
		case Property::dp:
			return !disjoint(cod_, ta, tb);
		case Property::beta0:
			return !same_width(cod_, ta, tb);
		default:
			return !width_leq(cod_, ta, tb);
		}
	}

	bool try_pair(const Element &a, const Element &b)
	{
		++report_.trials;
		if (!hypothesis(a, b) || !violated(evaluate(op_, a), evaluate(op_, b)))
			return false;
		Witness w = check_ == Property::dp ? dp_witness(op_, a, b) : width_witness(op_, check_, a, b);
		if (!verify_certificate(op_, check_, w))
			return false;
		witness_ = std::move(w);
		return true;
	}

	Verdict found() { return Verdict::fails(std::string(to_string(prop_)), std::move(*witness_), report_); }

	std::vector<Element> structured_pool() const
	{
		std::vector<Element> pool;
		if (dom_.model() == Model::coord) {
			const std::size_t n = dom_.dimension();
			for (std::size_t i = 0; i < n; ++i)
				pool.emplace_back(unit_vector(n, i));
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = i + 1; j < n; ++j) {
					auto x = unit_vector(n, i);
					x[j] = 1;
					pool.emplace_back(x);
					x[j] = -1;
					pool.emplace_back(x);
				}
			pool.emplace_back(CoordVector(n, Rational(1)));
			for (auto &c : cancellations())
				pool.emplace_back(std::move(c));
		} else if (dom_.model() == Model::germ_pointwise) {
			const Rational p = resolution();
			const Rational half(1, 2), q = Rational(2) - p;
			pool.emplace_back(GermSum::unit());
			pool.emplace_back(germ_bump(0, half));
			pool.emplace_back(germ_bump(Rational(3, 2), 2));
			pool.emplace_back(germ_tail_left(half, p, 1));
			pool.emplace_back(germ_tail_left(half, p, -1));
			pool.emplace_back(germ_tail_right(q, Rational(3, 2), 1));
			pool.emplace_back(germ_bump(half, Rational(3, 2)));
			pool.emplace_back(germ_bump(Rational(1, 4), half));
			pool.emplace_back(germ_bump(0, p));
			pool.emplace_back(germ_bump(q, 2));
			pool.emplace_back(sub(dom_, GermSum::unit(), germ_bump(0, half)));
			pool.emplace_back(add(dom_, GermSum::unit(), germ_bump(Rational(3, 2), 2)));
		}
		if (positive_only())
			for (auto &x : pool)
				x = lat_abs(dom_, x);
		return pool;
	}

	Rational resolution() const
	{
		if (const auto *g = std::get_if<GermSumOperator>(&op_))
			return g->resolution;
		return Rational(3, 4);
	}

	// Coefficient vectors that cancel two columns in one codomain coordinate
	// (matrix rows) or at one grid point (PL columns).
	std::vector<CoordVector> cancellations() const
	{
		std::vector<CoordVector> rows;
		std::size_t n = dom_.dimension();
		if (const auto *t = std::get_if<MatrixOperator>(&op_)) {
			for (std::size_t r = 0; r < t->rows(); ++r) {
				CoordVector row;
				for (std::size_t c = 0; c < n; ++c)
					row.push_back(t->at(r, c));
				rows.push_back(std::move(row));
			}
		} else if (const auto *t = std::get_if<PLRankOperator>(&op_)) {
			std::vector<Rational> grid;
			for (const auto &c : t->columns)
				grid.insert(grid.end(), c.breakpoints().begin(), c.breakpoints().end());
			std::sort(grid.begin(), grid.end());
			grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
			for (std::size_t g = 0; g + 1 < grid.size(); ++g)
				for (const auto &pt : {grid[g], midpoint(grid[g], grid[g + 1])}) {
					CoordVector row;
					for (const auto &c : t->columns)
						row.push_back(c(pt));
					rows.push_back(std::move(row));
				}
		}
		std::vector<CoordVector> out;
		for (const auto &row : rows)
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = i + 1; j < n; ++j) {
					if (row[i].is_zero() || row[j].is_zero())
						continue;
					CoordVector b(n, Rational(0));
					b[i] = row[j];
					b[j] = -row[i];
					out.push_back(primitive(b));
					b[i] = row[j].abs();
					b[j] = row[i].abs();
					out.push_back(primitive(b));
				}
		return out;
	}

	// Deterministic candidates built from b: elements disjoint from b for
	// DP, narrower elements otherwise.
	std::vector<Element> partners(const Element &b) const
	{
		std::vector<Element> out;
		if (dom_.model() == Model::coord) {
			const auto &x = std::get<CoordVector>(b);
			auto outside = support_of(x, check_ != Property::dp);
			CoordVector y(x.size(), Rational(0));
			for (auto i : outside)
				y[i] = 1;
			if (!outside.empty())
				out.emplace_back(std::move(y));
			return out;
		}
		if (dom_.model() != Model::germ_pointwise)
			return out;
		if (check_ == Property::dp) {
			for (const auto &[c, d] : pieces(complement_interior(dom_, b)))
				out.emplace_back(germ_bump(c, d));
			return out;
		}
		for (auto &atom : components_of(dom_, b))
			out.push_back(std::move(atom));
		for (const auto &[c, d] : pieces(cozero(dom_, b)))
			out.emplace_back(germ_bump(c, d));
		if (check_ == Property::beta0)
			out.push_back(scale(dom_, Rational(2), b));
		return out;
	}

	Element random_element()
	{
		if (dom_.model() == Model::coord)
			return random_coord(rng_, dom_.dimension());
		return random_germ(rng_);
	}

	Element random_partner(const Element &b)
	{
		if (dom_.model() == Model::coord) {
			const auto &x = std::get<CoordVector>(b);
			switch (check_) {
			case Property::dp:
				return random_on(rng_, x.size(), support_of(x, false), false);
			case Property::beta0:
				return random_on(rng_, x.size(), support_of(x, true), true);
			default:
				return random_on(rng_, x.size(), support_of(x, true), false);
			}
		}
		auto region = check_ == Property::dp ? complement_interior(dom_, b) : cozero(dom_, b);
		auto ps = pieces(region);
		if (ps.empty() || (check_ == Property::beta0 && rng_() % 2))
			return scale(dom_, nonzero_int(rng_, 3), b);
		const auto &[lo, hi] = ps[rng_() % ps.size()];
		long i = std::uniform_int_distribution<long>(0, 7)(rng_);
		long j = std::uniform_int_distribution<long>(i + 1, 8)(rng_);
		Rational c = lo + (hi - lo) * Rational(i, 8), d = lo + (hi - lo) * Rational(j, 8);
		return germ_bump(c, d, nonzero_int(rng_, 2));
	}

	const Operator &op_;
	Property prop_, check_;
	Space dom_, cod_;
	Rng rng_;
	SearchBudget budget_;
	SearchReport report_;
	std::optional<Witness> witness_;
};

} // namespace

Verdict refute_search(const Operator &op, Property p, const SearchBudget &budget)
{
	return Searcher(op, p, budget).run();
}

} // namespace latcheck
