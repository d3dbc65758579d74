#pragma once

// Test-only ground truth that shares no decision code with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "latcheck/element.hpp"
#include "latcheck/operator.hpp"
#include "latcheck/region.hpp"

namespace oracle {

using latcheck::Interval;
using latcheck::PLFunction;
using latcheck::Rational;
using latcheck::Region;

// ---- regions -----------------------------------------------------------

inline bool in(const Interval &i, const Rational &t)
{
	if (t < i.lo || i.hi < t)
		return false;
	if (t == i.lo && !i.lo_closed)
		return false;
	if (t == i.hi && !i.hi_closed)
		return false;
	return true;
}

inline bool member(const Region &r, const Rational &t)
{
	return std::any_of(r.parts().begin(), r.parts().end(), [&](const Interval &i) { return in(i, t); });
}

/// Every endpoint of every region, the domain endpoints and the midpoints
/// between consecutive ones; membership is constant between them.
inline std::vector<Rational> sample_points(const std::vector<const Region *> &rs)
{
	std::set<Rational> pts;
	for (const auto *r : rs) {
		pts.insert(r->domain().lo);
		pts.insert(r->domain().hi);
		for (const auto &p : r->parts()) {
			pts.insert(p.lo);
			pts.insert(p.hi);
		}
	}
	std::vector<Rational> v(pts.begin(), pts.end());
	std::vector<Rational> out = v;
	for (std::size_t i = 0; i + 1 < v.size(); ++i)
		out.push_back(latcheck::midpoint(v[i], v[i + 1]));
	std::sort(out.begin(), out.end());
	return out;
}

/// Parts sorted, nonempty, inside the domain, and no two of them touching
/// in a way that would let them merge.
inline bool canonical(const Region &r)
{
	const auto &ps = r.parts();
	for (std::size_t i = 0; i < ps.size(); ++i) {
		const auto &p = ps[i];
		if (p.hi < p.lo || (p.lo == p.hi && !(p.lo_closed && p.hi_closed)))
			return false;
		if (!in(r.domain(), p.lo) || !in(r.domain(), p.hi))
			return false;
		if (i > 0) {
			const auto &q = ps[i - 1];
			if (p.lo < q.hi)
				return false;
			if (p.lo == q.hi && (p.lo_closed || q.hi_closed))
				return false;
		}
	}
	return true;
}

// ---- piecewise-linear functions ---------------------------------------

inline std::vector<Rational> merged_grid(const std::vector<const PLFunction *> &fs)
{
	std::set<Rational> g;
	for (const auto *f : fs)
		g.insert(f->breakpoints().begin(), f->breakpoints().end());
	return {g.begin(), g.end()};
}

/// Segments of the common grid on which f vanishes identically.
inline std::vector<bool> dead_segments(const PLFunction &f, const std::vector<Rational> &grid)
{
	std::vector<bool> d;
	for (std::size_t s = 0; s + 1 < grid.size(); ++s)
		d.push_back(f(grid[s]).is_zero() && f(grid[s + 1]).is_zero());
	return d;
}

/// Both functions are linear on each grid segment; |f| ∧ |g| vanishes on a
/// segment iff one of them vanishes identically there.
inline bool pl_disjoint(const PLFunction &f, const PLFunction &g)
{
	auto grid = merged_grid({&f, &g});
	auto df = dead_segments(f, grid), dg = dead_segments(g, grid);
	for (std::size_t s = 0; s < df.size(); ++s)
		if (!df[s] && !dg[s])
			return false;
	return true;
}

/// a ∈ {b}^dd for PL functions: a vanishes on every segment where b does.
inline bool pl_narrower(const PLFunction &a, const PLFunction &b)
{
	auto grid = merged_grid({&a, &b});
	auto da = dead_segments(a, grid), db = dead_segments(b, grid);
	for (std::size_t s = 0; s < da.size(); ++s)
		if (db[s] && !da[s])
			return false;
	return true;
}

inline bool germ_disjoint_pointwise(const latcheck::GermSum &x, const latcheck::GermSum &y)
{
	return pl_disjoint(x.pointwise(), y.pointwise());
}

inline bool germ_disjoint_direct(const latcheck::GermSum &x, const latcheck::GermSum &y)
{
	return pl_disjoint(x.left, y.left) && pl_disjoint(x.right, y.right) &&
	       (x.lambda.is_zero() || y.lambda.is_zero());
}

// ---- matrices on an integer value grid --------------------------------

/// Integer copy of a matrix with integral entries.
using IMat = std::vector<std::vector<long long>>;

inline IMat to_int(const latcheck::MatrixOperator &t)
{
	IMat m(t.rows(), std::vector<long long>(t.cols()));
	for (std::size_t r = 0; r < t.rows(); ++r)
		for (std::size_t c = 0; c < t.cols(); ++c)
			m[r][c] = t.at(r, c).num().get_si();
	return m;
}

/// (support mask, image support mask) pairs realised by vectors with
/// entries in [lo, hi].
inline std::set<std::pair<unsigned, unsigned>> reachable(const IMat &m, std::size_t cols, long long lo, long long hi)
{
	std::set<std::pair<unsigned, unsigned>> out;
	std::vector<long long> x(cols, lo);
	while (true) {
		unsigned sx = 0, sy = 0;
		for (std::size_t c = 0; c < cols; ++c)
			if (x[c])
				sx |= 1u << c;
		for (std::size_t r = 0; r < m.size(); ++r) {
			long long v = 0;
			for (std::size_t c = 0; c < cols; ++c)
				v += m[r][c] * x[c];
			if (v)
				sy |= 1u << r;
		}
		out.emplace(sx, sy);
		std::size_t i = 0;
		while (i < cols && x[i] == hi)
			x[i++] = lo;
		if (i == cols)
			break;
		++x[i];
	}
	return out;
}

struct GridVerdicts {
	bool dp, beta, beta0, beta_plus;
};

/// Brute force over every pair of vectors in {-2..2}^n (and {0..2}^n for
/// the positive condition). For matrices with entries in {-2..2} and at most
/// three columns every violating support pattern has a representative on
/// this grid.
inline GridVerdicts grid_verdicts(const latcheck::MatrixOperator &t)
{
	auto m = to_int(t);
	auto all = reachable(m, t.cols(), -2, 2);
	auto pos = reachable(m, t.cols(), 0, 2);
	auto subset = [](unsigned a, unsigned b) { return (a & ~b) == 0; };
	GridVerdicts g{true, true, true, true};
	for (const auto &[sa, ia] : all)
		for (const auto &[sb, ib] : all) {
			if (sa && sb && !(sa & sb) && (ia & ib))
				g.dp = false;
			if (subset(sa, sb) && !subset(ia, ib))
				g.beta = false;
			if (sa == sb && ia != ib)
				g.beta0 = false;
		}
	for (const auto &[sa, ia] : pos)
		for (const auto &[sb, ib] : pos)
			if (subset(sa, sb) && !subset(ia, ib))
				g.beta_plus = false;
	return g;
}

} // namespace oracle
