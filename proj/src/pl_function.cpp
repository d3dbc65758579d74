#include "latcheck/pl_function.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace latcheck {

namespace {

bool collinear(const Rational &t0, const Rational &v0, const Rational &t1, const Rational &v1,
               const Rational &t2, const Rational &v2)
{
	return (v1 - v0) * (t2 - t1) == (v2 - v1) * (t1 - t0);
}

void require_same_domain(const PLFunction &a, const PLFunction &b)
{
	if (!a.same_domain(b))
		throw std::invalid_argument("piecewise-linear functions on different domains");
}

// Evaluates on a sorted grid, inserting the strict sign changes of a - b.
std::vector<Rational> grid_with_crossings(const PLFunction &a, const PLFunction &b)
{
	auto grid = merged_breakpoints(a, b);
	std::vector<Rational> out;
	out.reserve(grid.size() * 2);
	for (std::size_t i = 0; i < grid.size(); ++i) {
		out.push_back(grid[i]);
		if (i + 1 == grid.size())
			break;
		Rational d0 = a(grid[i]) - b(grid[i]);
		Rational d1 = a(grid[i + 1]) - b(grid[i + 1]);
		if (d0.sign() * d1.sign() < 0)
			out.push_back(grid[i] + d0 * (grid[i + 1] - grid[i]) / (d0 - d1));
	}
	return out;
}

template <typename Op>
PLFunction pointwise(const PLFunction &a, const PLFunction &b, Op op, bool crossings)
{
	require_same_domain(a, b);
	auto grid = crossings ? grid_with_crossings(a, b) : merged_breakpoints(a, b);
	std::vector<Rational> vals;
	vals.reserve(grid.size());
	for (const auto &t : grid)
		vals.push_back(op(a(t), b(t)));
	return PLFunction(std::move(grid), std::move(vals));
}

} // namespace

PLFunction::PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values)
{
	if (breakpoints.size() < 2 || breakpoints.size() != values.size())
		throw std::invalid_argument("piecewise-linear function needs matching breakpoints and values (>= 2)");
	for (std::size_t i = 1; i < breakpoints.size(); ++i)
		if (!(breakpoints[i - 1] < breakpoints[i]))
			throw std::invalid_argument("breakpoints must be strictly increasing");

	t_.reserve(breakpoints.size());
	v_.reserve(values.size());
	t_.push_back(std::move(breakpoints[0]));
	v_.push_back(std::move(values[0]));
	for (std::size_t i = 1; i < breakpoints.size(); ++i) {
		// Drop the last kept point if it is collinear with its neighbours.
		if (t_.size() >= 2 &&
		    collinear(t_[t_.size() - 2], v_[v_.size() - 2], t_.back(), v_.back(), breakpoints[i], values[i])) {
			t_.pop_back();
			v_.pop_back();
		}
		t_.push_back(std::move(breakpoints[i]));
		v_.push_back(std::move(values[i]));
	}
}

PLFunction PLFunction::constant(const Rational &lo, const Rational &hi, const Rational &c)
{
	return PLFunction({lo, hi}, {c, c});
}

PLFunction PLFunction::identity(const Rational &lo, const Rational &hi)
{
	return PLFunction({lo, hi}, {lo, hi});
}

PLFunction PLFunction::tent(const Rational &lo, const Rational &hi, const Rational &a, const Rational &b,
                            const Rational &height)
{
	if (!(lo <= a && a < b && b <= hi))
		throw std::invalid_argument("tent support must lie inside the domain");
	std::vector<Rational> t, v;
	if (lo < a) {
		t.push_back(lo);
		v.push_back(0);
	}
	t.push_back(a);
	v.push_back(0);
	t.push_back(midpoint(a, b));
	v.push_back(height);
	t.push_back(b);
	v.push_back(0);
	if (b < hi) {
		t.push_back(hi);
		v.push_back(0);
	}
	return PLFunction(std::move(t), std::move(v));
}

Rational PLFunction::operator()(const Rational &t) const
{
	if (t < lo() || hi() < t)
		throw std::out_of_range("evaluation outside the domain");
	auto it = std::lower_bound(t_.begin(), t_.end(), t);
	auto i = static_cast<std::size_t>(it - t_.begin());
	if (*it == t)
		return v_[i];
	return v_[i - 1] + (v_[i] - v_[i - 1]) * (t - t_[i - 1]) / (t_[i] - t_[i - 1]);
}

bool PLFunction::is_zero() const
{
	return std::all_of(v_.begin(), v_.end(), [](const Rational &v) { return v.is_zero(); });
}

std::ostream &operator<<(std::ostream &os, const PLFunction &f)
{
	os << "PL[";
	for (std::size_t i = 0; i < f.t_.size(); ++i)
		os << (i ? " " : "") << '(' << f.t_[i] << ':' << f.v_[i] << ')';
	return os << ']';
}

std::vector<Rational> merged_breakpoints(const PLFunction &a, const PLFunction &b)
{
	std::vector<Rational> out;
	out.reserve(a.breakpoints().size() + b.breakpoints().size());
	std::set_union(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(),
	               b.breakpoints().end(), std::back_inserter(out));
	return out;
}

PLFunction operator+(const PLFunction &a, const PLFunction &b)
{
	return pointwise(a, b, [](const Rational &x, const Rational &y) { return x + y; }, false);
}

PLFunction operator-(const PLFunction &a, const PLFunction &b)
{
	return pointwise(a, b, [](const Rational &x, const Rational &y) { return x - y; }, false);
}

PLFunction operator-(const PLFunction &a)
{
	return Rational(-1) * a;
}

PLFunction operator*(const Rational &c, const PLFunction &f)
{
	std::vector<Rational> vals;
	vals.reserve(f.values().size());
	for (const auto &v : f.values())
		vals.push_back(c * v);
	return PLFunction(f.breakpoints(), std::move(vals));
}

PLFunction pl_min(const PLFunction &a, const PLFunction &b)
{
	return pointwise(a, b, [](const Rational &x, const Rational &y) { return min(x, y); }, true);
}

PLFunction pl_max(const PLFunction &a, const PLFunction &b)
{
	return pointwise(a, b, [](const Rational &x, const Rational &y) { return max(x, y); }, true);
}

PLFunction pl_abs(const PLFunction &f)
{
	return pl_max(f, -f);
}

Region cozero(const PLFunction &f)
{
	auto pts = grid_with_crossings(f, PLFunction::zero(f.lo(), f.hi()));
	std::vector<char> point_in(pts.size()), gap_in(pts.size() - 1);
	for (std::size_t i = 0; i < pts.size(); ++i)
		point_in[i] = !f(pts[i]).is_zero();
	for (std::size_t i = 0; i + 1 < pts.size(); ++i)
		gap_in[i] = !f(midpoint(pts[i], pts[i + 1])).is_zero();
	Region r = Region::from_cells(f.domain(), pts, point_in, gap_in);
	for (const auto &p : r.parts())
		if (p.is_point())
			throw std::logic_error("cozero set of a continuous function has an isolated point");
	return r;
}

PLFunction slice(const PLFunction &f, const Rational &lo, const Rational &hi)
{
	if (!(f.lo() <= lo && lo < hi && hi <= f.hi()))
		throw std::invalid_argument("slice bounds outside the domain");
	std::vector<Rational> t{lo}, v{f(lo)};
	for (const auto &b : f.breakpoints())
		if (lo < b && b < hi) {
			t.push_back(b);
			v.push_back(f(b));
		}
	t.push_back(hi);
	v.push_back(f(hi));
	return PLFunction(std::move(t), std::move(v));
}

PLFunction concat(const PLFunction &f, const PLFunction &g)
{
	if (!(f.hi() == g.lo()))
		throw std::invalid_argument("concat: domains do not meet");
	if (!(f(f.hi()) == g(g.lo())))
		throw std::invalid_argument("concat: values disagree at the joint");
	std::vector<Rational> t = f.breakpoints(), v = f.values();
	t.insert(t.end(), g.breakpoints().begin() + 1, g.breakpoints().end());
	v.insert(v.end(), g.values().begin() + 1, g.values().end());
	return PLFunction(std::move(t), std::move(v));
}

PLFunction restrict_to(const PLFunction &f, const Interval &piece)
{
	if (piece.lo < f.lo() || f.hi() < piece.hi || piece.is_point())
		throw std::invalid_argument("restrict_to: piece outside the domain");
	if ((f.lo() < piece.lo && !f(piece.lo).is_zero()) || (piece.hi < f.hi() && !f(piece.hi).is_zero()))
		throw std::invalid_argument("restrict_to: function does not vanish at the piece boundary");
	std::vector<Rational> t, v;
	if (f.lo() < piece.lo) {
		t.push_back(f.lo());
		v.push_back(0);
	}
	t.push_back(piece.lo);
	v.push_back(f(piece.lo));
	for (const auto &b : f.breakpoints())
		if (piece.lo < b && b < piece.hi) {
			t.push_back(b);
			v.push_back(f(b));
		}
	t.push_back(piece.hi);
	v.push_back(f(piece.hi));
	if (piece.hi < f.hi()) {
		t.push_back(f.hi());
		v.push_back(0);
	}
	return PLFunction(std::move(t), std::move(v));
}

} // namespace latcheck
