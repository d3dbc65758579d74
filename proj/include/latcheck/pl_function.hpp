#pragma once

#include <iosfwd>
#include <vector>

#include "latcheck/rational.hpp"
#include "latcheck/region.hpp"

namespace latcheck {

/// Continuous piecewise-linear function on a closed interval, stored as
/// breakpoints and the values there. The representation is canonical: no
/// interior breakpoint sits between two collinear segments, so two
/// functions are equal iff their representations are.
class PLFunction {
public:
	/// Breakpoints must be strictly increasing with at least two entries;
	/// the first and last are the domain endpoints.
	PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

	static PLFunction constant(const Rational &lo, const Rational &hi, const Rational &c);
	static PLFunction zero(const Rational &lo, const Rational &hi) { return constant(lo, hi, 0); }
	/// f(t) = t.
	static PLFunction identity(const Rational &lo, const Rational &hi);
	/// Tent with cozero (a, b) and the given height at the midpoint of [a, b].
	static PLFunction tent(const Rational &lo, const Rational &hi, const Rational &a, const Rational &b,
	                       const Rational &height = 1);

	const Rational &lo() const { return t_.front(); }
	const Rational &hi() const { return t_.back(); }
	Interval domain() const { return Interval::closed(lo(), hi()); }
	const std::vector<Rational> &breakpoints() const { return t_; }
	const std::vector<Rational> &values() const { return v_; }

	Rational operator()(const Rational &t) const;
	bool is_zero() const;
	bool same_domain(const PLFunction &o) const { return lo() == o.lo() && hi() == o.hi(); }

	friend bool operator==(const PLFunction &, const PLFunction &) = default;
	friend std::ostream &operator<<(std::ostream &os, const PLFunction &f);

private:
	std::vector<Rational> t_;
	std::vector<Rational> v_;
};

PLFunction operator+(const PLFunction &a, const PLFunction &b);
PLFunction operator-(const PLFunction &a, const PLFunction &b);
PLFunction operator-(const PLFunction &a);
PLFunction operator*(const Rational &c, const PLFunction &f);

/// Pointwise minimum; crossings inside a segment become breakpoints.
PLFunction pl_min(const PLFunction &a, const PLFunction &b);
PLFunction pl_max(const PLFunction &a, const PLFunction &b);
PLFunction pl_abs(const PLFunction &f);

/// {t : f(t) != 0}, relatively open in the domain.
Region cozero(const PLFunction &f);

/// Restriction of the domain to [lo, hi].
PLFunction slice(const PLFunction &f, const Rational &lo, const Rational &hi);

/// Joins f on [a, b] and g on [b, c]; f(b) must equal g(b).
PLFunction concat(const PLFunction &f, const PLFunction &g);

/// f on the closure of `piece` and zero elsewhere. f must vanish at every
/// endpoint of `piece` that is interior to the domain.
PLFunction restrict_to(const PLFunction &f, const Interval &piece);

/// Sorted union of both breakpoint sets.
std::vector<Rational> merged_breakpoints(const PLFunction &a, const PLFunction &b);

} // namespace latcheck
