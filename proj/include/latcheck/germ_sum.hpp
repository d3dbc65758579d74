#pragma once

#include <iosfwd>

#include "latcheck/pl_function.hpp"

namespace latcheck {

/// Element x = x1 + x2 + lambda*1 of the span of
///   X1 = {continuous on [0,2], vanishing on a neighbourhood of [1,2]},
///   X2 = {continuous on [0,2], vanishing on a neighbourhood of [0,1]},
/// and the constant function 1.
///
/// `left` lives on [0,1] and its last segment is identically zero; `right`
/// lives on [1,2] and its first segment is identically zero. With those
/// shapes the representation is unique.
struct GermSum {
	PLFunction left;
	PLFunction right;
	Rational lambda;

	GermSum(PLFunction left, PLFunction right, Rational lambda);

	static const Rational &domain_lo();
	static const Rational &cut();
	static const Rational &domain_hi();

	static GermSum zero();
	static GermSum unit();
	static GermSum from_left(PLFunction left) { return {std::move(left), zero_right(), 0}; }
	static GermSum from_right(PLFunction right) { return {zero_left(), std::move(right), 0}; }
	static PLFunction zero_left();
	static PLFunction zero_right();

	/// Pointwise value on [0,2].
	Rational operator()(const Rational &t) const;

	/// The element as a single function on [0,2].
	PLFunction pointwise() const;

	/// Inverse of pointwise(); f must be constant on a neighbourhood of 1.
	static GermSum from_pointwise(const PLFunction &f);

	bool is_zero() const { return lambda.is_zero() && left.is_zero() && right.is_zero(); }

	friend bool operator==(const GermSum &, const GermSum &) = default;
	friend std::ostream &operator<<(std::ostream &os, const GermSum &g);
};

/// True when the left function's last segment and the right function's
/// first segment vanish identically.
bool vanishes_near_cut_left(const PLFunction &f);
bool vanishes_near_cut_right(const PLFunction &f);

} // namespace latcheck
