#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "latcheck/element.hpp"

namespace latcheck {

// Single-equation feasibility over Q. `coeffs` is one row c of length n;
// `support` lists the coordinates that must be nonzero, every other
// coordinate of the returned vector is zero. Returned vectors are primitive
// integer vectors (see primitive()).

/// x with supp(x) = support and c·x = 0. Exists iff fewer than one or at
/// least two of the coefficients on `support` are nonzero, i.e. the
/// hyperplane is not a coordinate hyperplane of the support.
std::optional<CoordVector> zero_on_support(std::span<const Rational> coeffs, std::span<const std::size_t> support);

/// x with supp(x) = support and c·x != 0. Exists iff some coefficient on
/// `support` is nonzero.
std::optional<CoordVector> nonzero_on_support(std::span<const Rational> coeffs, std::span<const std::size_t> support);

/// x > 0 on `support` (zero elsewhere) with c·x = 0. Exists iff the nonzero
/// coefficients on `support` are absent or take both signs.
std::optional<CoordVector> positive_zero_on_support(std::span<const Rational> coeffs,
                                                    std::span<const std::size_t> support);

/// Scales v to an integer vector with coprime entries whose first nonzero
/// entry is positive. The zero vector is returned unchanged.
CoordVector primitive(CoordVector v);

/// Unit vector e_i in Q^n.
CoordVector unit_vector(std::size_t n, std::size_t i);

} // namespace latcheck
