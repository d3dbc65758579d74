#pragma once

#include <cstddef>
#include <vector>

#include "latcheck/element.hpp"
#include "latcheck/region.hpp"
#include "latcheck/verdict.hpp"

namespace latcheck {

// Linear structure. All arguments must be admitted by the space.
Element add(const Space &s, const Element &x, const Element &y);
Element sub(const Space &s, const Element &x, const Element &y);
Element scale(const Space &s, const Rational &c, const Element &x);

// Lattice structure.
Element lat_inf(const Space &s, const Element &x, const Element &y);
Element lat_sup(const Space &s, const Element &x, const Element &y);
Element lat_abs(const Space &s, const Element &x);
bool is_positive(const Space &s, const Element &x);

/// x ⊥ y, decided as |x| ∧ |y| = 0.
bool disjoint(const Space &s, const Element &x, const Element &y);

/// Cozero set of a function-valued element (PL or pointwise germ-sum).
Region cozero(const Space &s, const Element &x);

/// The principal band {x}^dd.
///
/// coord: support indices. pl / germ_pointwise: the regularly open region
/// int(cl(cozero x)). germ_direct: one region per function summand plus a
/// flag for the scalar summand.
struct Band {
	Model model;
	std::vector<std::size_t> indices;
	std::vector<Region> carriers;
	bool scalar = false;

	friend bool operator==(const Band &, const Band &) = default;
};

Band band_of(const Space &s, const Element &x);
bool band_contains(const Space &s, const Band &b, const Element &x);

/// a ⊲ b, i.e. a ∈ {b}^dd.
bool width_leq(const Space &s, const Element &a, const Element &b);
bool same_width(const Space &s, const Element &a, const Element &b);

/// |x'| ∧ |x - x'| = 0.
bool is_component(const Space &s, const Element &part, const Element &x);

/// Atomic nonzero components of x: coordinate restrictions in Q^n, and
/// restrictions to the connected pieces of the cozero set in the function
/// models. They are pairwise disjoint and sum to x.
std::vector<Element> components_of(const Space &s, const Element &x);

/// Searches sums of atomic components of x for a nonzero one disjoint from
/// u. Requires x ∉ {u}^dd. `subset_cap` bounds the number of subsets tried;
/// hitting it before exhausting them yields `unknown`.
Verdict has_component_witness(const Space &s, const Element &x, const Element &u,
                              std::size_t subset_cap = 4096);

} // namespace latcheck
