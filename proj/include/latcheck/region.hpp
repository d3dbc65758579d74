#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "latcheck/rational.hpp"

namespace latcheck {

/// Interval with rational endpoints and per-endpoint open/closed flags.
/// Either lo < hi, or lo == hi with both ends closed (a single point).
struct Interval {
	Rational lo, hi;
	bool lo_closed = true;
	bool hi_closed = true;

	Interval(Rational lo, Rational hi, bool lo_closed = true, bool hi_closed = true);

	static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
	static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
	static Interval point(const Rational &p) { return {p, p, true, true}; }

	bool contains(const Rational &t) const;
	bool is_point() const { return lo == hi; }

	friend bool operator==(const Interval &, const Interval &) = default;
	friend std::ostream &operator<<(std::ostream &os, const Interval &i);
};

/// Canonical finite union of intervals inside a closed ambient domain.
///
/// Parts are sorted, pairwise disjoint and never unionable into a single
/// interval, so structural equality coincides with set equality. Single
/// points are allowed as parts.
class Region {
public:
	/// Empty region of the given closed domain.
	explicit Region(Interval domain);

	/// Canonicalizes an arbitrary (possibly overlapping) list of intervals.
	Region(Interval domain, const std::vector<Interval> &parts);

	static Region full(const Interval &domain);

	/// Builds a region from its membership pattern on a cell decomposition:
	/// the sorted points p0 < ... < pk (p0 and pk the domain endpoints),
	/// point_in[i] for each point and gap_in[i] for each open gap (p_i, p_i+1).
	static Region from_cells(const Interval &domain, std::span<const Rational> points,
	                         std::span<const char> point_in, std::span<const char> gap_in);

	const Interval &domain() const { return domain_; }
	const std::vector<Interval> &parts() const { return parts_; }
	bool empty() const { return parts_.empty(); }
	bool contains(const Rational &t) const;

	/// Sorted distinct part endpoints together with the domain endpoints.
	std::vector<Rational> boundary_points() const;

	friend bool operator==(const Region &, const Region &) = default;
	friend std::ostream &operator<<(std::ostream &os, const Region &r);

private:
	Interval domain_;
	std::vector<Interval> parts_;
};

Region region_union(const Region &a, const Region &b);
Region region_intersect(const Region &a, const Region &b);
Region region_difference(const Region &a, const Region &b);
Region region_complement(const Region &a);

/// Closure closes endpoints and fills punctures.
Region region_closure(const Region &a);

/// Interior relative to the ambient domain: a part touching a domain
/// endpoint keeps it; isolated points vanish.
Region region_interior(const Region &a);

bool region_subset(const Region &a, const Region &b);
bool region_subset_closure(const Region &a, const Region &b);

} // namespace latcheck
