#include "latcheck/region.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace latcheck {

Interval::Interval(Rational lo_, Rational hi_, bool lo_c, bool hi_c)
: lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(lo_c), hi_closed(hi_c)
{
	if (hi < lo || (lo == hi && !(lo_closed && hi_closed)))
		throw std::invalid_argument("empty or inverted interval");
}

bool Interval::contains(const Rational &t) const
{
	if (t == lo)
		return lo_closed;
	if (t == hi)
		return hi_closed;
	return lo < t && t < hi;
}

std::ostream &operator<<(std::ostream &os, const Interval &i)
{
	if (i.is_point())
		return os << '{' << i.lo << '}';
	return os << (i.lo_closed ? '[' : '(') << i.lo << ',' << i.hi << (i.hi_closed ? ']' : ')');
}

namespace {

void require_closed_domain(const Interval &d)
{
	if (!d.lo_closed || !d.hi_closed || !(d.lo < d.hi))
		throw std::invalid_argument("region domain must be a closed non-degenerate interval");
}

void require_same_domain(const Region &a, const Region &b)
{
	if (!(a.domain() == b.domain()))
		throw std::invalid_argument("region domain mismatch");
}

std::vector<Rational> merged_points(const Region &a, const Region *b)
{
	auto pts = a.boundary_points();
	if (b) {
		auto other = b->boundary_points();
		pts.insert(pts.end(), other.begin(), other.end());
		std::sort(pts.begin(), pts.end());
		pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
	}
	return pts;
}

// Membership of `r` on every point and every open gap of `pts`.
void sample_cells(const Region &r, const std::vector<Rational> &pts, std::vector<char> &point_in,
                  std::vector<char> &gap_in)
{
	point_in.resize(pts.size());
	gap_in.resize(pts.size() - 1);
	for (std::size_t i = 0; i < pts.size(); ++i)
		point_in[i] = r.contains(pts[i]);
	for (std::size_t i = 0; i + 1 < pts.size(); ++i)
		gap_in[i] = r.contains(midpoint(pts[i], pts[i + 1]));
}

template <typename Op>
Region combine(const Region &a, const Region &b, Op op)
{
	require_same_domain(a, b);
	auto pts = merged_points(a, &b);
	std::vector<char> pa, ga, pb, gb;
	sample_cells(a, pts, pa, ga);
	sample_cells(b, pts, pb, gb);
	for (std::size_t i = 0; i < pa.size(); ++i)
		pa[i] = op(pa[i], pb[i]);
	for (std::size_t i = 0; i < ga.size(); ++i)
		ga[i] = op(ga[i], gb[i]);
	return Region::from_cells(a.domain(), pts, pa, ga);
}

} // namespace

Region::Region(Interval domain) : domain_(std::move(domain))
{
	require_closed_domain(domain_);
}

Region::Region(Interval domain, const std::vector<Interval> &parts) : domain_(std::move(domain))
{
	require_closed_domain(domain_);
	std::vector<Rational> pts{domain_.lo, domain_.hi};
	for (const auto &p : parts) {
		if (p.lo < domain_.lo || domain_.hi < p.hi)
			throw std::invalid_argument("region part outside its domain");
		pts.push_back(p.lo);
		pts.push_back(p.hi);
	}
	std::sort(pts.begin(), pts.end());
	pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
	auto in_any = [&](const Rational &t) {
		return std::any_of(parts.begin(), parts.end(), [&](const Interval &p) { return p.contains(t); });
	};
	std::vector<char> point_in(pts.size()), gap_in(pts.size() - 1);
	for (std::size_t i = 0; i < pts.size(); ++i)
		point_in[i] = in_any(pts[i]);
	for (std::size_t i = 0; i + 1 < pts.size(); ++i)
		gap_in[i] = in_any(midpoint(pts[i], pts[i + 1]));
	*this = from_cells(domain_, pts, point_in, gap_in);
}

Region Region::full(const Interval &domain)
{
	return Region(domain, {Interval::closed(domain.lo, domain.hi)});
}

Region Region::from_cells(const Interval &domain, std::span<const Rational> pts,
                          std::span<const char> point_in, std::span<const char> gap_in)
{
	Region r(domain);
	const std::size_t k = pts.size();
	if (k < 2 || point_in.size() != k || gap_in.size() + 1 != k || !(pts.front() == domain.lo) ||
	    !(pts.back() == domain.hi))
		throw std::invalid_argument("malformed cell decomposition");

	// Cells in order: point 0, gap 0, point 1, ..., point k-1. Cell c is a
	// point when c is even.
	const std::size_t cells = 2 * k - 1;
	auto in = [&](std::size_t c) { return c % 2 == 0 ? point_in[c / 2] : gap_in[c / 2]; };
	std::size_t c = 0;
	while (c < cells) {
		if (!in(c)) {
			++c;
			continue;
		}
		std::size_t e = c;
		while (e + 1 < cells && in(e + 1))
			++e;
		bool lo_closed = c % 2 == 0;
		bool hi_closed = e % 2 == 0;
		const Rational &lo = pts[c / 2];
		const Rational &hi = hi_closed ? pts[e / 2] : pts[e / 2 + 1];
		r.parts_.emplace_back(lo, hi, lo_closed, hi_closed);
		c = e + 1;
	}
	return r;
}

bool Region::contains(const Rational &t) const
{
	auto it = std::upper_bound(parts_.begin(), parts_.end(), t,
	                           [](const Rational &v, const Interval &p) { return v < p.lo; });
	if (it == parts_.begin())
		return false;
	return std::prev(it)->contains(t);
}

std::vector<Rational> Region::boundary_points() const
{
	std::vector<Rational> pts;
	pts.reserve(2 * parts_.size() + 2);
	pts.push_back(domain_.lo);
	for (const auto &p : parts_) {
		pts.push_back(p.lo);
		pts.push_back(p.hi);
	}
	pts.push_back(domain_.hi);
	pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
	return pts;
}

std::ostream &operator<<(std::ostream &os, const Region &r)
{
	if (r.empty())
		return os << "∅";
	for (std::size_t i = 0; i < r.parts().size(); ++i)
		os << (i ? "∪" : "") << r.parts()[i];
	return os;
}

Region region_union(const Region &a, const Region &b)
{
	return combine(a, b, [](char x, char y) { return char(x || y); });
}

Region region_intersect(const Region &a, const Region &b)
{
	return combine(a, b, [](char x, char y) { return char(x && y); });
}

Region region_difference(const Region &a, const Region &b)
{
	return combine(a, b, [](char x, char y) { return char(x && !y); });
}

Region region_complement(const Region &a)
{
	return region_difference(Region::full(a.domain()), a);
}

Region region_closure(const Region &a)
{
	auto pts = merged_points(a, nullptr);
	std::vector<char> p, g;
	sample_cells(a, pts, p, g);
	for (std::size_t i = 0; i < p.size(); ++i)
		p[i] = p[i] || (i > 0 && g[i - 1]) || (i < g.size() && g[i]);
	return Region::from_cells(a.domain(), pts, p, g);
}

Region region_interior(const Region &a)
{
	auto pts = merged_points(a, nullptr);
	std::vector<char> p, g;
	sample_cells(a, pts, p, g);
	for (std::size_t i = 0; i < p.size(); ++i)
		p[i] = p[i] && (i == 0 || g[i - 1]) && (i == g.size() || g[i]);
	return Region::from_cells(a.domain(), pts, p, g);
}

bool region_subset(const Region &a, const Region &b)
{
	return region_difference(a, b).empty();
}

bool region_subset_closure(const Region &a, const Region &b)
{
	return region_subset(a, region_closure(b));
}

} // namespace latcheck
