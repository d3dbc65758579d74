#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "latcheck/region.hpp"
#include "oracles.hpp"

using namespace latcheck;

namespace {

const Interval unit = Interval::closed(0, 1);
const Rational half(1, 2);

Region R(std::vector<Interval> parts)
{
	return Region(unit, parts);
}

} // namespace

TEST_CASE("rationals stay in lowest terms")
{
	CHECK(Rational(6, 4) == Rational(3, 2));
	CHECK(Rational(6, -4).str() == "-3/2");
	CHECK(Rational(3).str() == "3/1");
	CHECK(Rational(0, 5).str() == "0/1");
	CHECK(Rational::parse("-10/4") == Rational(-5, 2));
	CHECK(Rational::parse("7") == Rational(7));
	CHECK(Rational(1, 3) + Rational(1, 6) == half);
	CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
	CHECK(Rational(-1, 3) < Rational(-1, 4));
	CHECK(midpoint(Rational(0), Rational(1)) == half);
	CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
	CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
	CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational arithmetic is exact beyond machine words")
{
	Rational x(1, 3);
	for (int i = 0; i < 200; ++i)
		x = x * Rational(3, 2);
	for (int i = 0; i < 200; ++i)
		x = x / Rational(3, 2);
	CHECK(x == Rational(1, 3));
	const auto d = x.den();
	CHECK(d == 3);
}

TEST_CASE("region union keeps punctures and merges touching parts")
{
	auto a = R({Interval::open(0, half)});
	auto b = R({Interval::open(half, 1)});
	auto u = region_union(a, b);
	REQUIRE(u.parts().size() == 2);
	CHECK(!u.contains(half));

	auto c = R({Interval(0, half, false, true)});
	auto d = R({Interval(half, 1, true, false)});
	CHECK(region_union(c, d) == R({Interval::open(0, 1)}));

	CHECK(region_union(a, Region(unit)) == a);
}

TEST_CASE("region intersection")
{
	CHECK(region_intersect(R({Interval::open(0, Rational(3, 4))}), R({Interval::open(half, 1)})) ==
	      R({Interval::open(half, Rational(3, 4))}));
	CHECK(region_intersect(R({Interval::open(0, 1)}), Region(unit)).empty());
	auto p = region_intersect(R({Interval::closed(0, half)}), R({Interval::closed(half, 1)}));
	CHECK(p == R({Interval::point(half)}));
}

TEST_CASE("closure and interior")
{
	auto punctured = R({Interval::open(0, half), Interval::open(half, 1)});
	CHECK(region_closure(punctured) == Region::full(unit));
	CHECK(region_interior(R({Interval::closed(Rational(1, 4), half)})) ==
	      R({Interval::open(Rational(1, 4), half)}));
	CHECK(region_interior(R({Interval::point(half)})).empty());
	// Relative interior keeps the ambient endpoints.
	CHECK(region_interior(R({Interval::closed(0, half)})) == R({Interval(0, half, true, false)}));
	CHECK(region_interior(Region::full(unit)) == Region::full(unit));
}

TEST_CASE("subset and subset of the closure")
{
	auto lo = R({Interval::open(0, half)});
	auto hi = R({Interval::open(half, 1)});
	CHECK(!region_subset(hi, lo));
	auto whole = R({Interval::open(0, 1)});
	auto punctured = region_union(lo, hi);
	CHECK(!region_subset(whole, punctured));
	CHECK(region_subset_closure(whole, punctured));
	CHECK(region_subset(Region(unit), lo));
	CHECK(region_subset_closure(Region(unit), lo));
}

TEST_CASE("domain mismatch is rejected")
{
	Region a(unit), b(Interval::closed(0, 2));
	CHECK_THROWS_AS(region_union(a, b), std::invalid_argument);
	CHECK_THROWS_AS(region_intersect(a, b), std::invalid_argument);
	CHECK_THROWS_AS(region_subset(a, b), std::invalid_argument);
}

TEST_CASE("intervals reject empty shapes")
{
	CHECK_THROWS(Interval(Rational(1), Rational(0)));
	CHECK_THROWS(Interval(half, half, true, false));
	CHECK_THROWS(Region(unit, {Interval::closed(0, 2)}));
}

TEST_CASE("property: region operations match the membership oracle")
{
	gen::Rng rng(11);
	for (int trial = 0; trial < 2000; ++trial) {
		auto a = gen::random_region(rng), b = gen::random_region(rng);
		struct Op {
			Region r;
			bool (*expect)(bool, bool);
		};
		const Op ops[] = {
			{region_union(a, b), [](bool x, bool y) { return x || y; }},
			{region_intersect(a, b), [](bool x, bool y) { return x && y; }},
			{region_difference(a, b), [](bool x, bool y) { return x && !y; }},
			{region_complement(a), [](bool x, bool) { return !x; }},
		};
		auto pts = oracle::sample_points({&a, &b});
		for (const auto &op : ops) {
			REQUIRE(oracle::canonical(op.r));
			for (const auto &t : pts)
				REQUIRE(oracle::member(op.r, t) == op.expect(oracle::member(a, t), oracle::member(b, t)));
		}
		// The sample grid alternates boundary points (even index) and gap
		// midpoints (odd index). A gap is open and a is constant on it; a
		// boundary point is in cl(a) iff it or an adjacent gap is in a.
		auto cl = region_closure(a), in = region_interior(a);
		REQUIRE(oracle::canonical(cl));
		REQUIRE(oracle::canonical(in));
		auto grid = oracle::sample_points({&a});
		for (std::size_t i = 0; i < grid.size(); ++i) {
			if (i % 2) {
				REQUIRE(oracle::member(cl, grid[i]) == oracle::member(a, grid[i]));
				REQUIRE(oracle::member(in, grid[i]) == oracle::member(a, grid[i]));
				continue;
			}
			bool left = i > 0 && oracle::member(a, grid[i - 1]);
			bool right = i + 1 < grid.size() && oracle::member(a, grid[i + 1]);
			bool self = oracle::member(a, grid[i]);
			REQUIRE(oracle::member(cl, grid[i]) == (self || left || right));
			bool left_ok = i == 0 || left;
			bool right_ok = i + 1 == grid.size() || right;
			REQUIRE(oracle::member(in, grid[i]) == (self && left_ok && right_ok));
		}
		REQUIRE(region_subset(a, b) == (region_difference(a, b).empty()));
		REQUIRE(region_subset_closure(a, b) == region_subset(a, region_closure(b)));
	}
}

TEST_CASE("property: boolean algebra laws on random regions")
{
	gen::Rng rng(12);
	for (int trial = 0; trial < 1500; ++trial) {
		auto a = gen::random_region(rng), b = gen::random_region(rng), c = gen::random_region(rng);
		CHECK(region_union(a, b) == region_union(b, a));
		CHECK(region_union(region_union(a, b), c) == region_union(a, region_union(b, c)));
		CHECK(region_union(a, a) == a);
		CHECK(region_complement(region_union(a, b)) ==
		      region_intersect(region_complement(a), region_complement(b)));
		CHECK(region_complement(region_intersect(a, b)) ==
		      region_union(region_complement(a), region_complement(b)));
		CHECK(region_union(a, region_intersect(a, b)) == a);
		CHECK(region_intersect(a, region_union(a, b)) == a);
		CHECK(region_intersect(a, region_union(b, c)) ==
		      region_union(region_intersect(a, b), region_intersect(a, c)));
		CHECK(region_union(a, region_intersect(b, c)) ==
		      region_intersect(region_union(a, b), region_union(a, c)));
		CHECK(region_complement(region_complement(a)) == a);
	}
}

TEST_CASE("property: closure and interior are idempotent and bracket the region")
{
	gen::Rng rng(13);
	for (int trial = 0; trial < 1500; ++trial) {
		auto a = gen::random_region(rng);
		auto cl = region_closure(a), in = region_interior(a);
		CHECK(region_closure(cl) == cl);
		CHECK(region_interior(in) == in);
		CHECK(region_subset(in, a));
		CHECK(region_subset(a, cl));
	}
}

TEST_CASE("regions print their parts")
{
	std::ostringstream os;
	os << R({Interval(0, half, true, false)});
	CHECK(os.str().find("1/2") != std::string::npos);
}
