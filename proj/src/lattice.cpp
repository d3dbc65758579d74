#include "latcheck/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace latcheck {

namespace {

void require(const Space &s, const Element &x)
{
	if (!s.admits(x))
		throw std::invalid_argument("element does not belong to " + s.name());
}

template <typename F>
CoordVector coordwise(const CoordVector &x, const CoordVector &y, F f)
{
	CoordVector out;
	out.reserve(x.size());
	for (std::size_t i = 0; i < x.size(); ++i)
		out.push_back(f(x[i], y[i]));
	return out;
}

// Applies a binary operation that acts summand by summand on germ sums and
// pointwise on functions. `scalar` handles the coordinates/lambda.
template <typename PLOp, typename ScalarOp>
Element componentwise(const Space &s, const Element &x, const Element &y, PLOp pl_op, ScalarOp scalar)
{
	require(s, x);
	require(s, y);
	switch (s.model()) {
	case Model::coord:
		return coordwise(std::get<CoordVector>(x), std::get<CoordVector>(y), scalar);
	case Model::pl:
		return pl_op(std::get<PLFunction>(x), std::get<PLFunction>(y));
	case Model::germ_pointwise:
	case Model::germ_direct: {
		const auto &gx = std::get<GermSum>(x);
		const auto &gy = std::get<GermSum>(y);
		return GermSum(pl_op(gx.left, gy.left), pl_op(gx.right, gy.right), scalar(gx.lambda, gy.lambda));
	}
	}
	throw std::logic_error("unknown model");
}

// Lattice operations of the pointwise germ-sum model go through the
// function on [0,2]; the direct-sum model is summand by summand.
template <typename PLOp, typename ScalarOp>
Element order_op(const Space &s, const Element &x, const Element &y, PLOp pl_op, ScalarOp scalar)
{
	if (s.model() == Model::germ_pointwise) {
		require(s, x);
		require(s, y);
		return GermSum::from_pointwise(pl_op(std::get<GermSum>(x).pointwise(), std::get<GermSum>(y).pointwise()));
	}
	return componentwise(s, x, y, pl_op, scalar);
}

bool pl_width_leq(const PLFunction &a, const PLFunction &b)
{
	return region_subset_closure(cozero(a), cozero(b));
}

Region band_region(const PLFunction &f)
{
	return region_interior(region_closure(cozero(f)));
}

bool pl_nonnegative(const PLFunction &f)
{
	return std::all_of(f.values().begin(), f.values().end(), [](const Rational &v) { return v.sign() >= 0; });
}

std::vector<PLFunction> pl_atoms(const PLFunction &f)
{
	std::vector<PLFunction> out;
	const Region support = cozero(f);
	for (const auto &part : support.parts())
		out.push_back(restrict_to(f, part));
	return out;
}

} // namespace

Element add(const Space &s, const Element &x, const Element &y)
{
	return componentwise(
		s, x, y, [](const PLFunction &a, const PLFunction &b) { return a + b; },
		[](const Rational &a, const Rational &b) { return a + b; });
}

Element sub(const Space &s, const Element &x, const Element &y)
{
	return componentwise(
		s, x, y, [](const PLFunction &a, const PLFunction &b) { return a - b; },
		[](const Rational &a, const Rational &b) { return a - b; });
}

Element scale(const Space &s, const Rational &c, const Element &x)
{
	return componentwise(
		s, x, x, [&](const PLFunction &a, const PLFunction &) { return c * a; },
		[&](const Rational &a, const Rational &) { return c * a; });
}

Element lat_inf(const Space &s, const Element &x, const Element &y)
{
	return order_op(s, x, y, [](const PLFunction &a, const PLFunction &b) { return pl_min(a, b); },
	                [](const Rational &a, const Rational &b) { return min(a, b); });
}

Element lat_sup(const Space &s, const Element &x, const Element &y)
{
	return order_op(s, x, y, [](const PLFunction &a, const PLFunction &b) { return pl_max(a, b); },
	                [](const Rational &a, const Rational &b) { return max(a, b); });
}

Element lat_abs(const Space &s, const Element &x)
{
	return lat_sup(s, x, scale(s, Rational(-1), x));
}

bool is_positive(const Space &s, const Element &x)
{
	require(s, x);
	switch (s.model()) {
	case Model::coord: {
		const auto &v = std::get<CoordVector>(x);
		return std::all_of(v.begin(), v.end(), [](const Rational &c) { return c.sign() >= 0; });
	}
	case Model::pl:
		return pl_nonnegative(std::get<PLFunction>(x));
	case Model::germ_pointwise:
		return pl_nonnegative(std::get<GermSum>(x).pointwise());
	case Model::germ_direct: {
		const auto &g = std::get<GermSum>(x);
		return pl_nonnegative(g.left) && pl_nonnegative(g.right) && g.lambda.sign() >= 0;
	}
	}
	return false;
}

bool disjoint(const Space &s, const Element &x, const Element &y)
{
	return is_zero(lat_inf(s, lat_abs(s, x), lat_abs(s, y)));
}

Region cozero(const Space &s, const Element &x)
{
	require(s, x);
	switch (s.model()) {
	case Model::pl:
		return cozero(std::get<PLFunction>(x));
	case Model::germ_pointwise:
		return cozero(std::get<GermSum>(x).pointwise());
	default:
		throw std::invalid_argument("cozero is defined for function models only");
	}
}

Band band_of(const Space &s, const Element &x)
{
	require(s, x);
	Band b{s.model(), {}, {}, false};
	switch (s.model()) {
	case Model::coord: {
		const auto &v = std::get<CoordVector>(x);
		for (std::size_t i = 0; i < v.size(); ++i)
			if (!v[i].is_zero())
				b.indices.push_back(i);
		break;
	}
	case Model::pl:
		b.carriers.push_back(band_region(std::get<PLFunction>(x)));
		break;
	case Model::germ_pointwise:
		b.carriers.push_back(band_region(std::get<GermSum>(x).pointwise()));
		break;
	case Model::germ_direct: {
		const auto &g = std::get<GermSum>(x);
		b.carriers.push_back(band_region(g.left));
		b.carriers.push_back(band_region(g.right));
		b.scalar = !g.lambda.is_zero();
		break;
	}
	}
	return b;
}

bool band_contains(const Space &s, const Band &b, const Element &x)
{
	require(s, x);
	if (b.model != s.model())
		throw std::invalid_argument("band from a different model");
	// A regularly open carrier U satisfies cl(U) = cl(cozero(generator)).
	switch (s.model()) {
	case Model::coord: {
		const auto &v = std::get<CoordVector>(x);
		for (std::size_t i = 0; i < v.size(); ++i)
			if (!v[i].is_zero() && !std::binary_search(b.indices.begin(), b.indices.end(), i))
				return false;
		return true;
	}
	case Model::pl:
		return region_subset_closure(cozero(std::get<PLFunction>(x)), b.carriers[0]);
	case Model::germ_pointwise:
		return region_subset_closure(cozero(std::get<GermSum>(x).pointwise()), b.carriers[0]);
	case Model::germ_direct: {
		const auto &g = std::get<GermSum>(x);
		return region_subset_closure(cozero(g.left), b.carriers[0]) &&
		       region_subset_closure(cozero(g.right), b.carriers[1]) && (g.lambda.is_zero() || b.scalar);
	}
	}
	return false;
}

bool width_leq(const Space &s, const Element &a, const Element &b)
{
	require(s, a);
	require(s, b);
	switch (s.model()) {
	case Model::coord: {
		const auto &va = std::get<CoordVector>(a);
		const auto &vb = std::get<CoordVector>(b);
		for (std::size_t i = 0; i < va.size(); ++i)
			if (!va[i].is_zero() && vb[i].is_zero())
				return false;
		return true;
	}
	case Model::pl:
		return pl_width_leq(std::get<PLFunction>(a), std::get<PLFunction>(b));
	case Model::germ_pointwise:
		return pl_width_leq(std::get<GermSum>(a).pointwise(), std::get<GermSum>(b).pointwise());
	case Model::germ_direct: {
		const auto &ga = std::get<GermSum>(a);
		const auto &gb = std::get<GermSum>(b);
		return pl_width_leq(ga.left, gb.left) && pl_width_leq(ga.right, gb.right) &&
		       (ga.lambda.is_zero() || !gb.lambda.is_zero());
	}
	}
	return false;
}

bool same_width(const Space &s, const Element &a, const Element &b)
{
	return width_leq(s, a, b) && width_leq(s, b, a);
}

bool is_component(const Space &s, const Element &part, const Element &x)
{
	return disjoint(s, part, sub(s, x, part));
}

std::vector<Element> components_of(const Space &s, const Element &x)
{
	require(s, x);
	std::vector<Element> out;
	switch (s.model()) {
	case Model::coord: {
		const auto &v = std::get<CoordVector>(x);
		for (std::size_t i = 0; i < v.size(); ++i)
			if (!v[i].is_zero()) {
				CoordVector e(v.size(), Rational(0));
				e[i] = v[i];
				out.emplace_back(std::move(e));
			}
		break;
	}
	case Model::pl:
		for (auto &a : pl_atoms(std::get<PLFunction>(x)))
			out.emplace_back(std::move(a));
		break;
	case Model::germ_pointwise:
		for (auto &a : pl_atoms(std::get<GermSum>(x).pointwise()))
			out.emplace_back(GermSum::from_pointwise(a));
		break;
	case Model::germ_direct: {
		const auto &g = std::get<GermSum>(x);
		for (auto &a : pl_atoms(g.left))
			out.emplace_back(GermSum::from_left(std::move(a)));
		for (auto &a : pl_atoms(g.right))
			out.emplace_back(GermSum::from_right(std::move(a)));
		if (!g.lambda.is_zero())
			out.emplace_back(GermSum(GermSum::zero_left(), GermSum::zero_right(), g.lambda));
		break;
	}
	}
	return out;
}

Verdict has_component_witness(const Space &s, const Element &x, const Element &u, std::size_t subset_cap)
{
	const std::string property = "sufficiently_many_components";
	if (width_leq(s, x, u))
		throw std::invalid_argument("component witness search requires x outside the band of u");
	auto atoms = components_of(s, x);
	const std::size_t k = atoms.size();
	SearchReport report;

	// Subsets by increasing size, lexicographic within a size.
	for (std::size_t size = 1; size <= k; ++size) {
		std::vector<std::size_t> idx(size);
		std::iota(idx.begin(), idx.end(), 0);
		while (true) {
			if (report.trials == subset_cap)
				return Verdict::unknown(property, report);
			++report.trials;
			Element sum = s.zero();
			for (auto i : idx)
				sum = add(s, sum, atoms[i]);
			if (!is_zero(sum) && disjoint(s, sum, u) && is_component(s, sum, x)) {
				Verdict v = Verdict::holds(property, "atomic component sum disjoint from u", report);
				v.witness = Witness{"x' is a nonzero component of x and x' ⊥ u",
				                    {{"x", x}, {"u", u}, {"component", std::move(sum)}}};
				return v;
			}
			// Next combination.
			std::size_t pos = size;
			while (pos > 0 && idx[pos - 1] == k - size + pos - 1)
				--pos;
			if (pos == 0)
				break;
			++idx[pos - 1];
			for (std::size_t j = pos; j < size; ++j)
				idx[j] = idx[j - 1] + 1;
		}
	}
	report.exhausted_patterns = true;
	Witness w{"every nonzero sum of atomic components of x meets u", {{"x", x}, {"u", u}}};
	return Verdict::fails(property, std::move(w), report);
}

} // namespace latcheck
