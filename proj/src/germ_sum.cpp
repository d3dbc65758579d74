#include "latcheck/germ_sum.hpp"

#include <ostream>
#include <stdexcept>

namespace latcheck {

const Rational &GermSum::domain_lo()
{
	static const Rational v(0);
	return v;
}

const Rational &GermSum::cut()
{
	static const Rational v(1);
	return v;
}

const Rational &GermSum::domain_hi()
{
	static const Rational v(2);
	return v;
}

bool vanishes_near_cut_left(const PLFunction &f)
{
	const auto &v = f.values();
	return f.lo() == GermSum::domain_lo() && f.hi() == GermSum::cut() && v[v.size() - 1].is_zero() &&
	       v[v.size() - 2].is_zero();
}

bool vanishes_near_cut_right(const PLFunction &f)
{
	const auto &v = f.values();
	return f.lo() == GermSum::cut() && f.hi() == GermSum::domain_hi() && v[0].is_zero() && v[1].is_zero();
}

GermSum::GermSum(PLFunction l, PLFunction r, Rational lam)
: left(std::move(l)), right(std::move(r)), lambda(std::move(lam))
{
	if (!vanishes_near_cut_left(left))
		throw std::invalid_argument("germ-sum left part must live on [0,1] and vanish near 1");
	if (!vanishes_near_cut_right(right))
		throw std::invalid_argument("germ-sum right part must live on [1,2] and vanish near 1");
}

PLFunction GermSum::zero_left()
{
	return PLFunction::zero(domain_lo(), cut());
}

PLFunction GermSum::zero_right()
{
	return PLFunction::zero(cut(), domain_hi());
}

GermSum GermSum::zero()
{
	return {zero_left(), zero_right(), 0};
}

GermSum GermSum::unit()
{
	return {zero_left(), zero_right(), 1};
}

Rational GermSum::operator()(const Rational &t) const
{
	if (t < cut())
		return left(t) + lambda;
	if (cut() < t)
		return right(t) + lambda;
	return lambda;
}

PLFunction GermSum::pointwise() const
{
	auto joined = concat(left, right);
	return joined + PLFunction::constant(domain_lo(), domain_hi(), lambda);
}

GermSum GermSum::from_pointwise(const PLFunction &f)
{
	if (!(f.lo() == domain_lo()) || !(f.hi() == domain_hi()))
		throw std::invalid_argument("germ-sum pointwise form must live on [0,2]");
	// Canonical form: constant near the cut means 1 is not a breakpoint and
	// the segment through it is flat.
	const auto &t = f.breakpoints();
	const auto &v = f.values();
	std::size_t i = 1;
	while (t[i] < cut())
		++i;
	if (t[i] == cut() || !(v[i] == v[i - 1]))
		throw std::invalid_argument("function is not constant near the cut");
	Rational lam = v[i];
	auto shift = PLFunction::constant(domain_lo(), domain_hi(), -lam);
	auto g = f + shift;
	return {slice(g, domain_lo(), cut()), slice(g, cut(), domain_hi()), lam};
}

std::ostream &operator<<(std::ostream &os, const GermSum &g)
{
	return os << "GermSum{left=" << g.left << ", right=" << g.right << ", lambda=" << g.lambda << '}';
}

} // namespace latcheck
