#include "latcheck/feasibility.hpp"

#include <vector>

namespace latcheck {

namespace {

std::vector<std::size_t> active(std::span<const Rational> c, std::span<const std::size_t> support)
{
	std::vector<std::size_t> r;
	for (auto j : support)
		if (!c[j].is_zero())
			r.push_back(j);
	return r;
}

CoordVector ones_on(std::size_t n, std::span<const std::size_t> support)
{
	CoordVector x(n, Rational(0));
	for (auto j : support)
		x[j] = 1;
	return x;
}

Rational dot(std::span<const Rational> c, const CoordVector &x)
{
	Rational s;
	for (std::size_t j = 0; j < x.size(); ++j)
		if (!x[j].is_zero())
			s += c[j] * x[j];
	return s;
}

} // namespace

std::optional<CoordVector> zero_on_support(std::span<const Rational> c, std::span<const std::size_t> support)
{
	auto r = active(c, support);
	CoordVector x = ones_on(c.size(), support);
	if (r.empty())
		return x;
	if (r.size() == 1)
		return std::nullopt;
	if (r.size() == 2) {
		// Balanced pair: c_i * c_j - c_j * c_i = 0.
		x[r[0]] = c[r[1]];
		x[r[1]] = -c[r[0]];
		return primitive(std::move(x));
	}
	const std::size_t last = r.back();
	x[last] = 0;
	Rational s = dot(c, x);
	if (s.is_zero()) {
		x[r[0]] = 2;
		s = dot(c, x);
	}
	x[last] = -s / c[last];
	return primitive(std::move(x));
}

std::optional<CoordVector> nonzero_on_support(std::span<const Rational> c, std::span<const std::size_t> support)
{
	auto r = active(c, support);
	if (r.empty())
		return std::nullopt;
	CoordVector x = ones_on(c.size(), support);
	if (dot(c, x).is_zero())
		x[r[0]] = 2;
	return x;
}

std::optional<CoordVector> positive_zero_on_support(std::span<const Rational> c,
                                                    std::span<const std::size_t> support)
{
	Rational pos, neg;
	for (auto j : support) {
		if (c[j].sign() > 0)
			pos += c[j];
		else if (c[j].sign() < 0)
			neg -= c[j];
	}
	CoordVector x = ones_on(c.size(), support);
	if (pos.is_zero() && neg.is_zero())
		return x;
	if (pos.is_zero() || neg.is_zero())
		return std::nullopt;
	for (auto j : support) {
		if (c[j].sign() > 0)
			x[j] = neg;
		else if (c[j].sign() < 0)
			x[j] = pos;
	}
	return primitive(std::move(x));
}

CoordVector primitive(CoordVector v)
{
	mpz_class l = 1, g = 0;
	for (const auto &x : v)
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
	for (const auto &x : v) {
		mpz_class num = mpq_class(x.raw() * l).get_num();
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
	}
	if (g == 0)
		return v;
	int lead = 0;
	for (const auto &x : v)
		if (!x.is_zero()) {
			lead = x.sign();
			break;
		}
	Rational factor(mpq_class(l * lead, g));
	for (auto &x : v)
		x *= factor;
	return v;
}

CoordVector unit_vector(std::size_t n, std::size_t i)
{
	CoordVector e(n, Rational(0));
	e.at(i) = 1;
	return e;
}

} // namespace latcheck
