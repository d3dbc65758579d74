#include "latcheck/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace latcheck {

Rational::Rational(long num, long den)
{
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	q_ = mpq_class(num, den);
	q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q))
{
	if (q_.get_den() == 0)
		throw std::domain_error("rational with zero denominator");
	q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	std::string s(text);
	auto valid_int = [](std::string_view d) {
		std::size_t i = 0;
		if (!d.empty() && (d[0] == '-' || d[0] == '+'))
			i = 1;
		if (i == d.size())
			return false;
		for (; i < d.size(); ++i)
			if (d[i] < '0' || d[i] > '9')
				return false;
		return true;
	};
	auto slash = s.find('/');
	std::string num = s.substr(0, slash);
	std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
	if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
		throw std::invalid_argument("malformed rational \"" + s + "\"");
	if (num[0] == '+')
		num.erase(0, 1);
	mpz_class n(num, 10), d(den, 10);
	if (d == 0)
		throw std::invalid_argument("zero denominator in \"" + s + "\"");
	return Rational(mpq_class(n, d));
}

std::string Rational::str() const
{
	return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const
{
	return Rational(mpq_class(::abs(q_)));
}

Rational Rational::inverse() const
{
	if (is_zero())
		throw std::domain_error("inverse of zero");
	return Rational(mpq_class(1) / q_);
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw std::domain_error("division by zero");
	q_ /= o.q_;
	return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
	return os << r.q_.get_str();
}

Rational midpoint(const Rational &a, const Rational &b)
{
	return (a + b) / Rational(2);
}

} // namespace latcheck
