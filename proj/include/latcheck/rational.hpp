#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace latcheck {

/// Exact arbitrary-precision fraction, always held in lowest terms with a
/// positive denominator.
class Rational {
public:
	Rational() = default;
	Rational(long v) : q_(v) {}
	Rational(int v) : q_(v) {}
	Rational(long num, long den);
	explicit Rational(mpq_class q);

	/// Accepts "p", "-p", "p/q" with an optional sign; q must be nonzero.
	static Rational parse(std::string_view text);

	/// Always "p/q", including integers ("3/1").
	std::string str() const;

	int sign() const { return sgn(q_); }
	bool is_zero() const { return sign() == 0; }
	bool is_integer() const { return q_.get_den() == 1; }

	Rational abs() const;
	Rational inverse() const;
	const mpq_class &raw() const { return q_; }
	mpz_class num() const { return q_.get_num(); }
	mpz_class den() const { return q_.get_den(); }

	Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
	Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
	Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

	friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		return cmp(a.q_, b.q_) <=> 0;
	}

	friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
	mpq_class q_;
};

inline const Rational &min(const Rational &a, const Rational &b) { return b < a ? b : a; }
inline const Rational &max(const Rational &a, const Rational &b) { return a < b ? b : a; }

/// Midpoint of two rationals.
Rational midpoint(const Rational &a, const Rational &b);

} // namespace latcheck
