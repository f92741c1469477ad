#pragma once

// Exact arithmetic over Q and Q(w), w a primitive cube root of unity.

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symlie {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

class ArithmeticError : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational &q);

/// a + b*w with w^2 = -1 - w.  The pair (a, b) is the unique representation.
class Scalar {
public:
	Scalar() = default;
	Scalar(int v) : a_(v) {}
	Scalar(long v) : a_(v) {}
	Scalar(Rational a) : a_(std::move(a)) {}
	Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

	static Scalar omega() { return Scalar(0, 1); }
	static Scalar rational(long num, long den);

	const Rational &a() const { return a_; }
	const Rational &b() const { return b_; }

	bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
	bool is_rational() const { return sgn(b_) == 0; }
	bool is_one() const { return sgn(b_) == 0 && a_ == 1; }

	Scalar &operator+=(const Scalar &o);
	Scalar &operator-=(const Scalar &o);
	Scalar &operator*=(const Scalar &o);
	Scalar &operator/=(const Scalar &o);

	/// this += x * y, without temporaries in the rational case.
	void add_product(const Scalar &x, const Scalar &y);

	Scalar operator-() const { return Scalar(-a_, -b_); }

	/// a + b*w  ->  a + b*w^2
	Scalar conj_omega() const { return Scalar(a_ - b_, -b_); }

	/// Field norm a^2 - ab + b^2 = x * conj_omega(x).
	Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

	Scalar inverse() const;

	friend bool operator==(const Scalar &x, const Scalar &y)
	{
		return x.a_ == y.a_ && x.b_ == y.b_;
	}
	friend bool operator!=(const Scalar &x, const Scalar &y) { return !(x == y); }

	/// "p/q", "p/q*w" or "p/q+r/s*w"; parse() accepts the same forms.
	std::string to_string() const;
	static Scalar parse(std::string_view text);

private:
	Rational a_{0};
	Rational b_{0};
};

inline Scalar operator+(Scalar x, const Scalar &y) { return x += y; }
inline Scalar operator-(Scalar x, const Scalar &y) { return x -= y; }
inline Scalar operator*(Scalar x, const Scalar &y) { return x *= y; }
inline Scalar operator/(Scalar x, const Scalar &y) { return x /= y; }

inline Scalar conj_omega(const Scalar &x) { return x.conj_omega(); }

std::ostream &operator<<(std::ostream &os, const Scalar &x);

} // namespace symlie
