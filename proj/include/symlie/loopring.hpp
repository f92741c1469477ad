#pragma once

// The ring A = k[t, 1/t, 1/(1-t)] and its S3 of automorphisms.

#include "symlie/scalar.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace symlie {

/// Dense polynomial in t with rational coefficients, lowest degree first.
class Polynomial {
public:
	Polynomial() = default;
	Polynomial(Rational c);
	Polynomial(int c) : Polynomial(Rational(c)) {}
	explicit Polynomial(std::vector<Rational> coeffs);

	static Polynomial t();
	static Polynomial one_minus_t();
	static Polynomial monomial(unsigned degree, Rational c = 1);

	bool is_zero() const { return c_.empty(); }
	/// -1 for the zero polynomial.
	int degree() const { return static_cast<int>(c_.size()) - 1; }
	Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
	const std::vector<Rational> &coeffs() const { return c_; }
	Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
	Rational eval(const Rational &x) const;

	Polynomial &operator+=(const Polynomial &o);
	Polynomial &operator-=(const Polynomial &o);
	Polynomial &operator*=(const Polynomial &o);
	Polynomial &operator*=(const Rational &c);
	Polynomial operator-() const;

	/// Exact division by (t - r); throws if r is not a root.
	Polynomial div_linear(const Rational &r) const;
	Polynomial pow(unsigned k) const;

	std::string to_string() const;

	friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
	void trim();
	std::vector<Rational> c_;
};

inline Polynomial operator+(Polynomial x, const Polynomial &y) { return x += y; }
inline Polynomial operator-(Polynomial x, const Polynomial &y) { return x -= y; }
inline Polynomial operator*(Polynomial x, const Polynomial &y) { return x *= y; }

/// num / (t^et (1-t)^eu), fully reduced: et > 0 implies num(0) != 0 and
/// eu > 0 implies num(1) != 0.  Zero has et = eu = 0.
class LoopElem {
public:
	LoopElem() = default;
	LoopElem(Rational c) : num_(std::move(c)) {}
	LoopElem(int c) : num_(c) {}
	LoopElem(Polynomial num, unsigned et = 0, unsigned eu = 0);

	static LoopElem t();
	/// c t^a (1-t)^b for any integers a, b.
	static LoopElem unit(long a, long b, Rational c = 1);
	/// t' = (t-1)/t and t'' = 1/(1-t).
	static LoopElem t_prime();
	static LoopElem t_dprime();

	const Polynomial &num() const { return num_; }
	unsigned et() const { return et_; }
	unsigned eu() const { return eu_; }
	bool is_zero() const { return num_.is_zero(); }

	LoopElem &operator+=(const LoopElem &o);
	LoopElem &operator-=(const LoopElem &o);
	LoopElem &operator*=(const LoopElem &o);
	LoopElem &operator*=(const Rational &c);
	LoopElem operator-() const;

	LoopElem pow(long k) const;
	/// Inverse of a unit c t^a (1-t)^b; throws ArithmeticError otherwise.
	LoopElem unit_inverse() const;
	bool is_unit() const;

	/// Polynomial p with this = p / (t(1-t))^e; throws if e is too small.
	Polynomial numerator_over(unsigned e) const;

	/// "p(t)" or "(p(t))/(t^a*(1-t)^b)".
	std::string to_string() const;
	static LoopElem parse(std::string_view text);

	friend bool operator==(const LoopElem &, const LoopElem &) = default;

private:
	void normalize();
	Polynomial num_;
	unsigned et_ = 0;
	unsigned eu_ = 0;
};

inline LoopElem operator+(LoopElem x, const LoopElem &y) { return x += y; }
inline LoopElem operator-(LoopElem x, const LoopElem &y) { return x -= y; }
inline LoopElem operator*(LoopElem x, const LoopElem &y) { return x *= y; }

/// Substitution automorphism determined by the image of t.
class RingAuto {
public:
	explicit RingAuto(LoopElem image_of_t);
	static RingAuto identity() { return RingAuto(LoopElem::t()); }
	/// t -> 1 - 1/t
	static RingAuto phi();
	/// t -> 1 - t
	static RingAuto tau();

	const LoopElem &image_of_t() const { return img_; }
	LoopElem operator()(const LoopElem &x) const;
	/// (*this) after o.
	RingAuto after(const RingAuto &o) const;

	friend bool operator==(const RingAuto &, const RingAuto &) = default;

private:
	LoopElem img_;
	LoopElem img_inv_;
	LoopElem one_minus_img_inv_;
};

/// Laurent polynomial in s = t(1-t): exponent -> coefficient, no zeros stored.
using SLaurent = std::map<long, Rational>;

LoopElem from_s(const SLaurent &p);

struct TauSplit {
	LoopElem even;
	LoopElem odd;
};

/// x = even + odd with tau(even) = even, tau(odd) = -odd.
TauSplit tau_split(const LoopElem &x);

/// Expansion of a tau-invariant element in powers of s; throws if x is not in B.
SLaurent b_expansion(const LoopElem &x);

/// For tau-odd x, the h in B with x = (2t - 1) h.
LoopElem odd_cofactor(const LoopElem &x);

/// Membership in the subalgebra generated by t(1-t), t'(1-t'), t''(1-t'').
bool in_S(const LoopElem &x);

std::ostream &operator<<(std::ostream &os, const LoopElem &x);

} // namespace symlie
