#include "symlie/loopring.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace symlie {

// Polynomial

Polynomial::Polynomial(Rational c)
{
	if (sgn(c) != 0)
		c_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::t() { return Polynomial(std::vector<Rational>{0, 1}); }
Polynomial Polynomial::one_minus_t() { return Polynomial(std::vector<Rational>{1, -1}); }

Polynomial Polynomial::monomial(unsigned degree, Rational c)
{
	std::vector<Rational> v(degree + 1);
	v[degree] = std::move(c);
	return Polynomial(std::move(v));
}

void Polynomial::trim()
{
	while (!c_.empty() && sgn(c_.back()) == 0)
		c_.pop_back();
}

Rational Polynomial::eval(const Rational &x) const
{
	Rational r = 0;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		r = r * x + *it;
	return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
	if (o.c_.size() > c_.size())
		c_.resize(o.c_.size());
	for (std::size_t k = 0; k < o.c_.size(); ++k)
		c_[k] += o.c_[k];
	trim();
	return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
	if (o.c_.size() > c_.size())
		c_.resize(o.c_.size());
	for (std::size_t k = 0; k < o.c_.size(); ++k)
		c_[k] -= o.c_[k];
	trim();
	return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &o)
{
	if (is_zero() || o.is_zero()) {
		c_.clear();
		return *this;
	}
	std::vector<Rational> r(c_.size() + o.c_.size() - 1);
	for (std::size_t i = 0; i < c_.size(); ++i) {
		if (sgn(c_[i]) == 0)
			continue;
		for (std::size_t j = 0; j < o.c_.size(); ++j)
			if (sgn(o.c_[j]) != 0)
				r[i + j] += c_[i] * o.c_[j];
	}
	c_ = std::move(r);
	trim();
	return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
	if (sgn(c) == 0) {
		c_.clear();
		return *this;
	}
	for (auto &x : c_)
		x *= c;
	return *this;
}

Polynomial Polynomial::operator-() const
{
	Polynomial r = *this;
	for (auto &x : r.c_)
		x = -x;
	return r;
}

Polynomial Polynomial::div_linear(const Rational &r) const
{
	if (is_zero())
		return {};
	// synthetic division
	std::vector<Rational> q(c_.size() - 1);
	Rational carry = 0;
	for (std::size_t k = c_.size(); k-- > 0;) {
		Rational v = c_[k] + carry * r;
		if (k == 0) {
			if (sgn(v) != 0)
				throw ArithmeticError("polynomial division leaves a remainder");
		} else {
			q[k - 1] = v;
		}
		carry = v;
	}
	return Polynomial(std::move(q));
}

Polynomial Polynomial::pow(unsigned k) const
{
	Polynomial r(1);
	for (unsigned i = 0; i < k; ++i)
		r *= *this;
	return r;
}

std::string Polynomial::to_string() const
{
	if (is_zero())
		return "0";
	std::string out;
	for (std::size_t k = c_.size(); k-- > 0;) {
		const Rational &c = c_[k];
		if (sgn(c) == 0)
			continue;
		Rational mag = abs(c);
		std::string term;
		if (k == 0)
			term = symlie::to_string(mag);
		else {
			if (mag != 1)
				term = symlie::to_string(mag) + "*";
			term += "t";
			if (k > 1)
				term += "^" + std::to_string(k);
		}
		if (sgn(c) < 0)
			out += "-";
		else if (!out.empty())
			out += "+";
		out += term;
	}
	return out;
}

// LoopElem

LoopElem::LoopElem(Polynomial num, unsigned et, unsigned eu) : num_(std::move(num)), et_(et), eu_(eu)
{
	normalize();
}

void LoopElem::normalize()
{
	if (num_.is_zero()) {
		et_ = eu_ = 0;
		return;
	}
	while (et_ > 0 && sgn(num_.coeff(0)) == 0) {
		num_ = num_.div_linear(0);
		--et_;
	}
	while (eu_ > 0 && sgn(num_.eval(1)) == 0) {
		// (t - 1) q = -(1 - t) q
		num_ = -num_.div_linear(1);
		--eu_;
	}
}

LoopElem LoopElem::t() { return LoopElem(Polynomial::t()); }

LoopElem LoopElem::unit(long a, long b, Rational c)
{
	Polynomial p(std::move(c));
	if (a > 0)
		p *= Polynomial::t().pow(static_cast<unsigned>(a));
	if (b > 0)
		p *= Polynomial::one_minus_t().pow(static_cast<unsigned>(b));
	return LoopElem(std::move(p), a < 0 ? static_cast<unsigned>(-a) : 0,
	                b < 0 ? static_cast<unsigned>(-b) : 0);
}

LoopElem LoopElem::t_prime() { return LoopElem(Polynomial(std::vector<Rational>{-1, 1}), 1, 0); }
LoopElem LoopElem::t_dprime() { return LoopElem(Polynomial(1), 0, 1); }

LoopElem &LoopElem::operator+=(const LoopElem &o)
{
	if (o.is_zero())
		return *this;
	if (is_zero())
		return *this = o;
	unsigned et = std::max(et_, o.et_), eu = std::max(eu_, o.eu_);
	auto lift = [&](const LoopElem &x) {
		Polynomial p = x.num_;
		if (et > x.et_)
			p *= Polynomial::t().pow(et - x.et_);
		if (eu > x.eu_)
			p *= Polynomial::one_minus_t().pow(eu - x.eu_);
		return p;
	};
	num_ = lift(*this) + lift(o);
	et_ = et;
	eu_ = eu;
	normalize();
	return *this;
}

LoopElem &LoopElem::operator-=(const LoopElem &o) { return *this += -o; }

LoopElem &LoopElem::operator*=(const LoopElem &o)
{
	if (is_zero() || o.is_zero())
		return *this = LoopElem();
	num_ *= o.num_;
	et_ += o.et_;
	eu_ += o.eu_;
	normalize();
	return *this;
}

LoopElem &LoopElem::operator*=(const Rational &c)
{
	num_ *= c;
	if (num_.is_zero())
		et_ = eu_ = 0;
	return *this;
}

LoopElem LoopElem::operator-() const
{
	LoopElem r = *this;
	r.num_ = -r.num_;
	return r;
}

namespace {

// num = c t^a (1-t)^b rest, with rest(0) != 0 != rest(1)
struct Factored {
	unsigned a = 0;
	unsigned b = 0;
	Polynomial rest;
};

Factored factor(Polynomial p)
{
	Factored f;
	while (!p.is_zero() && sgn(p.coeff(0)) == 0) {
		p = p.div_linear(0);
		++f.a;
	}
	while (!p.is_zero() && sgn(p.eval(1)) == 0) {
		p = -p.div_linear(1);
		++f.b;
	}
	f.rest = std::move(p);
	return f;
}

} // namespace

bool LoopElem::is_unit() const
{
	if (is_zero())
		return false;
	return factor(num_).rest.degree() == 0;
}

LoopElem LoopElem::unit_inverse() const
{
	if (is_zero())
		throw ArithmeticError("division by zero");
	Factored f = factor(num_);
	if (f.rest.degree() != 0)
		throw ArithmeticError("element is not a unit: " + to_string());
	return unit(static_cast<long>(et_) - f.a, static_cast<long>(eu_) - f.b, 1 / f.rest.coeff(0));
}

LoopElem LoopElem::pow(long k) const
{
	if (k < 0)
		return unit_inverse().pow(-k);
	LoopElem r(1);
	for (long i = 0; i < k; ++i)
		r *= *this;
	return r;
}

Polynomial LoopElem::numerator_over(unsigned e) const
{
	if (is_zero())
		return {};
	if (e < et_ || e < eu_)
		throw std::invalid_argument("denominator exponent too small");
	return num_ * Polynomial::t().pow(e - et_) * Polynomial::one_minus_t().pow(e - eu_);
}

std::string LoopElem::to_string() const
{
	if (et_ == 0 && eu_ == 0)
		return num_.to_string();
	std::string den;
	if (et_ > 0)
		den = et_ == 1 ? "t" : "t^" + std::to_string(et_);
	if (eu_ > 0) {
		if (!den.empty())
			den += "*";
		den += eu_ == 1 ? "(1-t)" : "(1-t)^" + std::to_string(eu_);
	}
	return "(" + num_.to_string() + ")/(" + den + ")";
}

namespace {

unsigned parse_exponent(std::string_view s, std::size_t &pos)
{
	if (pos >= s.size() || s[pos] != '^')
		return 1;
	++pos;
	std::size_t start = pos;
	while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
		++pos;
	if (start == pos)
		throw std::invalid_argument("missing exponent");
	return static_cast<unsigned>(std::stoul(std::string(s.substr(start, pos - start))));
}

Polynomial parse_polynomial(std::string_view s)
{
	if (s.empty())
		throw std::invalid_argument("empty polynomial");
	Polynomial out;
	std::size_t pos = 0;
	while (pos < s.size()) {
		bool neg = false;
		if (s[pos] == '+' || s[pos] == '-') {
			neg = s[pos] == '-';
			++pos;
		}
		std::size_t start = pos;
		while (pos < s.size() && s[pos] != '+' && s[pos] != '-')
			++pos;
		std::string_view term = s.substr(start, pos - start);
		if (term.empty())
			throw std::invalid_argument("empty term in polynomial");
		Rational c = 1;
		unsigned deg = 0;
		auto tpos = term.find('t');
		if (tpos == std::string_view::npos) {
			c = parse_rational(term);
		} else {
			std::string_view coef = term.substr(0, tpos);
			if (!coef.empty()) {
				if (coef.back() != '*')
					throw std::invalid_argument("expected '*' before t");
				c = parse_rational(coef.substr(0, coef.size() - 1));
			}
			std::size_t p = tpos + 1;
			deg = parse_exponent(term, p);
			if (p != term.size())
				throw std::invalid_argument("trailing characters in term");
		}
		if (neg)
			c = -c;
		out += Polynomial::monomial(deg, c);
	}
	return out;
}

} // namespace

LoopElem LoopElem::parse(std::string_view text)
{
	std::string s;
	for (char c : text)
		if (c != ' ')
			s.push_back(c);
	auto slash = s.find(")/(");
	if (slash == std::string::npos)
		return LoopElem(parse_polynomial(s));
	if (s.front() != '(' || s.back() != ')')
		throw std::invalid_argument("malformed ring element '" + s + "'");
	Polynomial num = parse_polynomial(std::string_view(s).substr(1, slash - 1));
	std::string_view den = std::string_view(s).substr(slash + 3, s.size() - slash - 4);
	unsigned et = 0, eu = 0;
	std::size_t pos = 0;
	while (pos < den.size()) {
		if (den.substr(pos, 5) == "(1-t)") {
			pos += 5;
			eu += parse_exponent(den, pos);
		} else if (den[pos] == 't') {
			++pos;
			et += parse_exponent(den, pos);
		} else {
			throw std::invalid_argument("malformed denominator '" + std::string(den) + "'");
		}
		if (pos < den.size()) {
			if (den[pos] != '*')
				throw std::invalid_argument("malformed denominator '" + std::string(den) + "'");
			++pos;
		}
	}
	return LoopElem(std::move(num), et, eu);
}

std::ostream &operator<<(std::ostream &os, const LoopElem &x) { return os << x.to_string(); }

// RingAuto

RingAuto::RingAuto(LoopElem image_of_t) : img_(std::move(image_of_t))
{
	img_inv_ = img_.unit_inverse();
	one_minus_img_inv_ = (LoopElem(1) - img_).unit_inverse();
}

RingAuto RingAuto::phi() { return RingAuto(LoopElem::t_prime()); }
RingAuto RingAuto::tau() { return RingAuto(LoopElem(Polynomial::one_minus_t())); }

LoopElem RingAuto::operator()(const LoopElem &x) const
{
	const auto &c = x.num().coeffs();
	LoopElem r;
	for (auto it = c.rbegin(); it != c.rend(); ++it) {
		r *= img_;
		r += LoopElem(*it);
	}
	if (x.et() > 0)
		r *= img_inv_.pow(x.et());
	if (x.eu() > 0)
		r *= one_minus_img_inv_.pow(x.eu());
	return r;
}

RingAuto RingAuto::after(const RingAuto &o) const { return RingAuto((*this)(o.img_)); }

// tau-parity

LoopElem from_s(const SLaurent &p)
{
	LoopElem r;
	for (const auto &[j, c] : p)
		r += LoopElem::unit(j, j, c);
	return r;
}

TauSplit tau_split(const LoopElem &x)
{
	LoopElem tx = RingAuto::tau()(x);
	TauSplit s{x + tx, x - tx};
	s.even *= Rational(1, 2);
	s.odd *= Rational(1, 2);
	return s;
}

SLaurent b_expansion(const LoopElem &x)
{
	if (!(RingAuto::tau()(x) == x))
		throw std::invalid_argument("b_expansion: element is not tau-invariant");
	if (x.et() != x.eu())
		throw std::logic_error("tau-invariant element with unequal denominators");
	SLaurent out;
	long shift = static_cast<long>(x.et());
	Polynomial p = x.num();
	Polynomial s(std::vector<Rational>{0, 1, -1});
	while (!p.is_zero()) {
		int d = p.degree();
		if (d % 2 != 0)
			throw std::logic_error("tau-invariant numerator of odd degree");
		unsigned k = static_cast<unsigned>(d / 2);
		// s^k has leading coefficient (-1)^k
		Rational a = (k % 2 == 0) ? p.leading() : Rational(-p.leading());
		Polynomial sk = s.pow(k);
		sk *= a;
		p -= sk;
		out[static_cast<long>(k) - shift] = a;
	}
	return out;
}

LoopElem odd_cofactor(const LoopElem &x)
{
	if (!(RingAuto::tau()(x) == -x))
		throw std::invalid_argument("odd_cofactor: element is not tau-odd");
	// num / (2t - 1) = (num / (t - 1/2)) / 2
	Polynomial q = x.num().div_linear(Rational(1, 2));
	q *= Rational(1, 2);
	return LoopElem(std::move(q), x.et(), x.eu());
}

bool in_S(const LoopElem &x)
{
	TauSplit s = tau_split(x);
	(void)b_expansion(s.even);
	SLaurent h = b_expansion(odd_cofactor(s.odd));
	Rational at_one = 0;
	for (const auto &[j, c] : h)
		at_one += c;
	return sgn(at_one) == 0;
}

} // namespace symlie
