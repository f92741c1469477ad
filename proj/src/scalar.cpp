#include "symlie/scalar.hpp"

#include <ostream>

namespace symlie {

Rational parse_rational(std::string_view text)
{
	std::string s(text);
	while (!s.empty() && s.front() == ' ')
		s.erase(s.begin());
	while (!s.empty() && s.back() == ' ')
		s.pop_back();
	if (!s.empty() && s.front() == '+')
		s.erase(s.begin());
	if (s.empty())
		throw std::invalid_argument("empty rational");
	auto slash = s.find('/');
	auto digits_ok = [](std::string_view d, bool allow_sign) {
		if (allow_sign && !d.empty() && d.front() == '-')
			d.remove_prefix(1);
		if (d.empty())
			return false;
		for (char c : d)
			if (c < '0' || c > '9')
				return false;
		return true;
	};
	if (!digits_ok(std::string_view(s).substr(0, slash), true) ||
	    (slash != std::string::npos &&
	     !digits_ok(std::string_view(s).substr(slash + 1), false)))
		throw std::invalid_argument("malformed rational '" + s + "'");
	Rational q;
	if (q.set_str(s, 10) != 0)
		throw std::invalid_argument("malformed rational '" + s + "'");
	if (sgn(q.get_den()) == 0)
		throw ArithmeticError("zero denominator in '" + s + "'");
	q.canonicalize();
	return q;
}

std::string to_string(const Rational &q) { return q.get_str(10); }

Scalar Scalar::rational(long num, long den)
{
	if (den == 0)
		throw ArithmeticError("zero denominator");
	Rational q(num, den);
	q.canonicalize();
	return Scalar(q);
}

Scalar &Scalar::operator+=(const Scalar &o)
{
	a_ += o.a_;
	if (sgn(o.b_) != 0)
		b_ += o.b_;
	return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
	a_ -= o.a_;
	if (sgn(o.b_) != 0)
		b_ -= o.b_;
	return *this;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
	if (sgn(b_) == 0 && sgn(o.b_) == 0) {
		a_ *= o.a_;
		return *this;
	}
	// (a + bw)(c + dw) = ac - bd + (ad + bc - bd)w
	Rational bd = b_ * o.b_;
	Rational na = a_ * o.a_ - bd;
	Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
	a_ = std::move(na);
	b_ = std::move(nb);
	return *this;
}

void Scalar::add_product(const Scalar &x, const Scalar &y)
{
	if (sgn(x.b_) == 0 && sgn(y.b_) == 0) {
		a_ += x.a_ * y.a_;
		return;
	}
	*this += x * y;
}

Scalar Scalar::inverse() const
{
	if (is_zero())
		throw ArithmeticError("division by zero");
	if (sgn(b_) == 0)
		return Scalar(Rational(1) / a_);
	Rational n = norm();
	Scalar c = conj_omega();
	return Scalar(c.a_ / n, c.b_ / n);
}

Scalar &Scalar::operator/=(const Scalar &o)
{
	if (o.is_zero())
		throw ArithmeticError("division by zero");
	if (sgn(o.b_) == 0) {
		a_ /= o.a_;
		if (sgn(b_) != 0)
			b_ /= o.a_;
		return *this;
	}
	return *this *= o.inverse();
}

std::string Scalar::to_string() const
{
	if (sgn(b_) == 0)
		return symlie::to_string(a_);
	std::string bw = (b_ == 1) ? "w" : (b_ == -1) ? "-w" : symlie::to_string(b_) + "*w";
	if (sgn(a_) == 0)
		return bw;
	if (bw.front() == '-')
		return symlie::to_string(a_) + bw;
	return symlie::to_string(a_) + "+" + bw;
}

Scalar Scalar::parse(std::string_view text)
{
	std::string s;
	for (char c : text)
		if (c != ' ')
			s.push_back(c);
	if (s.empty())
		throw std::invalid_argument("empty scalar");
	if (s.back() != 'w')
		return Scalar(parse_rational(s));
	s.pop_back();
	if (!s.empty() && s.back() == '*')
		s.pop_back();
	// split the w-coefficient off at the last sign that is not leading
	std::size_t split = std::string::npos;
	for (std::size_t i = s.size(); i-- > 1;)
		if (s[i] == '+' || s[i] == '-') {
			split = i;
			break;
		}
	std::string a_part = split == std::string::npos ? "" : s.substr(0, split);
	std::string b_part = split == std::string::npos ? s : s.substr(split);
	Rational b;
	if (b_part.empty() || b_part == "+")
		b = 1;
	else if (b_part == "-")
		b = -1;
	else
		b = parse_rational(b_part);
	Rational a = a_part.empty() ? Rational(0) : parse_rational(a_part);
	return Scalar(a, b);
}

std::ostream &operator<<(std::ostream &os, const Scalar &x)
{
	return os << x.to_string();
}

} // namespace symlie
