#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "symlie/scalar.hpp"

using namespace symlie;
using symlie::testing::Gen;

static const Scalar w = Scalar::omega();

TEST_CASE("omega relations")
{
	CHECK(w * w == Scalar(-1, -1));
	CHECK((Scalar(1) + w) * (Scalar(1) + w) == w);
	CHECK(Scalar(1) / w == Scalar(-1, -1));
	CHECK(w * w * w == Scalar(1));
	CHECK(Scalar(1) + w + w * w == Scalar(0));
}

TEST_CASE("conj_omega")
{
	CHECK(conj_omega(w) == Scalar(-1, -1));
	CHECK(conj_omega(Scalar(5)) == Scalar(5));
	Scalar x(2, 3);
	CHECK(conj_omega(conj_omega(x)) == x);
	CHECK(conj_omega(w) == w * w);
}

TEST_CASE("division by zero is an arithmetic error")
{
	CHECK_THROWS_AS(Scalar(1) / Scalar(0), ArithmeticError);
	CHECK_THROWS_AS(Scalar().inverse(), ArithmeticError);
	CHECK_THROWS_AS(Scalar::rational(1, 0), ArithmeticError);
}

TEST_CASE("canonical rationals")
{
	Scalar x = Scalar::rational(6, -4);
	CHECK(x.a().get_num() == -3);
	CHECK(x.a().get_den() == 2);
	CHECK(Scalar::rational(0, 7).a().get_den() == 1);
}

TEST_CASE("text round trip")
{
	for (auto s : {"0", "1/2", "-3/4", "w", "-w", "2*w", "1/2+3*w", "-1-w", "-5/3-7/2*w"})
		CHECK(Scalar::parse(s).to_string() == s);
	CHECK(Scalar::parse(" 1 + w ") == Scalar(1, 1));
	CHECK(Scalar::parse("3/6") == Scalar::rational(1, 2));
	CHECK_THROWS(Scalar::parse("1/0"));
	CHECK_THROWS(Scalar::parse("abc"));
	CHECK_THROWS(Scalar::parse(""));
}

TEST_CASE("property: inverses, norms, automorphism")
{
	Gen g(0x5ca1a7);
	for (int it = 0; it < 500; ++it) {
		Scalar x = g.scalar(), y = g.scalar();
		if (!x.is_zero()) {
			CHECK(x * x.inverse() == Scalar(1));
			CHECK(sgn(x.norm()) > 0);
		} else {
			CHECK(sgn(x.norm()) == 0);
		}
		CHECK(Scalar(x.norm()) == x * conj_omega(x));
		CHECK(conj_omega(x * y) == conj_omega(x) * conj_omega(y));
		CHECK(conj_omega(x + y) == conj_omega(x) + conj_omega(y));
		CHECK(Scalar::parse(x.to_string()) == x);
		Scalar z = g.scalar();
		CHECK((x + y) * z == x * z + y * z);
		CHECK((x * y) * z == x * (y * z));
		if (!y.is_zero())
			CHECK((x / y) * y == x);
	}
}
