#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "symlie/gmalcev.hpp"

using namespace symlie;
using symlie::testing::Gen;

namespace {

Scalar dot(const Vec &x, const Vec &y)
{
	Scalar s;
	for (std::size_t i = 0; i < x.size(); ++i)
		s += x[i] * y[i];
	return s;
}

Vec cross(const Vec &x, const Vec &y)
{
	return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

// xy = 2 x cross y, {x,y,z} = b(x,y)z - 3 b(y,z)x
GMAlgebra three_dim_gm()
{
	GMAlgebra m(3);
	m.ensure_tri();
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j) {
			Vec ei = unit_vec(3, i), ej = unit_vec(3, j);
			m.set_bil(i, j, SparseVec::from_dense(Scalar(2) * cross(ei, ej)));
			for (std::size_t k = 0; k < 3; ++k) {
				Vec ek = unit_vec(3, k);
				Vec t = dot(ei, ej) * ek - Scalar(3) * dot(ej, ek) * ei;
				m.set_tri(i, j, k, SparseVec::from_dense(t));
			}
		}
	return m;
}

// traceless octonions under the commutator, Fano lines (i, i+1, i+3)
AlgebraSpec octonion_malcev()
{
	AlgebraSpec a(7);
	for (std::size_t i = 0; i < 7; ++i) {
		std::size_t p = i, q = (i + 1) % 7, r = (i + 3) % 7;
		a.set_bracket(p, q, SparseVec::unit(r, 2));
		a.set_bracket(q, r, SparseVec::unit(p, 2));
		a.set_bracket(r, p, SparseVec::unit(q, 2));
	}
	return a;
}

// p x q matrices, {x,y,z} = x y^t z + z y^t x
GMAlgebra rectangular_jts(std::size_t p, std::size_t q)
{
	std::size_t n = p * q;
	auto mat = [&](std::size_t i) { return Matrix::from_flat(p, q, unit_vec(n, i)); };
	GMAlgebra m(n);
	m.ensure_tri();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				Matrix x = mat(i), y = mat(j), z = mat(k);
				Matrix t = x * y.transpose() * z + z * y.transpose() * x;
				m.set_tri(i, j, k, SparseVec::from_dense(t.flat()));
			}
	return m;
}

GMAlgebra one_dim_jts()
{
	GMAlgebra m(1);
	m.ensure_tri();
	m.set_tri(0, 0, 0, SparseVec::unit(0, 2));
	return m;
}

SparseVec sv(const Vec &v) { return SparseVec::from_dense(v); }

Vec prod(const AlgebraSpec &a, const Vec &x, const Vec &y) { return product(a, x, y); }
Vec tri(const AlgebraSpec &a, const Vec &x, const Vec &y, const Vec &z) { return triple(a, x, y, z); }

// dense evaluation of the five identities at arbitrary vectors
std::vector<bool> identities_at(const GMAlgebra &m, const Vec &a, const Vec &b, const Vec &x,
                                const Vec &y, const Vec &z)
{
	std::vector<bool> r;
	r.push_back(is_zero(prod(m, prod(m, x, y), z) - tri(m, x, z, y) + tri(m, y, z, x)));
	r.push_back(is_zero(tri(m, a, b, prod(m, x, y)) + prod(m, tri(m, b, a, x), y) +
	                    prod(m, x, tri(m, b, a, y))));
	r.push_back(is_zero(tri(m, a, b, tri(m, x, y, z)) - tri(m, x, y, tri(m, a, b, z)) -
	                    tri(m, tri(m, a, b, x), y, z) + tri(m, x, tri(m, b, a, y), z)));
	r.push_back(is_zero(tri(m, prod(m, x, y), z, a) + tri(m, prod(m, y, z), x, a) +
	                    tri(m, prod(m, z, x), y, a)));
	r.push_back(is_zero(tri(m, x, prod(m, y, z), a) + tri(m, y, prod(m, z, x), a) +
	                    tri(m, z, prod(m, x, y), a)));
	return r;
}

} // namespace

TEST_CASE("three-dimensional example satisfies every axiom")
{
	auto m = three_dim_gm();
	auto rep = check_gm_axioms(m);
	CHECK(rep.ok());
	CHECK(rep.identities.size() == 5);
	CHECK(rep.identity("triple_derivation").tested == 243);
	CHECK(rep.identity("binary_triple").tested == 27);
}

TEST_CASE("g(M) of the three-dimensional example is a 14-dimensional simple Lie algebra")
{
	auto g = build_g_of_M(three_dim_gm());
	CHECK(g.d.dplus.size() == 3);
	CHECK(g.d.dminus.size() == 5);
	CHECK(g.alg.dim() == 14);
	CHECK(check_jacobi(g.alg).ok());
	CHECK(check_action(g.alg, g.action).ok());
	// semisimple with trivial centre: every derivation is inner
	CHECK(derivations(g.alg).size() == 14);
	Matrix K(14, 14);
	for (std::size_t i = 0; i < 14; ++i)
		for (std::size_t j = 0; j < 14; ++j)
			K(i, j) = trace(left_mult(g.alg, unit_vec(14, i)) * left_mult(g.alg, unit_vec(14, j)));
	CHECK_NOTHROW(inverse(K));
}

TEST_CASE("d+ acts as a derivation and d- as an antiderivation of the product")
{
	for (auto m : {three_dim_gm(), malcev_to_gm(octonion_malcev())}) {
		std::size_t n = m.dim();
		Gen gen(17 + n);
		for (int trial = 0; trial < 20; ++trial) {
			Vec a = gen.vec(n), b = gen.vec(n), x = gen.vec(n), y = gen.vec(n);
			Matrix dp = d_plus(m, a, b), dm = d_minus(m, a, b);
			Vec xy = prod(m, x, y);
			CHECK(dp.apply(xy) == prod(m, dp.apply(x), y) + prod(m, x, dp.apply(y)));
			CHECK(dm.apply(xy) == Scalar(-1) * (prod(m, dm.apply(x), y) + prod(m, x, dm.apply(y))));
		}
	}
}

TEST_CASE("axiom check agrees with dense evaluation at random vectors")
{
	Gen gen(5);
	for (int trial = 0; trial < 12; ++trial) {
		GMAlgebra m = three_dim_gm();
		bool perturbed = trial % 2 == 1;
		if (perturbed) {
			std::size_t i = gen.integer(0, 2), j = gen.integer(0, 2), k = gen.integer(0, 2);
			SparseVec t = m.tri(i, j, k);
			t.add_term(gen.integer(0, 2), Scalar(1));
			m.set_tri(i, j, k, t);
		}
		auto rep = check_gm_axioms(m);
		std::vector<bool> dense(5, true);
		for (int s = 0; s < 6; ++s) {
			auto r = identities_at(m, gen.vec(3), gen.vec(3), gen.vec(3), gen.vec(3), gen.vec(3));
			for (std::size_t l = 0; l < 5; ++l)
				dense[l] = dense[l] && r[l];
		}
		for (std::size_t l = 0; l < 5; ++l)
			if (!dense[l])
				CHECK_FALSE(rep.identities[l].ok());
		if (!perturbed)
			CHECK(rep.ok());
		else
			CHECK_THROWS_AS(build_g_of_M(m), VerificationError);
	}
}

TEST_CASE("axioms and g(M) dimension are invariant under change of basis")
{
	Gen gen(41);
	auto m = three_dim_gm();
	for (int trial = 0; trial < 3; ++trial) {
		auto m2 = change_basis(m, gen.invertible(3));
		CHECK(check_gm_axioms(m2).ok());
		auto g = build_g_of_M(m2);
		CHECK(g.alg.dim() == 14);
		CHECK(check_jacobi(g.alg).ok());
	}
}

TEST_CASE("witnesses name failing basis tuples")
{
	auto m = three_dim_gm();
	m.set_bil(0, 1, SparseVec());
	m.set_bil(1, 0, SparseVec());
	auto rep = check_gm_axioms(m);
	const auto &c = rep.identity("binary_triple");
	REQUIRE_FALSE(c.ok());
	CHECK(c.witnesses.size() <= IdentityCheck::max_witnesses);
	CHECK(c.witnesses.front().size() == 3);
	CHECK_THROWS_AS((void)rep.identity("nonexistent"), std::out_of_range);
}

TEST_CASE("redundancy of the cyclic identities")
{
	auto r = check_redundancy(three_dim_gm());
	CHECK(r.failed_hypotheses.empty());
	CHECK(r.first_cyclic_holds);
	CHECK(r.square_is_whole);
	CHECK(r.annihilator_trivial);
	CHECK(r.second_cyclic_holds);
	CHECK(r.confirmed());

	// zero product: the second hypothesis fails, nothing more to confirm
	auto z = check_redundancy(rectangular_jts(1, 2));
	CHECK(z.failed_hypotheses.empty());
	CHECK(z.first_cyclic_holds);
	CHECK_FALSE(z.square_is_whole);
	CHECK_FALSE(z.annihilator_trivial);
	CHECK_FALSE(z.second_hypothesis_met());
	CHECK(z.confirmed());

	GMAlgebra bad = three_dim_gm();
	bad.set_tri(0, 0, 0, SparseVec::unit(1));
	auto b = check_redundancy(bad);
	CHECK_FALSE(b.failed_hypotheses.empty());
	CHECK_FALSE(b.confirmed());
}

TEST_CASE("octonion commutator algebra is Malcev but not Lie")
{
	auto o = octonion_malcev();
	CHECK_FALSE(check_jacobi(o).ok());
	auto c = check_malcev(o);
	CHECK(c.ok());
	CHECK(c.tested == 28 * 49);
	CHECK(check_malcev(symlie::testing::sl2()).ok());

	// random anticommutative product, Sagle identity J(x,y,xz) = J(x,y,z)x evaluated densely
	Gen gen(23);
	AlgebraSpec bad(4);
	for (std::size_t i = 0; i < 4; ++i)
		for (std::size_t j = i + 1; j < 4; ++j)
			bad.set_bracket(i, j, sv(gen.vec(4)));
	auto jac = [&](const Vec &x, const Vec &y, const Vec &z) {
		return prod(bad, prod(bad, x, y), z) + prod(bad, prod(bad, y, z), x) + prod(bad, prod(bad, z, x), y);
	};
	bool sagle_fails = false;
	for (int s = 0; s < 5 && !sagle_fails; ++s) {
		Vec x = gen.vec(4), y = gen.vec(4), z = gen.vec(4);
		sagle_fails = !(jac(x, y, prod(bad, x, z)) == prod(bad, jac(x, y, z), x));
	}
	REQUIRE(sagle_fails);
	CHECK_FALSE(check_malcev(bad).ok());
	CHECK_THROWS_AS(malcev_to_gm(bad), VerificationError);
}

TEST_CASE("Malcev algebras are generalized Malcev algebras")
{
	auto o = octonion_malcev();
	auto m = malcev_to_gm(o);
	CHECK(check_gm_axioms(m).ok());
	// triple agrees with 1/2((xy)z + x(yz) - y(xz)) computed densely
	Gen gen(3);
	for (int trial = 0; trial < 10; ++trial) {
		Vec x = gen.vec(7), y = gen.vec(7), z = gen.vec(7);
		Vec want = Scalar::rational(1, 2) *
		           (prod(o, prod(o, x, y), z) + prod(o, x, prod(o, y, z)) - prod(o, y, prod(o, x, z)));
		CHECK(tri(m, x, y, z) == want);
	}
	auto back = gm_to_malcev(m);
	CHECK(back == o);

	auto g = build_g_of_M(m);
	CHECK(g.d.dminus.empty());
	CHECK(g.alg.dim() == 28);
	CHECK(check_jacobi(g.alg).ok());
	CHECK(check_action(g.alg, g.action).ok());

	// a Lie algebra L gives g(L) = L + L + L
	auto gs = build_g_of_M(malcev_to_gm(symlie::testing::sl2()));
	CHECK(gs.alg.dim() == 9);
	CHECK(check_jacobi(gs.alg).ok());
}

TEST_CASE("gm_to_malcev rejects a triple that is not skew")
{
	try {
		(void)gm_to_malcev(three_dim_gm());
		FAIL("expected rejection");
	} catch (const std::invalid_argument &e) {
		CHECK(std::string(e.what()).find("(0, 0)") != std::string::npos);
	}
}

TEST_CASE("TKK of the one-dimensional triple is sl2")
{
	auto t = tkk(one_dim_jts());
	CHECK(t.alg.dim() == 3);
	CHECK(t.iso_bijective);
	CHECK(t.iso_homomorphism.ok());
	CHECK(check_jacobi(t.alg).ok());
	CHECK(derivations(t.alg).size() == 3);
}

TEST_CASE("TKK of 1x2 matrices is eight-dimensional and isomorphic to g(T)")
{
	auto T = rectangular_jts(1, 2);
	CHECK(check_gm_axioms(T).ok());
	auto t = tkk(T);
	CHECK(t.alg.dim() == 8);
	CHECK(t.s_basis.size() == 4);
	CHECK(t.hat_offset() == 6);
	CHECK(t.iso_bijective);
	CHECK(t.iso_homomorphism.ok());
	CHECK(check_jacobi(t.alg).ok());
	CHECK(derivations(t.alg).size() == 8);
	CHECK_THROWS_AS(tkk(three_dim_gm()), std::invalid_argument);
}

TEST_CASE("Lie-Yamaguti reduction embeds as the tau-fixed subalgebra")
{
	for (auto m : {three_dim_gm(), rectangular_jts(1, 2), malcev_to_gm(octonion_malcev())}) {
		auto ly = lie_yamaguti_reduce(m);
		std::size_t n = m.dim();
		CHECK(ly.enveloping.dim() == ly.inner.size() + n);
		CHECK(ly.jacobi.ok());
		CHECK(ly.matches_tau_fixed);
		CHECK(ly.embedding_homomorphism.ok());
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t k = 0; k < n; ++k) {
					SparseVec want = m.tri(i, j, k);
					want.add_scaled(Scalar(-1), m.tri(j, i, k));
					CHECK(ly.reduced.tri(i, j, k) == want);
				}
	}
	// so3 inner derivations for the three-dimensional example
	CHECK(lie_yamaguti_reduce(three_dim_gm()).inner.size() == 3);
}
