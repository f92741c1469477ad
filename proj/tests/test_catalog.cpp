#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "symlie/catalog.hpp"

using namespace symlie;
using symlie::testing::Gen;
using symlie::testing::same_tables;

namespace {

std::size_t total_violations(const std::vector<IdentityCheck> &cs)
{
	std::size_t v = 0;
	for (const auto &c : cs)
		v += c.violations;
	return v;
}

Scalar dot(const Vec &x, const Vec &y)
{
	Scalar s;
	for (std::size_t i = 0; i < x.size(); ++i)
		s += x[i] * y[i];
	return s;
}

// coordinates of a vector of W = {a : a0+a1+a2 = 0} in the basis w+ = (-1,-1,2), w- = (3,-3,0)
Vec w_coords(const Vec &a)
{
	Scalar c_plus = Scalar::rational(1, 2) * a[2];
	Scalar c_minus = (a[0] + c_plus) * Scalar::rational(1, 3);
	REQUIRE((Scalar(-1) * c_plus + Scalar(3) * c_minus) == a[0]);
	return {c_plus, c_minus};
}

} // namespace

TEST_CASE("product and form on W agree with the componentwise model")
{
	// k^3 with componentwise product: x y = x . y + (x|y) u, (x|y) = dot/3, u = (1,1,1)
	WConstants c = model_w_constants();
	std::vector<Vec> w = {{-1, -1, 2}, {3, -3, 0}};
	for (std::size_t i = 0; i < 2; ++i)
		for (std::size_t j = 0; j < 2; ++j) {
			Vec p(3);
			for (std::size_t k = 0; k < 3; ++k)
				p[k] = w[i][k] * w[j][k];
			Scalar mean = (p[0] + p[1] + p[2]) * Scalar::rational(1, 3);
			CHECK(mean == Scalar::rational(1, 3) * dot(w[i], w[j]));
			CHECK(c.sym(i, j) == mean);
			Vec wpart = p - mean * Vec{1, 1, 1};
			CHECK(c.bullet.bil(i, j).to_dense(2) == w_coords(wpart));
		}
	CHECK(c.alt(1, 0) == Scalar(1));
	CHECK(c.alt(0, 1) == Scalar(-1));
	CHECK(c.uprime_uprime == Scalar(-12));

	// S3 acts by permuting coordinates; alt is invariant under phi and changes sign under tau
	auto act = [&](const Perm &p) {
		Matrix m(2, 2);
		for (std::size_t j = 0; j < 2; ++j) {
			Vec img(3);
			for (std::size_t k = 0; k < 3; ++k)
				img[static_cast<std::size_t>(p[k])] = w[j][k];
			m.set_column(j, w_coords(img));
		}
		return m;
	};
	auto gens = s3_generator_perms();
	Matrix phi = act(gens[0]), tau = act(gens[1]);
	CHECK(phi.transpose() * c.alt * phi == c.alt);
	CHECK(tau.transpose() * c.alt * tau == Scalar(-1) * c.alt);
	CHECK(phi.transpose() * c.sym * phi == c.sym);
	// u' <> . is S3-equivariant up to the sign character
	CHECK(phi * c.uprime_w == c.uprime_w * phi);
	CHECK(tau * c.uprime_w == Scalar(-1) * c.uprime_w * tau);
}

TEST_CASE("split Hurwitz algebras")
{
	for (int d : {1, 2, 4, 8}) {
		CAPTURE(d);
		AlgebraSpec h = hurwitz(d);
		CHECK(h.dim() == static_cast<std::size_t>(d));
		CHECK(total_violations(check_hurwitz(h)) == 0);
		CHECK(norm(h, unit_vec(h.dim(), 0)) == Scalar(1));
	}
	AlgebraSpec o = split_octonions();
	// not associative
	bool assoc = true;
	for (std::size_t i = 1; i < 8 && assoc; ++i)
		for (std::size_t j = 1; j < 8 && assoc; ++j)
			for (std::size_t k = 1; k < 8 && assoc; ++k) {
				Vec x = unit_vec(8, i), y = unit_vec(8, j), z = unit_vec(8, k);
				assoc = product(o, product(o, x, y), z) == product(o, x, product(o, y, z));
			}
	CHECK_FALSE(assoc);
	// split: the norm is isotropic
	Vec iso = unit_vec(8, 0) + unit_vec(8, 4);
	CHECK(norm(o, iso).is_zero());

	Gen g(101);
	for (int trial = 0; trial < 20; ++trial) {
		Vec x = g.vec(8, true), y = g.vec(8, true);
		CHECK(norm(o, product(o, x, y)) == norm(o, x) * norm(o, y));
		// x bar(x) = n(x) 1
		Vec xb = product(o, x, o.invol->apply(x));
		CHECK(xb == norm(o, x) * unit_vec(8, 0));
	}
	CHECK_THROWS_AS(hurwitz(3), std::invalid_argument);
}

TEST_CASE("symmetric composition algebras")
{
	for (int d : {1, 2, 4, 8}) {
		CAPTURE(d);
		AlgebraSpec s = para_hurwitz(d);
		CHECK(total_violations(check_symmetric_composition(s)) == 0);
	}
	AlgebraSpec k = para_k();
	CHECK(total_violations(check_symmetric_composition(k)) == 0);
	// (x*y)*x = n(x) y
	AlgebraSpec s = para_hurwitz(8);
	Gen g(7);
	for (int trial = 0; trial < 10; ++trial) {
		Vec x = g.vec(8), y = g.vec(8);
		CHECK(product(s, product(s, x, y), x) == norm(s, x) * y);
		CHECK(product(s, x, product(s, y, x)) == norm(s, x) * y);
	}
	// the octonions themselves are not a symmetric composition algebra
	CHECK(total_violations(check_symmetric_composition(hurwitz(8))) > 0);
}

TEST_CASE("automorphisms of K")
{
	AlgebraSpec k = para_k();
	S3Action a = k_action();
	CHECK(check_action(k, a).ok());
	for (const Matrix &m : {a.phi, a.tau})
		CHECK(m.transpose() * *k.form * m == *k.form);
	// w_omega = 1/2 e + (omega^2 - omega)/6 z spans the omega-eigenspace of phi
	Scalar w = Scalar::omega();
	Vec wo = {Scalar::rational(1, 2), (w * w - w) * Scalar::rational(1, 6)};
	CHECK(a.phi.apply(wo) == w * wo);
}

TEST_CASE("triality algebras")
{
	CHECK(triality_tri(para_k()).size() == 2);
	std::map<int, std::size_t> want{{1, 0}, {2, 2}, {4, 9}, {8, 28}};
	Gen g(55);
	for (auto [d, n] : want) {
		CAPTURE(d);
		AlgebraSpec s = para_hurwitz(d);
		auto tri = triality_tri(s);
		CHECK(tri.size() == n);
		for (const auto &t : tri) {
			Vec x = g.vec(s.dim()), y = g.vec(s.dim());
			CHECK(t[0].apply(product(s, x, y)) ==
			      product(s, t[1].apply(x), y) + product(s, x, t[2].apply(y)));
			for (const auto &m : t)
				CHECK((m.transpose() * *s.form + *s.form * m).is_zero());
		}
	}
	// sigma_{a,b} = q(a,.)b - q(b,.)a
	AlgebraSpec k = para_k();
	Matrix sg = sigma(*k.form, unit_vec(2, 0), unit_vec(2, 1));
	CHECK(sg.column(0) == Vec{0, 2});
	CHECK(sg.column(1) == Vec{-6, 0});
}

TEST_CASE("traceless octonions are Malcev but not Lie")
{
	AlgebraSpec m = octonion_malcev();
	CHECK(m.dim() == 7);
	CHECK(check_malcev(m).ok());
	CHECK(check_jacobi(m).violations > 0);
}

TEST_CASE("G2 with its S3-action")
{
	S3Example ex = g2_example();
	CHECK(ex.lie.dim() == 14);
	CHECK(check_jacobi(ex.lie).ok());
	CHECK(check_action(ex.lie, ex.action).ok());
	CHECK(same_tables(ex.gm, g2_gm()));
	CHECK(check_gm_axioms(g2_gm()).ok());
	auto iso = isotypic_s3(ex.action);
	CHECK(iso.multiplicity("U") == 3);
	CHECK(iso.multiplicity("U'") == 5);
	CHECK(iso.multiplicity("W") == 3);
	// g(M) of the extracted algebra is G2 again
	CHECK(build_g_of_M(ex.gm).alg.dim() == 14);
}

TEST_CASE("so(V) with S3 permuting three coordinates")
{
	for (int n : {3, 4, 5}) {
		CAPTURE(n);
		S3Example ex = so_example(n);
		CHECK(ex.lie.dim() == static_cast<std::size_t>(n * (n - 1) / 2));
		CHECK(check_jacobi(ex.lie).ok());
		CHECK(check_action(ex.lie, ex.action).ok());
		auto iso = isotypic_s3(ex.action);
		CHECK(iso.multiplicity("U") == static_cast<std::size_t>((n - 2) * (n - 3) / 2));
		CHECK(iso.multiplicity("U'") == 1);
		CHECK(iso.multiplicity("W") == static_cast<std::size_t>(n - 2));
		CHECK(same_tables(ex.gm, so_jts(n - 2)));
		CHECK(ex.gm.bil_is_zero());
	}
	for (int m : {0, 1, 2, 3})
		CHECK(check_gm_axioms(so_jts(m)).ok());
}

TEST_CASE("gl(W + E) with S3 permuting three coordinates")
{
	for (int m : {1, 2, 3}) {
		CAPTURE(m);
		S3Example ex = sl_example(m);
		CHECK(check_action(ex.lie, ex.action).ok());
		CHECK(same_tables(ex.gm, sl_gm(m)));
		CHECK(check_gm_axioms(sl_gm(m)).ok());
	}
}

TEST_CASE("second row of the magic square")
{
	std::map<int, std::size_t> dims{{1, 8}, {2, 16}, {4, 35}};
	for (auto [d, n] : dims) {
		CAPTURE(d);
		MagicSquare ms = magic_square_row2(d);
		CHECK(ms.lie.dim() == n);
		CHECK(check_jacobi(ms.lie).ok());
		CHECK(check_action(ms.lie, ms.action).ok());
		GMAlgebra gm = extract_gm_from_s3(ms.lie, ms.action, ms.m_basis());
		CHECK(same_tables(gm, magic_square_gm(d)));
		CHECK(check_gm_axioms(magic_square_gm(d)).ok());
		// d+ + d- instead of d+ - d-: change the q(x,y) part by (2, -1, -1) along iota_i, iota_{i+1}, iota_{i+2}
		GMAlgebra flipped = magic_square_gm(d);
		std::size_t sd = static_cast<std::size_t>(d);
		const Matrix q = *para_hurwitz(d).form;
		for (std::size_t i = 0; i < 3; ++i)
			for (std::size_t x = 0; x < sd; ++x)
				for (std::size_t y = 0; y < sd; ++y)
					for (std::size_t k = 0; k < 3 * sd; ++k) {
						SparseVec t = flipped.tri(i * sd + x, i * sd + y, k);
						t.add_term(k, (k / sd == i ? Scalar(2) : Scalar(-1)) * q(x, y));
						flipped.set_tri(i * sd + x, i * sd + y, k, t);
					}
		CHECK_FALSE(check_gm_axioms(flipped).ok());
	}
}

TEST_CASE("cube example")
{
	GradedAlgebra p = pauli_sl2();
	CHECK(check_jacobi(p.alg).ok());
	CubeExample ex = cube_example(p);
	CHECK(ex.lie.dim() == 9);
	CHECK(check_jacobi(ex.lie).ok());
	CHECK(check_action(ex.lie, ex.action).ok());
	GradedAlgebra bad = p;
	bad.degree = {1, 1, 0};
	CHECK_THROWS_AS(cube_example(bad), std::invalid_argument);
}

TEST_CASE("catalog registry")
{
	for (const auto &info : catalog_list()) {
		CAPTURE(info.name);
		CatalogEntry e = catalog_build(info.name);
		CHECK(e.kind == info.kind);
		CHECK(e.expected.count("dim") + e.expected.count("composition_violations") > 0);
	}
	CHECK(catalog_build("so", 4).expected.at("m_W") == 2);
	CHECK(catalog_build("magic_square", 2).expected.at("dim") == 16);
	CHECK_THROWS_AS(catalog_build("nonsense"), std::invalid_argument);
	CHECK_THROWS_AS(catalog_build("g2", 3), std::invalid_argument);
	CHECK_THROWS_AS(catalog_build("hurwitz", 3), std::invalid_argument);
}
