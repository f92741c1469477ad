#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "symlie/symaction.hpp"

#include <map>

using namespace symlie;

namespace {

Matrix perm_matrix(const Perm &p)
{
	Matrix m(p.size(), p.size());
	for (std::size_t i = 0; i < p.size(); ++i)
		m(static_cast<std::size_t>(p[i]), i) = Scalar(1);
	return m;
}

S4Action permutation_s4()
{
	auto g = s4_generator_perms();
	return {perm_matrix(g[0]), perm_matrix(g[1]), perm_matrix(g[2]), perm_matrix(g[3])};
}

// the sum-zero hyperplane of k^4
std::vector<Vec> standard_subspace()
{
	std::vector<Vec> b;
	for (std::size_t i = 0; i < 3; ++i) {
		Vec v(4);
		v[i] = 1;
		v[3] = -1;
		b.push_back(v);
	}
	return b;
}

Perm compose(const Perm &g, const Perm &h)
{
	Perm r(h.size());
	for (std::size_t i = 0; i < h.size(); ++i)
		r[i] = g[static_cast<std::size_t>(h[i])];
	return r;
}

// left regular representation of S3
S3Action regular_s3()
{
	std::vector<Perm> elems;
	std::map<Perm, std::size_t> idx;
	Perm p{0, 1, 2};
	do {
		idx[p] = elems.size();
		elems.push_back(p);
	} while (std::next_permutation(p.begin(), p.end()));
	auto gens = s3_generator_perms();
	auto left = [&](const Perm &g) {
		Matrix m(6, 6);
		for (std::size_t j = 0; j < 6; ++j)
			m(idx[compose(g, elems[j])], j) = Scalar(1);
		return m;
	};
	return {left(gens[0]), left(gens[1])};
}

} // namespace

TEST_CASE("character tables are orthogonal")
{
	CHECK(orthogonality_holds(s3_characters()));
	CHECK(orthogonality_holds(s4_characters()));
	auto broken = s4_characters();
	broken.chi[3][1] = -1;
	CHECK_FALSE(orthogonality_holds(broken));
}

TEST_CASE("generator relations of S4 on permutations")
{
	auto act = permutation_s4();
	auto e = enumerate_s4(act);
	CHECK(e.elements.size() == 24);
	CHECK(e.relations.ok());
	std::vector<int> sizes(5);
	for (const auto &g : e.elements)
		++sizes[static_cast<std::size_t>(g.cls)];
	CHECK(sizes == s4_characters().class_sizes);
	CHECK(act.phi * act.tau1 * inverse(act.phi) == act.tau2);
	CHECK(act.phi * act.tau2 * inverse(act.phi) == act.tau1 * act.tau2);
	CHECK(act.tau * act.tau2 * act.tau == act.tau1 * act.tau2);
	// a bad generator is caught
	auto bad = act;
	bad.tau = act.phi;
	CHECK_FALSE(enumerate_s4(bad).relations.ok());
}

TEST_CASE("regular representation of S3")
{
	auto rep = isotypic_s3(regular_s3());
	CHECK(rep.multiplicity("U") == 1);
	CHECK(rep.multiplicity("U'") == 1);
	CHECK(rep.multiplicity("W") == 2);
	CHECK(rep.total_dim() == 6);
	CHECK(rep.w_plus.size() == 2);
	CHECK(rep.w_minus.size() == 2);
}

TEST_CASE("standard module of S4")
{
	auto act = permutation_s4();
	auto whole = isotypic_s4(act);
	CHECK(whole.multiplicity("U") == 1);
	CHECK(whole.multiplicity("V") == 1);
	CHECK(whole.cross_checked);
	auto v = isotypic_s4(standard_subspace(), act);
	CHECK(v.multiplicity("V") == 1);
	CHECK(v.multiplicity("V'") == 0);
	CHECK(v.multiplicity("U") == 0);
	// twist by the sign character
	S4Action tw{act.tau1, act.tau2, act.phi, Scalar(-1) * act.tau};
	auto vp = isotypic_s4(standard_subspace(), tw);
	CHECK(vp.multiplicity("V'") == 1);
	CHECK(vp.multiplicity("V") == 0);
	CHECK_THROWS_AS(isotypic_s4({unit_vec(4, 0)}, act), VerificationError);
}

TEST_CASE("check_action and klein grading")
{
	auto a = testing::sl2();
	Matrix id = Matrix::identity(3);
	CHECK(check_action(a, S3Action{id, id}).ok());
	S4Action triv{id, id, id, id};
	CHECK(check_action(a, triv).ok());
	auto k = klein_grading(a, triv);
	CHECK(k.t.size() == 3);
	CHECK(k.g0.empty());
	// scaling e by 2 and f by 1/2 is an automorphism; scaling h is not
	Matrix s = Matrix::identity(3);
	s(0, 0) = 2;
	CHECK_FALSE(check_action(a, S3Action{s, id}).ok());
	CHECK_THROWS_AS(check_action(a, S3Action{Matrix::identity(2), id}), DimensionError);
}

TEST_CASE("property: components are invariant and bookkeeping holds")
{
	auto act = permutation_s4();
	auto rep = isotypic_s4(act);
	std::size_t total = 0;
	for (const auto &ir : rep.irreps) {
		total += ir.basis.size();
		if (ir.basis.empty())
			continue;
		for (const Matrix *g : {&act.tau1, &act.tau2, &act.phi, &act.tau})
			CHECK_NOTHROW(restrict_to(*g, ir.basis));
	}
	CHECK(total == 4);
	auto r3 = isotypic_s3(regular_s3());
	auto s3 = regular_s3();
	for (const auto &ir : r3.irreps) {
		CHECK(ir.basis.size() == ir.dim * ir.multiplicity);
		for (const Matrix *g : {&s3.phi, &s3.tau})
			CHECK_NOTHROW(restrict_to(*g, ir.basis));
	}
}
