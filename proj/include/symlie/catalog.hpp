#pragma once

// Ready-made algebras, actions and coordinate structures.

#include "symlie/coordinatize.hpp"
#include "symlie/gmalcev.hpp"
#include "symlie/symaction.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symlie {

/// Constants on the two-dimensional S3-module W with basis {w+, w-}.
struct WConstants {
	/// Commutative product, bil(i, j).
	AlgebraSpec bullet;
	/// (w+|w+) = 2, (w-|w-) = 6.
	Matrix sym;
	/// <w-|w+> = 1.
	Matrix alt;
	/// u' <> u' = -12 u.
	Scalar uprime_uprime;
	/// Matrix of w -> u' <> w.
	Matrix uprime_w;
};

WConstants model_w_constants();

/// Unital split Hurwitz algebra of dimension d in {1, 2, 4, 8} by doubling with
/// parameter 1; invol is the standard involution, form the polar of the norm.
AlgebraSpec hurwitz(int d);
AlgebraSpec split_octonions();

/// x * y = bar(x) bar(y) on hurwitz(d).
AlgebraSpec para_hurwitz(int d);

/// K = ke + kz with z^2 = -3e, x . y = bar(xy), q(e) = 1, q(z) = 3.
AlgebraSpec para_k();
/// Automorphisms phi and tau of (K, .).
S3Action k_action();

/// The norm n(x) = form(x, x) / 2.
Scalar norm(const AlgebraSpec &s, std::span<const Scalar> x);

/// Composition law and associativity of the form, fully linearized on basis tuples.
std::vector<IdentityCheck> check_symmetric_composition(const AlgebraSpec &s);
/// (x,x,y) = 0 = (y,x,x) linearized, and n(xy) = n(x)n(y) linearized.
std::vector<IdentityCheck> check_hurwitz(const AlgebraSpec &h);

/// sigma_{a,b} = q(a,.)b - q(b,.)a.
Matrix sigma(const Matrix &form, std::span<const Scalar> a, std::span<const Scalar> b);

/// (d0,d1,d2) in so(S)^3 with d0(x*y) = d1(x)*y + x*d2(y).
std::vector<OpTriple> triality_tri(const AlgebraSpec &s);

/// Traceless octonions under the commutator.
AlgebraSpec octonion_malcev();

struct S3Example {
	AlgebraSpec lie;
	S3Action action;
	/// The generalized Malcev algebra extracted along `m_basis`.
	GMAlgebra gm;
	std::vector<Vec> m_basis;
};

/// E* + sl(E) + E; the attached GM algebra is (E, 2x cross y, b(x,y)z - 3b(y,z)x).
S3Example g2_example();
GMAlgebra g2_gm();

/// so(V) for V = k^n, the form diag(1/3,1/3,1/3,1,...) so that it restricts to
/// (.|.) on W; S3 permutes the first three coordinates.
S3Example so_example(int n);
/// Jordan triple system on k^m: {x,y,z} = b(x,z)y - b(y,z)x - b(x,y)z, b = identity.
GMAlgebra so_jts(int m);

/// gl(V), V = k^(m+2); the GM algebra on k a + E + E*, dim E = m.
S3Example sl_example(int m);
GMAlgebra sl_gm(int m);

struct MagicSquare {
	AlgebraSpec lie;
	S3Action action;
	std::vector<OpTriple> tri_k;
	std::vector<OpTriple> tri_s;
	std::size_t s_dim = 0;
	std::size_t iota_offset(int i) const { return tri_k.size() + tri_s.size() + static_cast<std::size_t>(i) * 2 * s_dim; }
	/// iota_i(w_omega (x) e_x), the omega-eigenspace basis.
	std::vector<Vec> m_basis() const;
};

MagicSquare magic_square_row2(int d);
/// GM algebra on iota_0(S) + iota_1(S) + iota_2(S):
///   iota_i(x) iota_{i+1}(y) = iota_{i+2}(x*y), iota_i(x) iota_i(y) = 0,
///   {iota_i x, iota_i y, iota_{i+1} z} = iota_{i+1}(q(x,y)z - (y*z)*x),
///   {iota_i x, iota_i y, iota_{i+2} z} = iota_{i+2}(q(x,y)z - x*(z*y)),
///   {iota_i x, iota_i y, iota_i z} = iota_i(q(x,z)y - q(y,z)x - q(x,y)z),
///   other triples zero.  This is d+ - d- for the brackets of magic_square_row2(d);
///   with d+ + d- the axioms fail.
GMAlgebra magic_square_gm(int d);

/// Z2 x Z2 degrees: 0 = (0,0), 1 = (1,0), 2 = (0,1), 3 = (1,1).
struct GradedAlgebra {
	AlgebraSpec alg;
	std::vector<int> degree;
};

/// sl2 in the basis h, e+f, e-f with degrees (1,0), (0,1), (1,1).
GradedAlgebra pauli_sl2();

struct CubeExample {
	AlgebraSpec lie;
	S4Action action;
	/// mu restricted to A = g_(0,1) + g_(1,1) in the extraction basis.
	Matrix mu_on_a;
	std::size_t base_dim = 0;
};

/// g^3 with tau1 = (x, nu y, nu z), tau2 = (nu x, y, nu z), phi = (z, x, y),
/// tau = (mu x, mu z, mu y).  Throws if g_(0,1) or g_(1,1) is zero.
CubeExample cube_example(const GradedAlgebra &base);

/// Catalog registry for the command line.
struct CatalogEntry {
	std::string name;
	/// gm, lie_s3, lie_s4, jts, composition, algebra_with_involution, lie
	std::string kind;
	AlgebraSpec algebra;
	std::optional<S3Action> s3;
	std::optional<S4Action> s4;
	std::map<std::string, long> expected;
};

struct CatalogInfo {
	std::string name;
	std::string kind;
	std::string parameter;  // empty when there is none
	std::string summary;
};

const std::vector<CatalogInfo> &catalog_list();
/// Builds and re-verifies an entry; throws std::invalid_argument for unknown
/// names or parameters and VerificationError when a fact fails.
CatalogEntry catalog_build(const std::string &name, std::optional<int> param = std::nullopt);

} // namespace symlie
