#pragma once

// Coordinate structures of Lie algebras with symmetry.
// S4: normal Lie related triple algebras (A, ., bar, delta).
// S3: generalized Malcev algebras read off the omega-eigenspace of phi.

#include "symlie/gmalcev.hpp"
#include "symlie/symaction.hpp"

#include <array>
#include <optional>
#include <vector>

namespace symlie {

/// Triple of operators (d0, d1, d2) on A.
using OpTriple = std::array<Matrix, 3>;

/// bar(d) = B d B where B is the involution.
Matrix conj_op(const Matrix &invol, const Matrix &d);

struct NLRTA {
	/// bil is x.y, invol is x -> bar x.
	AlgebraSpec a;
	/// delta[x * n + y] = (delta_0, delta_1, delta_2)(e_x, e_y).
	std::vector<OpTriple> delta;
	/// Images of iota_i(e_k) in the source Lie algebra, filled by extraction.
	std::array<std::vector<Vec>, 3> iota;

	std::size_t dim() const { return a.dim(); }
	const Matrix &bar() const { return *a.invol; }
	const Matrix &d(int i, std::size_t x, std::size_t y) const { return delta[x * dim() + y][i]; }
	/// delta_i(x, y) for arbitrary vectors.
	Matrix delta_at(int i, std::span<const Scalar> x, std::span<const Scalar> y) const;
	/// span{iota_0(x), iota_1(x), iota_2(x)} in the source algebra.
	std::vector<Vec> iota_span(std::span<const Scalar> x) const;
};

/// Requires a nonzero g_0; throws VerificationError when V4 acts trivially or
/// a bracket leaves the component the grading predicts.
NLRTA extract_nlrta(const AlgebraSpec &alg, const S4Action &act);

/// Checks, by name:
///   involution              bar is an involutive antiautomorphism
///   delta_skew              delta(x,y) = -delta(y,x)
///   delta_in_lrt            each delta(x,y) is a Lie related triple
///   delta_bracket           [delta_i(a,b), delta_j(x,y)] = delta_j(delta_{i-j}(a,b)x, y) + delta_j(x, delta_{i-j}(a,b)y)
///   delta_cyclic_product    delta_0(bar x, yz) + delta_1(bar y, zx) + delta_2(bar z, xy) = 0
///   delta0_cyclic           delta_0(x,y)z + delta_0(y,z)x + delta_0(z,x)y = 0
///   delta1_left             delta_1(x,y) = L_{bar y} L_x - L_{bar x} L_y
///   delta2_right            delta_2(x,y) = R_{bar y} R_x - R_{bar x} R_y
///   delta_conjugate         bar(delta_i(x,y)) = delta_{-i}(bar x, bar y)
std::vector<IdentityCheck> verify_nlrta(const NLRTA &n);

struct GOfNLRTA {
	AlgebraSpec alg;
	S4Action action;
	/// Basis of inlrt = sum_i phi^i(delta(A,A)).
	std::vector<OpTriple> inlrt;
	std::size_t a_dim = 0;
	std::size_t iota_offset(int i) const { return inlrt.size() + static_cast<std::size_t>(i) * a_dim; }
};

/// Refuses (VerificationError) unless verify_nlrta passes.
GOfNLRTA build_g_from_nlrta(const NLRTA &n);

struct LRT {
	std::vector<OpTriple> basis;
	/// phi(d0,d1,d2) = (d2,d0,d1), tau(d0,d1,d2) = (bar d0, bar d2, bar d1), on `basis`.
	S3Action action;
	/// Componentwise bracket on `basis`.
	AlgebraSpec alg;
};

/// Requires A.invol.
LRT compute_lrt(const AlgebraSpec &a);

struct LRTParts {
	std::size_t lrt_dim = 0;
	/// (d,d,d) with bar d = d.
	std::vector<Matrix> der;
	/// (d,d,d) with bar d = -d.
	std::vector<Matrix> sder;
	/// d0 + d1 + d2 = 0.
	std::vector<OpTriple> w;
};

LRTParts lrt_isotypic(const AlgebraSpec &a);

/// M is the omega-eigenspace of phi, in `basis` when given.  xy = [tau x, tau y],
/// {x,y,z} = [[x, tau y], z].  Throws VerificationError when phi is trivial, a
/// bracket leaves its eigenspace or the result fails the axioms.
GMAlgebra extract_gm_from_s3(const AlgebraSpec &alg, const S3Action &act,
                             const std::optional<std::vector<Vec>> &basis = std::nullopt);

} // namespace symlie
