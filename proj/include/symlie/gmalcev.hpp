#pragma once

// Generalized Malcev algebras: axioms, the associated Lie algebra g(M),
// Malcev algebras, Jordan triple systems and the Lie-Yamaguti reduction.

#include "symlie/algebra.hpp"
#include "symlie/symaction.hpp"

#include <string>
#include <vector>

namespace symlie {

/// A generalized Malcev algebra is an AlgebraSpec whose bil is the
/// anticommutative product xy and whose tri is {x,y,z}.
using GMAlgebra = AlgebraSpec;

/// Identity names, in the order check_gm_axioms reports them:
///   binary_triple      (xy)z = {x,z,y} - {y,z,x}
///   triple_on_product  {a,b,xy} = -{b,a,x}y - x{b,a,y}
///   triple_derivation  {a,b,{x,y,z}} - {x,y,{a,b,z}} = {{a,b,x},y,z} - {x,{b,a,y},z}
///   cyclic_first       {xy,z,t} + {yz,x,t} + {zx,y,t} = 0
///   cyclic_second      {x,yz,t} + {y,zx,t} + {z,xy,t} = 0
struct GMReport {
	std::vector<std::pair<std::size_t, std::size_t>> not_anticommutative;
	std::vector<IdentityCheck> identities;
	bool ok() const { return not_anticommutative.empty() && all_ok(identities); }
	const IdentityCheck &identity(const std::string &name) const;
};

GMReport check_gm_axioms(const GMAlgebra &m);

struct RedundancyReport {
	/// Names of failing identities among the first three.
	std::vector<std::string> failed_hypotheses;
	bool first_cyclic_holds = false;
	bool square_is_whole = false;        // M = M^2
	bool annihilator_trivial = false;    // {x : x M^2 = 0} = 0
	bool second_cyclic_holds = false;
	bool second_hypothesis_met() const { return square_is_whole || annihilator_trivial; }
	/// Every conclusion whose hypotheses are met was confirmed.
	bool confirmed() const
	{
		return failed_hypotheses.empty() && first_cyclic_holds &&
		       (!second_hypothesis_met() || second_cyclic_holds);
	}
};

RedundancyReport check_redundancy(const GMAlgebra &m);

/// d+_{x,y} = 1/2({x,y,.} - {y,x,.}) and d-_{x,y} = 1/2({x,y,.} + {y,x,.}).
Matrix d_plus(const GMAlgebra &m, std::span<const Scalar> x, std::span<const Scalar> y);
Matrix d_minus(const GMAlgebra &m, std::span<const Scalar> x, std::span<const Scalar> y);

struct DPlusDMinus {
	std::vector<Matrix> dplus;
	std::vector<Matrix> dminus;
};

/// Bases of d+ and d-, first-seen order over basis pairs (i, j).
DPlusDMinus d_spaces(const GMAlgebra &m);

/// g(M) = d+ + d- + nu0(M) + nu1(M), in that basis order.
struct GOfM {
	AlgebraSpec alg;
	S3Action action;
	DPlusDMinus d;
	std::size_t m = 0;

	std::size_t dplus_offset() const { return 0; }
	std::size_t dminus_offset() const { return d.dplus.size(); }
	std::size_t nu_offset(int i) const { return d.dplus.size() + d.dminus.size() + (i == 0 ? 0 : m); }
};

/// Refuses (VerificationError) unless the axioms hold.
GOfM build_g_of_M(const GMAlgebra &m);

IdentityCheck check_malcev(const AlgebraSpec &alg);

/// {x,y,z} = 1/2((xy)z + x(yz) - y(xz)) with no precondition.
GMAlgebra triple_from_binary(const AlgebraSpec &alg);
/// Requires the binary product to be Malcev.
GMAlgebra malcev_to_gm(const AlgebraSpec &alg);
/// Requires tri skew in its first two slots; throws naming the first bad pair.
AlgebraSpec gm_to_malcev(const GMAlgebra &m);

/// Tits-Kantor-Koecher algebra T + s(T) + T^ with an explicit isomorphism
/// from g(T).
struct TKK {
	AlgebraSpec alg;
	/// Pairs (d1, d2) spanning s(T).
	std::vector<std::pair<Matrix, Matrix>> s_basis;
	std::size_t t_dim = 0;
	/// Columns: images of the g(T) basis vectors.
	Matrix iso;
	bool iso_bijective = false;
	IdentityCheck iso_homomorphism;
	std::size_t s_offset() const { return t_dim; }
	std::size_t hat_offset() const { return t_dim + s_basis.size(); }
};

TKK tkk(const GMAlgebra &t);

struct LieYamaguti {
	/// [x,y,z] = {x,y,z} - {y,x,z}; bil is the binary product.
	GMAlgebra reduced;
	/// [M,M,.] + M.
	AlgebraSpec enveloping;
	std::vector<Matrix> inner;
	IdentityCheck jacobi;
	/// Columns: image in g(M) of each enveloping basis vector.
	Matrix embedding;
	bool matches_tau_fixed = false;
	IdentityCheck embedding_homomorphism;
};

LieYamaguti lie_yamaguti_reduce(const GMAlgebra &m);

} // namespace symlie
