#pragma once

// The Tetrahedron algebra as sl2 (x) A on the A-basis u0, u1, u2, with its
// S4-action, checked on bounded-degree windows.

#include "symlie/loopring.hpp"
#include "symlie/report.hpp"
#include "symlie/symaction.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace symlie {

/// u0 c0 + u1 c1 + u2 c2.
struct TetraElem {
	std::array<LoopElem, 3> c;

	static TetraElem u(int i, LoopElem a = LoopElem(1));

	bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
	TetraElem &operator+=(const TetraElem &o);
	TetraElem &operator-=(const TetraElem &o);
	/// Right multiplication by a ring element.
	TetraElem &operator*=(const LoopElem &a);
	TetraElem operator-() const;

	/// "u0*(...) + u1*(...) + u2*(...)", zero components omitted, "0" when empty.
	std::string to_string() const;
	static TetraElem parse(std::string_view text);

	friend bool operator==(const TetraElem &, const TetraElem &) = default;
};

inline TetraElem operator+(TetraElem x, const TetraElem &y) { return x += y; }
inline TetraElem operator-(TetraElem x, const TetraElem &y) { return x -= y; }
inline TetraElem operator*(TetraElem x, const LoopElem &a) { return x *= a; }

/// [u0,u1] = -u2 t, [u1,u2] = -u0 t', [u2,u0] = -u1 t'', extended A-bilinearly.
TetraElem tetra_bracket(const TetraElem &x, const TetraElem &y);

/// Generators in the order of s4_generator_perms(): tau1, tau2, phi, tau.
/// tau1, tau2 are A-linear, phi and tau semilinear over phi_A, tau_A.
TetraElem tetra_tau1(const TetraElem &x);
TetraElem tetra_tau2(const TetraElem &x);
TetraElem tetra_phi(const TetraElem &x);
TetraElem tetra_tau(const TetraElem &x);
TetraElem tetra_apply(int generator, const TetraElem &x);

/// Elements u_i t^a (1-t)^b with |a|, |b| <= bound.
std::vector<TetraElem> tetra_sample_basis(int bound);

/// Jacobi on all u-triples, each with one coefficient a monomial of the window
/// and the others 1, plus `samples` seeded triples with three monomial coefficients.
IdentityCheck tetra_check_jacobi(int bound, std::size_t samples = 500, std::uint64_t seed = 1);

/// Named "hom_tau1", "hom_tau2", "hom_phi", "hom_tau" (brackets of u-basis
/// pairs with window coefficients) and "group_relations" (every Cayley-graph
/// edge of S4 on the window elements).
std::vector<IdentityCheck> tetra_check_s4(int bound);

/// The product and involution of the attached normal LRTA on A:
/// a.b = (tau phi a)(tau phi^2 b), bar a = -t' tau(a).
LoopElem tetra_product(const LoopElem &a, const LoopElem &b);
LoopElem tetra_bar(const LoopElem &a);

/// Coordinates of ring elements in a common window p / (t(1-t))^e, deg p <= D.
std::vector<Vec> loop_coords(const std::vector<LoopElem> &xs);
/// Concatenated per-component coordinates in a common window.
std::vector<Vec> tetra_coords(const std::vector<TetraElem> &xs);

/// S4 acting on span(basis), which must be invariant; throws VerificationError otherwise.
S4Action tetra_restricted_action(const std::vector<TetraElem> &basis);

struct VsModules {
	int s = 0;
	/// u_i (t_i)^-1 (t_i(1-t_i))^s with t_0 = t, t_1 = t', t_2 = t''.
	std::array<TetraElem, 3> vprime;
	/// u_i (t_i)^-1 (2t_i - 1)(t_i(1-t_i))^s.
	std::array<TetraElem, 3> v;
	S4Action on_vprime;
	S4Action on_v;
	/// Every one of the 24 group elements preserves the span.
	bool invariant = false;
	IsotypicReport type_vprime;
	IsotypicReport type_v;
};

VsModules vs_modules(int s);

/// v0 = u0 t^-1, v1 = u1 (t')^-1, v2 = u2 (t'')^-1.
std::array<TetraElem, 3> v_generators();

/// "v1v2", "v2v0", "v0v1" and "v1_v1v2" for [v1,[v1,v2]] = -v2 / (t'(1-t')).
std::vector<IdentityCheck> v_generators_check();

struct VClosure {
	int depth = 0;
	/// Independent brackets of the generators, shortest first.
	std::vector<TetraElem> basis;
	/// dims[k] = dimension spanned by brackets of length <= k + 1.
	std::vector<std::size_t> dims;
	/// Each coefficient of v_i in each basis element lies in S.
	IdentityCheck membership;
};

/// Closure of {v0, v1, v2} under left-normed brackets up to `depth` generators.
VClosure v_closure(int depth);

/// A_N = {f : pole order <= N at 0, 1 and infinity} = {p/(t(1-t))^N : deg p <= 3N}.
struct SCodimension {
	int degree = 0;
	std::size_t a_dim = 0;
	/// S intersected with A_N.
	std::size_t s_dim = 0;
	/// rank of S-slice + k(2t-1).
	std::size_t sum_dim = 0;
	bool complement_ok() const { return sum_dim == a_dim && s_dim + 1 == a_dim; }
	/// in_S(2t-1) is false and in_S((2t-1)(1-t(1-t))) is true.
	bool witnesses_ok = false;
	/// Every S-slice basis vector passes in_S.
	bool membership_ok = false;
};

SCodimension s_codimension(int degree);

/// Union of V_s and V'_s for |s| <= N: linear independence over k, and the
/// u_i-coefficients, pulled back by phi_A^-i, span t^-1 (t(1-t))^-N k[t]_{<=4N+1}.
struct VsDecomposition {
	int bound = 0;
	std::size_t count = 0;
	std::size_t rank = 0;
	std::array<bool, 3> spans{};
	bool ok() const { return rank == count && spans[0] && spans[1] && spans[2]; }
};

VsDecomposition vs_decomposition(int bound);

/// The finite S4-invariant slice sum_{|s| <= N} (V_s + V'_s).
struct TetraSlice {
	std::vector<TetraElem> basis;
	S4Action action;
};

TetraSlice tetra_slice(int bound);

/// W_n, U_n, U'_n in A with their S3-types under (phi_A, tau_A).
struct RingModule {
	std::string name;  // "W3", "U2", "U'1", ...
	std::vector<LoopElem> basis;
	S3Action action;
	IsotypicReport type;
};

std::vector<RingModule> ring_modules(int n_max);

} // namespace symlie
