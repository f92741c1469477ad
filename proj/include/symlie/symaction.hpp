#pragma once

// S3 and S4 acting on algebras by matrices; Klein grading; isotypic parts.

#include "symlie/algebra.hpp"

#include <array>
#include <string>
#include <vector>

namespace symlie {

struct S3Action {
	Matrix phi;
	Matrix tau;
};

struct S4Action {
	Matrix tau1;
	Matrix tau2;
	Matrix phi;
	Matrix tau;

	S3Action s3() const { return {phi, tau}; }
};

/// Permutation of {0,..,n-1}; p[i] is the image of i.
using Perm = std::vector<int>;

struct GroupElement {
	Perm perm;
	Matrix mat;
	/// Conjugacy class: S3 {e, transpositions, 3-cycles};
	/// S4 {e, 2-cycles, 3-cycles, double transpositions, 4-cycles}.
	int cls = 0;
};

/// Enumerates the group generated by the permutations `gens`, together with
/// matrices built from `mats`.  Every edge of the Cayley graph is checked, so
/// an empty `violations` means the matrices define a homomorphism.
struct GroupEnumeration {
	std::vector<GroupElement> elements;
	IdentityCheck relations;
};

GroupEnumeration enumerate_s3(const S3Action &act);
GroupEnumeration enumerate_s4(const S4Action &act);

/// Generators as permutations: S3 phi = (012), tau = (01);
/// S4 tau1 = (01)(23), tau2 = (12)(03), phi = (012), tau = (01).
std::vector<Perm> s3_generator_perms();
std::vector<Perm> s4_generator_perms();

struct ActionReport {
	IdentityCheck relations;
	/// One check per generator, in declaration order.
	std::vector<IdentityCheck> automorphism;
	bool ok() const { return relations.ok() && all_ok(automorphism); }
};

ActionReport check_action(const AlgebraSpec &alg, const S3Action &act);
ActionReport check_action(const AlgebraSpec &alg, const S4Action &act);

/// Violating pairs (i, j) of g(e_i e_j) = g(e_i) g(e_j).
IdentityCheck check_automorphism(const AlgebraSpec &alg, const Matrix &g, const std::string &name);

struct KleinGrading {
	std::vector<Vec> t;   // (+,+)
	std::vector<Vec> g0;  // tau1 = +1, tau2 = -1
	std::vector<Vec> g1;  // tau1 = -1, tau2 = +1
	std::vector<Vec> g2;  // (-,-)
	const std::vector<Vec> &part(int i) const;
};

KleinGrading klein_grading(const AlgebraSpec &alg, const S4Action &act);

/// Matrix of m restricted to span(basis), in that basis; throws if not invariant.
Matrix restrict_to(const Matrix &m, const std::vector<Vec> &basis);

struct Irrep {
	std::string name;
	std::size_t dim = 0;
	std::size_t multiplicity = 0;
	/// Basis of the isotypic component (dimension = dim * multiplicity).
	std::vector<Vec> basis;
};

struct IsotypicReport {
	std::string group;  // "S3" or "S4"
	std::vector<Irrep> irreps;
	/// S3 only: the W block split by tau-eigenvalue.
	std::vector<Vec> w_plus;
	std::vector<Vec> w_minus;
	/// S4 only: character formula and central-idempotent ranks agree.
	bool cross_checked = false;

	std::size_t multiplicity(const std::string &name) const;
	const Irrep &irrep(const std::string &name) const;
	std::size_t total_dim() const;
};

/// S4 character table over classes {e, (12), (123), (12)(34), (1234)}.
struct CharacterTable {
	std::vector<std::string> names;
	std::vector<int> dims;
	std::vector<int> class_sizes;
	std::vector<std::vector<int>> chi;
};

const CharacterTable &s3_characters();
const CharacterTable &s4_characters();
/// Row and column orthogonality of a table; true when the table is consistent.
bool orthogonality_holds(const CharacterTable &table);

IsotypicReport isotypic_s3(const std::vector<Vec> &space, const S3Action &act);
IsotypicReport isotypic_s4(const std::vector<Vec> &space, const S4Action &act);

/// Whole-space decompositions.
IsotypicReport isotypic_s3(const S3Action &act);
IsotypicReport isotypic_s4(const S4Action &act);

} // namespace symlie
