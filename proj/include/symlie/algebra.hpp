#pragma once

// Finite-dimensional algebras given by sparse structure tensors.

#include "symlie/linalg.hpp"
#include "symlie/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symlie {

using LinearMap = Matrix;

/// e_i e_j = bil(i, j); optionally {e_i, e_j, e_k} = tri(i, j, k).
class AlgebraSpec {
public:
	AlgebraSpec() = default;
	explicit AlgebraSpec(std::size_t dim);

	std::size_t dim() const { return dim_; }

	const SparseVec &bil(std::size_t i, std::size_t j) const { return bil_[i * dim_ + j]; }
	void set_bil(std::size_t i, std::size_t j, SparseVec v);
	/// Sets e_i e_j = v and e_j e_i = -v.
	void set_bracket(std::size_t i, std::size_t j, const SparseVec &v);
	bool bil_is_zero() const;

	bool has_tri() const { return !tri_.empty() || dim_ == 0; }
	/// Allocates a zero ternary table if there is none.
	void ensure_tri();
	const SparseVec &tri(std::size_t i, std::size_t j, std::size_t k) const;
	void set_tri(std::size_t i, std::size_t j, std::size_t k, SparseVec v);

	std::optional<Matrix> invol;
	std::optional<Matrix> form;
	std::vector<std::string> labels;

	/// Throws std::invalid_argument if indices, shapes or the involution are bad.
	void validate() const;

	friend bool operator==(const AlgebraSpec &, const AlgebraSpec &) = default;

private:
	std::size_t dim_ = 0;
	std::vector<SparseVec> bil_;
	std::vector<SparseVec> tri_;
};

/// The 2-sided product on coordinate vectors.
Vec product(const AlgebraSpec &alg, std::span<const Scalar> x, std::span<const Scalar> y);
SparseVec product(const AlgebraSpec &alg, const SparseVec &x, const SparseVec &y);
Vec triple(const AlgebraSpec &alg, std::span<const Scalar> x, std::span<const Scalar> y,
           std::span<const Scalar> z);
SparseVec triple(const AlgebraSpec &alg, const SparseVec &x, const SparseVec &y, const SparseVec &z);

/// L_x as a matrix: column j = x e_j.
Matrix left_mult(const AlgebraSpec &alg, std::span<const Scalar> x);
/// R_x as a matrix: column j = e_j x.
Matrix right_mult(const AlgebraSpec &alg, std::span<const Scalar> x);
/// {x, y, .} as a matrix.
Matrix triple_op(const AlgebraSpec &alg, std::span<const Scalar> x, std::span<const Scalar> y);
/// Matrix of the basis operator {e_i, e_j, .}.
Matrix triple_op(const AlgebraSpec &alg, std::size_t i, std::size_t j);

/// Violating index pairs (i, j) with i <= j.
std::vector<std::pair<std::size_t, std::size_t>> check_anticommutative(const AlgebraSpec &alg);
IdentityCheck check_jacobi(const AlgebraSpec &alg);

/// The Jacobian J(e_a, e_b, e_c) = (ab)c + (bc)a + (ca)b, row-major a,b,c.
std::vector<SparseVec> jacobian_table(const AlgebraSpec &alg);

/// Basis change: new basis vectors are the columns of p (in old coordinates).
AlgebraSpec change_basis(const AlgebraSpec &alg, const Matrix &p);

/// Structure constants of the algebra of linear maps spanned by `ops`,
/// which must be closed under commutator.  Throws if not closed.
AlgebraSpec operator_lie_algebra(const std::vector<Matrix> &ops);

/// Linearly independent subset of a list of linear maps, first-seen order.
std::vector<Matrix> operator_span(const std::vector<Matrix> &ops);

/// Derivations of the binary product, as a solved space of dim x dim matrices.
std::vector<Matrix> derivations(const AlgebraSpec &alg);

/// Restricts the algebra to a subspace with the given basis; throws if not closed.
AlgebraSpec subalgebra(const AlgebraSpec &alg, const std::vector<Vec> &basis);

struct Closure {
	std::vector<Vec> basis;
	/// dims[k] = dimension after bracket depth k + 1 (depth 1 = the seeds).
	std::vector<std::size_t> dims;
	bool stabilized = false;
};

Closure generated_subalgebra(const AlgebraSpec &alg, const std::vector<Vec> &seeds,
                             unsigned max_depth);

} // namespace symlie
