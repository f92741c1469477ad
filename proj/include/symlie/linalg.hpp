#pragma once

// Dense and sparse linear algebra over Scalar.

#include "symlie/scalar.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symlie {

class DimensionError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
void axpy(Vec &y, const Scalar &alpha, std::span<const Scalar> x);
Vec operator+(const Vec &x, const Vec &y);
Vec operator-(const Vec &x, const Vec &y);
Vec operator*(const Scalar &alpha, const Vec &x);

/// Sorted (index, coefficient) list without explicit zeros.
class SparseVec {
public:
	using Entry = std::pair<std::uint32_t, Scalar>;

	SparseVec() = default;
	static SparseVec from_dense(std::span<const Scalar> v);
	static SparseVec unit(std::size_t i, Scalar c = Scalar(1));

	bool empty() const { return entries_.empty(); }
	std::size_t nnz() const { return entries_.size(); }
	const std::vector<Entry> &entries() const { return entries_; }
	auto begin() const { return entries_.begin(); }
	auto end() const { return entries_.end(); }

	Scalar coeff(std::size_t i) const;
	Vec to_dense(std::size_t n) const;

	/// this += c * other
	void add_scaled(const Scalar &c, const SparseVec &other);
	void add_term(std::size_t i, const Scalar &c);
	SparseVec scaled(const Scalar &c) const;

	friend bool operator==(const SparseVec &, const SparseVec &) = default;

private:
	std::vector<Entry> entries_;
};

/// Accumulates a sparse linear combination in a dense buffer, then compacts.
class Accumulator {
public:
	explicit Accumulator(std::size_t n) : buf_(n), touched_(n, false) {}
	void add(std::size_t i, const Scalar &c);
	void add_product(std::size_t i, const Scalar &x, const Scalar &y);
	void add_scaled(const Scalar &c, const SparseVec &v);
	/// Returns the accumulated vector and resets the buffer.
	SparseVec take();
	std::size_t size() const { return buf_.size(); }

private:
	Vec buf_;
	std::vector<bool> touched_;
	std::vector<std::uint32_t> idx_;
};

/// Column convention: column j holds the image of the j-th basis vector.
class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
	static Matrix identity(std::size_t n);
	static Matrix from_columns(const std::vector<Vec> &cols, std::size_t rows);
	static Matrix from_rows(const std::vector<Vec> &rows);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool square() const { return rows_ == cols_; }

	Scalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	const Scalar &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

	Vec column(std::size_t j) const;
	void set_column(std::size_t j, std::span<const Scalar> v);
	Vec apply(std::span<const Scalar> v) const;
	Matrix transpose() const;
	bool is_zero() const;
	/// Row-major flattening, used when matrices are treated as vectors.
	const Vec &flat() const { return data_; }
	static Matrix from_flat(std::size_t rows, std::size_t cols, std::span<const Scalar> v);

	Matrix &operator+=(const Matrix &o);
	Matrix &operator-=(const Matrix &o);
	Matrix &operator*=(const Scalar &c);

	friend bool operator==(const Matrix &, const Matrix &) = default;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	Vec data_;
};

Matrix operator*(const Matrix &x, const Matrix &y);
Matrix operator+(Matrix x, const Matrix &y);
Matrix operator-(Matrix x, const Matrix &y);
Matrix operator*(const Scalar &c, Matrix x);
Matrix commutator(const Matrix &x, const Matrix &y);
Scalar trace(const Matrix &m);
Matrix inverse(const Matrix &m);
Matrix power(const Matrix &m, unsigned k);

/// Incrementally built echelon basis of a subspace, remembering how each
/// echelon row is combined from the vectors that were accepted.
class Span {
public:
	explicit Span(std::size_t ambient) : ambient_(ambient) {}

	std::size_t ambient() const { return ambient_; }
	std::size_t dim() const { return basis_.size(); }
	/// The accepted (linearly independent) input vectors, in insertion order.
	const std::vector<Vec> &basis() const { return basis_; }

	/// Adds v if it is independent of the current span; returns whether it was.
	bool insert(Vec v);
	bool contains(std::span<const Scalar> v) const;
	/// Coordinates of v with respect to basis(), or nullopt if v is not in the span.
	std::optional<Vec> coords(std::span<const Scalar> v) const;

private:
	struct Row {
		std::size_t pivot;
		Vec values;    // pivot entry normalized to 1
		Vec combo;     // values = sum combo[k] * basis_[k]
	};
	Vec reduce(Vec v, Vec *combo) const;

	std::size_t ambient_;
	std::vector<Vec> basis_;
	std::vector<Row> rows_;
};

/// Basis of {x : e.x = 0 for every equation row e}.  Rows have length `unknowns`.
struct SolutionSpace {
	std::size_t unknowns = 0;
	std::size_t rank = 0;
	std::vector<Vec> basis;
	std::size_t dim() const { return basis.size(); }
};

/// Row-reduces a system given row by row; rows may be sparse.
class LinearSystem {
public:
	explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}
	std::size_t unknowns() const { return unknowns_; }
	void add_equation(const SparseVec &row);
	void add_equation(std::span<const Scalar> row);
	std::size_t rank() const { return rows_.size(); }
	SolutionSpace solve() const;

private:
	void insert(Vec v);
	std::size_t unknowns_;
	std::vector<std::pair<std::size_t, Vec>> rows_;
};

SolutionSpace solve_linear(const std::vector<Vec> &equations, std::size_t unknowns);
std::size_t rank(const std::vector<Vec> &vectors, std::size_t ambient);
/// Linearly independent subset of `vectors`, first-seen order.
std::vector<Vec> independent_subset(const std::vector<Vec> &vectors, std::size_t ambient);
/// Kernel of a matrix acting on column vectors.
std::vector<Vec> kernel(const Matrix &m);
/// Basis of the intersection of two subspaces given by spanning sets.
std::vector<Vec> intersect(const std::vector<Vec> &a, const std::vector<Vec> &b, std::size_t ambient);
bool same_span(const std::vector<Vec> &a, const std::vector<Vec> &b, std::size_t ambient);

} // namespace symlie
