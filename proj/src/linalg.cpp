#include "symlie/linalg.hpp"

#include <algorithm>

namespace symlie {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i)
{
	Vec v(n);
	v.at(i) = Scalar(1);
	return v;
}

bool is_zero(std::span<const Scalar> v)
{
	return std::all_of(v.begin(), v.end(), [](const Scalar &x) { return x.is_zero(); });
}

void axpy(Vec &y, const Scalar &alpha, std::span<const Scalar> x)
{
	if (y.size() != x.size())
		throw DimensionError("axpy: length mismatch");
	if (alpha.is_zero())
		return;
	for (std::size_t i = 0; i < y.size(); ++i)
		if (!x[i].is_zero())
			y[i].add_product(alpha, x[i]);
}

Vec operator+(const Vec &x, const Vec &y)
{
	Vec r = x;
	axpy(r, Scalar(1), y);
	return r;
}

Vec operator-(const Vec &x, const Vec &y)
{
	Vec r = x;
	axpy(r, Scalar(-1), y);
	return r;
}

Vec operator*(const Scalar &alpha, const Vec &x)
{
	Vec r(x.size());
	if (alpha.is_zero())
		return r;
	for (std::size_t i = 0; i < x.size(); ++i)
		if (!x[i].is_zero())
			r[i] = alpha * x[i];
	return r;
}

// SparseVec

SparseVec SparseVec::from_dense(std::span<const Scalar> v)
{
	SparseVec s;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (!v[i].is_zero())
			s.entries_.emplace_back(static_cast<std::uint32_t>(i), v[i]);
	return s;
}

SparseVec SparseVec::unit(std::size_t i, Scalar c)
{
	SparseVec s;
	if (!c.is_zero())
		s.entries_.emplace_back(static_cast<std::uint32_t>(i), std::move(c));
	return s;
}

Scalar SparseVec::coeff(std::size_t i) const
{
	auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
	                           [](const Entry &e, std::size_t k) { return e.first < k; });
	if (it != entries_.end() && it->first == i)
		return it->second;
	return Scalar();
}

Vec SparseVec::to_dense(std::size_t n) const
{
	Vec v(n);
	for (const auto &[i, c] : entries_) {
		if (i >= n)
			throw DimensionError("sparse vector index out of range");
		v[i] = c;
	}
	return v;
}

void SparseVec::add_scaled(const Scalar &c, const SparseVec &other)
{
	if (c.is_zero() || other.empty())
		return;
	std::vector<Entry> out;
	out.reserve(entries_.size() + other.entries_.size());
	auto a = entries_.begin();
	auto b = other.entries_.begin();
	while (a != entries_.end() || b != other.entries_.end()) {
		if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
			out.push_back(std::move(*a++));
		} else if (a == entries_.end() || b->first < a->first) {
			out.emplace_back(b->first, c * b->second);
			++b;
		} else {
			Scalar s = std::move(a->second);
			s.add_product(c, b->second);
			if (!s.is_zero())
				out.emplace_back(a->first, std::move(s));
			++a;
			++b;
		}
	}
	entries_ = std::move(out);
}

void SparseVec::add_term(std::size_t i, const Scalar &c)
{
	if (c.is_zero())
		return;
	auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
	                           [](const Entry &e, std::size_t k) { return e.first < k; });
	if (it != entries_.end() && it->first == i) {
		it->second += c;
		if (it->second.is_zero())
			entries_.erase(it);
	} else {
		entries_.insert(it, Entry(static_cast<std::uint32_t>(i), c));
	}
}

SparseVec SparseVec::scaled(const Scalar &c) const
{
	SparseVec s;
	if (c.is_zero())
		return s;
	s.entries_.reserve(entries_.size());
	for (const auto &[i, x] : entries_)
		s.entries_.emplace_back(i, c * x);
	return s;
}

// Accumulator

void Accumulator::add(std::size_t i, const Scalar &c)
{
	if (c.is_zero())
		return;
	if (!touched_[i]) {
		touched_[i] = true;
		idx_.push_back(static_cast<std::uint32_t>(i));
	}
	buf_[i] += c;
}

void Accumulator::add_product(std::size_t i, const Scalar &x, const Scalar &y)
{
	if (x.is_zero() || y.is_zero())
		return;
	if (!touched_[i]) {
		touched_[i] = true;
		idx_.push_back(static_cast<std::uint32_t>(i));
	}
	buf_[i].add_product(x, y);
}

void Accumulator::add_scaled(const Scalar &c, const SparseVec &v)
{
	if (c.is_zero())
		return;
	for (const auto &[i, x] : v)
		add_product(i, c, x);
}

SparseVec Accumulator::take()
{
	std::sort(idx_.begin(), idx_.end());
	SparseVec out;
	for (auto i : idx_) {
		if (!buf_[i].is_zero())
			out.add_term(i, buf_[i]);
		buf_[i] = Scalar();
		touched_[i] = false;
	}
	idx_.clear();
	return out;
}

// Matrix

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = Scalar(1);
	return m;
}

Matrix Matrix::from_columns(const std::vector<Vec> &cols, std::size_t rows)
{
	Matrix m(rows, cols.size());
	for (std::size_t j = 0; j < cols.size(); ++j)
		m.set_column(j, cols[j]);
	return m;
}

Matrix Matrix::from_rows(const std::vector<Vec> &rows)
{
	std::size_t c = rows.empty() ? 0 : rows.front().size();
	Matrix m(rows.size(), c);
	for (std::size_t i = 0; i < rows.size(); ++i) {
		if (rows[i].size() != c)
			throw DimensionError("ragged matrix rows");
		for (std::size_t j = 0; j < c; ++j)
			m(i, j) = rows[i][j];
	}
	return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, std::span<const Scalar> v)
{
	if (v.size() != rows * cols)
		throw DimensionError("flat matrix has wrong length");
	Matrix m(rows, cols);
	std::copy(v.begin(), v.end(), m.data_.begin());
	return m;
}

Vec Matrix::column(std::size_t j) const
{
	Vec v(rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		v[i] = (*this)(i, j);
	return v;
}

void Matrix::set_column(std::size_t j, std::span<const Scalar> v)
{
	if (v.size() != rows_ || j >= cols_)
		throw DimensionError("set_column: shape mismatch");
	for (std::size_t i = 0; i < rows_; ++i)
		(*this)(i, j) = v[i];
}

Vec Matrix::apply(std::span<const Scalar> v) const
{
	if (v.size() != cols_)
		throw DimensionError("apply: shape mismatch");
	Vec r(rows_);
	for (std::size_t j = 0; j < cols_; ++j) {
		if (v[j].is_zero())
			continue;
		for (std::size_t i = 0; i < rows_; ++i) {
			const Scalar &m = (*this)(i, j);
			if (!m.is_zero())
				r[i].add_product(m, v[j]);
		}
	}
	return r;
}

Matrix Matrix::transpose() const
{
	Matrix t(cols_, rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			t(j, i) = (*this)(i, j);
	return t;
}

bool Matrix::is_zero() const { return symlie::is_zero(data_); }

Matrix &Matrix::operator+=(const Matrix &o)
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw DimensionError("matrix sum: shape mismatch");
	for (std::size_t k = 0; k < data_.size(); ++k)
		if (!o.data_[k].is_zero())
			data_[k] += o.data_[k];
	return *this;
}

Matrix &Matrix::operator-=(const Matrix &o)
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw DimensionError("matrix difference: shape mismatch");
	for (std::size_t k = 0; k < data_.size(); ++k)
		if (!o.data_[k].is_zero())
			data_[k] -= o.data_[k];
	return *this;
}

Matrix &Matrix::operator*=(const Scalar &c)
{
	for (auto &x : data_)
		if (!x.is_zero())
			x *= c;
	return *this;
}

Matrix operator*(const Matrix &x, const Matrix &y)
{
	if (x.cols() != y.rows())
		throw DimensionError("matrix product: shape mismatch");
	Matrix r(x.rows(), y.cols());
	for (std::size_t i = 0; i < x.rows(); ++i)
		for (std::size_t k = 0; k < x.cols(); ++k) {
			const Scalar &a = x(i, k);
			if (a.is_zero())
				continue;
			for (std::size_t j = 0; j < y.cols(); ++j)
				if (!y(k, j).is_zero())
					r(i, j).add_product(a, y(k, j));
		}
	return r;
}

Matrix operator+(Matrix x, const Matrix &y) { return x += y; }
Matrix operator-(Matrix x, const Matrix &y) { return x -= y; }
Matrix operator*(const Scalar &c, Matrix x) { return x *= c; }

Matrix commutator(const Matrix &x, const Matrix &y) { return x * y - y * x; }

Scalar trace(const Matrix &m)
{
	if (!m.square())
		throw DimensionError("trace of non-square matrix");
	Scalar t;
	for (std::size_t i = 0; i < m.rows(); ++i)
		t += m(i, i);
	return t;
}

Matrix inverse(const Matrix &m)
{
	if (!m.square())
		throw DimensionError("inverse of non-square matrix");
	std::size_t n = m.rows();
	Matrix a = m;
	Matrix inv = Matrix::identity(n);
	for (std::size_t c = 0; c < n; ++c) {
		std::size_t p = c;
		while (p < n && a(p, c).is_zero())
			++p;
		if (p == n)
			throw ArithmeticError("singular matrix");
		if (p != c)
			for (std::size_t j = 0; j < n; ++j) {
				std::swap(a(p, j), a(c, j));
				std::swap(inv(p, j), inv(c, j));
			}
		Scalar s = a(c, c).inverse();
		for (std::size_t j = 0; j < n; ++j) {
			a(c, j) *= s;
			inv(c, j) *= s;
		}
		for (std::size_t i = 0; i < n; ++i) {
			if (i == c || a(i, c).is_zero())
				continue;
			Scalar f = -a(i, c);
			for (std::size_t j = 0; j < n; ++j) {
				if (!a(c, j).is_zero())
					a(i, j).add_product(f, a(c, j));
				if (!inv(c, j).is_zero())
					inv(i, j).add_product(f, inv(c, j));
			}
		}
	}
	return inv;
}

Matrix power(const Matrix &m, unsigned k)
{
	Matrix r = Matrix::identity(m.rows());
	for (unsigned i = 0; i < k; ++i)
		r = r * m;
	return r;
}

// Span

namespace {

std::size_t first_nonzero(const Vec &v)
{
	for (std::size_t i = 0; i < v.size(); ++i)
		if (!v[i].is_zero())
			return i;
	return v.size();
}

// v -= c * row, touching only nonzero entries of row
void eliminate(Vec &v, const Scalar &c, const Vec &row)
{
	Scalar nc = -c;
	for (std::size_t i = 0; i < row.size(); ++i)
		if (!row[i].is_zero())
			v[i].add_product(nc, row[i]);
}

} // namespace

Vec Span::reduce(Vec v, Vec *combo) const
{
	for (const auto &r : rows_) {
		if (v[r.pivot].is_zero())
			continue;
		Scalar c = v[r.pivot];
		eliminate(v, c, r.values);
		if (combo)
			eliminate(*combo, c, r.combo);
	}
	return v;
}

bool Span::insert(Vec v)
{
	if (v.size() != ambient_)
		throw DimensionError("span: vector has wrong length");
	std::size_t k = basis_.size();
	Vec combo(k + 1);
	combo[k] = Scalar(1);
	// existing combos are one shorter; reduce with padded copies
	for (auto &r : rows_)
		r.combo.resize(k + 1);
	Vec red = reduce(v, &combo);
	std::size_t p = first_nonzero(red);
	if (p == ambient_) {
		for (auto &r : rows_)
			r.combo.resize(k);
		return false;
	}
	Scalar s = red[p].inverse();
	for (auto &x : red)
		if (!x.is_zero())
			x *= s;
	for (auto &x : combo)
		if (!x.is_zero())
			x *= s;
	for (auto &r : rows_) {
		if (r.values[p].is_zero())
			continue;
		Scalar c = r.values[p];
		eliminate(r.values, c, red);
		eliminate(r.combo, c, combo);
	}
	basis_.push_back(std::move(v));
	rows_.push_back(Row{p, std::move(red), std::move(combo)});
	return true;
}

bool Span::contains(std::span<const Scalar> v) const
{
	if (v.size() != ambient_)
		throw DimensionError("span: vector has wrong length");
	return symlie::is_zero(reduce(Vec(v.begin(), v.end()), nullptr));
}

std::optional<Vec> Span::coords(std::span<const Scalar> v) const
{
	if (v.size() != ambient_)
		throw DimensionError("span: vector has wrong length");
	// v = sum_r v[pivot_r] * values_r when v is in the span
	Vec rest(v.begin(), v.end());
	Vec out(basis_.size());
	for (const auto &r : rows_) {
		if (rest[r.pivot].is_zero())
			continue;
		Scalar c = rest[r.pivot];
		eliminate(rest, c, r.values);
		axpy(out, c, r.combo);
	}
	if (!symlie::is_zero(rest))
		return std::nullopt;
	return out;
}

// LinearSystem

void LinearSystem::insert(Vec v)
{
	for (const auto &[p, row] : rows_)
		if (!v[p].is_zero()) {
			Scalar c = v[p];
			eliminate(v, c, row);
		}
	std::size_t p = first_nonzero(v);
	if (p == unknowns_)
		return;
	Scalar s = v[p].inverse();
	for (auto &x : v)
		if (!x.is_zero())
			x *= s;
	for (auto &[q, row] : rows_)
		if (!row[p].is_zero()) {
			Scalar c = row[p];
			eliminate(row, c, v);
		}
	rows_.emplace_back(p, std::move(v));
}

void LinearSystem::add_equation(const SparseVec &row)
{
	insert(row.to_dense(unknowns_));
}

void LinearSystem::add_equation(std::span<const Scalar> row)
{
	if (row.size() != unknowns_)
		throw DimensionError("equation has wrong length");
	insert(Vec(row.begin(), row.end()));
}

SolutionSpace LinearSystem::solve() const
{
	SolutionSpace s;
	s.unknowns = unknowns_;
	s.rank = rows_.size();
	std::vector<bool> is_pivot(unknowns_, false);
	for (const auto &[p, row] : rows_)
		is_pivot[p] = true;
	for (std::size_t f = 0; f < unknowns_; ++f) {
		if (is_pivot[f])
			continue;
		Vec x(unknowns_);
		x[f] = Scalar(1);
		for (const auto &[p, row] : rows_)
			if (!row[f].is_zero())
				x[p] = -row[f];
		s.basis.push_back(std::move(x));
	}
	return s;
}

SolutionSpace solve_linear(const std::vector<Vec> &equations, std::size_t unknowns)
{
	LinearSystem sys(unknowns);
	for (const auto &e : equations)
		sys.add_equation(e);
	return sys.solve();
}

std::size_t rank(const std::vector<Vec> &vectors, std::size_t ambient)
{
	LinearSystem sys(ambient);
	for (const auto &v : vectors)
		sys.add_equation(v);
	return sys.rank();
}

std::vector<Vec> independent_subset(const std::vector<Vec> &vectors, std::size_t ambient)
{
	Span s(ambient);
	for (const auto &v : vectors)
		s.insert(v);
	return s.basis();
}

std::vector<Vec> kernel(const Matrix &m)
{
	LinearSystem sys(m.cols());
	for (std::size_t i = 0; i < m.rows(); ++i) {
		Vec row(m.cols());
		for (std::size_t j = 0; j < m.cols(); ++j)
			row[j] = m(i, j);
		sys.add_equation(row);
	}
	return sys.solve().basis;
}

std::vector<Vec> intersect(const std::vector<Vec> &a, const std::vector<Vec> &b, std::size_t ambient)
{
	auto ba = independent_subset(a, ambient);
	auto bb = independent_subset(b, ambient);
	std::size_t na = ba.size(), nb = bb.size();
	// sum alpha_i a_i - sum beta_j b_j = 0, one equation per ambient coordinate
	LinearSystem sys(na + nb);
	for (std::size_t c = 0; c < ambient; ++c) {
		Vec row(na + nb);
		for (std::size_t i = 0; i < na; ++i)
			row[i] = ba[i][c];
		for (std::size_t j = 0; j < nb; ++j)
			row[na + j] = -bb[j][c];
		sys.add_equation(row);
	}
	std::vector<Vec> out;
	for (const auto &k : sys.solve().basis) {
		Vec v(ambient);
		for (std::size_t i = 0; i < na; ++i)
			axpy(v, k[i], ba[i]);
		out.push_back(std::move(v));
	}
	return independent_subset(out, ambient);
}

bool same_span(const std::vector<Vec> &a, const std::vector<Vec> &b, std::size_t ambient)
{
	Span sa(ambient);
	for (const auto &v : a)
		sa.insert(v);
	for (const auto &v : b)
		if (!sa.contains(v))
			return false;
	return rank(b, ambient) == sa.dim();
}

} // namespace symlie
