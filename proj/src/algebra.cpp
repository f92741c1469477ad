#include "symlie/algebra.hpp"
#include "symlie/parallel.hpp"

#include <algorithm>

namespace symlie {

AlgebraSpec::AlgebraSpec(std::size_t dim) : dim_(dim), bil_(dim * dim) {}

void AlgebraSpec::set_bil(std::size_t i, std::size_t j, SparseVec v)
{
	if (i >= dim_ || j >= dim_)
		throw DimensionError("product index out of range");
	for (const auto &[k, c] : v)
		if (k >= dim_)
			throw DimensionError("product value index out of range");
	bil_[i * dim_ + j] = std::move(v);
}

void AlgebraSpec::set_bracket(std::size_t i, std::size_t j, const SparseVec &v)
{
	set_bil(i, j, v);
	if (i != j)
		set_bil(j, i, v.scaled(Scalar(-1)));
}

bool AlgebraSpec::bil_is_zero() const
{
	return std::all_of(bil_.begin(), bil_.end(), [](const SparseVec &v) { return v.empty(); });
}

void AlgebraSpec::ensure_tri()
{
	if (tri_.empty())
		tri_.resize(dim_ * dim_ * dim_);
}

const SparseVec &AlgebraSpec::tri(std::size_t i, std::size_t j, std::size_t k) const
{
	static const SparseVec zero;
	if (tri_.empty())
		return zero;
	return tri_[(i * dim_ + j) * dim_ + k];
}

void AlgebraSpec::set_tri(std::size_t i, std::size_t j, std::size_t k, SparseVec v)
{
	if (i >= dim_ || j >= dim_ || k >= dim_)
		throw DimensionError("triple index out of range");
	for (const auto &[l, c] : v)
		if (l >= dim_)
			throw DimensionError("triple value index out of range");
	ensure_tri();
	tri_[(i * dim_ + j) * dim_ + k] = std::move(v);
}

void AlgebraSpec::validate() const
{
	if (bil_.size() != dim_ * dim_)
		throw DimensionError("product table has wrong size");
	if (!tri_.empty() && tri_.size() != dim_ * dim_ * dim_)
		throw DimensionError("triple table has wrong size");
	if (!labels.empty() && labels.size() != dim_)
		throw DimensionError("label count differs from dimension");
	if (invol) {
		if (invol->rows() != dim_ || invol->cols() != dim_)
			throw DimensionError("involution has wrong shape");
		if (!(*invol * *invol == Matrix::identity(dim_)))
			throw std::invalid_argument("involution does not square to the identity");
	}
	if (form) {
		if (form->rows() != dim_ || form->cols() != dim_)
			throw DimensionError("form has wrong shape");
		if (!(form->transpose() == *form))
			throw std::invalid_argument("form is not symmetric");
	}
}

// products

namespace {

void check_len(const AlgebraSpec &alg, std::size_t n)
{
	if (n != alg.dim())
		throw DimensionError("vector length differs from algebra dimension");
}

} // namespace

SparseVec product(const AlgebraSpec &alg, const SparseVec &x, const SparseVec &y)
{
	Accumulator acc(alg.dim());
	for (const auto &[i, a] : x)
		for (const auto &[j, b] : y) {
			const SparseVec &p = alg.bil(i, j);
			if (p.empty())
				continue;
			Scalar ab = a * b;
			acc.add_scaled(ab, p);
		}
	return acc.take();
}

Vec product(const AlgebraSpec &alg, std::span<const Scalar> x, std::span<const Scalar> y)
{
	check_len(alg, x.size());
	check_len(alg, y.size());
	return product(alg, SparseVec::from_dense(x), SparseVec::from_dense(y)).to_dense(alg.dim());
}

SparseVec triple(const AlgebraSpec &alg, const SparseVec &x, const SparseVec &y, const SparseVec &z)
{
	Accumulator acc(alg.dim());
	for (const auto &[i, a] : x)
		for (const auto &[j, b] : y) {
			Scalar ab = a * b;
			for (const auto &[k, c] : z) {
				const SparseVec &p = alg.tri(i, j, k);
				if (!p.empty())
					acc.add_scaled(ab * c, p);
			}
		}
	return acc.take();
}

Vec triple(const AlgebraSpec &alg, std::span<const Scalar> x, std::span<const Scalar> y,
           std::span<const Scalar> z)
{
	check_len(alg, x.size());
	check_len(alg, y.size());
	check_len(alg, z.size());
	return triple(alg, SparseVec::from_dense(x), SparseVec::from_dense(y), SparseVec::from_dense(z))
	    .to_dense(alg.dim());
}

Matrix left_mult(const AlgebraSpec &alg, std::span<const Scalar> x)
{
	check_len(alg, x.size());
	std::size_t n = alg.dim();
	SparseVec sx = SparseVec::from_dense(x);
	Matrix m(n, n);
	for (std::size_t j = 0; j < n; ++j)
		m.set_column(j, product(alg, sx, SparseVec::unit(j)).to_dense(n));
	return m;
}

Matrix right_mult(const AlgebraSpec &alg, std::span<const Scalar> x)
{
	check_len(alg, x.size());
	std::size_t n = alg.dim();
	SparseVec sx = SparseVec::from_dense(x);
	Matrix m(n, n);
	for (std::size_t j = 0; j < n; ++j)
		m.set_column(j, product(alg, SparseVec::unit(j), sx).to_dense(n));
	return m;
}

Matrix triple_op(const AlgebraSpec &alg, std::span<const Scalar> x, std::span<const Scalar> y)
{
	check_len(alg, x.size());
	check_len(alg, y.size());
	std::size_t n = alg.dim();
	SparseVec sx = SparseVec::from_dense(x), sy = SparseVec::from_dense(y);
	Matrix m(n, n);
	for (std::size_t j = 0; j < n; ++j)
		m.set_column(j, triple(alg, sx, sy, SparseVec::unit(j)).to_dense(n));
	return m;
}

Matrix triple_op(const AlgebraSpec &alg, std::size_t i, std::size_t j)
{
	std::size_t n = alg.dim();
	Matrix m(n, n);
	for (std::size_t k = 0; k < n; ++k)
		for (const auto &[l, c] : alg.tri(i, j, k))
			m(l, k) = c;
	return m;
}

// identity checks

std::vector<std::pair<std::size_t, std::size_t>> check_anticommutative(const AlgebraSpec &alg)
{
	std::vector<std::pair<std::size_t, std::size_t>> bad;
	std::size_t n = alg.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j) {
			SparseVec s = alg.bil(i, j);
			s.add_scaled(Scalar(1), alg.bil(j, i));
			if (!s.empty())
				bad.emplace_back(i, j);
		}
	return bad;
}

namespace {

SparseVec jacobian(const AlgebraSpec &alg, std::size_t a, std::size_t b, std::size_t c)
{
	Accumulator acc(alg.dim());
	auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
		for (const auto &[k, v] : alg.bil(x, y))
			acc.add_scaled(v, alg.bil(k, z));
	};
	term(a, b, c);
	term(b, c, a);
	term(c, a, b);
	return acc.take();
}

} // namespace

IdentityCheck check_jacobi(const AlgebraSpec &alg)
{
	std::size_t n = alg.dim();
	auto rows = parallel_map(n, [&](std::size_t i) {
		IdentityCheck part;
		for (std::size_t j = i; j < n; ++j)
			for (std::size_t k = j; k < n; ++k) {
				++part.tested;
				if (!jacobian(alg, i, j, k).empty())
					part.fail({i, j, k});
			}
		return part;
	});
	IdentityCheck out;
	out.name = "jacobi";
	for (const auto &r : rows)
		out.merge(r);
	return out;
}

std::vector<SparseVec> jacobian_table(const AlgebraSpec &alg)
{
	std::size_t n = alg.dim();
	auto rows = parallel_map(n, [&](std::size_t a) {
		std::vector<SparseVec> row(n * n);
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
				row[b * n + c] = jacobian(alg, a, b, c);
		return row;
	});
	std::vector<SparseVec> table;
	table.reserve(n * n * n);
	for (auto &r : rows)
		for (auto &v : r)
			table.push_back(std::move(v));
	return table;
}

// constructions

AlgebraSpec change_basis(const AlgebraSpec &alg, const Matrix &p)
{
	std::size_t n = alg.dim();
	if (p.rows() != n || p.cols() != n)
		throw DimensionError("change of basis has wrong shape");
	Matrix pinv = inverse(p);
	std::vector<SparseVec> cols(n);
	for (std::size_t j = 0; j < n; ++j)
		cols[j] = SparseVec::from_dense(p.column(j));
	auto back = [&](const SparseVec &v) { return SparseVec::from_dense(pinv.apply(v.to_dense(n))); };
	AlgebraSpec out(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			out.set_bil(i, j, back(product(alg, cols[i], cols[j])));
	if (alg.has_tri() && n > 0) {
		out.ensure_tri();
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t k = 0; k < n; ++k)
					out.set_tri(i, j, k, back(triple(alg, cols[i], cols[j], cols[k])));
	}
	if (alg.invol)
		out.invol = pinv * *alg.invol * p;
	if (alg.form)
		out.form = p.transpose() * *alg.form * p;
	return out;
}

std::vector<Matrix> operator_span(const std::vector<Matrix> &ops)
{
	if (ops.empty())
		return {};
	std::size_t r = ops.front().rows(), c = ops.front().cols();
	Span s(r * c);
	std::vector<Matrix> out;
	for (const auto &m : ops) {
		if (m.rows() != r || m.cols() != c)
			throw DimensionError("operator_span: mixed shapes");
		if (s.insert(m.flat()))
			out.push_back(m);
	}
	return out;
}

AlgebraSpec operator_lie_algebra(const std::vector<Matrix> &ops)
{
	auto basis = operator_span(ops);
	if (basis.size() != ops.size())
		throw std::invalid_argument("operator_lie_algebra: operators are not independent");
	std::size_t n = basis.size();
	AlgebraSpec out(n);
	if (n == 0)
		return out;
	Span s(basis.front().flat().size());
	for (const auto &m : basis)
		s.insert(m.flat());
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			auto c = s.coords(commutator(basis[i], basis[j]).flat());
			if (!c)
				throw VerificationError("operator span is not closed under commutator");
			out.set_bracket(i, j, SparseVec::from_dense(*c));
		}
	return out;
}

std::vector<Matrix> derivations(const AlgebraSpec &alg)
{
	std::size_t n = alg.dim();
	// unknown D(r, c) at index r * n + c
	LinearSystem sys(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			std::vector<SparseVec> rows(n);
			// D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0, component l
			for (const auto &[p, c] : alg.bil(i, j))
				for (std::size_t l = 0; l < n; ++l)
					rows[l].add_term(l * n + p, c);
			for (std::size_t p = 0; p < n; ++p) {
				for (const auto &[l, c] : alg.bil(p, j))
					rows[l].add_term(p * n + i, -c);
				for (const auto &[l, c] : alg.bil(i, p))
					rows[l].add_term(p * n + j, -c);
			}
			for (const auto &r : rows)
				if (!r.empty())
					sys.add_equation(r);
		}
	std::vector<Matrix> out;
	for (const auto &v : sys.solve().basis)
		out.push_back(Matrix::from_flat(n, n, v));
	return out;
}

AlgebraSpec subalgebra(const AlgebraSpec &alg, const std::vector<Vec> &basis)
{
	std::size_t n = alg.dim();
	Span s(n);
	for (const auto &v : basis)
		if (!s.insert(v))
			throw std::invalid_argument("subalgebra: basis is not independent");
	std::size_t m = basis.size();
	AlgebraSpec out(m);
	std::vector<SparseVec> sb;
	for (const auto &v : basis)
		sb.push_back(SparseVec::from_dense(v));
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j) {
			auto c = s.coords(product(alg, sb[i], sb[j]).to_dense(n));
			if (!c)
				throw VerificationError("subspace is not closed under the product");
			out.set_bil(i, j, SparseVec::from_dense(*c));
		}
	return out;
}

Closure generated_subalgebra(const AlgebraSpec &alg, const std::vector<Vec> &seeds,
                             unsigned max_depth)
{
	if (max_depth < 1)
		throw std::invalid_argument("max_depth must be at least 1");
	std::size_t n = alg.dim();
	Span s(n);
	std::vector<Vec> fresh;
	for (const auto &v : seeds)
		if (s.insert(v))
			fresh.push_back(v);
	Closure out;
	out.dims.push_back(s.dim());
	for (unsigned depth = 2; depth <= max_depth; ++depth) {
		std::vector<Vec> all = s.basis();
		std::vector<Vec> next;
		for (const auto &x : all)
			for (const auto &y : fresh) {
				Vec p = product(alg, x, y);
				if (s.insert(p))
					next.push_back(std::move(p));
				Vec q = product(alg, y, x);
				if (s.insert(q))
					next.push_back(std::move(q));
			}
		out.dims.push_back(s.dim());
		if (next.empty()) {
			out.stabilized = true;
			break;
		}
		fresh = std::move(next);
	}
	if (!out.stabilized && fresh.empty())
		out.stabilized = true;
	out.basis = s.basis();
	return out;
}

} // namespace symlie
