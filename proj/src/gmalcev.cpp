#include "symlie/gmalcev.hpp"
#include "symlie/parallel.hpp"

#include <stdexcept>

namespace symlie {

namespace {

// {u, e_j, e_k} for sparse u
void add_tri_first(Accumulator &acc, const GMAlgebra &m, const Scalar &c, const SparseVec &u,
                   std::size_t j, std::size_t k)
{
	for (const auto &[i, a] : u)
		acc.add_scaled(c * a, m.tri(i, j, k));
}

void add_tri_second(Accumulator &acc, const GMAlgebra &m, const Scalar &c, std::size_t i,
                    const SparseVec &u, std::size_t k)
{
	for (const auto &[j, a] : u)
		acc.add_scaled(c * a, m.tri(i, j, k));
}

void add_tri_third(Accumulator &acc, const GMAlgebra &m, const Scalar &c, std::size_t i,
                   std::size_t j, const SparseVec &u)
{
	for (const auto &[k, a] : u)
		acc.add_scaled(c * a, m.tri(i, j, k));
}

// u e_j and e_i u
void add_prod_right(Accumulator &acc, const GMAlgebra &m, const Scalar &c, const SparseVec &u,
                    std::size_t j)
{
	for (const auto &[i, a] : u)
		acc.add_scaled(c * a, m.bil(i, j));
}

void add_prod_left(Accumulator &acc, const GMAlgebra &m, const Scalar &c, std::size_t i,
                   const SparseVec &u)
{
	for (const auto &[j, a] : u)
		acc.add_scaled(c * a, m.bil(i, j));
}

const Scalar one(1), minus_one(-1);

IdentityCheck gather(std::string name, const std::vector<IdentityCheck> &parts)
{
	IdentityCheck out;
	out.name = std::move(name);
	for (const auto &p : parts)
		out.merge(p);
	return out;
}

std::string describe_failures(const GMReport &r)
{
	std::string s;
	if (!r.not_anticommutative.empty())
		s = "binary product is not anticommutative";
	for (const auto &c : r.identities)
		if (!c.ok())
			s += (s.empty() ? "" : ", ") + c.name + " fails";
	return s;
}

} // namespace

const IdentityCheck &GMReport::identity(const std::string &name) const
{
	for (const auto &c : identities)
		if (c.name == name)
			return c;
	throw std::out_of_range("no identity named " + name);
}

GMReport check_gm_axioms(const GMAlgebra &m)
{
	std::size_t n = m.dim();
	GMReport rep;
	rep.not_anticommutative = check_anticommutative(m);

	// (xy)z - {x,z,y} + {y,z,x}
	auto a = parallel_map(n, [&](std::size_t x) {
		IdentityCheck part;
		Accumulator acc(n);
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z) {
				add_prod_right(acc, m, one, m.bil(x, y), z);
				acc.add_scaled(minus_one, m.tri(x, z, y));
				acc.add_scaled(one, m.tri(y, z, x));
				++part.tested;
				if (!acc.take().empty())
					part.fail({x, y, z});
			}
		return part;
	});
	rep.identities.push_back(gather("binary_triple", a));

	// {a,b,xy} + {b,a,x}y + x{b,a,y}
	auto b = parallel_map(n, [&](std::size_t a_) {
		IdentityCheck part;
		Accumulator acc(n);
		for (std::size_t b_ = 0; b_ < n; ++b_)
			for (std::size_t x = 0; x < n; ++x)
				for (std::size_t y = 0; y < n; ++y) {
					add_tri_third(acc, m, one, a_, b_, m.bil(x, y));
					add_prod_right(acc, m, one, m.tri(b_, a_, x), y);
					add_prod_left(acc, m, one, x, m.tri(b_, a_, y));
					++part.tested;
					if (!acc.take().empty())
						part.fail({a_, b_, x, y});
				}
		return part;
	});
	rep.identities.push_back(gather("triple_on_product", b));

	// {a,b,{x,y,z}} - {x,y,{a,b,z}} - {{a,b,x},y,z} + {x,{b,a,y},z}
	auto c = parallel_map(n, [&](std::size_t a_) {
		IdentityCheck part;
		Accumulator acc(n);
		for (std::size_t b_ = 0; b_ < n; ++b_)
			for (std::size_t x = 0; x < n; ++x) {
				const SparseVec &abx = m.tri(a_, b_, x);
				for (std::size_t y = 0; y < n; ++y) {
					const SparseVec &bay = m.tri(b_, a_, y);
					for (std::size_t z = 0; z < n; ++z) {
						add_tri_third(acc, m, one, a_, b_, m.tri(x, y, z));
						add_tri_third(acc, m, minus_one, x, y, m.tri(a_, b_, z));
						add_tri_first(acc, m, minus_one, abx, y, z);
						add_tri_second(acc, m, one, x, bay, z);
						++part.tested;
						if (!acc.take().empty())
							part.fail({a_, b_, x, y, z});
					}
				}
			}
		return part;
	});
	rep.identities.push_back(gather("triple_derivation", c));

	// {xy,z,t} + {yz,x,t} + {zx,y,t}
	auto d1 = parallel_map(n, [&](std::size_t x) {
		IdentityCheck part;
		Accumulator acc(n);
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z)
				for (std::size_t t = 0; t < n; ++t) {
					add_tri_first(acc, m, one, m.bil(x, y), z, t);
					add_tri_first(acc, m, one, m.bil(y, z), x, t);
					add_tri_first(acc, m, one, m.bil(z, x), y, t);
					++part.tested;
					if (!acc.take().empty())
						part.fail({x, y, z, t});
				}
		return part;
	});
	rep.identities.push_back(gather("cyclic_first", d1));

	// {x,yz,t} + {y,zx,t} + {z,xy,t}
	auto d2 = parallel_map(n, [&](std::size_t x) {
		IdentityCheck part;
		Accumulator acc(n);
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z)
				for (std::size_t t = 0; t < n; ++t) {
					add_tri_second(acc, m, one, x, m.bil(y, z), t);
					add_tri_second(acc, m, one, y, m.bil(z, x), t);
					add_tri_second(acc, m, one, z, m.bil(x, y), t);
					++part.tested;
					if (!acc.take().empty())
						part.fail({x, y, z, t});
				}
		return part;
	});
	rep.identities.push_back(gather("cyclic_second", d2));
	return rep;
}

RedundancyReport check_redundancy(const GMAlgebra &m)
{
	std::size_t n = m.dim();
	GMReport r = check_gm_axioms(m);
	RedundancyReport out;
	for (const char *h : {"binary_triple", "triple_on_product", "triple_derivation"})
		if (!r.identity(h).ok())
			out.failed_hypotheses.push_back(h);
	if (!r.not_anticommutative.empty())
		out.failed_hypotheses.push_back("anticommutativity");
	out.first_cyclic_holds = r.identity("cyclic_first").ok();
	out.second_cyclic_holds = r.identity("cyclic_second").ok();

	std::vector<Vec> squares;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (!m.bil(i, j).empty())
				squares.push_back(m.bil(i, j).to_dense(n));
	auto sq = independent_subset(squares, n);
	out.square_is_whole = sq.size() == n;
	// x (M^2) = 0, one equation per basis vector of M^2 and component
	LinearSystem sys(n);
	for (const auto &p : sq) {
		SparseVec sp = SparseVec::from_dense(p);
		std::vector<SparseVec> rows(n);
		for (std::size_t i = 0; i < n; ++i)
			for (const auto &[l, c] : product(m, SparseVec::unit(i), sp))
				rows[l].add_term(i, c);
		for (const auto &row : rows)
			if (!row.empty())
				sys.add_equation(row);
	}
	out.annihilator_trivial = sys.solve().dim() == 0;
	return out;
}

Matrix d_plus(const GMAlgebra &m, std::span<const Scalar> x, std::span<const Scalar> y)
{
	Matrix r = triple_op(m, x, y) - triple_op(m, y, x);
	return Scalar::rational(1, 2) * r;
}

Matrix d_minus(const GMAlgebra &m, std::span<const Scalar> x, std::span<const Scalar> y)
{
	Matrix r = triple_op(m, x, y) + triple_op(m, y, x);
	return Scalar::rational(1, 2) * r;
}

DPlusDMinus d_spaces(const GMAlgebra &m)
{
	std::size_t n = m.dim();
	std::vector<Matrix> ops(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			ops[i * n + j] = triple_op(m, i, j);
	std::vector<Matrix> plus, minus;
	Scalar half = Scalar::rational(1, 2);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			if (i < j)
				plus.push_back(half * (ops[i * n + j] - ops[j * n + i]));
			if (i <= j)
				minus.push_back(half * (ops[i * n + j] + ops[j * n + i]));
		}
	return {operator_span(plus), operator_span(minus)};
}

namespace {

Span span_of(const std::vector<Matrix> &ops, std::size_t n)
{
	Span s(n * n);
	for (const auto &o : ops)
		s.insert(o.flat());
	return s;
}

Vec coords_or_throw(const Span &s, const Matrix &op, const char *what)
{
	auto c = s.coords(op.flat());
	if (!c)
		throw VerificationError(std::string("operator does not lie in ") + what);
	return *c;
}

void place(SparseVec &out, const Vec &v, std::size_t offset, const Scalar &c = Scalar(1))
{
	for (std::size_t k = 0; k < v.size(); ++k)
		if (!v[k].is_zero())
			out.add_term(offset + k, c * v[k]);
}

} // namespace

GOfM build_g_of_M(const GMAlgebra &m)
{
	GMReport rep = check_gm_axioms(m);
	if (!rep.ok())
		throw VerificationError("not a generalized Malcev algebra: " + describe_failures(rep));
	std::size_t n = m.dim();
	GOfM g;
	g.m = n;
	g.d = d_spaces(m);
	const auto &dp = g.d.dplus;
	const auto &dm = g.d.dminus;
	std::size_t P = dp.size(), Q = dm.size();
	std::size_t N = P + Q + 2 * n;
	std::size_t o_minus = P, o0 = P + Q, o1 = P + Q + n;
	Span sp = span_of(dp, n), sm = span_of(dm, n);
	AlgebraSpec &alg = g.alg = AlgebraSpec(N);

	auto bracket_dd = [&](const Matrix &a, const Matrix &b, bool to_plus) {
		SparseVec v;
		Matrix c = commutator(a, b);
		if (to_plus)
			place(v, coords_or_throw(sp, c, "d+"), 0);
		else
			place(v, coords_or_throw(sm, c, "d-"), o_minus);
		return v;
	};
	for (std::size_t i = 0; i < P; ++i)
		for (std::size_t j = i + 1; j < P; ++j)
			alg.set_bracket(i, j, bracket_dd(dp[i], dp[j], true));
	for (std::size_t i = 0; i < Q; ++i)
		for (std::size_t j = i + 1; j < Q; ++j)
			alg.set_bracket(o_minus + i, o_minus + j, bracket_dd(dm[i], dm[j], true));
	for (std::size_t i = 0; i < P; ++i)
		for (std::size_t j = 0; j < Q; ++j)
			alg.set_bracket(i, o_minus + j, bracket_dd(dp[i], dm[j], false));

	// [d, nu_k(e_l)]
	for (std::size_t i = 0; i < P + Q; ++i) {
		const Matrix &d = i < P ? dp[i] : dm[i - P];
		for (std::size_t l = 0; l < n; ++l) {
			Vec col = d.column(l);
			SparseVec v0, v1;
			place(v0, col, o0);
			place(v1, col, o1, i < P ? Scalar(1) : Scalar(-1));
			alg.set_bracket(i, o0 + l, v0);
			alg.set_bracket(i, o1 + l, v1);
		}
	}
	// [nu_k(e_i), nu_k(e_j)] = nu_{1-k}(e_i e_j), [nu_0(e_i), nu_1(e_j)] = d+ + d-
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			if (i < j) {
				SparseVec p0, p1;
				for (const auto &[k, c] : m.bil(i, j)) {
					p0.add_term(o1 + k, c);
					p1.add_term(o0 + k, c);
				}
				alg.set_bracket(o0 + i, o0 + j, p0);
				alg.set_bracket(o1 + i, o1 + j, p1);
			}
			Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
			SparseVec v;
			place(v, coords_or_throw(sp, d_plus(m, ei, ej), "d+"), 0);
			place(v, coords_or_throw(sm, d_minus(m, ei, ej), "d-"), o_minus);
			alg.set_bracket(o0 + i, o1 + j, v);
		}

	Scalar w = Scalar::omega();
	g.action.phi = Matrix::identity(N);
	g.action.tau = Matrix(N, N);
	for (std::size_t i = 0; i < P; ++i)
		g.action.tau(i, i) = 1;
	for (std::size_t i = 0; i < Q; ++i)
		g.action.tau(o_minus + i, o_minus + i) = -1;
	for (std::size_t i = 0; i < n; ++i) {
		g.action.phi(o0 + i, o0 + i) = w;
		g.action.phi(o1 + i, o1 + i) = w * w;
		g.action.tau(o1 + i, o0 + i) = 1;
		g.action.tau(o0 + i, o1 + i) = 1;
	}

	alg.labels.resize(N);
	auto lab = [&](std::size_t i) { return m.labels.empty() ? "e" + std::to_string(i) : m.labels[i]; };
	for (std::size_t i = 0; i < P; ++i)
		alg.labels[i] = "d+" + std::to_string(i);
	for (std::size_t i = 0; i < Q; ++i)
		alg.labels[o_minus + i] = "d-" + std::to_string(i);
	for (std::size_t i = 0; i < n; ++i) {
		alg.labels[o0 + i] = "nu0(" + lab(i) + ")";
		alg.labels[o1 + i] = "nu1(" + lab(i) + ")";
	}
	return g;
}

// Malcev algebras

IdentityCheck check_malcev(const AlgebraSpec &alg)
{
	std::size_t n = alg.dim();
	IdentityCheck out;
	out.name = "sagle";
	if (!check_anticommutative(alg).empty()) {
		out.fail({});
		return out;
	}
	auto J = jacobian_table(alg);
	bool lie = true;
	for (const auto &v : J)
		if (!v.empty()) {
			lie = false;
			break;
		}
	auto jac = [&](std::size_t a, std::size_t b, std::size_t c) -> const SparseVec & {
		return J[(a * n + b) * n + c];
	};
	if (lie) {
		out.tested = n * (n + 1) / 2 * n * n;
		return out;
	}
	// J(x1,y,x2 z) + J(x2,y,x1 z) = J(x1,y,z) x2 + J(x2,y,z) x1
	auto parts = parallel_map(n, [&](std::size_t x1) {
		IdentityCheck part;
		Accumulator acc(n);
		for (std::size_t x2 = x1; x2 < n; ++x2)
			for (std::size_t y = 0; y < n; ++y)
				for (std::size_t z = 0; z < n; ++z) {
					for (const auto &[k, c] : alg.bil(x2, z))
						acc.add_scaled(c, jac(x1, y, k));
					for (const auto &[k, c] : alg.bil(x1, z))
						acc.add_scaled(c, jac(x2, y, k));
					for (const auto &[k, c] : jac(x1, y, z))
						acc.add_scaled(-c, alg.bil(k, x2));
					for (const auto &[k, c] : jac(x2, y, z))
						acc.add_scaled(-c, alg.bil(k, x1));
					++part.tested;
					if (!acc.take().empty())
						part.fail({x1, x2, y, z});
				}
		return part;
	});
	for (const auto &p : parts)
		out.merge(p);
	return out;
}

GMAlgebra triple_from_binary(const AlgebraSpec &alg)
{
	std::size_t n = alg.dim();
	GMAlgebra m(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			m.set_bil(i, j, alg.bil(i, j));
	m.ensure_tri();
	m.labels = alg.labels;
	Scalar half = Scalar::rational(1, 2);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				Accumulator acc(n);
				add_prod_right(acc, alg, half, alg.bil(i, j), k);
				add_prod_left(acc, alg, half, i, alg.bil(j, k));
				add_prod_left(acc, alg, -half, j, alg.bil(i, k));
				m.set_tri(i, j, k, acc.take());
			}
	return m;
}

GMAlgebra malcev_to_gm(const AlgebraSpec &alg)
{
	if (!check_malcev(alg).ok())
		throw VerificationError("malcev_to_gm: input is not a Malcev algebra");
	return triple_from_binary(alg);
}

AlgebraSpec gm_to_malcev(const GMAlgebra &m)
{
	std::size_t n = m.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				SparseVec s = m.tri(i, j, k);
				s.add_scaled(Scalar(1), m.tri(j, i, k));
				if (!s.empty())
					throw std::invalid_argument("triple product is not skew in its first two arguments at basis pair (" +
					                            std::to_string(i) + ", " + std::to_string(j) + ")");
			}
	GMReport rep = check_gm_axioms(m);
	if (!rep.ok())
		throw VerificationError("not a generalized Malcev algebra: " + describe_failures(rep));
	AlgebraSpec out(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			out.set_bil(i, j, m.bil(i, j));
	out.labels = m.labels;
	if (!check_malcev(out).ok())
		throw std::logic_error("gm_to_malcev: binary part is not Malcev");
	GMAlgebra back = triple_from_binary(out);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (!(back.tri(i, j, k) == m.tri(i, j, k)))
					throw std::logic_error("gm_to_malcev: triple differs from the binary formula");
	return out;
}

// TKK

namespace {

Vec pair_flat(const Matrix &a, const Matrix &b)
{
	Vec v = a.flat();
	v.insert(v.end(), b.flat().begin(), b.flat().end());
	return v;
}

IdentityCheck check_linear_hom(const AlgebraSpec &src, const AlgebraSpec &dst, const Matrix &f,
                               const std::string &name)
{
	std::size_t n = src.dim();
	std::vector<SparseVec> img(n);
	for (std::size_t i = 0; i < n; ++i)
		img[i] = SparseVec::from_dense(f.column(i));
	IdentityCheck out;
	out.name = name;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			Accumulator acc(dst.dim());
			for (const auto &[k, c] : src.bil(i, j))
				acc.add_scaled(c, img[k]);
			++out.tested;
			if (!(acc.take() == product(dst, img[i], img[j])))
				out.fail({i, j});
		}
	return out;
}

} // namespace

TKK tkk(const GMAlgebra &t)
{
	if (!t.bil_is_zero())
		throw std::invalid_argument("tkk: binary product must vanish");
	GOfM g = build_g_of_M(t);
	std::size_t n = t.dim();
	TKK out;
	out.t_dim = n;
	std::vector<Matrix> ops(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			ops[i * n + j] = triple_op(t, i, j);
	Span s(2 * n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Matrix d2 = Scalar(-1) * ops[j * n + i];
			if (s.insert(pair_flat(ops[i * n + j], d2)))
				out.s_basis.emplace_back(ops[i * n + j], d2);
		}
	std::size_t S = out.s_basis.size();
	std::size_t N = 2 * n + S;
	std::size_t os = n, oh = n + S;
	AlgebraSpec &k = out.alg = AlgebraSpec(N);
	auto s_coords = [&](const Matrix &a, const Matrix &b) {
		auto c = s.coords(pair_flat(a, b));
		if (!c)
			throw VerificationError("tkk: s(T) is not closed");
		return *c;
	};
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			SparseVec v;
			place(v, s_coords(ops[i * n + j], Scalar(-1) * ops[j * n + i]), os);
			k.set_bracket(i, oh + j, v);
		}
	for (std::size_t a = 0; a < S; ++a) {
		for (std::size_t b = a + 1; b < S; ++b) {
			SparseVec v;
			place(v, s_coords(commutator(out.s_basis[a].first, out.s_basis[b].first),
			                  commutator(out.s_basis[a].second, out.s_basis[b].second)),
			      os);
			k.set_bracket(os + a, os + b, v);
		}
		for (std::size_t j = 0; j < n; ++j) {
			SparseVec v1, v2;
			place(v1, out.s_basis[a].first.column(j), 0);
			place(v2, out.s_basis[a].second.column(j), oh);
			k.set_bracket(os + a, j, v1);
			k.set_bracket(os + a, oh + j, v2);
		}
	}
	k.labels.resize(N);
	for (std::size_t i = 0; i < n; ++i) {
		std::string l = t.labels.empty() ? "e" + std::to_string(i) : t.labels[i];
		k.labels[i] = l;
		k.labels[oh + i] = "hat(" + l + ")";
	}
	for (std::size_t a = 0; a < S; ++a)
		k.labels[os + a] = "s" + std::to_string(a);

	// g(T) -> K(T)
	std::size_t G = g.alg.dim();
	out.iso = Matrix(N, G);
	std::size_t P = g.d.dplus.size();
	for (std::size_t a = 0; a < P; ++a) {
		const Matrix &d = g.d.dplus[a];
		SparseVec v;
		place(v, s_coords(d, d), os);
		out.iso.set_column(a, v.to_dense(N));
	}
	for (std::size_t a = 0; a < g.d.dminus.size(); ++a) {
		const Matrix &d = g.d.dminus[a];
		SparseVec v;
		place(v, s_coords(d, Scalar(-1) * d), os);
		out.iso.set_column(P + a, v.to_dense(N));
	}
	for (std::size_t i = 0; i < n; ++i) {
		out.iso(i, g.nu_offset(0) + i) = 1;
		out.iso(oh + i, g.nu_offset(1) + i) = 1;
	}
	out.iso_bijective = G == N && rank([&] {
		                     std::vector<Vec> cols;
		                     for (std::size_t j = 0; j < G; ++j)
			                     cols.push_back(out.iso.column(j));
		                     return cols;
	                     }(), N) == N;
	out.iso_homomorphism = check_linear_hom(g.alg, k, out.iso, "tkk_isomorphism");
	return out;
}

// Lie-Yamaguti

LieYamaguti lie_yamaguti_reduce(const GMAlgebra &m)
{
	GOfM g = build_g_of_M(m);
	std::size_t n = m.dim();
	LieYamaguti out;
	out.reduced = AlgebraSpec(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			out.reduced.set_bil(i, j, m.bil(i, j));
	out.reduced.ensure_tri();
	out.reduced.labels = m.labels;
	std::vector<Matrix> ops(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			ops[i * n + j] = triple_op(m, i, j);
	std::vector<Matrix> brackets;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Matrix b = ops[i * n + j] - ops[j * n + i];
			for (std::size_t k = 0; k < n; ++k)
				out.reduced.set_tri(i, j, k, SparseVec::from_dense(b.column(k)));
			if (i < j)
				brackets.push_back(b);
		}
	out.inner = operator_span(brackets);
	std::size_t D = out.inner.size();
	Span s = span_of(out.inner, n);
	AlgebraSpec &e = out.enveloping = AlgebraSpec(D + n);
	for (std::size_t a = 0; a < D; ++a) {
		for (std::size_t b = a + 1; b < D; ++b) {
			SparseVec v;
			place(v, coords_or_throw(s, commutator(out.inner[a], out.inner[b]), "[M,M,.]"), 0);
			e.set_bracket(a, b, v);
		}
		for (std::size_t j = 0; j < n; ++j) {
			SparseVec v;
			place(v, out.inner[a].column(j), D);
			e.set_bracket(a, D + j, v);
		}
	}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			SparseVec v;
			place(v, coords_or_throw(s, ops[i * n + j] - ops[j * n + i], "[M,M,.]"), 0);
			for (const auto &[k, c] : m.bil(i, j))
				v.add_term(D + k, c);
			e.set_bracket(D + i, D + j, v);
		}
	out.jacobi = check_jacobi(e);

	std::size_t G = g.alg.dim();
	Span sp = span_of(g.d.dplus, n);
	out.embedding = Matrix(G, D + n);
	for (std::size_t a = 0; a < D; ++a) {
		SparseVec v;
		place(v, coords_or_throw(sp, out.inner[a], "d+"), g.dplus_offset());
		out.embedding.set_column(a, v.to_dense(G));
	}
	for (std::size_t i = 0; i < n; ++i) {
		out.embedding(g.nu_offset(0) + i, D + i) = 1;
		out.embedding(g.nu_offset(1) + i, D + i) = 1;
	}
	std::vector<Vec> image;
	for (std::size_t j = 0; j < D + n; ++j)
		image.push_back(out.embedding.column(j));
	auto fixed = kernel(g.action.tau - Matrix::identity(G));
	out.matches_tau_fixed = rank(image, G) == D + n && same_span(image, fixed, G);
	out.embedding_homomorphism = check_linear_hom(e, g.alg, out.embedding, "enveloping_embedding");
	return out;
}

} // namespace symlie
