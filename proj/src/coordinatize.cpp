#include "symlie/coordinatize.hpp"
#include "symlie/parallel.hpp"

#include <stdexcept>

namespace symlie {

namespace {

Span span_of(const std::vector<Vec> &vs, std::size_t n)
{
	Span s(n);
	for (const auto &v : vs)
		s.insert(v);
	return s;
}

Vec coords_in(const Span &s, const Vec &v, const std::string &what)
{
	auto c = s.coords(v);
	if (!c)
		throw VerificationError(what);
	return *c;
}

Vec combine(const std::vector<Vec> &basis, std::span<const Scalar> c, std::size_t n)
{
	Vec v(n);
	for (std::size_t k = 0; k < c.size(); ++k)
		if (!c[k].is_zero())
			axpy(v, c[k], basis[k]);
	return v;
}

Vec flat3(const OpTriple &t)
{
	Vec v;
	for (const auto &m : t)
		v.insert(v.end(), m.flat().begin(), m.flat().end());
	return v;
}

OpTriple unflat3(const Vec &v, std::size_t n)
{
	OpTriple t;
	std::size_t sq = n * n;
	for (int i = 0; i < 3; ++i)
		t[i] = Matrix::from_flat(n, n, std::span<const Scalar>(v).subspan(i * sq, sq));
	return t;
}

IdentityCheck named(std::string name)
{
	IdentityCheck c;
	c.name = std::move(name);
	return c;
}

int mod3(int i) { return ((i % 3) + 3) % 3; }

// phi^r(d)_i = d_{i-r}
OpTriple rotate(const OpTriple &t, int r)
{
	OpTriple out;
	for (int i = 0; i < 3; ++i)
		out[i] = t[mod3(i - r)];
	return out;
}

OpTriple conj_swap(const Matrix &bar, const OpTriple &t)
{
	return {conj_op(bar, t[0]), conj_op(bar, t[2]), conj_op(bar, t[1])};
}

OpTriple commutator3(const OpTriple &a, const OpTriple &b)
{
	return {commutator(a[0], b[0]), commutator(a[1], b[1]), commutator(a[2], b[2])};
}

bool is_zero3(const OpTriple &t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

Matrix mult_by(const std::vector<Matrix> &ops, std::span<const Scalar> w, std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t k = 0; k < w.size(); ++k)
		if (!w[k].is_zero())
			m += w[k] * ops[k];
	return m;
}

std::string failing_names(const std::vector<IdentityCheck> &checks)
{
	std::string s;
	for (const auto &c : checks)
		if (!c.ok())
			s += (s.empty() ? "" : ", ") + c.name;
	return s;
}

} // namespace

Matrix conj_op(const Matrix &invol, const Matrix &d) { return invol * d * invol; }

Matrix NLRTA::delta_at(int i, std::span<const Scalar> x, std::span<const Scalar> y) const
{
	std::size_t n = dim();
	Matrix m(n, n);
	for (std::size_t a = 0; a < n; ++a) {
		if (x[a].is_zero())
			continue;
		for (std::size_t b = 0; b < n; ++b)
			if (!y[b].is_zero())
				m += (x[a] * y[b]) * d(i, a, b);
	}
	return m;
}

std::vector<Vec> NLRTA::iota_span(std::span<const Scalar> x) const
{
	if (iota[0].empty())
		throw std::logic_error("iota_span: no source embedding recorded");
	std::size_t N = iota[0].front().size();
	std::vector<Vec> out;
	for (int i = 0; i < 3; ++i)
		out.push_back(combine(iota[i], x, N));
	return out;
}

NLRTA extract_nlrta(const AlgebraSpec &alg, const S4Action &act)
{
	KleinGrading kg = klein_grading(alg, act);
	if (kg.g0.empty())
		throw VerificationError("V4 acts trivially, use S3 extraction");
	std::size_t N = alg.dim(), n = kg.g0.size();
	NLRTA out;
	out.iota[0] = kg.g0;
	for (const auto &u : kg.g0) {
		Vec u1 = act.phi.apply(u);
		out.iota[1].push_back(u1);
		out.iota[2].push_back(act.phi.apply(u1));
	}
	Span g1 = span_of(kg.g1, N), g2 = span_of(kg.g2, N), t = span_of(kg.t, N);
	for (std::size_t k = 0; k < n; ++k)
		if (!g1.contains(out.iota[1][k]) || !g2.contains(out.iota[2][k]))
			throw VerificationError("phi does not permute the graded components cyclically");
	std::array<Span, 3> s{span_of(out.iota[0], N), span_of(out.iota[1], N), span_of(out.iota[2], N)};

	AlgebraSpec &a = out.a = AlgebraSpec(n);
	Matrix B(n, n);
	for (std::size_t k = 0; k < n; ++k) {
		Vec v = Scalar(-1) * act.tau.apply(out.iota[0][k]);
		B.set_column(k, coords_in(s[0], v, "tau does not preserve g_0"));
	}
	a.invol = B;
	// iota_0(bar(x.y)) = [iota_1 x, iota_2 y]
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y) {
			Vec c = coords_in(s[0], product(alg, out.iota[1][x], out.iota[2][y]),
			                  "[g_1, g_2] leaves g_0");
			a.set_bil(x, y, SparseVec::from_dense(B.apply(c)));
		}
	// [[iota_0 x, iota_0 y], iota_i z] = iota_i(delta_i(x,y) z)
	out.delta.assign(n * n, OpTriple{Matrix(n, n), Matrix(n, n), Matrix(n, n)});
	auto rows = parallel_map(n, [&](std::size_t x) {
		std::vector<OpTriple> r(n, OpTriple{Matrix(n, n), Matrix(n, n), Matrix(n, n)});
		for (std::size_t y = 0; y < n; ++y) {
			if (x == y)
				continue;
			Vec d = product(alg, out.iota[0][x], out.iota[0][y]);
			if (!t.contains(d))
				throw VerificationError("[g_0, g_0] leaves t");
			for (int i = 0; i < 3; ++i)
				for (std::size_t z = 0; z < n; ++z)
					r[y][i].set_column(z, coords_in(s[i], product(alg, d, out.iota[i][z]),
					                                "[t, g_i] leaves g_i"));
		}
		return r;
	});
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			out.delta[x * n + y] = std::move(rows[x][y]);
	return out;
}

std::vector<IdentityCheck> verify_nlrta(const NLRTA &nl)
{
	const AlgebraSpec &a = nl.a;
	if (!a.invol)
		throw std::invalid_argument("verify_nlrta: algebra has no involution");
	std::size_t n = nl.dim();
	const Matrix &B = nl.bar();
	std::vector<Matrix> L(n), R(n);
	std::vector<Vec> e(n), bar(n);
	for (std::size_t k = 0; k < n; ++k) {
		e[k] = unit_vec(n, k);
		bar[k] = B.column(k);
		L[k] = left_mult(a, e[k]);
		R[k] = right_mult(a, e[k]);
	}
	auto prod = [&](const Vec &x, const Vec &y) { return product(a, x, y); };
	auto d = [&](int i, std::size_t x, std::size_t y) -> const Matrix & { return nl.d(mod3(i), x, y); };
	std::vector<IdentityCheck> out;

	IdentityCheck inv = named("involution");
	++inv.tested;
	if (!(B * B == Matrix::identity(n)))
		inv.fail({});
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y) {
			++inv.tested;
			if (!(B.apply(prod(e[x], e[y])) == prod(bar[y], bar[x])))
				inv.fail({x, y});
		}
	out.push_back(inv);

	IdentityCheck skew = named("delta_skew");
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = x; y < n; ++y)
			for (int i = 0; i < 3; ++i) {
				++skew.tested;
				if (!(d(i, x, y) + d(i, y, x)).is_zero())
					skew.fail({static_cast<std::size_t>(i), x, y});
			}
	out.push_back(skew);

	// bar(d_i) L_u - L_{d_{i+1} u} - L_u d_{i+2} = 0
	auto lrt_parts = parallel_map(n, [&](std::size_t x) {
		IdentityCheck part;
		for (std::size_t y = 0; y < n; ++y)
			for (int i = 0; i < 3; ++i) {
				Matrix cd = conj_op(B, d(i, x, y));
				for (std::size_t u = 0; u < n; ++u) {
					Matrix m = cd * L[u] - mult_by(L, d(i + 1, x, y).column(u), n) - L[u] * d(i + 2, x, y);
					++part.tested;
					if (!m.is_zero())
						part.fail({x, y, static_cast<std::size_t>(i), u});
				}
			}
		return part;
	});
	IdentityCheck in_lrt = named("delta_in_lrt");
	for (const auto &p : lrt_parts)
		in_lrt.merge(p);
	out.push_back(in_lrt);

	auto br_parts = parallel_map(n, [&](std::size_t p) {
		IdentityCheck part;
		for (std::size_t q = p + 1; q < n; ++q)
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j) {
					const Matrix &D = d(i - j, p, q);
					for (std::size_t x = 0; x < n; ++x)
						for (std::size_t y = x + 1; y < n; ++y) {
							Matrix lhs = commutator(d(i, p, q), d(j, x, y));
							Matrix rhs = nl.delta_at(mod3(j), D.column(x), e[y]) +
							             nl.delta_at(mod3(j), e[x], D.column(y));
							++part.tested;
							if (!(lhs == rhs))
								part.fail({static_cast<std::size_t>(i), static_cast<std::size_t>(j), p, q, x, y});
						}
				}
		return part;
	});
	IdentityCheck br = named("delta_bracket");
	for (const auto &p : br_parts)
		br.merge(p);
	out.push_back(br);

	IdentityCheck cp = named("delta_cyclic_product"), c0 = named("delta0_cyclic");
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z) {
				Matrix m = nl.delta_at(0, bar[x], prod(e[y], e[z])) + nl.delta_at(1, bar[y], prod(e[z], e[x])) +
				           nl.delta_at(2, bar[z], prod(e[x], e[y]));
				++cp.tested;
				if (!m.is_zero())
					cp.fail({x, y, z});
				Vec v = d(0, x, y).column(z) + d(0, y, z).column(x) + d(0, z, x).column(y);
				++c0.tested;
				if (!is_zero(v))
					c0.fail({x, y, z});
			}
	out.push_back(cp);
	out.push_back(c0);

	IdentityCheck d1 = named("delta1_left"), d2 = named("delta2_right"), dc = named("delta_conjugate");
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y) {
			Matrix Lx = L[x], Ly = L[y], Rx = R[x], Ry = R[y];
			Matrix Lbx = mult_by(L, bar[x], n), Lby = mult_by(L, bar[y], n);
			Matrix Rbx = mult_by(R, bar[x], n), Rby = mult_by(R, bar[y], n);
			++d1.tested;
			if (!(d(1, x, y) == Lby * Lx - Lbx * Ly))
				d1.fail({x, y});
			++d2.tested;
			if (!(d(2, x, y) == Rby * Rx - Rbx * Ry))
				d2.fail({x, y});
			for (int i = 0; i < 3; ++i) {
				++dc.tested;
				if (!(conj_op(B, d(i, x, y)) == nl.delta_at(mod3(-i), bar[x], bar[y])))
					dc.fail({static_cast<std::size_t>(i), x, y});
			}
		}
	out.push_back(d1);
	out.push_back(d2);
	out.push_back(dc);
	return out;
}

GOfNLRTA build_g_from_nlrta(const NLRTA &nl)
{
	auto checks = verify_nlrta(nl);
	if (!all_ok(checks))
		throw VerificationError("not a normal LRTA: " + failing_names(checks) + " fail");
	std::size_t n = nl.dim();
	const Matrix &B = nl.bar();
	GOfNLRTA g;
	g.a_dim = n;
	Span s(3 * n * n);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = x + 1; y < n; ++y)
			for (int r = 0; r < 3; ++r) {
				OpTriple t = rotate(nl.delta[x * n + y], r);
				if (s.insert(flat3(t)))
					g.inlrt.push_back(t);
			}
	std::size_t I = g.inlrt.size(), N = I + 3 * n;
	auto io = [&](int i, std::size_t x) { return g.iota_offset(mod3(i)) + x; };
	auto in_coords = [&](const OpTriple &t) { return coords_in(s, flat3(t), "inlrt is not closed"); };
	auto place = [&](SparseVec &v, const Vec &c, std::size_t offset, const Scalar &k = Scalar(1)) {
		for (std::size_t j = 0; j < c.size(); ++j)
			if (!c[j].is_zero())
				v.add_term(offset + j, k * c[j]);
	};
	AlgebraSpec &alg = g.alg = AlgebraSpec(N);
	for (std::size_t p = 0; p < I; ++p) {
		for (std::size_t q = p + 1; q < I; ++q) {
			SparseVec v;
			place(v, in_coords(commutator3(g.inlrt[p], g.inlrt[q])), 0);
			alg.set_bracket(p, q, v);
		}
		for (int i = 0; i < 3; ++i)
			for (std::size_t x = 0; x < n; ++x) {
				SparseVec v;
				place(v, g.inlrt[p][i].column(x), io(i, 0));
				alg.set_bracket(p, io(i, x), v);
			}
	}
	for (int i = 0; i < 3; ++i)
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y) {
				SparseVec v;
				place(v, B.apply(product(nl.a, unit_vec(n, x), unit_vec(n, y))), io(i + 2, 0));
				alg.set_bracket(io(i, x), io(i + 1, y), v);
				if (x < y) {
					SparseVec w;
					place(w, in_coords(rotate(nl.delta[x * n + y], i)), 0);
					alg.set_bracket(io(i, x), io(i, y), w);
				}
			}

	S4Action &act = g.action;
	act.phi = Matrix(N, N);
	act.tau = Matrix(N, N);
	act.tau1 = Matrix::identity(N);
	act.tau2 = Matrix::identity(N);
	for (std::size_t p = 0; p < I; ++p) {
		Vec ph = in_coords(rotate(g.inlrt[p], 1)), ta = in_coords(conj_swap(B, g.inlrt[p]));
		for (std::size_t q = 0; q < I; ++q) {
			act.phi(q, p) = ph[q];
			act.tau(q, p) = ta[q];
		}
	}
	for (std::size_t x = 0; x < n; ++x) {
		Vec bx = B.column(x);
		for (int i = 0; i < 3; ++i) {
			act.phi(io(i + 1, x), io(i, x)) = 1;
			// tau: iota_i -> -iota_{-i}(bar)
			for (std::size_t k = 0; k < n; ++k)
				if (!bx[k].is_zero())
					act.tau(io(-i, k), io(i, x)) = -bx[k];
		}
		act.tau1(io(1, x), io(1, x)) = -1;
		act.tau1(io(2, x), io(2, x)) = -1;
		act.tau2(io(0, x), io(0, x)) = -1;
		act.tau2(io(2, x), io(2, x)) = -1;
	}
	alg.labels.resize(N);
	for (std::size_t p = 0; p < I; ++p)
		alg.labels[p] = "inlrt" + std::to_string(p);
	for (int i = 0; i < 3; ++i)
		for (std::size_t x = 0; x < n; ++x)
			alg.labels[io(i, x)] = "iota" + std::to_string(i) + "(" +
			                       (nl.a.labels.empty() ? "e" + std::to_string(x) : nl.a.labels[x]) + ")";
	return g;
}

LRT compute_lrt(const AlgebraSpec &a)
{
	if (!a.invol)
		throw std::invalid_argument("compute_lrt: algebra has no involution");
	std::size_t n = a.dim(), sq = n * n;
	const Matrix &B = *a.invol;
	std::vector<Vec> P(sq);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			P[x * n + y] = product(a, unit_vec(n, x), unit_vec(n, y));
	auto idx = [&](int i, std::size_t r, std::size_t c) { return static_cast<std::size_t>(mod3(i)) * sq + r * n + c; };

	// bar(d_i)(xy) - d_{i+1}(x)y - x d_{i+2}(y) = 0
	auto blocks = parallel_map(n, [&](std::size_t x) {
		std::vector<SparseVec> eqs;
		for (int i = 0; i < 3; ++i)
			for (std::size_t y = 0; y < n; ++y) {
				Vec w = B.apply(P[x * n + y]);
				std::vector<SparseVec> rows(n);
				for (std::size_t l = 0; l < n; ++l) {
					for (std::size_t r = 0; r < n; ++r) {
						if (B(l, r).is_zero())
							continue;
						for (std::size_t c = 0; c < n; ++c)
							if (!w[c].is_zero())
								rows[l].add_term(idx(i, r, c), B(l, r) * w[c]);
					}
					for (std::size_t r = 0; r < n; ++r) {
						const Scalar &p1 = P[r * n + y][l];
						if (!p1.is_zero())
							rows[l].add_term(idx(i + 1, r, x), -p1);
						const Scalar &p2 = P[x * n + r][l];
						if (!p2.is_zero())
							rows[l].add_term(idx(i + 2, r, y), -p2);
					}
				}
				for (auto &row : rows)
					if (!row.empty())
						eqs.push_back(std::move(row));
			}
		return eqs;
	});
	LinearSystem sys(3 * sq);
	for (const auto &blk : blocks)
		for (const auto &row : blk)
			sys.add_equation(row);
	auto sol = sys.solve();

	LRT out;
	std::size_t D = sol.dim();
	Span s(3 * sq);
	for (const auto &v : sol.basis) {
		s.insert(v);
		out.basis.push_back(unflat3(v, n));
	}
	auto coords = [&](const OpTriple &t) {
		auto c = s.coords(flat3(t));
		if (!c)
			throw std::logic_error("lrt is not closed");
		return *c;
	};
	out.action.phi = Matrix(D, D);
	out.action.tau = Matrix(D, D);
	out.alg = AlgebraSpec(D);
	for (std::size_t p = 0; p < D; ++p) {
		out.action.phi.set_column(p, coords(rotate(out.basis[p], 1)));
		out.action.tau.set_column(p, coords(conj_swap(B, out.basis[p])));
	}
	auto brackets = parallel_map(D, [&](std::size_t p) {
		std::vector<SparseVec> r;
		for (std::size_t q = p + 1; q < D; ++q)
			r.push_back(SparseVec::from_dense(coords(commutator3(out.basis[p], out.basis[q]))));
		return r;
	});
	for (std::size_t p = 0; p < D; ++p)
		for (std::size_t q = p + 1; q < D; ++q)
			out.alg.set_bracket(p, q, brackets[p][q - p - 1]);
	return out;
}

LRTParts lrt_isotypic(const AlgebraSpec &a)
{
	LRT l = compute_lrt(a);
	std::size_t n = a.dim();
	const Matrix &B = *a.invol;
	LRTParts out;
	out.lrt_dim = l.basis.size();
	std::vector<Matrix> ders, sders;
	Span w(3 * n * n);
	Scalar sixth = Scalar::rational(1, 6), third = Scalar::rational(1, 3);
	for (const auto &t : l.basis) {
		Matrix sum = t[0] + t[1] + t[2];
		Matrix csum = conj_op(B, sum);
		ders.push_back(sixth * (sum + csum));
		sders.push_back(sixth * (sum - csum));
		OpTriple f;
		for (int i = 0; i < 3; ++i)
			f[i] = third * (Scalar(2) * t[i] - t[mod3(i + 1)] - t[mod3(i + 2)]);
		if (!is_zero3(f) && w.insert(flat3(f)))
			out.w.push_back(f);
	}
	out.der = operator_span(ders);
	out.sder = operator_span(sders);
	if (out.der.size() + out.sder.size() + out.w.size() != out.lrt_dim)
		throw std::logic_error("lrt isotypic parts do not add up");
	return out;
}

GMAlgebra extract_gm_from_s3(const AlgebraSpec &alg, const S3Action &act,
                             const std::optional<std::vector<Vec>> &basis)
{
	std::size_t N = alg.dim();
	Scalar w = Scalar::omega();
	Matrix shifted = act.phi - w * Matrix::identity(N);
	std::vector<Vec> eig = kernel(shifted);
	std::vector<Vec> mb = eig;
	if (basis) {
		mb = *basis;
		if (mb.size() != eig.size() || !same_span(mb, eig, N))
			throw std::invalid_argument("extract_gm_from_s3: basis does not span the omega-eigenspace");
	}
	if (mb.empty())
		throw VerificationError("phi acts trivially: the omega-eigenspace is zero");
	std::size_t n = mb.size();
	Span sm = span_of(mb, N);
	std::vector<Vec> tm(n);
	for (std::size_t i = 0; i < n; ++i)
		tm[i] = act.tau.apply(mb[i]);

	GMAlgebra m(n);
	m.ensure_tri();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			m.set_bracket(i, j, SparseVec::from_dense(coords_in(sm, product(alg, tm[i], tm[j]),
			                                                      "[tau x, tau y] leaves the omega-eigenspace")));
	auto rows = parallel_map(n, [&](std::size_t i) {
		std::vector<SparseVec> r(n * n);
		for (std::size_t j = 0; j < n; ++j) {
			Vec dvec = product(alg, mb[i], tm[j]);
			if (!(act.phi.apply(dvec) == dvec))
				throw VerificationError("[x, tau y] is not fixed by phi");
			for (std::size_t k = 0; k < n; ++k)
				r[j * n + k] = SparseVec::from_dense(
				    coords_in(sm, product(alg, dvec, mb[k]), "[[x, tau y], z] leaves the omega-eigenspace"));
		}
		return r;
	});
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				m.set_tri(i, j, k, rows[i][j * n + k]);
	GMReport rep = check_gm_axioms(m);
	if (!rep.ok())
		throw VerificationError("extracted structure fails the generalized Malcev axioms");
	return m;
}

} // namespace symlie
