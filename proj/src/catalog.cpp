#include "symlie/catalog.hpp"
#include "symlie/parallel.hpp"

#include <stdexcept>

namespace symlie {

namespace {

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }

Vec e_(std::size_t n, std::size_t i) { return unit_vec(n, i); }

Scalar bform(const Matrix &f, std::span<const Scalar> x, std::span<const Scalar> y)
{
	Scalar s;
	Vec fy = f.apply(y);
	for (std::size_t i = 0; i < x.size(); ++i)
		if (!x[i].is_zero())
			s += x[i] * fy[i];
	return s;
}

Matrix outer(std::span<const Scalar> v, std::span<const Scalar> w)
{
	Matrix m(v.size(), w.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		for (std::size_t j = 0; j < w.size(); ++j)
			m(i, j) = v[i] * w[j];
	return m;
}

Matrix perm_matrix(const Perm &p, std::size_t n)
{
	Matrix m = Matrix::identity(n);
	for (std::size_t i = 0; i < p.size(); ++i) {
		m(i, i) = 0;
	}
	for (std::size_t i = 0; i < p.size(); ++i)
		m(static_cast<std::size_t>(p[i]), i) = 1;
	return m;
}

Span flat_span(const std::vector<Matrix> &ops)
{
	Span s(ops.empty() ? 0 : ops.front().flat().size());
	for (const auto &o : ops)
		s.insert(o.flat());
	return s;
}

// matrix of f -> g f g^{-1} on span(ops)
Matrix conjugation_action(const std::vector<Matrix> &ops, const Span &s, const Matrix &g)
{
	Matrix gi = inverse(g);
	Matrix out(ops.size(), ops.size());
	for (std::size_t k = 0; k < ops.size(); ++k) {
		auto c = s.coords((g * ops[k] * gi).flat());
		if (!c)
			throw std::logic_error("conjugation leaves the operator span");
		out.set_column(k, *c);
	}
	return out;
}

Vec op_coords(const Span &s, const Matrix &m, const char *what)
{
	auto c = s.coords(m.flat());
	if (!c)
		throw std::logic_error(std::string(what) + ": operator outside the span");
	return *c;
}

Vec flat3(const OpTriple &t)
{
	Vec v;
	for (const auto &m : t)
		v.insert(v.end(), m.flat().begin(), m.flat().end());
	return v;
}

int mod3(int i) { return ((i % 3) + 3) % 3; }

OpTriple rotate(const OpTriple &t, int r)
{
	OpTriple out;
	for (int i = 0; i < 3; ++i)
		out[i] = t[mod3(i - r)];
	return out;
}

void place(SparseVec &v, const Vec &c, std::size_t offset, const Scalar &k = Scalar(1))
{
	for (std::size_t j = 0; j < c.size(); ++j)
		if (!c[j].is_zero())
			v.add_term(offset + j, k * c[j]);
}

// w_omega = (omega^2, omega, 1) and w_omega^2 = (omega, omega^2, 1) in k^n
Vec w_omega(std::size_t n)
{
	Scalar w = Scalar::omega();
	Vec v(n);
	v[0] = w * w;
	v[1] = w;
	v[2] = 1;
	return v;
}

Vec w_omega2(std::size_t n)
{
	Scalar w = Scalar::omega();
	Vec v(n);
	v[0] = w;
	v[1] = w * w;
	v[2] = 1;
	return v;
}

IdentityCheck named(std::string name)
{
	IdentityCheck c;
	c.name = std::move(name);
	return c;
}

} // namespace

WConstants model_w_constants()
{
	WConstants c;
	c.bullet = AlgebraSpec(2);
	c.bullet.set_bil(0, 0, SparseVec::unit(0));
	c.bullet.set_bil(0, 1, SparseVec::unit(1, -1));
	c.bullet.set_bil(1, 0, SparseVec::unit(1, -1));
	c.bullet.set_bil(1, 1, SparseVec::unit(0, -3));
	c.bullet.labels = {"w+", "w-"};
	c.sym = Matrix(2, 2);
	c.sym(0, 0) = 2;
	c.sym(1, 1) = 6;
	c.alt = Matrix(2, 2);
	c.alt(1, 0) = 1;
	c.alt(0, 1) = -1;
	c.uprime_uprime = -12;
	c.uprime_w = Matrix(2, 2);
	c.uprime_w(1, 0) = 2;
	c.uprime_w(0, 1) = -6;
	return c;
}

// (a,b)(c,d) = (ac + d^- b, da + b c^-), bar(a,b) = (a^-, -b), n(a,b) = n(a) - n(b)
AlgebraSpec hurwitz(int d)
{
	if (d != 1 && d != 2 && d != 4 && d != 8)
		throw std::invalid_argument("hurwitz: dimension must be 1, 2, 4 or 8");
	AlgebraSpec a(1);
	a.set_bil(0, 0, SparseVec::unit(0));
	a.invol = Matrix::identity(1);
	Matrix f(1, 1);
	f(0, 0) = 2;
	a.form = f;
	while (static_cast<int>(a.dim()) < d) {
		std::size_t n = a.dim();
		const Matrix &B = *a.invol;
		AlgebraSpec b(2 * n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				Vec ei = e_(n, i), ej = e_(n, j);
				b.set_bil(i, j, SparseVec::from_dense(product(a, ei, ej)));
				SparseVec v1, v2, v3;
				place(v1, product(a, ej, ei), n);
				b.set_bil(i, n + j, v1);
				place(v2, product(a, ei, B.apply(ej)), n);
				b.set_bil(n + i, j, v2);
				place(v3, product(a, B.apply(ej), ei), 0);
				b.set_bil(n + i, n + j, v3);
			}
		Matrix inv(2 * n, 2 * n), form(2 * n, 2 * n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				inv(i, j) = B(i, j);
				inv(n + i, n + j) = i == j ? Scalar(-1) : Scalar();
				form(i, j) = (*a.form)(i, j);
				form(n + i, n + j) = -(*a.form)(i, j);
			}
		b.invol = inv;
		b.form = form;
		a = std::move(b);
	}
	a.labels.resize(a.dim());
	for (std::size_t i = 0; i < a.dim(); ++i)
		a.labels[i] = i == 0 ? "1" : "u" + std::to_string(i);
	return a;
}

AlgebraSpec split_octonions() { return hurwitz(8); }

AlgebraSpec para_hurwitz(int d)
{
	AlgebraSpec h = hurwitz(d);
	std::size_t n = h.dim();
	const Matrix &B = *h.invol;
	AlgebraSpec s(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			s.set_bil(i, j, SparseVec::from_dense(product(h, B.column(i), B.column(j))));
	s.form = h.form;
	s.labels = h.labels;
	return s;
}

AlgebraSpec para_k()
{
	AlgebraSpec k(2);
	k.set_bil(0, 0, SparseVec::unit(0));
	k.set_bil(0, 1, SparseVec::unit(1, -1));
	k.set_bil(1, 0, SparseVec::unit(1, -1));
	k.set_bil(1, 1, SparseVec::unit(0, -3));
	Matrix f(2, 2);
	f(0, 0) = 2;
	f(1, 1) = 6;
	k.form = f;
	k.labels = {"e", "z"};
	return k;
}

S3Action k_action()
{
	S3Action a{Matrix(2, 2), Matrix(2, 2)};
	a.phi(0, 0) = q(-1, 2);
	a.phi(1, 0) = q(1, 2);
	a.phi(0, 1) = q(-3, 2);
	a.phi(1, 1) = q(-1, 2);
	a.tau(0, 0) = 1;
	a.tau(1, 1) = -1;
	return a;
}

Scalar norm(const AlgebraSpec &s, std::span<const Scalar> x) { return q(1, 2) * bform(*s.form, x, x); }

std::vector<IdentityCheck> check_symmetric_composition(const AlgebraSpec &s)
{
	if (!s.form)
		throw std::invalid_argument("check_symmetric_composition: no form");
	std::size_t n = s.dim();
	const Matrix &F = *s.form;
	std::vector<Vec> e(n);
	for (std::size_t i = 0; i < n; ++i)
		e[i] = e_(n, i);
	std::vector<Vec> P(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			P[i * n + j] = product(s, e[i], e[j]);
	IdentityCheck comp = named("composition"), assoc = named("associative_form");
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y) {
			for (std::size_t z = 0; z < n; ++z) {
				++assoc.tested;
				if (!(bform(F, P[x * n + y], e[z]) == bform(F, e[x], P[y * n + z])))
					assoc.fail({x, y, z});
				for (std::size_t w = 0; w < n; ++w) {
					++comp.tested;
					Scalar lhs = bform(F, P[x * n + y], P[z * n + w]) + bform(F, P[x * n + w], P[z * n + y]);
					if (!(lhs == F(x, z) * F(y, w)))
						comp.fail({x, y, z, w});
				}
			}
		}
	return {comp, assoc};
}

std::vector<IdentityCheck> check_hurwitz(const AlgebraSpec &h)
{
	std::size_t n = h.dim();
	const Matrix &F = *h.form;
	std::vector<Vec> e(n);
	for (std::size_t i = 0; i < n; ++i)
		e[i] = e_(n, i);
	auto assoc = [&](const Vec &x, const Vec &y, const Vec &z) {
		return product(h, product(h, x, y), z) - product(h, x, product(h, y, z));
	};
	IdentityCheck alt = named("alternative"), comp = named("composition"), bar = named("standard_involution");
	for (std::size_t x = 0; x < n; ++x) {
		++bar.tested;
		Vec t = e[x] + h.invol->column(x);
		for (std::size_t k = 1; k < n; ++k)
			if (!t[k].is_zero()) {
				bar.fail({x});
				break;
			}
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z) {
				++alt.tested;
				if (!is_zero(assoc(e[x], e[y], e[z]) + assoc(e[y], e[x], e[z])) ||
				    !is_zero(assoc(e[x], e[y], e[z]) + assoc(e[x], e[z], e[y])))
					alt.fail({x, y, z});
				for (std::size_t w = 0; w < n; ++w) {
					++comp.tested;
					Scalar lhs = bform(F, product(h, e[x], e[y]), product(h, e[z], e[w])) +
					             bform(F, product(h, e[x], e[w]), product(h, e[z], e[y]));
					if (!(lhs == F(x, z) * F(y, w)))
						comp.fail({x, y, z, w});
				}
			}
	}
	return {alt, comp, bar};
}

Matrix sigma(const Matrix &form, std::span<const Scalar> a, std::span<const Scalar> b)
{
	Vec fa = form.apply(a), fb = form.apply(b);
	return outer(b, fa) - outer(a, fb);
}

std::vector<OpTriple> triality_tri(const AlgebraSpec &s)
{
	if (!s.form)
		throw std::invalid_argument("triality_tri: no form");
	std::size_t n = s.dim(), sq = n * n;
	const Matrix &F = *s.form;
	auto idx = [&](int i, std::size_t r, std::size_t c) { return static_cast<std::size_t>(mod3(i)) * sq + r * n + c; };
	LinearSystem sys(3 * sq);
	// F d + d^t F = 0
	for (int i = 0; i < 3; ++i)
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t c = r; c < n; ++c) {
				SparseVec row;
				for (std::size_t k = 0; k < n; ++k) {
					if (!F(r, k).is_zero())
						row.add_term(idx(i, k, c), F(r, k));
					if (!F(k, c).is_zero())
						row.add_term(idx(i, k, r), F(k, c));
				}
				if (!row.empty())
					sys.add_equation(row);
			}
	std::vector<Vec> P(sq);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			P[x * n + y] = product(s, e_(n, x), e_(n, y));
	// d0(x*y) - d1(x)*y - x*d2(y) = 0
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t l = 0; l < n; ++l) {
				SparseVec row;
				for (std::size_t c = 0; c < n; ++c)
					if (!P[x * n + y][c].is_zero())
						row.add_term(idx(0, l, c), P[x * n + y][c]);
				for (std::size_t r = 0; r < n; ++r) {
					if (!P[r * n + y][l].is_zero())
						row.add_term(idx(1, r, x), -P[r * n + y][l]);
					if (!P[x * n + r][l].is_zero())
						row.add_term(idx(2, r, y), -P[x * n + r][l]);
				}
				if (!row.empty())
					sys.add_equation(row);
			}
	std::vector<OpTriple> out;
	for (const auto &v : sys.solve().basis) {
		OpTriple t;
		for (int i = 0; i < 3; ++i)
			t[i] = Matrix::from_flat(n, n, std::span<const Scalar>(v).subspan(i * sq, sq));
		out.push_back(t);
	}
	return out;
}

AlgebraSpec octonion_malcev()
{
	AlgebraSpec o = split_octonions();
	AlgebraSpec m(7);
	for (std::size_t i = 1; i < 8; ++i)
		for (std::size_t j = 1; j < 8; ++j) {
			Vec c = product(o, e_(8, i), e_(8, j)) - product(o, e_(8, j), e_(8, i));
			if (!c[0].is_zero())
				throw std::logic_error("octonion commutator leaves the trace-zero part");
			m.set_bil(i - 1, j - 1, SparseVec::from_dense(std::span<const Scalar>(c).subspan(1)));
		}
	m.labels.assign(o.labels.begin() + 1, o.labels.end());
	return m;
}

// G2: basis f1 f2 f3 | E12 E13 E21 E23 E31 E32 H1 H2 | e1 e2 e3

namespace {

struct G2Elem {
	Vec f = Vec(3);
	Matrix a = Matrix(3, 3);
	Vec e = Vec(3);
};

int eps(std::size_t i, std::size_t j, std::size_t k)
{
	if (i == j || j == k || i == k)
		return 0;
	return ((j + 3 - i) % 3 == 1) ? 1 : -1;
}

const std::array<std::pair<std::size_t, std::size_t>, 6> g2_off{{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};

G2Elem g2_basis(std::size_t k)
{
	G2Elem x;
	if (k < 3)
		x.f[k] = 1;
	else if (k < 9)
		x.a(g2_off[k - 3].first, g2_off[k - 3].second) = 1;
	else if (k == 9) {
		x.a(0, 0) = 1;
		x.a(1, 1) = -1;
	} else if (k == 10) {
		x.a(1, 1) = 1;
		x.a(2, 2) = -1;
	} else
		x.e[k - 11] = 1;
	return x;
}

Vec g2_coords(const G2Elem &x)
{
	Vec v(14);
	for (std::size_t i = 0; i < 3; ++i) {
		v[i] = x.f[i];
		v[11 + i] = x.e[i];
	}
	for (std::size_t k = 0; k < 6; ++k)
		v[3 + k] = x.a(g2_off[k].first, g2_off[k].second);
	if (!trace(x.a).is_zero())
		throw std::logic_error("g2: bracket left sl(E)");
	v[9] = x.a(0, 0);
	v[10] = x.a(0, 0) + x.a(1, 1);
	return v;
}

G2Elem g2_bracket(const G2Elem &x, const G2Elem &y)
{
	G2Elem r;
	r.a = commutator(x.a, y.a);
	// [A, e] = A e, [A, f] = -f A
	r.e = x.a.apply(y.e) - y.a.apply(x.e);
	Vec fa = y.a.transpose().apply(x.f), fb = x.a.transpose().apply(y.f);
	r.f = fa - fb;
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j)
			for (std::size_t k = 0; k < 3; ++k) {
				int s = eps(i, j, k);
				if (s == 0)
					continue;
				// [e_i, e_j] = -2 e_i ^ e_j, [f_i, f_j] = 2 f_i ^ f_j
				r.f[k] += Scalar(-2 * s) * x.e[i] * y.e[j];
				r.e[k] += Scalar(2 * s) * x.f[i] * y.f[j];
			}
	// [e, f] = 3 f(.)e - f(e) I
	auto ef = [](const Vec &e, const Vec &f) {
		Scalar fe = f[0] * e[0] + f[1] * e[1] + f[2] * e[2];
		return Scalar(3) * outer(e, f) - fe * Matrix::identity(3);
	};
	r.a += ef(x.e, y.f);
	r.a -= ef(y.e, x.f);
	return r;
}

} // namespace

GMAlgebra g2_gm()
{
	GMAlgebra m(3);
	m.ensure_tri();
	auto cross = [](const Vec &x, const Vec &y) {
		return Vec{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
	};
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j) {
			m.set_bil(i, j, SparseVec::from_dense(Scalar(2) * cross(e_(3, i), e_(3, j))));
			for (std::size_t k = 0; k < 3; ++k) {
				SparseVec t;
				if (i == j)
					t.add_term(k, Scalar(1));
				if (j == k)
					t.add_term(i, Scalar(-3));
				m.set_tri(i, j, k, t);
			}
		}
	m.labels = {"e1", "e2", "e3"};
	return m;
}

S3Example g2_example()
{
	S3Example ex;
	AlgebraSpec &g = ex.lie = AlgebraSpec(14);
	for (std::size_t i = 0; i < 14; ++i)
		for (std::size_t j = i + 1; j < 14; ++j)
			g.set_bracket(i, j, SparseVec::from_dense(g2_coords(g2_bracket(g2_basis(i), g2_basis(j)))));
	g.labels = {"f1", "f2", "f3", "E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2", "e1", "e2", "e3"};
	Scalar w = Scalar::omega();
	ex.action.phi = Matrix::identity(14);
	ex.action.tau = Matrix(14, 14);
	for (std::size_t i = 0; i < 3; ++i) {
		ex.action.phi(i, i) = w * w;
		ex.action.phi(11 + i, 11 + i) = w;
		ex.action.tau(i, 11 + i) = -1;
		ex.action.tau(11 + i, i) = -1;
	}
	for (std::size_t k = 3; k < 11; ++k) {
		G2Elem x = g2_basis(k);
		x.a = Scalar(-1) * x.a.transpose();
		ex.action.tau.set_column(k, g2_coords(x));
	}
	for (std::size_t i = 0; i < 3; ++i)
		ex.m_basis.push_back(e_(14, 11 + i));
	ex.gm = extract_gm_from_s3(ex.lie, ex.action, ex.m_basis);
	ex.gm.labels = {"e1", "e2", "e3"};
	return ex;
}

GMAlgebra so_jts(int m)
{
	if (m < 0)
		throw std::invalid_argument("so_jts: negative dimension");
	std::size_t n = static_cast<std::size_t>(m);
	GMAlgebra t(n);
	t.ensure_tri();
	// b(x,z)y - b(y,z)x - b(x,y)z
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z) {
				SparseVec v;
				if (x == z)
					v.add_term(y, Scalar(1));
				if (y == z)
					v.add_term(x, Scalar(-1));
				if (x == y)
					v.add_term(z, Scalar(-1));
				t.set_tri(x, y, z, v);
			}
	return t;
}

S3Example so_example(int n)
{
	if (n < 3)
		throw std::invalid_argument("so_example: n must be at least 3");
	std::size_t N = static_cast<std::size_t>(n);
	Matrix G = Matrix::identity(N);
	for (std::size_t i = 0; i < 3; ++i)
		G(i, i) = q(1, 3);
	std::vector<Matrix> ops;
	std::vector<std::string> labels;
	for (std::size_t i = 0; i < N; ++i)
		for (std::size_t j = i + 1; j < N; ++j) {
			ops.push_back(sigma(G, e_(N, i), e_(N, j)));
			labels.push_back("s" + std::to_string(i + 1) + std::to_string(j + 1));
		}
	S3Example ex;
	ex.lie = operator_lie_algebra(ops);
	ex.lie.labels = labels;
	Span s = flat_span(ops);
	auto gens = s3_generator_perms();
	ex.action.phi = conjugation_action(ops, s, perm_matrix(gens[0], N));
	ex.action.tau = conjugation_action(ops, s, perm_matrix(gens[1], N));
	// E = k(1,1,1) + span(e_4, ...), orthonormal for G
	std::vector<Vec> E;
	Vec u(N);
	u[0] = u[1] = u[2] = 1;
	E.push_back(u);
	for (std::size_t k = 3; k < N; ++k)
		E.push_back(e_(N, k));
	Vec wo = w_omega(N);
	for (const auto &x : E)
		ex.m_basis.push_back(op_coords(s, sigma(G, wo, x), "so_example"));
	ex.gm = extract_gm_from_s3(ex.lie, ex.action, ex.m_basis);
	return ex;
}

GMAlgebra sl_gm(int m)
{
	if (m < 1)
		throw std::invalid_argument("sl_gm: m must be at least 1");
	std::size_t M = static_cast<std::size_t>(m), n = 1 + 2 * M;
	auto E = [&](std::size_t k) { return 1 + k; };
	auto F = [&](std::size_t k) { return 1 + M + k; };
	GMAlgebra g(n);
	g.ensure_tri();
	// ae = -e, af = f, fe = f(e) a
	for (std::size_t k = 0; k < M; ++k) {
		g.set_bracket(0, E(k), SparseVec::unit(E(k), -1));
		g.set_bracket(0, F(k), SparseVec::unit(F(k), 1));
		g.set_bracket(F(k), E(k), SparseVec::unit(0, 1));
	}
	auto add = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Scalar &c) {
		SparseVec v = g.tri(i, j, k);
		v.add_term(l, c);
		g.set_tri(i, j, k, v);
	};
	add(0, 0, 0, 0, 2);
	for (std::size_t k = 0; k < M; ++k) {
		add(0, 0, E(k), E(k), -1);
		add(0, 0, F(k), F(k), -1);
		// {e,f,a} = -f(e)a = {f,e,a}
		add(E(k), F(k), 0, 0, -1);
		add(F(k), E(k), 0, 0, -1);
	}
	for (std::size_t i = 0; i < M; ++i)      // e = e_i
		for (std::size_t j = 0; j < M; ++j)  // f = f_j
			for (std::size_t l = 0; l < M; ++l) {
				// {e,f,e'} = f(e')e + f(e)e'
				if (j == l)
					add(E(i), F(j), E(l), E(i), 1);
				if (j == i)
					add(E(i), F(j), E(l), E(l), 1);
				// {f,e,e'} = -f(e')e
				if (j == l)
					add(F(j), E(i), E(l), E(i), -1);
				// {e,f,f'} = -f'(e)f
				if (l == i)
					add(E(i), F(j), F(l), F(j), -1);
				// {f,e,f'} = f'(e)f + f(e)f'
				if (l == i)
					add(F(j), E(i), F(l), F(j), 1);
				if (j == i)
					add(F(j), E(i), F(l), F(l), 1);
			}
	g.labels.push_back("a");
	for (std::size_t k = 0; k < M; ++k)
		g.labels.push_back("e" + std::to_string(k + 1));
	for (std::size_t k = 0; k < M; ++k)
		g.labels.push_back("f" + std::to_string(k + 1));
	return g;
}

S3Example sl_example(int m)
{
	if (m < 1)
		throw std::invalid_argument("sl_example: m must be at least 1");
	std::size_t M = static_cast<std::size_t>(m), N = M + 2;
	std::vector<Matrix> ops;
	std::vector<std::string> labels;
	for (std::size_t i = 0; i < N; ++i)
		for (std::size_t j = 0; j < N; ++j) {
			Matrix u(N, N);
			u(i, j) = 1;
			ops.push_back(u);
			labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
		}
	S3Example ex;
	ex.lie = operator_lie_algebra(ops);
	ex.lie.labels = labels;
	Span s = flat_span(ops);
	auto gens = s3_generator_perms();
	ex.action.phi = conjugation_action(ops, s, perm_matrix(gens[0], N));
	ex.action.tau = conjugation_action(ops, s, perm_matrix(gens[1], N));
	// (w|.) = 1/3 w^t on W; E has basis (1,1,1), e_4, ...; E* the dual basis
	Vec wo = w_omega(N), wo2 = w_omega2(N);
	Scalar third = q(1, 3);
	std::vector<Vec> E, Fd;
	Vec u(N), f0(N);
	for (std::size_t i = 0; i < 3; ++i) {
		u[i] = 1;
		f0[i] = third;
	}
	E.push_back(u);
	Fd.push_back(f0);
	for (std::size_t k = 3; k < N; ++k) {
		E.push_back(e_(N, k));
		Fd.push_back(e_(N, k));
	}
	ex.m_basis.push_back(outer(wo2, third * wo2).flat());
	for (const auto &e : E)
		ex.m_basis.push_back(outer(e, third * wo).flat());
	for (const auto &f : Fd)
		ex.m_basis.push_back(outer(wo, f).flat());
	ex.gm = extract_gm_from_s3(ex.lie, ex.action, ex.m_basis);
	ex.gm.labels = sl_gm(m).labels;
	return ex;
}

namespace {

// t_{a,b} = (sigma_{a,b}, 1/2 q(a,b) I - R_a L_b, 1/2 q(a,b) I - L_a R_b)
OpTriple t_ab(const AlgebraSpec &s, std::span<const Scalar> a, std::span<const Scalar> b)
{
	const Matrix &F = *s.form;
	std::size_t n = s.dim();
	Matrix hq = (q(1, 2) * bform(F, a, b)) * Matrix::identity(n);
	Matrix La = left_mult(s, a), Lb = left_mult(s, b), Ra = right_mult(s, a), Rb = right_mult(s, b);
	return {sigma(F, a, b), hq - Ra * Lb, hq - La * Rb};
}

Span triple_span(const std::vector<OpTriple> &ts, std::size_t n)
{
	Span s(3 * n * n);
	for (const auto &t : ts)
		s.insert(flat3(t));
	return s;
}

Vec tri_coords(const Span &s, const OpTriple &t, const char *what)
{
	auto c = s.coords(flat3(t));
	if (!c)
		throw std::logic_error(std::string(what) + " is not a triality triple");
	return *c;
}

} // namespace

std::vector<Vec> MagicSquare::m_basis() const
{
	Scalar w = Scalar::omega();
	// w_omega = 1/2 e + (omega^2 - omega)/6 z
	Scalar ce = q(1, 2), cz = (w * w - w) * q(1, 6);
	std::size_t N = iota_offset(3);
	std::vector<Vec> out;
	for (int i = 0; i < 3; ++i)
		for (std::size_t x = 0; x < s_dim; ++x) {
			Vec v(N);
			v[iota_offset(i) + x] = ce;
			v[iota_offset(i) + s_dim + x] = cz;
			out.push_back(v);
		}
	return out;
}

MagicSquare magic_square_row2(int d)
{
	AlgebraSpec K = para_k(), S = para_hurwitz(d);
	std::size_t n = S.dim();
	MagicSquare ms;
	ms.s_dim = n;
	ms.tri_k = triality_tri(K);
	ms.tri_s = triality_tri(S);
	std::size_t TK = ms.tri_k.size(), TS = ms.tri_s.size(), N = TK + TS + 6 * n;
	Span sk = triple_span(ms.tri_k, 2), ss = triple_span(ms.tri_s, n);
	auto io = [&](int i, std::size_t a, std::size_t x) { return ms.iota_offset(mod3(i)) + a * n + x; };
	AlgebraSpec &g = ms.lie = AlgebraSpec(N);
	const Matrix &FK = *K.form, &FS = *S.form;

	for (std::size_t p = 0; p < TK; ++p)
		for (std::size_t r = p + 1; r < TK; ++r) {
			OpTriple c;
			for (int i = 0; i < 3; ++i)
				c[i] = commutator(ms.tri_k[p][i], ms.tri_k[r][i]);
			SparseVec v;
			place(v, tri_coords(sk, c, "[tri K, tri K]"), 0);
			g.set_bracket(p, r, v);
		}
	for (std::size_t p = 0; p < TS; ++p)
		for (std::size_t r = p + 1; r < TS; ++r) {
			OpTriple c;
			for (int i = 0; i < 3; ++i)
				c[i] = commutator(ms.tri_s[p][i], ms.tri_s[r][i]);
			SparseVec v;
			place(v, tri_coords(ss, c, "[tri S, tri S]"), TK);
			g.set_bracket(TK + p, TK + r, v);
		}
	for (int i = 0; i < 3; ++i)
		for (std::size_t a = 0; a < 2; ++a)
			for (std::size_t x = 0; x < n; ++x) {
				for (std::size_t p = 0; p < TK; ++p) {
					SparseVec v;
					Vec da = ms.tri_k[p][i].column(a);
					for (std::size_t b = 0; b < 2; ++b)
						if (!da[b].is_zero())
							v.add_term(io(i, b, x), da[b]);
					g.set_bracket(p, io(i, a, x), v);
				}
				for (std::size_t p = 0; p < TS; ++p) {
					SparseVec v;
					Vec dx = ms.tri_s[p][i].column(x);
					for (std::size_t y = 0; y < n; ++y)
						if (!dx[y].is_zero())
							v.add_term(io(i, a, y), dx[y]);
					g.set_bracket(TK + p, io(i, a, x), v);
				}
			}
	// t_{a,b} and t_{x,y} in coordinates, rotated by theta^i
	std::vector<std::array<Vec, 3>> tk(4), ts(n * n);
	for (std::size_t a = 0; a < 2; ++a)
		for (std::size_t b = 0; b < 2; ++b) {
			OpTriple t = t_ab(K, e_(2, a), e_(2, b));
			for (int i = 0; i < 3; ++i)
				tk[a * 2 + b][i] = tri_coords(sk, rotate(t, i), "t_{a,b}");
		}
	auto trows = parallel_map(n, [&](std::size_t x) {
		std::vector<std::array<Vec, 3>> r(n);
		for (std::size_t y = 0; y < n; ++y) {
			OpTriple t = t_ab(S, e_(n, x), e_(n, y));
			for (int i = 0; i < 3; ++i)
				r[y][i] = tri_coords(ss, rotate(t, i), "t_{x,y}");
		}
		return r;
	});
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			ts[x * n + y] = trows[x][y];
	std::vector<Vec> PK(4), PS(n * n);
	for (std::size_t a = 0; a < 2; ++a)
		for (std::size_t b = 0; b < 2; ++b)
			PK[a * 2 + b] = product(K, e_(2, a), e_(2, b));
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			PS[x * n + y] = product(S, e_(n, x), e_(n, y));

	for (int i = 0; i < 3; ++i)
		for (std::size_t a = 0; a < 2; ++a)
			for (std::size_t x = 0; x < n; ++x)
				for (std::size_t b = 0; b < 2; ++b)
					for (std::size_t y = 0; y < n; ++y) {
						// [iota_i(a x), iota_{i+1}(b y)] = iota_{i+2}((a.b) (x*y))
						SparseVec v;
						const Vec &ab = PK[a * 2 + b], &xy = PS[x * n + y];
						for (std::size_t c = 0; c < 2; ++c)
							if (!ab[c].is_zero())
								for (std::size_t z = 0; z < n; ++z)
									if (!xy[z].is_zero())
										v.add_term(io(i + 2, c, z), ab[c] * xy[z]);
						g.set_bracket(io(i, a, x), io(i + 1, b, y), v);
						if (io(i, a, x) < io(i, b, y)) {
							// q^(x,y) theta^i(t_{a,b}) + q(a,b) theta^i(t_{x,y})
							SparseVec w;
							if (!FS(x, y).is_zero())
								place(w, tk[a * 2 + b][i], 0, FS(x, y));
							if (!FK(a, b).is_zero())
								place(w, ts[x * n + y][i], TK, FK(a, b));
							g.set_bracket(io(i, a, x), io(i, b, y), w);
						}
					}

	S3Action ka = k_action();
	auto lift = [&](const Matrix &gk) {
		Matrix m(N, N);
		Matrix gi = inverse(gk);
		for (std::size_t p = 0; p < TK; ++p) {
			OpTriple c;
			for (int i = 0; i < 3; ++i)
				c[i] = gk * ms.tri_k[p][i] * gi;
			Vec cc = tri_coords(sk, c, "conjugated tri K");
			for (std::size_t r = 0; r < TK; ++r)
				m(r, p) = cc[r];
		}
		for (std::size_t p = 0; p < TS; ++p)
			m(TK + p, TK + p) = 1;
		for (int i = 0; i < 3; ++i)
			for (std::size_t a = 0; a < 2; ++a)
				for (std::size_t b = 0; b < 2; ++b)
					if (!gk(b, a).is_zero())
						for (std::size_t x = 0; x < n; ++x)
							m(io(i, b, x), io(i, a, x)) = gk(b, a);
		return m;
	};
	ms.action.phi = lift(ka.phi);
	ms.action.tau = lift(ka.tau);

	g.labels.resize(N);
	for (std::size_t p = 0; p < TK; ++p)
		g.labels[p] = "triK" + std::to_string(p);
	for (std::size_t p = 0; p < TS; ++p)
		g.labels[TK + p] = "triS" + std::to_string(p);
	for (int i = 0; i < 3; ++i)
		for (std::size_t a = 0; a < 2; ++a)
			for (std::size_t x = 0; x < n; ++x)
				g.labels[io(i, a, x)] =
				    "iota" + std::to_string(i) + "(" + K.labels[a] + "*" + S.labels[x] + ")";
	return ms;
}

GMAlgebra magic_square_gm(int d)
{
	AlgebraSpec S = para_hurwitz(d);
	std::size_t n = S.dim();
	const Matrix &F = *S.form;
	auto io = [&](int i, std::size_t x) { return static_cast<std::size_t>(mod3(i)) * n + x; };
	auto star = [&](const Vec &x, const Vec &y) { return product(S, x, y); };
	auto lift = [&](int i, const Vec &v) {
		SparseVec s;
		place(s, v, io(i, 0));
		return s;
	};
	GMAlgebra m(3 * n);
	m.ensure_tri();
	for (int i = 0; i < 3; ++i)
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y) {
				Vec ex = e_(n, x), ey = e_(n, y);
				m.set_bracket(io(i, x), io(i + 1, y), lift(i + 2, star(ex, ey)));
				for (std::size_t z = 0; z < n; ++z) {
					Vec ez = e_(n, z);
					Vec qz = F(x, y) * ez;
					m.set_tri(io(i, x), io(i, y), io(i + 1, z), lift(i + 1, qz - star(star(ey, ez), ex)));
					m.set_tri(io(i, x), io(i, y), io(i + 2, z), lift(i + 2, qz - star(ex, star(ez, ey))));
					Vec t = F(x, z) * ey - F(y, z) * ex - qz;
					m.set_tri(io(i, x), io(i, y), io(i, z), lift(i, t));
				}
			}
	m.labels.resize(3 * n);
	for (int i = 0; i < 3; ++i)
		for (std::size_t x = 0; x < n; ++x)
			m.labels[io(i, x)] = "iota" + std::to_string(i) + "(" + S.labels[x] + ")";
	return m;
}

GradedAlgebra pauli_sl2()
{
	// h, x = e+f, y = e-f: [h,x] = 2y, [h,y] = 2x, [x,y] = -2h
	GradedAlgebra g;
	g.alg = AlgebraSpec(3);
	g.alg.set_bracket(0, 1, SparseVec::unit(2, 2));
	g.alg.set_bracket(0, 2, SparseVec::unit(1, 2));
	g.alg.set_bracket(1, 2, SparseVec::unit(0, -2));
	g.alg.labels = {"h", "e+f", "e-f"};
	g.degree = {1, 2, 3};
	return g;
}

CubeExample cube_example(const GradedAlgebra &base)
{
	std::size_t n = base.alg.dim();
	if (base.degree.size() != n)
		throw std::invalid_argument("cube_example: one degree per basis vector required");
	bool has01 = false, has11 = false;
	for (int d : base.degree) {
		if (d < 0 || d > 3)
			throw std::invalid_argument("cube_example: degrees must lie in 0..3");
		has01 = has01 || d == 2;
		has11 = has11 || d == 3;
	}
	if (!has01 || !has11)
		throw std::invalid_argument("cube_example: g_(0,1) and g_(1,1) must be nonzero");
	// the grading must be compatible with the bracket
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (const auto &[k, c] : base.alg.bil(i, j))
				if (base.degree[k] != (base.degree[i] ^ base.degree[j]))
					throw std::invalid_argument("cube_example: bracket does not respect the grading");

	CubeExample ex;
	ex.base_dim = n;
	std::size_t N = 3 * n;
	AlgebraSpec &g = ex.lie = AlgebraSpec(N);
	for (std::size_t c = 0; c < 3; ++c)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				SparseVec v;
				for (const auto &[k, s] : base.alg.bil(i, j))
					v.add_term(c * n + k, s);
				g.set_bil(c * n + i, c * n + j, v);
			}
	auto nu = [&](std::size_t i) { return base.degree[i] >= 2 ? Scalar(-1) : Scalar(1); };
	auto mu = [&](std::size_t i) { return base.degree[i] % 2 == 1 ? Scalar(-1) : Scalar(1); };
	S4Action &a = ex.action;
	a.tau1 = Matrix(N, N);
	a.tau2 = Matrix(N, N);
	a.phi = Matrix(N, N);
	a.tau = Matrix(N, N);
	for (std::size_t i = 0; i < n; ++i) {
		a.tau1(i, i) = 1;
		a.tau1(n + i, n + i) = nu(i);
		a.tau1(2 * n + i, 2 * n + i) = nu(i);
		a.tau2(i, i) = nu(i);
		a.tau2(n + i, n + i) = 1;
		a.tau2(2 * n + i, 2 * n + i) = nu(i);
		for (std::size_t c = 0; c < 3; ++c)
			a.phi(((c + 1) % 3) * n + i, c * n + i) = 1;
		a.tau(i, i) = mu(i);
		a.tau(2 * n + i, n + i) = mu(i);
		a.tau(n + i, 2 * n + i) = mu(i);
	}
	std::vector<std::size_t> odd;
	for (std::size_t i = 0; i < n; ++i)
		if (base.degree[i] >= 2)
			odd.push_back(i);
	ex.mu_on_a = Matrix(odd.size(), odd.size());
	for (std::size_t k = 0; k < odd.size(); ++k)
		ex.mu_on_a(k, k) = mu(odd[k]);
	g.labels.resize(N);
	for (std::size_t c = 0; c < 3; ++c)
		for (std::size_t i = 0; i < n; ++i)
			g.labels[c * n + i] =
			    (base.alg.labels.empty() ? "b" + std::to_string(i) : base.alg.labels[i]) + "_" + std::to_string(c);
	return ex;
}

// registry

const std::vector<CatalogInfo> &catalog_list()
{
	static const std::vector<CatalogInfo> list = {
	    {"g2", "lie_s3", "", "split G2 as E* + sl(E) + E with its S3-action"},
	    {"g2_gm", "gm", "", "three-dimensional GM algebra (E, 2x cross y, b(x,y)z - 3b(y,z)x)"},
	    {"so", "lie_s3", "n>=3", "so(V), dim V = n, S3 permuting three basis vectors"},
	    {"so_jts", "jts", "m>=0", "Jordan triple b(x,z)y - b(y,z)x - b(x,y)z on k^m"},
	    {"sl", "lie_s3", "m>=1", "gl(W + E), dim E = m"},
	    {"sl_gm", "gm", "m>=1", "GM algebra on k a + E + E*, dim E = m"},
	    {"o0_gm", "gm", "", "traceless split octonions as a GM algebra via the Malcev bridge"},
	    {"o0_malcev", "malcev", "", "traceless split octonions under the commutator"},
	    {"octonions", "algebra_with_involution", "", "split octonions with the standard involution"},
	    {"hurwitz", "algebra_with_involution", "d in {1,2,4,8}", "split Hurwitz algebra"},
	    {"para_hurwitz", "composition", "d in {1,2,4,8}", "para-Hurwitz algebra x*y = bar(x) bar(y)"},
	    {"para_k", "composition", "", "(K, bullet, q) with z^2 = -3e"},
	    {"magic_square", "lie_s3", "d in {1,2,4,8}", "g(K, S) from the second row of the magic square"},
	    {"magic_square_gm", "gm", "d in {1,2,4,8}", "GM algebra on three copies of a para-Hurwitz algebra"},
	    {"cube", "lie_s4", "", "(sl2)^3 with the Pauli grading and its S4-action"},
	};
	return list;
}

namespace {

void expect(CatalogEntry &e, const std::string &fact, long want, long got)
{
	e.expected[fact] = want;
	if (want != got)
		throw VerificationError("catalog " + e.name + ": " + fact + " is " + std::to_string(got) + ", expected " +
		                        std::to_string(want));
}

long L(std::size_t v) { return static_cast<long>(v); }

int need(const std::optional<int> &p, int fallback)
{
	return p ? *p : fallback;
}

void check_lie(CatalogEntry &e) { expect(e, "jacobi_violations", 0, L(check_jacobi(e.algebra).violations)); }

void check_gm(CatalogEntry &e)
{
	auto r = check_gm_axioms(e.algebra);
	std::size_t v = r.not_anticommutative.size();
	for (const auto &c : r.identities)
		v += c.violations;
	expect(e, "gm_violations", 0, L(v));
}

void check_s3(CatalogEntry &e)
{
	auto r = check_action(e.algebra, *e.s3);
	expect(e, "action_ok", 1, r.ok() ? 1 : 0);
}

} // namespace

CatalogEntry catalog_build(const std::string &name, std::optional<int> param)
{
	CatalogEntry e;
	e.name = name;
	bool known = false;
	for (const auto &info : catalog_list())
		if (info.name == name) {
			e.kind = info.kind;
			known = true;
			if (info.parameter.empty() && param)
				throw std::invalid_argument("catalog entry " + name + " takes no parameter");
		}
	if (!known)
		throw std::invalid_argument("unknown catalog entry: " + name);
	auto valid_d = [&](int d) {
		if (d != 1 && d != 2 && d != 4 && d != 8)
			throw std::invalid_argument("parameter must be 1, 2, 4 or 8");
		return d;
	};

	if (name == "g2") {
		auto ex = g2_example();
		e.algebra = ex.lie;
		e.s3 = ex.action;
		expect(e, "dim", 14, L(e.algebra.dim()));
		check_lie(e);
		check_s3(e);
	} else if (name == "g2_gm") {
		e.algebra = g2_gm();
		expect(e, "dim", 3, L(e.algebra.dim()));
		check_gm(e);
	} else if (name == "so") {
		int n = need(param, 5);
		if (n < 3)
			throw std::invalid_argument("so: n must be at least 3");
		auto ex = so_example(n);
		e.algebra = ex.lie;
		e.s3 = ex.action;
		expect(e, "dim", n * (n - 1) / 2, L(e.algebra.dim()));
		check_lie(e);
		check_s3(e);
		auto iso = isotypic_s3(ex.action);
		expect(e, "m_U", (n - 2) * (n - 3) / 2, L(iso.multiplicity("U")));
		expect(e, "m_U'", 1, L(iso.multiplicity("U'")));
		expect(e, "m_W", n - 2, L(iso.multiplicity("W")));
	} else if (name == "so_jts") {
		int m = need(param, 3);
		if (m < 0)
			throw std::invalid_argument("so_jts: m must be nonnegative");
		e.algebra = so_jts(m);
		expect(e, "dim", m, L(e.algebra.dim()));
		check_gm(e);
	} else if (name == "sl") {
		int m = need(param, 2);
		if (m < 1)
			throw std::invalid_argument("sl: m must be at least 1");
		auto ex = sl_example(m);
		e.algebra = ex.lie;
		e.s3 = ex.action;
		expect(e, "dim", (m + 2) * (m + 2), L(e.algebra.dim()));
		check_lie(e);
		check_s3(e);
	} else if (name == "sl_gm") {
		int m = need(param, 2);
		if (m < 1)
			throw std::invalid_argument("sl_gm: m must be at least 1");
		e.algebra = sl_gm(m);
		expect(e, "dim", 1 + 2 * m, L(e.algebra.dim()));
		check_gm(e);
	} else if (name == "o0_gm") {
		e.algebra = malcev_to_gm(octonion_malcev());
		expect(e, "dim", 7, L(e.algebra.dim()));
		check_gm(e);
	} else if (name == "o0_malcev") {
		e.algebra = octonion_malcev();
		expect(e, "dim", 7, L(e.algebra.dim()));
		expect(e, "malcev_violations", 0, L(check_malcev(e.algebra).violations));
	} else if (name == "octonions" || name == "hurwitz") {
		int d = name == "octonions" ? 8 : valid_d(need(param, 8));
		e.algebra = hurwitz(d);
		expect(e, "dim", d, L(e.algebra.dim()));
		std::size_t v = 0;
		for (const auto &c : check_hurwitz(e.algebra))
			v += c.violations;
		expect(e, "hurwitz_violations", 0, L(v));
	} else if (name == "para_hurwitz" || name == "para_k") {
		e.algebra = name == "para_k" ? para_k() : para_hurwitz(valid_d(need(param, 8)));
		std::size_t v = 0;
		for (const auto &c : check_symmetric_composition(e.algebra))
			v += c.violations;
		expect(e, "composition_violations", 0, L(v));
	} else if (name == "magic_square") {
		int d = valid_d(need(param, 1));
		auto ms = magic_square_row2(d);
		e.algebra = ms.lie;
		e.s3 = ms.action;
		static const std::map<int, long> dims{{1, 8}, {2, 16}, {4, 35}, {8, 78}};
		expect(e, "dim", dims.at(d), L(e.algebra.dim()));
		check_lie(e);
		check_s3(e);
	} else if (name == "magic_square_gm") {
		int d = valid_d(need(param, 1));
		e.algebra = magic_square_gm(d);
		expect(e, "dim", 3 * d, L(e.algebra.dim()));
		check_gm(e);
	} else if (name == "cube") {
		auto ex = cube_example(pauli_sl2());
		e.algebra = ex.lie;
		e.s4 = ex.action;
		expect(e, "dim", 9, L(e.algebra.dim()));
		check_lie(e);
		expect(e, "action_ok", 1, check_action(e.algebra, ex.action).ok() ? 1 : 0);
	}
	return e;
}

} // namespace symlie
