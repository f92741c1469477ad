#include "symlie/symaction.hpp"
#include "symlie/parallel.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

namespace symlie {

namespace {

Perm compose(const Perm &g, const Perm &h)
{
	Perm r(h.size());
	for (std::size_t i = 0; i < h.size(); ++i)
		r[i] = g[static_cast<std::size_t>(h[i])];
	return r;
}

std::vector<int> cycle_type(const Perm &p)
{
	std::vector<bool> seen(p.size(), false);
	std::vector<int> lens;
	for (std::size_t i = 0; i < p.size(); ++i) {
		if (seen[i])
			continue;
		int len = 0;
		for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
			seen[j] = true;
			++len;
		}
		if (len > 1)
			lens.push_back(len);
	}
	std::sort(lens.begin(), lens.end());
	return lens;
}

int class_of(const Perm &p)
{
	auto ct = cycle_type(p);
	if (ct.empty())
		return 0;
	if (ct == std::vector<int>{2})
		return 1;
	if (ct == std::vector<int>{3})
		return 2;
	if (ct == std::vector<int>{2, 2})
		return 3;
	return 4;
}

void check_square(const Matrix &m, std::size_t n, const char *what)
{
	if (m.rows() != n || m.cols() != n)
		throw DimensionError(std::string("action matrix ") + what + " has wrong shape");
}

GroupEnumeration enumerate(const std::vector<Perm> &gens, const std::vector<Matrix> &mats)
{
	std::size_t n = mats.front().rows();
	for (const auto &m : mats)
		check_square(m, n, "generator");
	GroupEnumeration out;
	out.relations.name = "group relations";
	std::map<Perm, std::size_t> index;
	Perm id(gens.front().size());
	for (std::size_t i = 0; i < id.size(); ++i)
		id[i] = static_cast<int>(i);
	out.elements.push_back({id, Matrix::identity(n), 0});
	index[id] = 0;
	std::deque<std::size_t> queue{0};
	while (!queue.empty()) {
		std::size_t h = queue.front();
		queue.pop_front();
		for (std::size_t g = 0; g < gens.size(); ++g) {
			Perm p = compose(gens[g], out.elements[h].perm);
			Matrix m = mats[g] * out.elements[h].mat;
			auto it = index.find(p);
			++out.relations.tested;
			if (it == index.end()) {
				index[p] = out.elements.size();
				queue.push_back(out.elements.size());
				int cls = class_of(p);
				out.elements.push_back({std::move(p), std::move(m), cls});
			} else if (!(out.elements[it->second].mat == m)) {
				out.relations.fail({g, h});
			}
		}
	}
	return out;
}

} // namespace

std::vector<Perm> s3_generator_perms() { return {{1, 2, 0}, {1, 0, 2}}; }

std::vector<Perm> s4_generator_perms()
{
	return {{1, 0, 3, 2}, {3, 2, 1, 0}, {1, 2, 0, 3}, {1, 0, 2, 3}};
}

GroupEnumeration enumerate_s3(const S3Action &act)
{
	return enumerate(s3_generator_perms(), {act.phi, act.tau});
}

GroupEnumeration enumerate_s4(const S4Action &act)
{
	return enumerate(s4_generator_perms(), {act.tau1, act.tau2, act.phi, act.tau});
}

IdentityCheck check_automorphism(const AlgebraSpec &alg, const Matrix &g, const std::string &name)
{
	std::size_t n = alg.dim();
	check_square(g, n, name.c_str());
	std::vector<SparseVec> img(n);
	for (std::size_t i = 0; i < n; ++i)
		img[i] = SparseVec::from_dense(g.column(i));
	auto apply = [&](const SparseVec &v) {
		Accumulator acc(n);
		for (const auto &[k, c] : v)
			acc.add_scaled(c, img[k]);
		return acc.take();
	};
	auto rows = parallel_map(n, [&](std::size_t i) {
		IdentityCheck part;
		for (std::size_t j = 0; j < n; ++j) {
			++part.tested;
			if (!(apply(alg.bil(i, j)) == product(alg, img[i], img[j])))
				part.fail({i, j});
		}
		return part;
	});
	IdentityCheck out;
	out.name = name;
	for (const auto &r : rows)
		out.merge(r);
	return out;
}

ActionReport check_action(const AlgebraSpec &alg, const S3Action &act)
{
	check_square(act.phi, alg.dim(), "phi");
	check_square(act.tau, alg.dim(), "tau");
	ActionReport r;
	r.relations = enumerate_s3(act).relations;
	r.automorphism.push_back(check_automorphism(alg, act.phi, "phi"));
	r.automorphism.push_back(check_automorphism(alg, act.tau, "tau"));
	return r;
}

ActionReport check_action(const AlgebraSpec &alg, const S4Action &act)
{
	check_square(act.tau1, alg.dim(), "tau1");
	check_square(act.tau2, alg.dim(), "tau2");
	check_square(act.phi, alg.dim(), "phi");
	check_square(act.tau, alg.dim(), "tau");
	ActionReport r;
	r.relations = enumerate_s4(act).relations;
	r.automorphism.push_back(check_automorphism(alg, act.tau1, "tau1"));
	r.automorphism.push_back(check_automorphism(alg, act.tau2, "tau2"));
	r.automorphism.push_back(check_automorphism(alg, act.phi, "phi"));
	r.automorphism.push_back(check_automorphism(alg, act.tau, "tau"));
	return r;
}

// Klein grading

const std::vector<Vec> &KleinGrading::part(int i) const
{
	switch (i) {
	case 0: return g0;
	case 1: return g1;
	case 2: return g2;
	default: return t;
	}
}

KleinGrading klein_grading(const AlgebraSpec &alg, const S4Action &act)
{
	std::size_t n = alg.dim();
	check_square(act.tau1, n, "tau1");
	check_square(act.tau2, n, "tau2");
	if (!enumerate_s4(act).relations.ok())
		throw VerificationError("klein_grading: action does not satisfy the S4 relations");
	auto joint = [&](int s1, int s2) {
		LinearSystem sys(n);
		Matrix a = act.tau1 - Scalar(s1) * Matrix::identity(n);
		Matrix b = act.tau2 - Scalar(s2) * Matrix::identity(n);
		for (std::size_t i = 0; i < n; ++i) {
			Vec ra(n), rb(n);
			for (std::size_t j = 0; j < n; ++j) {
				ra[j] = a(i, j);
				rb[j] = b(i, j);
			}
			sys.add_equation(ra);
			sys.add_equation(rb);
		}
		return sys.solve().basis;
	};
	KleinGrading k{joint(1, 1), joint(1, -1), joint(-1, 1), joint(-1, -1)};
	if (k.t.size() + k.g0.size() + k.g1.size() + k.g2.size() != n)
		throw VerificationError("klein_grading: eigenspaces do not span the algebra");
	return k;
}

Matrix restrict_to(const Matrix &m, const std::vector<Vec> &basis)
{
	std::size_t n = m.rows();
	Span s(n);
	for (const auto &b : basis)
		if (!s.insert(b))
			throw std::invalid_argument("restrict_to: basis is not independent");
	Matrix r(basis.size(), basis.size());
	for (std::size_t j = 0; j < basis.size(); ++j) {
		auto c = s.coords(m.apply(basis[j]));
		if (!c)
			throw VerificationError("subspace is not invariant under the action");
		r.set_column(j, *c);
	}
	return r;
}

// characters

const CharacterTable &s3_characters()
{
	static const CharacterTable t{
	    {"U", "U'", "W"},
	    {1, 1, 2},
	    {1, 3, 2},
	    {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}},
	};
	return t;
}

const CharacterTable &s4_characters()
{
	static const CharacterTable t{
	    {"U", "U'", "W", "V", "V'"},
	    {1, 1, 2, 3, 3},
	    {1, 6, 8, 3, 6},
	    {
	        {1, 1, 1, 1, 1},
	        {1, -1, 1, 1, -1},
	        {2, 0, -1, 2, 0},
	        {3, 1, 0, -1, -1},
	        {3, -1, 0, -1, 1},
	    },
	};
	return t;
}

bool orthogonality_holds(const CharacterTable &table)
{
	int order = 0;
	for (int s : table.class_sizes)
		order += s;
	std::size_t k = table.chi.size();
	if (table.class_sizes.size() != k)
		return false;
	for (std::size_t a = 0; a < k; ++a) {
		if (table.chi[a][0] != table.dims[a])
			return false;
		for (std::size_t b = 0; b < k; ++b) {
			int row = 0, col = 0;
			for (std::size_t c = 0; c < k; ++c) {
				row += table.class_sizes[c] * table.chi[a][c] * table.chi[b][c];
				col += table.chi[c][a] * table.chi[c][b];
			}
			if (row != (a == b ? order : 0))
				return false;
			// column orthogonality: sum_chi chi(C_a) chi(C_b) = |G| / |C_a| delta
			if (col != (a == b ? order / table.class_sizes[a] : 0))
				return false;
		}
	}
	return true;
}

namespace {

void selftest()
{
	static std::once_flag once;
	static bool ok = false;
	std::call_once(once, [] { ok = orthogonality_holds(s3_characters()) && orthogonality_holds(s4_characters()); });
	if (!ok)
		throw std::logic_error("character table failed its orthogonality self-test");
}

std::vector<Vec> column_space(const Matrix &m)
{
	std::vector<Vec> cols;
	for (std::size_t j = 0; j < m.cols(); ++j)
		cols.push_back(m.column(j));
	return independent_subset(cols, m.rows());
}

std::vector<Vec> to_ambient(const std::vector<Vec> &coords, const std::vector<Vec> &basis, std::size_t n)
{
	std::vector<Vec> out;
	for (const auto &c : coords) {
		Vec v(n);
		for (std::size_t k = 0; k < c.size(); ++k)
			axpy(v, c[k], basis[k]);
		out.push_back(std::move(v));
	}
	return out;
}

std::size_t ambient_of(const std::vector<Vec> &space, const Matrix &m)
{
	if (!space.empty() && space.front().size() != m.rows())
		throw DimensionError("subspace vectors do not match the action dimension");
	return m.rows();
}

std::vector<Vec> full_basis(std::size_t n)
{
	std::vector<Vec> b;
	for (std::size_t i = 0; i < n; ++i)
		b.push_back(unit_vec(n, i));
	return b;
}

} // namespace

std::size_t IsotypicReport::multiplicity(const std::string &name) const { return irrep(name).multiplicity; }

const Irrep &IsotypicReport::irrep(const std::string &name) const
{
	for (const auto &r : irreps)
		if (r.name == name)
			return r;
	throw std::out_of_range("no irreducible module named " + name);
}

std::size_t IsotypicReport::total_dim() const
{
	std::size_t d = 0;
	for (const auto &r : irreps)
		d += r.dim * r.multiplicity;
	return d;
}

IsotypicReport isotypic_s3(const std::vector<Vec> &space, const S3Action &act)
{
	selftest();
	std::size_t n = ambient_of(space, act.phi);
	S3Action r{restrict_to(act.phi, space), restrict_to(act.tau, space)};
	std::size_t m = space.size();
	auto grp = enumerate_s3(r);
	if (!grp.relations.ok())
		throw VerificationError("isotypic_s3: matrices do not define an S3 action");
	Matrix eu(m, m), eup(m, m);
	for (const auto &g : grp.elements) {
		eu += g.mat;
		if (g.cls == 1)
			eup -= g.mat;
		else
			eup += g.mat;
	}
	eu *= Scalar::rational(1, 6);
	eup *= Scalar::rational(1, 6);
	Matrix ew = Matrix::identity(m) - eu - eup;
	if (!(eu * eu == eu) || !(eup * eup == eup) || !(eu * eup).is_zero() || !(ew * ew == ew))
		throw std::logic_error("S3 idempotent identities fail");
	IsotypicReport rep;
	rep.group = "S3";
	auto cu = column_space(eu), cup = column_space(eup), cw = column_space(ew);
	if (cw.size() % 2 != 0)
		throw VerificationError("isotypic_s3: W block has odd dimension");
	rep.irreps.push_back({"U", 1, cu.size(), to_ambient(cu, space, n)});
	rep.irreps.push_back({"U'", 1, cup.size(), to_ambient(cup, space, n)});
	rep.irreps.push_back({"W", 2, cw.size() / 2, to_ambient(cw, space, n)});
	// tau-eigenvectors inside the W block
	Matrix tp = ew * (Matrix::identity(m) + r.tau), tm = ew * (Matrix::identity(m) - r.tau);
	rep.w_plus = to_ambient(column_space(tp), space, n);
	rep.w_minus = to_ambient(column_space(tm), space, n);
	return rep;
}

IsotypicReport isotypic_s4(const std::vector<Vec> &space, const S4Action &act)
{
	selftest();
	std::size_t n = ambient_of(space, act.phi);
	S4Action r{restrict_to(act.tau1, space), restrict_to(act.tau2, space), restrict_to(act.phi, space),
	           restrict_to(act.tau, space)};
	std::size_t m = space.size();
	auto grp = enumerate_s4(r);
	if (!grp.relations.ok())
		throw VerificationError("isotypic_s4: matrices do not define an S4 action");
	const auto &table = s4_characters();
	std::vector<Scalar> class_trace(5);
	std::vector<Scalar> seen(5);
	std::vector<bool> have(5, false);
	for (const auto &g : grp.elements) {
		Scalar tr = trace(g.mat);
		auto c = static_cast<std::size_t>(g.cls);
		if (have[c] && !(seen[c] == tr))
			throw VerificationError("isotypic_s4: trace is not a class function");
		have[c] = true;
		seen[c] = tr;
	}
	IsotypicReport rep;
	rep.group = "S4";
	rep.cross_checked = true;
	for (std::size_t x = 0; x < 5; ++x) {
		Scalar sum;
		for (std::size_t c = 0; c < 5; ++c)
			sum += Scalar(table.class_sizes[c] * table.chi[x][c]) * seen[c];
		Scalar mult = sum / Scalar(24);
		if (!mult.is_rational() || mult.a().get_den() != 1 || sgn(mult.a()) < 0)
			throw VerificationError("isotypic_s4: non-integral multiplicity " + mult.to_string() +
			                        " for " + table.names[x]);
		auto mx = static_cast<std::size_t>(mult.a().get_num().get_si());
		Matrix p(m, m);
		for (const auto &g : grp.elements) {
			int chi = table.chi[x][static_cast<std::size_t>(g.cls)];
			if (chi != 0)
				p += Scalar(chi) * g.mat;
		}
		p *= Scalar::rational(table.dims[x], 24);
		auto cols = column_space(p);
		if (cols.size() != mx * static_cast<std::size_t>(table.dims[x]))
			rep.cross_checked = false;
		rep.irreps.push_back({table.names[x], static_cast<std::size_t>(table.dims[x]), mx,
		                      to_ambient(cols, space, n)});
	}
	if (rep.total_dim() != m)
		throw VerificationError("isotypic_s4: multiplicities do not account for the dimension");
	return rep;
}

IsotypicReport isotypic_s3(const S3Action &act) { return isotypic_s3(full_basis(act.phi.rows()), act); }
IsotypicReport isotypic_s4(const S4Action &act) { return isotypic_s4(full_basis(act.phi.rows()), act); }

} // namespace symlie
