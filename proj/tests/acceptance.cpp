// One line per acceptance criterion; exit status is nonzero if any line fails.

#include "symlie/catalog.hpp"
#include "symlie/tetra.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace symlie;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
	bool pass = true;
	std::ostringstream detail;

	void require(bool ok, const std::string &what)
	{
		if (!ok) {
			pass = false;
			detail << " [failed: " << what << "]";
		}
	}
};

// bil and tri agree, absent tri counting as zero
bool same_tables(const AlgebraSpec &x, const AlgebraSpec &y)
{
	if (x.dim() != y.dim())
		return false;
	std::size_t n = x.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			if (x.bil(i, j) != y.bil(i, j))
				return false;
			for (std::size_t k = 0; k < n; ++k) {
				SparseVec a = x.has_tri() ? x.tri(i, j, k) : SparseVec(), b = y.has_tri() ? y.tri(i, j, k) : SparseVec();
				if (a != b)
					return false;
			}
		}
	return true;
}

std::size_t identity_violations(const GMReport &r)
{
	std::size_t v = 0;
	for (const auto &c : r.identities)
		v += c.violations;
	return v;
}

// adds 1 to the first nonzero ternary structure constant at or after (i, j, k)
GMAlgebra mutate_tri(GMAlgebra m, std::size_t i, std::size_t j, std::size_t k, std::string &where)
{
	std::size_t n = m.dim();
	for (std::size_t flat = (i * n + j) * n + k; flat < n * n * n; ++flat) {
		std::size_t a = flat / (n * n), b = flat / n % n, c = flat % n;
		const SparseVec &v = m.tri(a, b, c);
		if (v.empty())
			continue;
		SparseVec w;
		for (const auto &[l, s] : v)
			w.add_term(l, l == v.begin()->first ? s + Scalar(1) : s);
		where = "{e" + std::to_string(a) + ",e" + std::to_string(b) + ",e" + std::to_string(c) + "} on e" +
		        std::to_string(v.begin()->first);
		m.set_tri(a, b, c, w);
		return m;
	}
	throw std::logic_error("no ternary constant to mutate");
}

std::vector<Vec> nu0_basis(const GOfM &g)
{
	std::vector<Vec> b;
	for (std::size_t k = 0; k < g.m; ++k)
		b.push_back(unit_vec(g.alg.dim(), g.nu_offset(0) + k));
	return b;
}

std::string triple(const IsotypicReport &r)
{
	return "(" + std::to_string(r.multiplicity("U")) + "," + std::to_string(r.multiplicity("U'")) + "," +
	       std::to_string(r.multiplicity("W")) + ")";
}

bool bookkeeping(const IsotypicReport &r, std::size_t total)
{
	std::size_t sum = 0;
	for (const auto &ir : r.irreps)
		sum += ir.multiplicity * ir.dim;
	return sum == total && r.total_dim() == total;
}

void criterion1(Outcome &o)
{
	std::vector<std::pair<std::string, GMAlgebra>> good = {
	    {"G2", g2_example().gm},
	    {"sl m=2", sl_example(2).gm},
	    {"sl m=3", sl_example(3).gm},
	    {"so n=4", so_example(4).gm},
	    {"so n=5", so_example(5).gm},
	    {"O0", malcev_to_gm(octonion_malcev())},
	};
	for (int d : {1, 2, 4}) {
		MagicSquare ms = magic_square_row2(d);
		good.emplace_back("magic square d=" + std::to_string(d), extract_gm_from_s3(ms.lie, ms.action, ms.m_basis()));
	}
	for (const auto &[name, m] : good) {
		GMReport r = check_gm_axioms(m);
		o.require(r.ok(), name);
	}
	o.detail << good.size() << " algebras with 0 violations;";
	// one structure constant changed by +1 in each
	std::string w1, w2, w3;
	std::vector<std::pair<std::string, GMAlgebra>> bad = {
	    {"G2", mutate_tri(g2_gm(), 0, 0, 0, w1)},
	    {"sl m=2", mutate_tri(sl_gm(2), 1, 2, 0, w2)},
	    {"O0", mutate_tri(malcev_to_gm(octonion_malcev()), 2, 3, 0, w3)},
	};
	const std::string *where[] = {&w1, &w2, &w3};
	for (std::size_t k = 0; k < bad.size(); ++k) {
		GMReport r = check_gm_axioms(bad[k].second);
		std::size_t v = identity_violations(r);
		o.detail << " mutated " << bad[k].first << " " << *where[k] << ": " << v << " violations;";
		o.require(v >= 1, "mutation of " + bad[k].first + " undetected");
	}
}

void criterion2(Outcome &o)
{
	struct Case {
		std::string name;
		GMAlgebra m;
		std::size_t dim;
	};
	for (const Case &c : {Case{"G2", g2_gm(), 14}, Case{"O0", malcev_to_gm(octonion_malcev()), 28}}) {
		GOfM g = build_g_of_M(c.m);
		o.detail << " g(" << c.name << ") dim " << g.alg.dim() << ";";
		o.require(g.alg.dim() == c.dim, c.name + " dimension");
		o.require(check_jacobi(g.alg).ok(), c.name + " Jacobi");
		o.require(check_action(g.alg, g.action).ok(), c.name + " action");
		o.require(same_tables(extract_gm_from_s3(g.alg, g.action, nu0_basis(g)), c.m), c.name + " round trip");
	}
	o.detail << " round trips exact";
}

void criterion3(Outcome &o)
{
	const int ds[] = {1, 2, 4, 8};
	const std::size_t dims[] = {8, 16, 35, 78};
	for (int k = 0; k < 4; ++k) {
		auto t0 = Clock::now();
		MagicSquare ms = magic_square_row2(ds[k]);
		IdentityCheck j = check_jacobi(ms.lie);
		double s = std::chrono::duration<double>(Clock::now() - t0).count();
		o.detail << " d=" << ds[k] << ": dim " << ms.lie.dim() << ", Jacobi violations " << j.violations;
		if (ds[k] == 8) {
			o.detail << " in " << s << " s";
			o.require(s < 600, "d=8 over 10 min");
		}
		o.detail << ";";
		o.require(ms.lie.dim() == dims[k], "dimension for d=" + std::to_string(ds[k]));
		o.require(j.ok(), "Jacobi for d=" + std::to_string(ds[k]));
	}
}

void criterion4(Outcome &o)
{
	auto one = [&](const std::string &name, const IsotypicReport &r, std::size_t u, std::size_t up, std::size_t w,
	               std::size_t total) {
		o.detail << " " << name << " " << triple(r) << ";";
		o.require(r.multiplicity("U") == u && r.multiplicity("U'") == up && r.multiplicity("W") == w, name);
		o.require(bookkeeping(r, total), name + " bookkeeping");
	};
	one("G2", isotypic_s3(g2_example().action), 3, 5, 3, 14);
	one("lrt(O)", isotypic_s3(compute_lrt(split_octonions()).action), 14, 0, 7, 28);
	for (std::size_t n : {3, 4, 5}) {
		S3Example so = so_example(static_cast<int>(n));
		one("so n=" + std::to_string(n), isotypic_s3(so.action), (n - 2) * (n - 3) / 2, 1, n - 2, n * (n - 1) / 2);
	}
}

void criterion5(Outcome &o)
{
	std::size_t lrt_o = compute_lrt(split_octonions()).basis.size();
	std::size_t lrt_k = compute_lrt(hurwitz(1)).basis.size();
	o.detail << " dim lrt(O) = " << lrt_o << ", dim lrt(k) = " << lrt_k << ";";
	o.require(lrt_o == 28, "lrt(O)");
	o.require(lrt_k == 0, "lrt(k)");
	for (int d : {1, 2, 4, 8}) {
		std::size_t s = lrt_isotypic(hurwitz(d)).sder.size();
		o.require(s == 0, "sder of Hurwitz d=" + std::to_string(d));
	}
	o.detail << " sder = 0 for Hurwitz d=1,2,4,8;";

	CubeExample ex = cube_example(pauli_sl2());
	NLRTA n = extract_nlrta(ex.lie, ex.action);
	LRTParts p = lrt_isotypic(n.a);
	std::size_t a = n.dim();
	// f mu + mu f = 0 on A, solved directly
	LinearSystem sys(a * a);
	const Matrix &mu = ex.mu_on_a;
	for (std::size_t r = 0; r < a; ++r)
		for (std::size_t c = 0; c < a; ++c) {
			SparseVec row;
			for (std::size_t k = 0; k < a; ++k) {
				row.add_term(r * a + k, mu(k, c));
				row.add_term(k * a + c, mu(r, k));
			}
			sys.add_equation(row);
		}
	std::vector<Vec> sder;
	for (const auto &m : p.sder)
		sder.push_back(m.flat());
	auto solved = sys.solve().basis;
	o.detail << " cube sder dim " << sder.size() << " = solved dim " << solved.size();
	o.require(same_span(sder, solved, a * a), "cube sder");
}

void criterion6(Outcome &o)
{
	LoopElem t = LoopElem::t(), tp = LoopElem::t_prime(), tpp = LoopElem::t_dprime();
	auto u = [](int i, LoopElem a = LoopElem(1)) { return TetraElem::u(i, std::move(a)); };
	bool uiuj = tetra_bracket(u(0), u(1)) == u(2, -t) && tetra_bracket(u(1), u(2)) == u(0, -tp) &&
	            tetra_bracket(u(2), u(0)) == u(1, -tpp);
	for (int i = 0; i < 3; ++i)
		uiuj = uiuj && tetra_bracket(u(i), u(i)).is_zero();
	o.require(uiuj, "u-basis brackets");
	auto v = v_generators();
	o.require(tetra_bracket(v[1], v[2]) == -(v[0] * (t * (LoopElem(1) - t))), "[v1,v2]");
	o.detail << " uiuj and [v1,v2] = -v0 t(1-t) exact;";

	for (int s = -3; s <= 3; ++s) {
		VsModules m = vs_modules(s);
		bool ok = m.invariant && m.type_vprime.multiplicity("V'") == 1 && m.type_vprime.total_dim() == 3 &&
		          m.type_v.multiplicity("V") == 1 && m.type_v.total_dim() == 3 && m.type_vprime.cross_checked &&
		          m.type_v.cross_checked;
		o.require(ok, "V_s/V'_s types at s=" + std::to_string(s));
	}
	o.detail << " V'_s, V_s typed for s=-3..3;";

	VClosure c = v_closure(6);
	o.detail << " closure depth 6 dim " << c.basis.size() << ", " << c.membership.tested << " S-memberships;";
	o.require(c.membership.ok() && c.membership.tested > 0, "S-membership");

	SCodimension sc = s_codimension(10);
	o.detail << " degree-10 window: dim A " << sc.a_dim << ", dim S " << sc.s_dim << ", dim(S + k(2t-1)) "
	         << sc.sum_dim;
	o.require(sc.complement_ok(), "S + k(2t-1) = A with zero intersection");
	o.require(sc.witnesses_ok && sc.membership_ok, "codimension witnesses");
}

void criterion7(Outcome &o)
{
	auto none = [](const IsotypicReport &r) {
		return r.multiplicity("U") == 0 && r.multiplicity("U'") == 0 && r.multiplicity("W") == 0;
	};
	CubeExample ex = cube_example(pauli_sl2());
	KleinGrading kg = klein_grading(ex.lie, ex.action);
	std::vector<Vec> graded = kg.g0;
	graded.insert(graded.end(), kg.g1.begin(), kg.g1.end());
	graded.insert(graded.end(), kg.g2.begin(), kg.g2.end());
	IsotypicReport iso = isotypic_s4(graded, ex.action);
	o.require(none(iso), "cube U, U', W");
	o.detail << " cube: V " << iso.multiplicity("V") << ", V' " << iso.multiplicity("V'") << ";";

	NLRTA n = extract_nlrta(ex.lie, ex.action);
	std::size_t typed = 0;
	for (std::size_t k = 0; k < n.dim(); ++k) {
		Vec x = unit_vec(n.dim(), k);
		Vec bx = n.bar().apply(x);
		IsotypicReport one = isotypic_s4(n.iota_span(x), ex.action);
		if (bx == x)
			o.require(one.multiplicity("V'") == 1 && one.total_dim() == 3, "cube bar x = x gives V'");
		else if (bx == Scalar(-1) * x)
			o.require(one.multiplicity("V") == 1 && one.total_dim() == 3, "cube bar x = -x gives V");
		else
			o.require(false, "cube basis is not bar-diagonal");
		++typed;
	}

	for (int bound : {1, 2}) {
		TetraSlice sl = tetra_slice(bound);
		IsotypicReport t = isotypic_s4(sl.action);
		o.require(none(t), "tetra slice U, U', W");
		o.detail << " tetra |s|<=" << bound << ": V " << t.multiplicity("V") << ", V' " << t.multiplicity("V'")
		         << ";";
	}
	for (int s = -2; s <= 2; ++s) {
		VsModules m = vs_modules(s);
		const LoopElem &xp = m.vprime[0].c[0], &xm = m.v[0].c[0];
		o.require(tetra_bar(xp) == xp && m.type_vprime.multiplicity("V'") == 1, "tetra bar x = x gives V'");
		o.require(tetra_bar(xm) == -xm && m.type_v.multiplicity("V") == 1, "tetra bar x = -x gives V");
		typed += 2;
	}
	o.detail << " " << typed << " bar-eigenvectors typed";
}

void criterion8(Outcome &o)
{
	AlgebraSpec o0 = octonion_malcev();
	o.require(check_malcev(o0).ok(), "O0 Malcev");
	std::size_t lie_count = 0;
	auto lie = [&](const std::string &name, const AlgebraSpec &a) {
		o.require(check_malcev(a).ok(), name + " Malcev");
		++lie_count;
	};
	for (const auto &info : catalog_list()) {
		if (info.kind != "lie_s3" && info.kind != "lie_s4" && info.kind != "lie")
			continue;
		if (info.name == "so")
			for (int n : {3, 4, 5, 6})
				lie(info.name, catalog_build(info.name, n).algebra);
		else if (info.name == "sl")
			for (int m : {1, 2, 3})
				lie(info.name, catalog_build(info.name, m).algebra);
		else if (info.name == "magic_square")
			for (int d : {1, 2, 4, 8})
				lie(info.name, catalog_build(info.name, d).algebra);
		else
			lie(info.name, catalog_build(info.name).algebra);
	}
	IdentityCheck sl = check_malcev(sl_example(2).gm);
	o.detail << " O0 and " << lie_count << " catalog Lie algebras Malcev; sl m=2 binary: " << sl.violations
	         << " violations;";
	o.require(!sl.ok(), "sl m=2 binary product should fail");
	GMAlgebra m = malcev_to_gm(o0);
	o.require(same_tables(malcev_to_gm(gm_to_malcev(m)), m), "malcev_to_gm after gm_to_malcev");
	o.require(gm_to_malcev(m).dim() == o0.dim() && same_tables(gm_to_malcev(m), o0), "gm_to_malcev after malcev_to_gm");
	o.detail << " bridge round trip is the identity on O0";
}

void criterion9(Outcome &o)
{
	for (std::size_t m : {2, 3}) {
		S3Example so = so_example(static_cast<int>(m) + 2);
		o.require(so.gm.dim() == m && so.gm.bil_is_zero(), "so JTS shape");
		TKK t = tkk(so.gm);
		std::size_t want = (m + 2) * (m + 1) / 2;
		o.detail << " m=" << m << ": dim " << t.alg.dim() << " (want " << want << ");";
		o.require(t.alg.dim() == want, "TKK dimension");
		o.require(check_jacobi(t.alg).ok(), "TKK Jacobi");
		o.require(t.iso_bijective, "map bijective");
		o.require(t.iso_homomorphism.ok() && t.iso_homomorphism.tested > 0, "map is a homomorphism");
	}
	o.detail << " maps bijective homomorphisms";
}

void criterion10(Outcome &o)
{
	CubeExample ex = cube_example(pauli_sl2());
	NLRTA n = extract_nlrta(ex.lie, ex.action);
	o.require(n.a.bil_is_zero(), "x.y = 0");
	o.require(n.bar() == Scalar(-1) * ex.mu_on_a, "bar = -mu");
	std::size_t tested = 0;
	for (const auto &c : verify_nlrta(n)) {
		o.require(c.ok(), c.name);
		tested += c.tested;
	}
	o.detail << " dim A " << n.dim() << ", product zero, bar = -mu, NLRTA identities on " << tested << " tuples;";
	GOfNLRTA g = build_g_from_nlrta(n);
	KleinGrading kg = klein_grading(ex.lie, ex.action);
	o.detail << " rebuilt: inlrt " << g.inlrt.size() << " vs g_(+,+) " << kg.t.size() << ", A " << g.a_dim
	         << " vs g0/g1/g2 " << kg.g0.size() << "/" << kg.g1.size() << "/" << kg.g2.size();
	o.require(g.inlrt.size() == kg.t.size(), "inlrt dimension");
	o.require(g.a_dim == kg.g0.size() && g.a_dim == kg.g1.size() && g.a_dim == kg.g2.size(), "graded dimensions");
	o.require(g.alg.dim() == ex.lie.dim() && check_jacobi(g.alg).ok() && check_action(g.alg, g.action).ok(),
	          "rebuilt algebra");
}

struct Criterion {
	int number;
	const char *title;
	double limit_s;  // 0 for no time limit
	std::function<void(Outcome &)> run;
};

} // namespace

int main()
{
	const std::vector<Criterion> all = {
	    {1, "GM axiom suite", 10, criterion1},
	    {2, "g(M) for G2 and O0", 0, criterion2},
	    {3, "magic square second row", 0, criterion3},
	    {4, "isotypic multiplicities", 0, criterion4},
	    {5, "lrt and skew derivations", 0, criterion5},
	    {6, "Tetrahedron algebra", 60, criterion6},
	    {7, "S4 typing of g0+g1+g2", 0, criterion7},
	    {8, "Malcev bridge", 0, criterion8},
	    {9, "TKK of the so Jordan triple", 0, criterion9},
	    {10, "normal LRTA of the cube", 0, criterion10},
	};
	int failed = 0;
	for (const auto &c : all) {
		Outcome o;
		auto t0 = Clock::now();
		try {
			c.run(o);
		} catch (const std::exception &e) {
			o.require(false, std::string("exception: ") + e.what());
		}
		double s = std::chrono::duration<double>(Clock::now() - t0).count();
		if (c.limit_s > 0 && s >= c.limit_s)
			o.require(false, "time limit " + std::to_string(c.limit_s) + " s");
		std::printf("criterion %2d: %s  %s (%.2f s%s):%s\n", c.number, o.pass ? "PASS" : "FAIL", c.title, s,
		            c.limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_s)) + " s").c_str() : "",
		            o.detail.str().c_str());
		std::fflush(stdout);
		failed += o.pass ? 0 : 1;
	}
	std::printf("%d of %zu criteria passed; exact arithmetic, tolerance 0\n", static_cast<int>(all.size()) - failed,
	            all.size());
	return failed == 0 ? 0 : 1;
}
