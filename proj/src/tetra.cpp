#include "symlie/tetra.hpp"
#include "symlie/parallel.hpp"

#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace symlie {

namespace {

const LoopElem &tp()
{
	static const LoopElem v = LoopElem::t_prime();
	return v;
}

const LoopElem &tpp()
{
	static const LoopElem v = LoopElem::t_dprime();
	return v;
}

// t_0 = t, t_1 = t', t_2 = t''
LoopElem t_i(int i)
{
	switch (((i % 3) + 3) % 3) {
	case 0:
		return LoopElem::t();
	case 1:
		return tp();
	default:
		return tpp();
	}
}

LoopElem one_minus(const LoopElem &x) { return LoopElem(1) - x; }

IdentityCheck named(std::string name)
{
	IdentityCheck c;
	c.name = std::move(name);
	return c;
}

LoopElem apply_n(const RingAuto &g, LoopElem x, int times)
{
	for (int k = 0; k < times; ++k)
		x = g(x);
	return x;
}

struct Word {
	Perm perm;
	std::vector<int> gens;  // applied last to first
};

// BFS over S4, same edge order as enumerate_s4
std::vector<Word> s4_words(std::vector<std::array<std::size_t, 3>> *edges = nullptr)
{
	auto gens = s4_generator_perms();
	std::vector<Word> out;
	std::map<Perm, std::size_t> index;
	Perm id{0, 1, 2, 3};
	out.push_back({id, {}});
	index[id] = 0;
	std::deque<std::size_t> queue{0};
	while (!queue.empty()) {
		std::size_t h = queue.front();
		queue.pop_front();
		for (std::size_t g = 0; g < gens.size(); ++g) {
			Perm p(4);
			for (std::size_t i = 0; i < 4; ++i)
				p[i] = gens[g][static_cast<std::size_t>(out[h].perm[i])];
			auto it = index.find(p);
			if (it == index.end()) {
				index[p] = out.size();
				Word w{p, out[h].gens};
				w.gens.insert(w.gens.begin(), static_cast<int>(g));
				out.push_back(w);
				queue.push_back(out.size() - 1);
			} else if (edges) {
				edges->push_back({g, h, it->second});
			}
		}
	}
	return out;
}

TetraElem apply_word(const Word &w, TetraElem x)
{
	for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it)
		x = tetra_apply(*it, x);
	return x;
}

std::string paren_group(const std::string &s, std::size_t &pos)
{
	if (pos >= s.size() || s[pos] != '(')
		throw std::invalid_argument("expected '(' in tetra element");
	int depth = 0;
	std::size_t start = pos;
	for (; pos < s.size(); ++pos) {
		if (s[pos] == '(')
			++depth;
		else if (s[pos] == ')' && --depth == 0) {
			++pos;
			return s.substr(start + 1, pos - start - 2);
		}
	}
	throw std::invalid_argument("unbalanced parentheses in tetra element");
}

Vec poly_coords(const Polynomial &p, std::size_t len)
{
	Vec v(len);
	for (std::size_t k = 0; k < p.coeffs().size(); ++k)
		v[k] = Scalar(p.coeffs()[k]);
	return v;
}

Polynomial poly_from(const Vec &v)
{
	std::vector<Rational> c;
	for (const auto &x : v) {
		if (!x.is_rational())
			throw std::logic_error("poly_from: irrational coefficient");
		c.push_back(x.a());
	}
	return Polynomial(c);
}

} // namespace

TetraElem TetraElem::u(int i, LoopElem a)
{
	TetraElem x;
	x.c.at(static_cast<std::size_t>(i)) = std::move(a);
	return x;
}

TetraElem &TetraElem::operator+=(const TetraElem &o)
{
	for (std::size_t i = 0; i < 3; ++i)
		c[i] += o.c[i];
	return *this;
}

TetraElem &TetraElem::operator-=(const TetraElem &o)
{
	for (std::size_t i = 0; i < 3; ++i)
		c[i] -= o.c[i];
	return *this;
}

TetraElem &TetraElem::operator*=(const LoopElem &a)
{
	for (auto &x : c)
		x *= a;
	return *this;
}

TetraElem TetraElem::operator-() const
{
	TetraElem r;
	for (std::size_t i = 0; i < 3; ++i)
		r.c[i] = -c[i];
	return r;
}

std::string TetraElem::to_string() const
{
	std::string s;
	for (std::size_t i = 0; i < 3; ++i) {
		if (c[i].is_zero())
			continue;
		if (!s.empty())
			s += " + ";
		s += "u" + std::to_string(i) + "*(" + c[i].to_string() + ")";
	}
	return s.empty() ? "0" : s;
}

TetraElem TetraElem::parse(std::string_view text)
{
	std::string s;
	for (char ch : text)
		if (ch != ' ' && ch != '\t' && ch != '\n')
			s.push_back(ch);
	TetraElem out;
	if (s == "0")
		return out;
	std::size_t pos = 0;
	while (pos < s.size()) {
		bool neg = false;
		if (s[pos] == '+' || s[pos] == '-') {
			neg = s[pos] == '-';
			++pos;
		}
		if (pos + 1 >= s.size() || s[pos] != 'u' || s[pos + 1] < '0' || s[pos + 1] > '2')
			throw std::invalid_argument("expected u0, u1 or u2 in tetra element '" + s + "'");
		std::size_t i = static_cast<std::size_t>(s[pos + 1] - '0');
		pos += 2;
		LoopElem a(1);
		if (pos < s.size() && s[pos] == '*') {
			++pos;
			a = LoopElem::parse(paren_group(s, pos));
		}
		out.c[i] += neg ? -a : a;
	}
	return out;
}

TetraElem tetra_bracket(const TetraElem &x, const TetraElem &y)
{
	// [u_i, u_{i+1}] = -u_{i+2} t_i
	TetraElem r;
	for (int i = 0; i < 3; ++i) {
		std::size_t a = static_cast<std::size_t>(i), b = static_cast<std::size_t>((i + 1) % 3),
		            c = static_cast<std::size_t>((i + 2) % 3);
		LoopElem k = x.c[a] * y.c[b] - x.c[b] * y.c[a];
		if (!k.is_zero())
			r.c[c] -= k * t_i(i);
	}
	return r;
}

TetraElem tetra_tau1(const TetraElem &x) { return {{x.c[0], -x.c[1], -x.c[2]}}; }
TetraElem tetra_tau2(const TetraElem &x) { return {{-x.c[0], x.c[1], -x.c[2]}}; }

TetraElem tetra_phi(const TetraElem &x)
{
	static const RingAuto phi = RingAuto::phi();
	return {{phi(x.c[2]), phi(x.c[0]), phi(x.c[1])}};
}

TetraElem tetra_tau(const TetraElem &x)
{
	// u0 a -> u0 t' tau(a), u1 a -> u2 t tau(a), u2 a -> u1 t'' tau(a)
	static const RingAuto tau = RingAuto::tau();
	return {{tp() * tau(x.c[0]), tpp() * tau(x.c[2]), LoopElem::t() * tau(x.c[1])}};
}

TetraElem tetra_apply(int generator, const TetraElem &x)
{
	switch (generator) {
	case 0:
		return tetra_tau1(x);
	case 1:
		return tetra_tau2(x);
	case 2:
		return tetra_phi(x);
	case 3:
		return tetra_tau(x);
	}
	throw std::out_of_range("tetra_apply: generator index");
}

std::vector<TetraElem> tetra_sample_basis(int bound)
{
	std::vector<TetraElem> out;
	for (int i = 0; i < 3; ++i)
		for (int a = -bound; a <= bound; ++a)
			for (int b = -bound; b <= bound; ++b)
				out.push_back(TetraElem::u(i, LoopElem::unit(a, b)));
	return out;
}

IdentityCheck tetra_check_jacobi(int bound, std::size_t samples, std::uint64_t seed)
{
	std::vector<LoopElem> mono;
	for (int a = -bound; a <= bound; ++a)
		for (int b = -bound; b <= bound; ++b)
			mono.push_back(LoopElem::unit(a, b));
	auto jac = [](const TetraElem &x, const TetraElem &y, const TetraElem &z) {
		return tetra_bracket(tetra_bracket(x, y), z) + tetra_bracket(tetra_bracket(y, z), x) +
		       tetra_bracket(tetra_bracket(z, x), y);
	};
	auto parts = parallel_map(27, [&](std::size_t ijk) {
		int i = static_cast<int>(ijk / 9), j = static_cast<int>(ijk / 3 % 3), k = static_cast<int>(ijk % 3);
		IdentityCheck part;
		for (std::size_t m = 0; m < mono.size(); ++m)
			for (int p = 0; p < 3; ++p) {
				++part.tested;
				TetraElem x = TetraElem::u(i, p == 0 ? mono[m] : LoopElem(1));
				TetraElem y = TetraElem::u(j, p == 1 ? mono[m] : LoopElem(1));
				TetraElem z = TetraElem::u(k, p == 2 ? mono[m] : LoopElem(1));
				if (!jac(x, y, z).is_zero())
					part.fail({ijk, m, static_cast<std::size_t>(p)});
			}
		return part;
	});
	IdentityCheck out = named("jacobi");
	for (auto &p : parts)
		out.merge(p);
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<std::size_t> pick(0, mono.size() - 1);
	std::uniform_int_distribution<int> which(0, 2);
	for (std::size_t s = 0; s < samples; ++s) {
		std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
		int i = which(rng), j = which(rng), k = which(rng);
		++out.tested;
		if (!jac(TetraElem::u(i, mono[a]), TetraElem::u(j, mono[b]), TetraElem::u(k, mono[c])).is_zero())
			out.fail({27 + s, a, b, c});
	}
	return out;
}

std::vector<IdentityCheck> tetra_check_s4(int bound)
{
	std::vector<TetraElem> xs = tetra_sample_basis(bound);
	std::size_t n = xs.size();
	static const char *names[] = {"hom_tau1", "hom_tau2", "hom_phi", "hom_tau"};
	std::vector<IdentityCheck> out;
	for (int g = 0; g < 4; ++g) {
		std::vector<TetraElem> img(n);
		for (std::size_t k = 0; k < n; ++k)
			img[k] = tetra_apply(g, xs[k]);
		auto rows = parallel_map(n, [&](std::size_t a) {
			IdentityCheck part;
			for (std::size_t b = a + 1; b < n; ++b) {
				++part.tested;
				if (!(tetra_apply(g, tetra_bracket(xs[a], xs[b])) == tetra_bracket(img[a], img[b])))
					part.fail({a, b});
			}
			return part;
		});
		IdentityCheck c = named(names[g]);
		for (auto &r : rows)
			c.merge(r);
		out.push_back(c);
	}
	std::vector<std::array<std::size_t, 3>> edges;
	auto words = s4_words(&edges);
	IdentityCheck rel = named("group_relations");
	for (const auto &[g, h, target] : edges)
		for (std::size_t k = 0; k < n; ++k) {
			++rel.tested;
			if (!(tetra_apply(static_cast<int>(g), apply_word(words[h], xs[k])) == apply_word(words[target], xs[k])))
				rel.fail({g, h, k});
		}
	out.push_back(rel);
	return out;
}

LoopElem tetra_product(const LoopElem &a, const LoopElem &b)
{
	static const RingAuto phi = RingAuto::phi(), tau = RingAuto::tau();
	return tau(phi(a)) * tau(phi(phi(b)));
}

LoopElem tetra_bar(const LoopElem &a)
{
	static const RingAuto tau = RingAuto::tau();
	return -(tp() * tau(a));
}

std::vector<Vec> loop_coords(const std::vector<LoopElem> &xs)
{
	unsigned e = 0;
	for (const auto &x : xs)
		e = std::max({e, x.et(), x.eu()});
	std::vector<Polynomial> ps;
	std::size_t len = 1;
	for (const auto &x : xs) {
		ps.push_back(x.numerator_over(e));
		len = std::max(len, ps.back().coeffs().size());
	}
	std::vector<Vec> out;
	for (const auto &p : ps)
		out.push_back(poly_coords(p, len));
	return out;
}

std::vector<Vec> tetra_coords(const std::vector<TetraElem> &xs)
{
	std::array<std::vector<Vec>, 3> parts;
	for (std::size_t i = 0; i < 3; ++i) {
		std::vector<LoopElem> cs;
		for (const auto &x : xs)
			cs.push_back(x.c[i]);
		parts[i] = loop_coords(cs);
	}
	std::vector<Vec> out(xs.size());
	for (std::size_t k = 0; k < xs.size(); ++k)
		for (std::size_t i = 0; i < 3; ++i)
			out[k].insert(out[k].end(), parts[i][k].begin(), parts[i][k].end());
	return out;
}

namespace {

// columns: coordinates of images[j] in `basis`
std::vector<Matrix> restrict_images(const std::vector<TetraElem> &basis,
                                    const std::vector<std::vector<TetraElem>> &images)
{
	std::vector<TetraElem> all = basis;
	for (const auto &im : images)
		all.insert(all.end(), im.begin(), im.end());
	auto co = tetra_coords(all);
	std::size_t k = basis.size();
	Span span(co.front().size());
	for (std::size_t j = 0; j < k; ++j)
		if (!span.insert(co[j]))
			throw VerificationError("tetra: basis elements are linearly dependent");
	std::vector<Matrix> out;
	for (std::size_t g = 0; g < images.size(); ++g) {
		Matrix m(k, k);
		for (std::size_t j = 0; j < k; ++j) {
			auto c = span.coords(co[k + g * k + j]);
			if (!c)
				throw VerificationError("tetra: span is not invariant");
			m.set_column(j, *c);
		}
		out.push_back(m);
	}
	return out;
}

std::array<TetraElem, 3> vprime_elems(int s)
{
	std::array<TetraElem, 3> out;
	for (int i = 0; i < 3; ++i) {
		LoopElem ti = t_i(i);
		out[static_cast<std::size_t>(i)] = TetraElem::u(i, ti.unit_inverse() * (ti * one_minus(ti)).pow(s));
	}
	return out;
}

std::array<TetraElem, 3> v_elems(int s)
{
	std::array<TetraElem, 3> out;
	for (int i = 0; i < 3; ++i) {
		LoopElem ti = t_i(i);
		out[static_cast<std::size_t>(i)] =
		    TetraElem::u(i, ti.unit_inverse() * (LoopElem(2) * ti - LoopElem(1)) * (ti * one_minus(ti)).pow(s));
	}
	return out;
}

bool span_invariant_under_group(const std::vector<TetraElem> &basis)
{
	auto words = s4_words();
	std::vector<TetraElem> all = basis;
	for (const auto &w : words)
		for (const auto &b : basis)
			all.push_back(apply_word(w, b));
	auto co = tetra_coords(all);
	Span span(co.front().size());
	for (std::size_t j = 0; j < basis.size(); ++j)
		span.insert(co[j]);
	for (std::size_t j = basis.size(); j < all.size(); ++j)
		if (!span.contains(co[j]))
			return false;
	return true;
}

} // namespace

S4Action tetra_restricted_action(const std::vector<TetraElem> &basis)
{
	std::vector<std::vector<TetraElem>> images(4);
	for (int g = 0; g < 4; ++g)
		for (const auto &b : basis)
			images[static_cast<std::size_t>(g)].push_back(tetra_apply(g, b));
	auto m = restrict_images(basis, images);
	return {m[0], m[1], m[2], m[3]};
}

VsModules vs_modules(int s)
{
	VsModules out;
	out.s = s;
	out.vprime = vprime_elems(s);
	out.v = v_elems(s);
	std::vector<TetraElem> vp(out.vprime.begin(), out.vprime.end()), vv(out.v.begin(), out.v.end());
	out.on_vprime = tetra_restricted_action(vp);
	out.on_v = tetra_restricted_action(vv);
	out.invariant = span_invariant_under_group(vp) && span_invariant_under_group(vv);
	out.type_vprime = isotypic_s4(out.on_vprime);
	out.type_v = isotypic_s4(out.on_v);
	return out;
}

std::array<TetraElem, 3> v_generators() { return vprime_elems(0); }

std::vector<IdentityCheck> v_generators_check()
{
	auto v = v_generators();
	auto s = [](int i) { return t_i(i) * one_minus(t_i(i)); };
	std::vector<IdentityCheck> out;
	auto check = [&](const char *name, const TetraElem &lhs, const TetraElem &rhs) {
		IdentityCheck c = named(name);
		++c.tested;
		if (!(lhs == rhs))
			c.fail({});
		out.push_back(c);
	};
	check("v1v2", tetra_bracket(v[1], v[2]), -(v[0] * s(0)));
	check("v2v0", tetra_bracket(v[2], v[0]), -(v[1] * s(1)));
	check("v0v1", tetra_bracket(v[0], v[1]), -(v[2] * s(2)));
	check("v1_v1v2", tetra_bracket(v[1], tetra_bracket(v[1], v[2])), -(v[2] * s(1).unit_inverse()));
	return out;
}

VClosure v_closure(int depth)
{
	if (depth < 2)
		throw std::invalid_argument("v_closure: depth must be at least 2");
	VClosure out;
	out.depth = depth;
	auto gens = v_generators();
	out.basis.assign(gens.begin(), gens.end());
	out.dims.push_back(3);
	std::vector<TetraElem> level = out.basis;
	for (int k = 2; k <= depth; ++k) {
		std::vector<TetraElem> cand;
		for (const auto &g : gens)
			for (const auto &x : level) {
				TetraElem b = tetra_bracket(g, x);
				if (!b.is_zero())
					cand.push_back(b);
			}
		std::vector<TetraElem> all = out.basis;
		all.insert(all.end(), cand.begin(), cand.end());
		auto co = tetra_coords(all);
		Span span(co.front().size());
		for (std::size_t j = 0; j < out.basis.size(); ++j)
			span.insert(co[j]);
		level.clear();
		for (std::size_t j = 0; j < cand.size(); ++j)
			if (span.insert(co[out.basis.size() + j]))
				level.push_back(cand[j]);
		out.basis.insert(out.basis.end(), level.begin(), level.end());
		out.dims.push_back(out.basis.size());
	}
	out.membership = named("coefficients_in_S");
	for (std::size_t k = 0; k < out.basis.size(); ++k)
		for (int i = 0; i < 3; ++i) {
			++out.membership.tested;
			// u_i c = v_i (c t_i)
			if (!in_S(out.basis[k].c[static_cast<std::size_t>(i)] * t_i(i)))
				out.membership.fail({k, static_cast<std::size_t>(i)});
		}
	return out;
}

SCodimension s_codimension(int degree)
{
	if (degree < 1)
		throw std::invalid_argument("s_codimension: degree must be positive");
	SCodimension out;
	out.degree = degree;
	unsigned N = static_cast<unsigned>(degree), M = N + 2;
	std::size_t len = 3 * M + 1;
	out.a_dim = 3 * N + 1;
	auto s = [](int i) { return t_i(i) * one_minus(t_i(i)); };
	// monomials s0^a s1^b s2^c with min(a,b,c) = 0, since s0 s1 s2 = 1
	std::vector<Vec> mono;
	for (unsigned a = 0; a <= M; ++a)
		for (unsigned b = 0; b <= M; ++b)
			for (unsigned c = 0; c <= M; ++c) {
				if (std::min({a, b, c}) != 0)
					continue;
				LoopElem m = s(0).pow(a) * s(1).pow(b) * s(2).pow(c);
				if (m.et() > M || m.eu() > M)
					continue;
				Polynomial p = m.numerator_over(M);
				if (p.degree() > static_cast<int>(3 * M))
					continue;
				mono.push_back(poly_coords(p, len));
			}
	// A_N inside A_M
	std::vector<Vec> a_slice;
	Polynomial shift = (Polynomial::t() * Polynomial::one_minus_t()).pow(M - N);
	for (unsigned k = 0; k <= 3 * N; ++k)
		a_slice.push_back(poly_coords(Polynomial::monomial(k) * shift, len));
	std::vector<Vec> s_slice = intersect(mono, a_slice, len);
	out.s_dim = s_slice.size();
	LoopElem odd = LoopElem(2) * LoopElem::t() - LoopElem(1);
	std::vector<Vec> sum = s_slice;
	sum.push_back(poly_coords(odd.numerator_over(M), len));
	out.sum_dim = rank(sum, len);
	out.witnesses_ok = !in_S(odd) && in_S(odd * (LoopElem(1) - s(0)));
	out.membership_ok = true;
	for (const auto &v : s_slice)
		out.membership_ok = out.membership_ok && in_S(LoopElem(poly_from(v), M, M));
	return out;
}

VsDecomposition vs_decomposition(int bound)
{
	if (bound < 0)
		throw std::invalid_argument("vs_decomposition: negative bound");
	VsDecomposition out;
	out.bound = bound;
	std::vector<TetraElem> all;
	for (int s = -bound; s <= bound; ++s) {
		auto a = vprime_elems(s), b = v_elems(s);
		all.insert(all.end(), a.begin(), a.end());
		all.insert(all.end(), b.begin(), b.end());
	}
	out.count = all.size();
	out.rank = rank(tetra_coords(all), tetra_coords(all).front().size());
	static const RingAuto phi = RingAuto::phi();
	unsigned N = static_cast<unsigned>(bound);
	std::size_t len = 4 * N + 2;
	LoopElem lift = LoopElem::t() * (LoopElem::t() * one_minus(LoopElem::t())).pow(bound);
	for (int i = 0; i < 3; ++i) {
		std::vector<Vec> cs;
		bool inside = true;
		for (const auto &x : all) {
			const LoopElem &c = x.c[static_cast<std::size_t>(i)];
			if (c.is_zero())
				continue;
			LoopElem g = apply_n(phi, c, (3 - i) % 3) * lift;
			if (g.et() != 0 || g.eu() != 0 || g.num().degree() > static_cast<int>(len) - 1) {
				inside = false;
				break;
			}
			cs.push_back(poly_coords(g.num(), len));
		}
		out.spans[static_cast<std::size_t>(i)] = inside && rank(cs, len) == len;
	}
	return out;
}

TetraSlice tetra_slice(int bound)
{
	TetraSlice out;
	for (int s = -bound; s <= bound; ++s) {
		auto a = vprime_elems(s), b = v_elems(s);
		out.basis.insert(out.basis.end(), a.begin(), a.end());
		out.basis.insert(out.basis.end(), b.begin(), b.end());
	}
	out.action = tetra_restricted_action(out.basis);
	return out;
}

std::vector<RingModule> ring_modules(int n_max)
{
	static const RingAuto phi = RingAuto::phi(), tau = RingAuto::tau();
	std::vector<RingModule> out;
	auto odd = [](int i) { return LoopElem(2) * t_i(i) - LoopElem(1); };
	auto power_sum = [&](int e) { return odd(0).pow(e) + odd(1).pow(e) + odd(2).pow(e); };
	auto restrict = [&](RingModule &m) {
		std::vector<LoopElem> all = m.basis;
		for (const auto &b : m.basis)
			all.push_back(phi(b));
		for (const auto &b : m.basis)
			all.push_back(tau(b));
		auto co = loop_coords(all);
		std::size_t k = m.basis.size();
		Span span(co.front().size());
		for (std::size_t j = 0; j < k; ++j)
			if (!span.insert(co[j]))
				throw VerificationError("ring_modules: dependent basis for " + m.name);
		Matrix ph(k, k), ta(k, k);
		for (std::size_t j = 0; j < k; ++j) {
			auto a = span.coords(co[k + j]), b = span.coords(co[2 * k + j]);
			if (!a || !b)
				throw VerificationError("ring_modules: " + m.name + " is not invariant");
			ph.set_column(j, *a);
			ta.set_column(j, *b);
		}
		m.action = {ph, ta};
		m.type = isotypic_s3(m.action);
	};
	for (int n = 1; n <= n_max; ++n) {
		RingModule w{"W" + std::to_string(n), {odd(0).pow(n) - odd(1).pow(n), odd(1).pow(n) - odd(2).pow(n)}, {}, {}};
		RingModule u{"U" + std::to_string(n), {power_sum(2 * (n - 1))}, {}, {}};
		RingModule up{"U'" + std::to_string(n), {power_sum(2 * n - 1)}, {}, {}};
		for (RingModule *m : {&w, &u, &up}) {
			restrict(*m);
			out.push_back(*m);
		}
	}
	return out;
}

} // namespace symlie
