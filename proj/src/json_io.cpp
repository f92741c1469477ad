#include "symlie/json_io.hpp"

namespace symlie {

namespace {

std::string at(const std::string &where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string at(const std::string &where, const char *key) { return where + "/" + key; }

[[noreturn]] void bad(const std::string &where, const std::string &what) { throw JsonInputError(where, what); }

std::size_t index_from(const Json &j, std::size_t bound, const std::string &where)
{
	if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
		bad(where, "expected a non-negative integer index");
	auto v = j.get<unsigned long long>();
	if (v >= bound)
		bad(where, "index " + std::to_string(v) + " out of range (dim " + std::to_string(bound) + ")");
	return static_cast<std::size_t>(v);
}

const Json &member(const Json &j, const char *key, const std::string &where)
{
	if (!j.is_object())
		bad(where, "expected an object");
	auto it = j.find(key);
	if (it == j.end())
		bad(where, std::string("missing key \"") + key + "\"");
	return *it;
}

const Json &array_of(const Json &j, const std::string &where)
{
	if (!j.is_array())
		bad(where, "expected an array");
	return j;
}

// [i0, .., i_{n-1}, "c"] with every index below dim
std::pair<std::vector<std::size_t>, Scalar> table_entry(const Json &e, std::size_t n, std::size_t dim,
                                                        const std::string &where)
{
	if (!e.is_array() || e.size() != n + 1)
		bad(where, "expected " + std::to_string(n) + " indices and a scalar");
	std::vector<std::size_t> idx(n);
	for (std::size_t k = 0; k < n; ++k)
		idx[k] = index_from(e[k], dim, at(where, k));
	return {idx, scalar_from_json(e[n], at(where, n))};
}

Json scalar_text(const Scalar &c) { return c.to_string(); }

} // namespace

Json scalar_to_json(const Scalar &x)
{
	return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}};
}

Scalar scalar_from_json(const Json &j, const std::string &where)
{
	try {
		if (j.is_string())
			return Scalar::parse(j.get<std::string>());
		if (j.is_number_integer())
			return Scalar(Rational(j.get<long>()));
		if (j.is_object()) {
			const Json &a = member(j, "a", where);
			Rational b = 0;
			if (auto it = j.find("b"); it != j.end()) {
				if (!it->is_string())
					bad(at(where, "b"), "expected a rational string");
				b = parse_rational(it->get<std::string>());
			}
			if (!a.is_string())
				bad(at(where, "a"), "expected a rational string");
			return Scalar(parse_rational(a.get<std::string>()), b);
		}
	} catch (const JsonInputError &) {
		throw;
	} catch (const std::exception &e) {
		bad(where, e.what());
	}
	bad(where, "expected a scalar");
}

Json matrix_to_json(const Matrix &m)
{
	Json rows = Json::array();
	for (std::size_t i = 0; i < m.rows(); ++i) {
		Json r = Json::array();
		for (std::size_t j = 0; j < m.cols(); ++j)
			r.push_back(scalar_text(m(i, j)));
		rows.push_back(std::move(r));
	}
	return rows;
}

Matrix matrix_from_json(const Json &j, const std::string &where)
{
	array_of(j, where);
	std::size_t rows = j.size(), cols = rows == 0 ? 0 : array_of(j[0], at(where, std::size_t{0})).size();
	Matrix m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i) {
		const Json &r = array_of(j[i], at(where, i));
		if (r.size() != cols)
			bad(at(where, i), "ragged matrix row");
		for (std::size_t c = 0; c < cols; ++c)
			m(i, c) = scalar_from_json(r[c], at(at(where, i), c));
	}
	return m;
}

Json algebra_to_json(const AlgebraSpec &a)
{
	std::size_t n = a.dim();
	Json j;
	j["dim"] = n;
	Json bil = Json::array();
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			for (const auto &[k, c] : a.bil(x, y))
				bil.push_back(Json{x, y, k, scalar_text(c)});
	j["bil"] = std::move(bil);
	if (a.has_tri()) {
		Json tri = Json::array();
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y)
				for (std::size_t z = 0; z < n; ++z)
					for (const auto &[l, c] : a.tri(x, y, z))
						tri.push_back(Json{x, y, z, l, scalar_text(c)});
		j["tri"] = std::move(tri);
	}
	if (a.invol)
		j["invol"] = matrix_to_json(*a.invol);
	if (a.form)
		j["form"] = matrix_to_json(*a.form);
	if (!a.labels.empty())
		j["labels"] = a.labels;
	return j;
}

AlgebraSpec algebra_from_json(const Json &j, bool require_tri)
{
	const Json &d = member(j, "dim", "");
	if (!d.is_number_integer() || d.get<long long>() < 0)
		bad("/dim", "expected a non-negative integer");
	std::size_t n = d.get<std::size_t>();
	AlgebraSpec a(n);

	auto read_table = [&](const char *key, std::size_t arity, auto &&store) {
		const std::string where = std::string("/") + key;
		const Json &t = array_of(j.at(key), where);
		for (std::size_t e = 0; e < t.size(); ++e) {
			auto [idx, c] = table_entry(t[e], arity, n, at(where, e));
			store(idx, c);
		}
	};

	if (j.contains("bil")) {
		std::vector<Accumulator> acc(n * n, Accumulator(n));
		read_table("bil", 3, [&](const auto &idx, const Scalar &c) { acc[idx[0] * n + idx[1]].add(idx[2], c); });
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y)
				a.set_bil(x, y, acc[x * n + y].take());
	} else if (!require_tri) {
		bad("", "missing key \"bil\"");
	}

	if (j.contains("tri")) {
		a.ensure_tri();
		// tri is stored per (i, j, k); accumulate row by row to keep memory flat
		std::vector<std::vector<std::pair<std::size_t, Scalar>>> cells(n * n * n);
		read_table("tri", 4, [&](const auto &idx, const Scalar &c) {
			cells[(idx[0] * n + idx[1]) * n + idx[2]].emplace_back(idx[3], c);
		});
		Accumulator acc(n);
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y)
				for (std::size_t z = 0; z < n; ++z) {
					auto &cell = cells[(x * n + y) * n + z];
					if (cell.empty())
						continue;
					for (const auto &[l, c] : cell)
						acc.add(l, c);
					a.set_tri(x, y, z, acc.take());
				}
	} else if (require_tri) {
		bad("", "missing key \"tri\"");
	}

	auto square = [&](const char *key) {
		Matrix m = matrix_from_json(j.at(key), std::string("/") + key);
		if (m.rows() != n || m.cols() != n)
			bad(std::string("/") + key, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
		return m;
	};
	if (j.contains("invol"))
		a.invol = square("invol");
	if (j.contains("form"))
		a.form = square("form");
	if (j.contains("labels")) {
		const Json &l = array_of(j["labels"], "/labels");
		if (l.size() != n)
			bad("/labels", "expected one label per basis vector");
		for (std::size_t i = 0; i < n; ++i) {
			if (!l[i].is_string())
				bad(at("/labels", i), "expected a string");
			a.labels.push_back(l[i].get<std::string>());
		}
	}
	try {
		a.validate();
	} catch (const std::invalid_argument &e) {
		bad("", e.what());
	}
	return a;
}

Json action_to_json(const S3Action &a)
{
	Json j;
	j["phi"] = matrix_to_json(a.phi);
	j["tau"] = matrix_to_json(a.tau);
	return j;
}

Json action_to_json(const S4Action &a)
{
	Json j;
	j["tau1"] = matrix_to_json(a.tau1);
	j["tau2"] = matrix_to_json(a.tau2);
	j["phi"] = matrix_to_json(a.phi);
	j["tau"] = matrix_to_json(a.tau);
	return j;
}

S3Action s3_action_from_json(const Json &j, const std::string &where)
{
	return {matrix_from_json(member(j, "phi", where), at(where, "phi")),
	        matrix_from_json(member(j, "tau", where), at(where, "tau"))};
}

S4Action s4_action_from_json(const Json &j, const std::string &where)
{
	return {matrix_from_json(member(j, "tau1", where), at(where, "tau1")),
	        matrix_from_json(member(j, "tau2", where), at(where, "tau2")),
	        matrix_from_json(member(j, "phi", where), at(where, "phi")),
	        matrix_from_json(member(j, "tau", where), at(where, "tau"))};
}

Json nlrta_to_json(const NLRTA &n)
{
	Json j = algebra_to_json(n.a);
	std::size_t d = n.dim();
	Json delta = Json::array();
	for (int i = 0; i < 3; ++i)
		for (std::size_t x = 0; x < d; ++x)
			for (std::size_t y = 0; y < d; ++y) {
				const Matrix &m = n.d(i, x, y);
				for (std::size_t k = 0; k < d; ++k)
					for (std::size_t l = 0; l < d; ++l)
						if (!m(l, k).is_zero())
							delta.push_back(Json{i, x, y, k, l, scalar_text(m(l, k))});
			}
	j["delta"] = std::move(delta);
	return j;
}

NLRTA nlrta_from_json(const Json &j)
{
	NLRTA n;
	n.a = algebra_from_json(j);
	if (!n.a.invol)
		bad("", "missing key \"invol\"");
	std::size_t d = n.dim();
	n.delta.assign(d * d, OpTriple{Matrix(d, d), Matrix(d, d), Matrix(d, d)});
	const Json &t = array_of(member(j, "delta", ""), "/delta");
	for (std::size_t e = 0; e < t.size(); ++e) {
		const std::string where = at("/delta", e);
		if (!t[e].is_array() || t[e].size() != 6)
			bad(where, "expected [i, x, y, k, l, scalar]");
		std::size_t i = index_from(t[e][0], 3, at(where, std::size_t{0}));
		auto [idx, c] = table_entry(Json(t[e].begin() + 1, t[e].end()), 4, d, where);
		n.delta[idx[0] * d + idx[1]][i](idx[3], idx[2]) += c;
	}
	return n;
}

Json check_to_json(const IdentityCheck &c)
{
	Json j;
	j["name"] = c.name;
	j["pass"] = c.ok();
	j["tested"] = c.tested;
	j["violations"] = c.violations;
	j["witnesses"] = c.witnesses;
	return j;
}

Json isotypic_to_json(const IsotypicReport &r)
{
	Json j;
	j["group"] = r.group;
	Json mult = Json::object(), comps = Json::object();
	for (const auto &ir : r.irreps) {
		mult[ir.name] = ir.multiplicity;
		Json basis = Json::array();
		for (const auto &v : ir.basis) {
			Json row = Json::array();
			for (const auto &c : v)
				row.push_back(scalar_text(c));
			basis.push_back(std::move(row));
		}
		comps[ir.name] = std::move(basis);
	}
	j["multiplicities"] = std::move(mult);
	j["components"] = std::move(comps);
	return j;
}

Json loop_to_json(const LoopElem &x)
{
	Json num = Json::array();
	for (const auto &c : x.num().coeffs())
		num.push_back(to_string(c));
	return Json{{"num", std::move(num)}, {"et", x.et()}, {"eu", x.eu()}};
}

LoopElem loop_from_json(const Json &j, const std::string &where)
{
	const Json &num = array_of(member(j, "num", where), at(where, "num"));
	std::vector<Rational> cs;
	for (std::size_t k = 0; k < num.size(); ++k) {
		if (!num[k].is_string())
			bad(at(at(where, "num"), k), "expected a rational string");
		try {
			cs.push_back(parse_rational(num[k].get<std::string>()));
		} catch (const std::exception &e) {
			bad(at(at(where, "num"), k), e.what());
		}
	}
	auto exponent = [&](const char *key) {
		const Json &e = member(j, key, where);
		if (!e.is_number_integer() || e.get<long long>() < 0)
			bad(at(where, key), "expected a non-negative integer");
		return e.get<unsigned>();
	};
	return LoopElem(Polynomial(std::move(cs)), exponent("et"), exponent("eu"));
}

Json parse_json(const std::string &text)
{
	try {
		return Json::parse(text);
	} catch (const Json::parse_error &e) {
		throw JsonInputError("byte " + std::to_string(e.byte), e.what());
	}
}

} // namespace symlie
