#include "symlie/cli.hpp"

#include "symlie/catalog.hpp"
#include "symlie/json_io.hpp"
#include "symlie/tetra.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace symlie::cli {

namespace {

// usage or input problems, reported with exit code 2
class InputError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

std::string hex64(std::uint64_t h)
{
	std::ostringstream s;
	s << std::hex << std::setw(16) << std::setfill('0') << h;
	return s.str();
}

std::uint64_t fnv1a(const std::string &text)
{
	std::uint64_t h = 1469598103934665603ull;
	for (unsigned char c : text) {
		h ^= c;
		h *= 1099511628211ull;
	}
	return h;
}

std::string tuple_text(const std::vector<std::size_t> &t)
{
	std::string s = "(";
	for (std::size_t i = 0; i < t.size(); ++i)
		s += (i ? "," : "") + std::to_string(t[i]);
	return s + ")";
}

class Report {
public:
	explicit Report(std::vector<std::string> command) { json_["command"] = std::move(command); }

	void input(const std::string &path, const std::string &text)
	{
		json_["inputs"].push_back(Json{{"path", path}, {"fnv1a64", hex64(fnv1a(text))}});
	}

	template <class T>
	void info(const std::string &key, T value)
	{
		Json v(value);
		json_["info"][key] = v;
		lines_.push_back(key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()));
	}

	void check(const IdentityCheck &c)
	{
		json_["results"].push_back(check_to_json(c));
		pass_ = pass_ && c.ok();
		std::string line = (c.ok() ? "PASS " : "FAIL ") + c.name + "  tested=" + std::to_string(c.tested);
		if (!c.ok()) {
			line += " violations=" + std::to_string(c.violations) + " witnesses";
			for (std::size_t k = 0; k < c.witnesses.size() && k < 8; ++k)
				line += " " + tuple_text(c.witnesses[k]);
		}
		lines_.push_back(line);
	}

	void checks(const std::vector<IdentityCheck> &cs)
	{
		for (const auto &c : cs)
			check(c);
	}

	/// A yes/no fact; `detail` goes into both renderings.
	void fact(const std::string &name, bool ok, const std::string &detail = "")
	{
		json_["results"].push_back(Json{{"name", name}, {"pass", ok}, {"detail", detail}});
		pass_ = pass_ && ok;
		lines_.push_back((ok ? "PASS " : "FAIL ") + name + (detail.empty() ? "" : "  " + detail));
	}

	void attach(const std::string &key, Json value) { json_[key] = std::move(value); }

	bool pass() const { return pass_; }

	void finish(std::ostream &out, const std::optional<std::string> &json_path, double ms)
	{
		json_["pass"] = pass_;
		for (const auto &l : lines_)
			out << l << "\n";
		out << (pass_ ? "result: pass" : "result: FAIL") << "  (" << std::fixed << std::setprecision(1) << ms
		    << " ms)\n";
		if (json_path) {
			std::ofstream f(*json_path);
			if (!f)
				throw InputError("cannot write " + *json_path);
			f << json_.dump(2) << "\n";
		}
	}

private:
	Json json_ = Json{{"command", nullptr}, {"inputs", Json::array()}, {"info", Json::object()},
	                  {"results", Json::array()}};
	std::vector<std::string> lines_;
	bool pass_ = true;
};

std::string read_text(const std::string &path)
{
	if (path == "-") {
		std::ostringstream s;
		s << std::cin.rdbuf();
		return s.str();
	}
	std::ifstream f(path, std::ios::binary);
	if (!f)
		throw InputError(path + ": cannot read");
	std::ostringstream s;
	s << f.rdbuf();
	return s.str();
}

// A parsed input document; errors name the file.
struct Input {
	std::string path;
	Json doc;

	template <class F>
	auto with_context(F &&f) const
	{
		try {
			return f();
		} catch (const JsonInputError &e) {
			throw InputError(path + ": " + e.what());
		}
	}

	AlgebraSpec algebra(bool require_tri = false) const
	{
		return with_context([&] { return algebra_from_json(doc, require_tri); });
	}
	bool has_s4() const { return doc.contains("action") && doc["action"].contains("tau1"); }
	S3Action s3() const
	{
		return with_context([&] {
			if (!doc.contains("action"))
				throw JsonInputError("", "missing key \"action\"");
			return has_s4() ? s4_action_from_json(doc["action"]).s3() : s3_action_from_json(doc["action"]);
		});
	}
	S4Action s4() const
	{
		return with_context([&] {
			if (!has_s4())
				throw JsonInputError("/action", "an S4 action (tau1, tau2, phi, tau) is required");
			return s4_action_from_json(doc["action"]);
		});
	}
	NLRTA nlrta() const
	{
		return with_context([&] { return nlrta_from_json(doc); });
	}
};

Input load(const std::string &path, Report &r)
{
	std::string text = read_text(path);
	r.input(path, text);
	try {
		return {path, parse_json(text)};
	} catch (const JsonInputError &e) {
		throw InputError(path + ": " + e.what());
	}
}

void check_square(const Matrix &m, std::size_t n, const std::string &name)
{
	if (m.rows() != n || m.cols() != n)
		throw InputError("action/" + name + ": expected a " + std::to_string(n) + "x" + std::to_string(n) +
		                 " matrix");
}

void check_shape(const S3Action &a, std::size_t n)
{
	check_square(a.phi, n, "phi");
	check_square(a.tau, n, "tau");
}

void check_shape(const S4Action &a, std::size_t n)
{
	check_square(a.tau1, n, "tau1");
	check_square(a.tau2, n, "tau2");
	check_shape(a.s3(), n);
}

Json with_action(const AlgebraSpec &a, const std::optional<S3Action> &s3, const std::optional<S4Action> &s4)
{
	Json j = algebra_to_json(a);
	if (s4)
		j["action"] = action_to_json(*s4);
	else if (s3)
		j["action"] = action_to_json(*s3);
	return j;
}

// Writes a produced document to --out, or to stdout when there is none.
void emit(const Json &doc, const std::optional<std::string> &path, std::ostream &out)
{
	if (!path) {
		out << doc.dump() << "\n";
		return;
	}
	std::ofstream f(*path);
	if (!f)
		throw InputError("cannot write " + *path);
	f << doc.dump() << "\n";
}

void add_action_checks(Report &r, const ActionReport &a)
{
	r.check(a.relations);
	r.checks(a.automorphism);
}

void add_isotypic(Report &r, const IsotypicReport &iso, std::size_t total)
{
	std::size_t sum = 0;
	for (const auto &ir : iso.irreps) {
		r.info("m_" + ir.name, ir.multiplicity);
		sum += ir.multiplicity * ir.dim;
	}
	r.fact("dimension_bookkeeping", sum == total && iso.total_dim() == total,
	       "sum m*dim = " + std::to_string(sum) + ", total " + std::to_string(total));
	if (iso.group == "S4")
		r.fact("characters_cross_checked", iso.cross_checked);
	r.attach("isotypic", isotypic_to_json(iso));
}

// "-3..3" or a single integer
std::pair<int, int> parse_range(const std::string &s)
{
	try {
		auto dots = s.find("..");
		if (dots == std::string::npos) {
			int v = std::stoi(s);
			return {v, v};
		}
		return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
	} catch (const std::exception &) {
		throw InputError("bad range \"" + s + "\" (expected a..b)");
	}
}

std::string dims_text(const std::vector<std::size_t> &d)
{
	std::string s;
	for (auto x : d)
		s += (s.empty() ? "" : ",") + std::to_string(x);
	return s;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact construction and verification of Lie algebras with S3/S4 symmetry", "symlie"};
	app.require_subcommand(1);
	app.fallthrough();
	std::optional<std::string> json_path, out_path;
	app.add_option("--json", json_path, "Also write the report as JSON to this path");

	// catalog
	auto *catalog = app.add_subcommand("catalog", "Ready-made algebras");
	catalog->require_subcommand(1);
	auto *cat_list = catalog->add_subcommand("list", "List catalog entries");
	auto *cat_build = catalog->add_subcommand("build", "Build and re-verify an entry, printing its JSON");
	std::string cat_name;
	std::optional<int> cat_param;
	cat_build->add_option("name", cat_name)->required();
	cat_build->add_option("--param", cat_param, "Entry parameter (n, m or d)");
	cat_build->add_option("--out,-o", out_path, "Write the algebra here instead of stdout");

	// check
	auto *check = app.add_subcommand("check", "Verify identities of an algebra JSON file");
	std::string check_kind, input_path;
	check->add_option("kind", check_kind, "jacobi | gm | malcev | action | nlrta | composition | hurwitz")
	    ->required()
	    ->check(CLI::IsMember({"jacobi", "gm", "malcev", "action", "nlrta", "composition", "hurwitz"}));
	check->add_option("input", input_path, "JSON file, - for stdin")->required();

	// decompose
	auto *decompose = app.add_subcommand("decompose", "Isotypic decomposition under the stored action");
	std::string group = "s3";
	decompose->add_option("--group", group)->check(CLI::IsMember({"s3", "s4"}));
	decompose->add_option("input", input_path)->required();

	// extract
	auto *extract = app.add_subcommand("extract", "Coordinate structure of a Lie algebra with symmetry");
	std::string extract_kind;
	extract->add_option("kind", extract_kind, "gm (S3) | nlrta (S4)")
	    ->required()
	    ->check(CLI::IsMember({"gm", "nlrta"}));
	extract->add_option("input", input_path)->required();
	extract->add_option("--out,-o", out_path);

	// build
	auto *build = app.add_subcommand("build", "Constructions producing algebra JSON");
	std::string build_kind;
	std::optional<std::string> build_input;
	int ms_dim = 8;
	build
	    ->add_option("kind", build_kind,
	                 "magic-square | g-of-m | tkk | lie-from-nlrta | lrt | malcev-to-gm | gm-to-malcev")
	    ->required()
	    ->check(CLI::IsMember(
	        {"magic-square", "g-of-m", "tkk", "lie-from-nlrta", "lrt", "malcev-to-gm", "gm-to-malcev"}));
	build->add_option("input", build_input);
	build->add_option("--dim", ms_dim, "Dimension of the composition algebra (1, 2, 4, 8)");
	build->add_option("--out,-o", out_path);

	// tetra
	auto *tetra = app.add_subcommand("tetra", "Tetrahedron algebra checks on degree windows");
	tetra->require_subcommand(1);
	int bound = 6, depth = 6, degree = 10, n_max = 4;
	std::string s_range = "-3..3";
	auto *t_uiuj = tetra->add_subcommand("check-uiuj", "u-basis brackets, Jacobi and the S4-action");
	t_uiuj->add_option("--bound", bound, "Window |a|,|b| <= bound for t^a(1-t)^b");
	auto *t_vs = tetra->add_subcommand("vs", "S4-modules V_s and V'_s");
	t_vs->add_option("--s", s_range, "Range a..b");
	auto *t_vclosure = tetra->add_subcommand("vclosure", "Closure of v0, v1, v2 and S-membership");
	t_vclosure->add_option("--depth", depth);
	auto *t_scodim = tetra->add_subcommand("scodim", "Codimension of S in a degree window");
	t_scodim->add_option("--degree", degree);
	auto *t_decomp = tetra->add_subcommand("decomp", "V_s + V'_s fill the window; S4 types of the slice");
	t_decomp->add_option("--bound", bound);
	auto *t_ring = tetra->add_subcommand("ring-modules", "W_n, U_n, U'_n inside A");
	t_ring->add_option("--n", n_max);

	std::vector<std::string> rev(args.rbegin(), args.rend());
	try {
		app.parse(rev);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e, out, err);
	} catch (const CLI::ParseError &e) {
		app.exit(e, out, err);
		return exit_input;
	}

	Report report(args);
	auto start = std::chrono::steady_clock::now();
	auto finish = [&] {
		double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
		report.finish(out, json_path, ms);
		return report.pass() ? exit_pass : exit_failed;
	};

	try {
		if (cat_list->parsed()) {
			Json list = Json::array();
			for (const auto &c : catalog_list()) {
				out << std::left << std::setw(18) << c.name << std::setw(24) << c.kind
				    << std::setw(12) << (c.parameter.empty() ? "-" : c.parameter) << c.summary << "\n";
				list.push_back(
				    Json{{"name", c.name}, {"kind", c.kind}, {"parameter", c.parameter}, {"summary", c.summary}});
			}
			if (json_path) {
				std::ofstream f(*json_path);
				f << list.dump(2) << "\n";
			}
			return exit_pass;
		}

		if (cat_build->parsed()) {
			CatalogEntry e;
			try {
				e = catalog_build(cat_name, cat_param);
			} catch (const VerificationError &v) {
				err << "verification failed: " << v.what() << "\n";
				return exit_failed;
			} catch (const std::invalid_argument &v) {
				throw InputError(v.what());
			}
			Json doc = with_action(e.algebra, e.s3, e.s4);
			doc["name"] = e.name;
			doc["kind"] = e.kind;
			doc["expected"] = e.expected;
			emit(doc, out_path, out);
			if (out_path) {
				report.info("name", e.name);
				report.info("dim", e.algebra.dim());
				return finish();
			}
			return exit_pass;
		}

		if (check->parsed()) {
			Input in = load(input_path, report);
			AlgebraSpec a = in.algebra(check_kind == "gm");
			report.info("dim", a.dim());
			if (check_kind == "jacobi") {
				auto bad = check_anticommutative(a);
				IdentityCheck anti;
				anti.name = "anticommutative";
				anti.tested = a.dim() * a.dim();
				for (auto [i, j] : bad)
					anti.fail({i, j});
				report.check(anti);
				report.check(check_jacobi(a));
			} else if (check_kind == "gm") {
				GMReport g = check_gm_axioms(a);
				IdentityCheck anti;
				anti.name = "anticommutative";
				anti.tested = a.dim() * a.dim();
				for (auto [i, j] : g.not_anticommutative)
					anti.fail({i, j});
				report.check(anti);
				report.checks(g.identities);
			} else if (check_kind == "malcev") {
				report.check(check_malcev(a));
			} else if (check_kind == "action") {
				if (in.has_s4()) {
					S4Action s = in.s4();
					check_shape(s, a.dim());
					add_action_checks(report, check_action(a, s));
				} else {
					S3Action s = in.s3();
					check_shape(s, a.dim());
					add_action_checks(report, check_action(a, s));
				}
			} else if (check_kind == "nlrta") {
				report.checks(verify_nlrta(in.nlrta()));
			} else if (check_kind == "composition") {
				if (!a.form)
					throw InputError(input_path + ": missing key \"form\"");
				report.checks(check_symmetric_composition(a));
			} else {
				if (!a.form || !a.invol)
					throw InputError(input_path + ": \"form\" and \"invol\" are required");
				report.checks(check_hurwitz(a));
			}
			return finish();
		}

		if (decompose->parsed()) {
			Input in = load(input_path, report);
			AlgebraSpec a = in.algebra();
			report.info("dim", a.dim());
			report.info("group", group == "s3" ? "S3" : "S4");
			if (group == "s3") {
				S3Action s = in.s3();
				check_shape(s, a.dim());
				add_isotypic(report, isotypic_s3(s), a.dim());
			} else {
				S4Action s = in.s4();
				check_shape(s, a.dim());
				add_isotypic(report, isotypic_s4(s), a.dim());
			}
			return finish();
		}

		if (extract->parsed()) {
			Input in = load(input_path, report);
			AlgebraSpec a = in.algebra();
			try {
				if (extract_kind == "gm") {
					S3Action s = in.s3();
					check_shape(s, a.dim());
					emit(algebra_to_json(extract_gm_from_s3(a, s)), out_path, out);
				} else {
					S4Action s = in.s4();
					check_shape(s, a.dim());
					emit(nlrta_to_json(extract_nlrta(a, s)), out_path, out);
				}
			} catch (const VerificationError &v) {
				err << "verification failed: " << v.what() << "\n";
				return exit_failed;
			}
			return exit_pass;
		}

		if (build->parsed()) {
			bool needs_input = build_kind != "magic-square";
			if (needs_input && !build_input)
				throw InputError("build " + build_kind + " needs an input file");
			std::optional<Input> in;
			if (needs_input)
				in = load(*build_input, report);
			Json doc;
			try {
				if (build_kind == "magic-square") {
					if (ms_dim != 1 && ms_dim != 2 && ms_dim != 4 && ms_dim != 8)
						throw InputError("--dim must be 1, 2, 4 or 8");
					MagicSquare ms = magic_square_row2(ms_dim);
					doc = with_action(ms.lie, ms.action, std::nullopt);
				} else if (build_kind == "g-of-m") {
					GOfM g = build_g_of_M(in->algebra(true));
					doc = with_action(g.alg, g.action, std::nullopt);
				} else if (build_kind == "tkk") {
					TKK t = tkk(in->algebra(true));
					if (!t.iso_bijective || !t.iso_homomorphism.ok()) {
						err << "verification failed: the map from g(T) is not an isomorphism\n";
						return exit_failed;
					}
					doc = algebra_to_json(t.alg);
				} else if (build_kind == "lie-from-nlrta") {
					GOfNLRTA g = build_g_from_nlrta(in->nlrta());
					doc = with_action(g.alg, std::nullopt, g.action);
				} else if (build_kind == "lrt") {
					AlgebraSpec a = in->algebra();
					if (!a.invol)
						throw InputError(*build_input + ": missing key \"invol\"");
					LRT l = compute_lrt(a);
					doc = with_action(l.alg, l.action, std::nullopt);
				} else if (build_kind == "malcev-to-gm") {
					doc = algebra_to_json(malcev_to_gm(in->algebra()));
				} else {
					doc = algebra_to_json(gm_to_malcev(in->algebra(true)));
				}
			} catch (const VerificationError &v) {
				err << "verification failed: " << v.what() << "\n";
				return exit_failed;
			}
			emit(doc, out_path, out);
			if (out_path) {
				report.info("dim", doc["dim"].get<std::size_t>());
				return finish();
			}
			return exit_pass;
		}

		if (t_uiuj->parsed()) {
			report.info("window", "t^a(1-t)^b, |a|,|b| <= " + std::to_string(bound));
			IdentityCheck uiuj;
			uiuj.name = "uiuj";
			const std::array<LoopElem, 3> ti{LoopElem::t(), LoopElem::t_prime(), LoopElem::t_dprime()};
			for (std::size_t i = 0; i < 3; ++i)
				for (std::size_t j = 0; j < 3; ++j) {
					++uiuj.tested;
					TetraElem expect;
					if (j == (i + 1) % 3)
						expect = TetraElem::u(static_cast<int>((i + 2) % 3), -ti[i]);
					else if (i == (j + 1) % 3)
						expect = TetraElem::u(static_cast<int>((j + 2) % 3), ti[j]);
					if (tetra_bracket(TetraElem::u(static_cast<int>(i)), TetraElem::u(static_cast<int>(j))) != expect)
						uiuj.fail({i, j});
				}
			report.check(uiuj);
			report.check(tetra_check_jacobi(bound));
			report.checks(tetra_check_s4(bound));
			report.checks(v_generators_check());
			return finish();
		}

		if (t_vs->parsed()) {
			auto [lo, hi] = parse_range(s_range);
			report.info("s_range", std::to_string(lo) + ".." + std::to_string(hi));
			for (int s = lo; s <= hi; ++s) {
				VsModules m = vs_modules(s);
				std::string tag = "s=" + std::to_string(s);
				report.fact("invariant " + tag, m.invariant);
				report.fact("V' type " + tag,
				            m.type_vprime.multiplicity("V'") == 1 && m.type_vprime.total_dim() == 3 &&
				                m.type_vprime.cross_checked,
				            "V'_s = " + m.vprime[0].to_string() + " + S4-images");
				report.fact("V type " + tag,
				            m.type_v.multiplicity("V") == 1 && m.type_v.total_dim() == 3 && m.type_v.cross_checked,
				            "V_s = " + m.v[0].to_string() + " + S4-images");
			}
			return finish();
		}

		if (t_vclosure->parsed()) {
			if (depth < 2)
				throw InputError("--depth must be at least 2");
			VClosure c = v_closure(depth);
			report.info("depth", depth);
			report.info("dims", dims_text(c.dims));
			report.check(c.membership);
			return finish();
		}

		if (t_scodim->parsed()) {
			if (degree < 0)
				throw InputError("--degree must be non-negative");
			SCodimension s = s_codimension(degree);
			report.info("window", "p/(t(1-t))^" + std::to_string(degree) + ", deg p <= " + std::to_string(3 * degree));
			report.info("a_dim", s.a_dim);
			report.info("s_dim", s.s_dim);
			report.info("sum_dim", s.sum_dim);
			report.fact("S + k(2t-1) = A, intersection 0", s.complement_ok());
			report.fact("witnesses", s.witnesses_ok, "2t-1 not in S, (2t-1)(1-t(1-t)) in S");
			report.fact("membership", s.membership_ok);
			return finish();
		}

		if (t_decomp->parsed()) {
			if (bound < 0)
				throw InputError("--bound must be non-negative");
			VsDecomposition d = vs_decomposition(bound);
			report.info("window", "|s| <= " + std::to_string(bound));
			report.info("count", d.count);
			report.info("rank", d.rank);
			report.fact("independent and spanning", d.ok());
			TetraSlice sl = tetra_slice(bound);
			IsotypicReport iso = isotypic_s4(sl.action);
			report.fact("slice has no U, U', W",
			            iso.multiplicity("U") == 0 && iso.multiplicity("U'") == 0 && iso.multiplicity("W") == 0);
			add_isotypic(report, iso, sl.basis.size());
			return finish();
		}

		if (t_ring->parsed()) {
			if (n_max < 1)
				throw InputError("--n must be at least 1");
			for (const auto &m : ring_modules(n_max)) {
				std::string want = m.name[0] == 'W' ? "W" : m.name.rfind("U'", 0) == 0 ? "U'" : "U";
				report.fact(m.name, m.type.multiplicity(want) == 1 && m.type.total_dim() == m.basis.size(),
				            "type " + want);
			}
			return finish();
		}
	} catch (const InputError &e) {
		err << "input error: " << e.what() << "\n";
		return exit_input;
	} catch (const JsonInputError &e) {
		err << "input error: " << e.what() << "\n";
		return exit_input;
	} catch (const VerificationError &e) {
		err << "verification failed: " << e.what() << "\n";
		return exit_failed;
	} catch (const std::invalid_argument &e) {
		err << "input error: " << e.what() << "\n";
		return exit_input;
	}
	err << "nothing to do\n";
	return exit_input;
}

} // namespace symlie::cli
