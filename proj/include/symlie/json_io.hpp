#pragma once

// JSON interchange for scalars, algebras, actions, coordinate structures and
// reports.  Table entries carry scalars in their text form ("p/q+r/s*w").

#include "symlie/coordinatize.hpp"
#include "symlie/loopring.hpp"
#include "symlie/symaction.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace symlie {

using Json = nlohmann::ordered_json;

/// Malformed input; `where` is a JSON pointer to the offending value.
class JsonInputError : public std::invalid_argument {
public:
	JsonInputError(std::string where, const std::string &what)
	    : std::invalid_argument(where + ": " + what), where_(std::move(where))
	{
	}
	const std::string &where() const { return where_; }

private:
	std::string where_;
};

/// {"a": "p/q", "b": "r/s"}.
Json scalar_to_json(const Scalar &x);
/// Accepts the object form or a text string.
Scalar scalar_from_json(const Json &j, const std::string &where = "");

/// Rows of scalar strings.
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j, const std::string &where = "");

/// {"dim", "bil", "tri"?, "invol"?, "form"?, "labels"?}; bil and tri entries
/// are [i,j,k,"c"] and [i,j,k,l,"c"] in index order.
Json algebra_to_json(const AlgebraSpec &a);
/// With require_tri the "tri" key must be present and "bil" may be absent.
AlgebraSpec algebra_from_json(const Json &j, bool require_tri = false);
inline AlgebraSpec gm_from_json(const Json &j) { return algebra_from_json(j, true); }

/// {"phi", "tau"} and {"tau1", "tau2", "phi", "tau"}.
Json action_to_json(const S3Action &a);
Json action_to_json(const S4Action &a);
S3Action s3_action_from_json(const Json &j, const std::string &where = "/action");
S4Action s4_action_from_json(const Json &j, const std::string &where = "/action");

/// Algebra JSON plus "delta": [[i,x,y,k,l,"c"], ...], delta_i(e_x,e_y)(e_k) on e_l.
Json nlrta_to_json(const NLRTA &n);
NLRTA nlrta_from_json(const Json &j);

Json check_to_json(const IdentityCheck &c);
/// {"group", "multiplicities", "components"}.
Json isotypic_to_json(const IsotypicReport &r);

/// {"num": ["c0", "c1", ...], "et": a, "eu": b}.
Json loop_to_json(const LoopElem &x);
LoopElem loop_from_json(const Json &j, const std::string &where = "");

/// Parses text, reporting syntax errors as JsonInputError with line and column.
Json parse_json(const std::string &text);

} // namespace symlie
