#pragma once

#include <json.hpp>

#include "en/module_algebra.hpp"

namespace en {

using Json = nlohmann::json;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Over Q: {"rows": n, "cols": m, "entries": [["p/q", ...], ...]}. Over F_p:
// {"mod": p, "rows": n, "cols": m, "entries": [[int, ...], ...]}. Loading
// also accepts a bare nested array of integers or "p/q" strings, read in f.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& f = {});
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Field& f = {});

// {"field": "q", "dim": d, "labels": [...], "mult": [[i, j, k, "c"], ...],
// "unit": [[k, "c"], ...]}
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);
// The algebra plus "delta": [[i, j, k, "c"], ...] (e_i ↦ c e_j⊗e_k),
// "counit": ["c", ...] and "antipode": [[i, k, "c"], ...].
Json hopf_to_json(const Hopf& h);
Hopf hopf_from_json(const Json& j);
// {"n": n, "algebra": {...}, "action": [[k, i, j, "c"], ...]} with
// e_k ⇀ e_i having coefficient c at e_j; the Hopf algebra is E(n).
Json module_to_json(const ModuleAlgebra& m);
ModulePtr module_from_json(const Json& j);

// Inline JSON text, or the path of a file containing it.
Json load_json_arg(const std::string& arg);

}  // namespace en
