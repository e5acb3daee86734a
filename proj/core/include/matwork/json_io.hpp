#pragma once

#include <string>

#include <json.hpp>

#include "matwork/cochain.hpp"
#include "matwork/gradedalg.hpp"
#include "matwork/matching.hpp"
#include "matwork/matroid.hpp"
#include "matwork/mobius.hpp"
#include "matwork/tropical.hpp"

namespace matwork::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "num/den" string, integer, or integer-valued string.
mpq_class parse_rational(const json& j);
/// Integers as JSON numbers when they fit, otherwise "num/den" strings.
json rational_to_json(const mpq_class& q);

/// {"field": "Q" | {"p": 5}, "rows": [[entry, ...], ...]}
ExactMatrix parse_matrix(const json& j);
json matrix_to_json(const ExactMatrix& m);

/// {"type": "linear"|"lines"|"uniform"|"named", ...}
Matroid parse_matroid(const json& j);

/// {"rank": R, "flats_by_rank": [[[members...], ...], ...]}
json lattice_to_json(const FlatLattice& lat);

/// {"caps": [...], "degrees": [...]}
MonomialAlgebraSpec parse_algebra_spec(const json& j);

/// {"coords": ["-inf" | "num/den" | number, ...]}
TropPoint parse_trop_point(const json& j);
/// {"n": int, "terms": [{"beta": [...], "val": coord}, ...]}
TropPolynomial parse_trop_polynomial(const json& j);
json trop_value_to_json(const TropValue& v);

/// {"V": int, "edges": [[t,h],...], "faces": [[[e,sign],...],...], "closed": bool}
CellComplex2 parse_complex(const json& j);
json complex_to_json(const CellComplex2& x);

/// {"r", "r_prime", "complete", "pairs": [[members, members], ...]}
json matching_to_json(const MatchingResult& m);
/// Bipartite DOT drawing with matched edges bold.
std::string matching_to_dot(const Matroid& m, const MatchingResult& res);

/// {"r", "r_prime", "rows": [...], "cols": [...], "entries": [[...]]}
json omega_matrix_dump(const MobiusAlgebra& a, int r, int r_prime, const ExactMatrix& m);

}  // namespace matwork::io
