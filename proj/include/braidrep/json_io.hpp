#pragma once

#include <json.hpp>

#include "braidrep/braid.hpp"
#include "braidrep/quantum.hpp"
#include "braidrep/ring.hpp"
#include "braidrep/states.hpp"

namespace braidrep {

/// {"vars": [...], "terms": [{"e": [...], "c": ...}, ...]} with terms in
/// ascending lexicographic order of exponent vectors. Coefficients that fit
/// in 64 bits serialize as JSON integers, larger ones as decimal strings;
/// round trips are bit-exact either way.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

/// {"rows": r, "cols": c, "entries": [[poly, ...], ...]}.
nlohmann::json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const nlohmann::json& j);

/// {"n": n, "letters": [...]}.
nlohmann::json braid_to_json(const BraidWord& w);
BraidWord braid_from_json(const nlohmann::json& j);

/// {"sigma": [...], "factors": [...], "a1": ..., "a2": ..., "msign": ±1}.
nlohmann::json state_to_json(const DecoratedGenerator& g);

nlohmann::json markov_report_to_json(const MarkovReport& r);

}  // namespace braidrep
