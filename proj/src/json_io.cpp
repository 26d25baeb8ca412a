#include "braidrep/json_io.hpp"

#include <limits>

namespace braidrep {

using nlohmann::json;

static json coeff_to_json(const Int& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

static Int coeff_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw validation_error("coefficient must be an integer or a decimal string");
}

json poly_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["e"] = e;
        term["c"] = coeff_to_json(c);
        terms.push_back(std::move(term));
    }
    return json{{"vars", p.vars().names()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw validation_error("polynomial JSON needs 'vars' and 'terms'");
    VarSetPtr vars = make_varset(j.at("vars").get<std::vector<std::string>>());
    LaurentPoly p(vars);
    for (const json& term : j.at("terms")) {
        auto exps = term.at("e").get<std::vector<int>>();
        Int c = coeff_from_json(term.at("c"));
        p += LaurentPoly::monomial(vars, std::move(exps), std::move(c));
    }
    return p;
}

json matrix_to_json(const RingMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(poly_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RingMatrix matrix_from_json(const json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows)
        throw validation_error("matrix JSON row count mismatch");
    VarSetPtr vars;
    RingMatrix out(q_ring(), 0, 0);
    bool initialized = false;
    for (std::size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols)
            throw validation_error("matrix JSON column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            LaurentPoly p = poly_from_json(entries[r][c]);
            if (!initialized) {
                vars = p.vars_ptr();
                out = RingMatrix(vars, rows, cols);
                initialized = true;
            }
            if (p.vars() != *vars)
                throw validation_error("matrix JSON mixes variable sets");
            out.at(r, c) = p.extended(vars);
        }
    }
    if (!initialized) out = RingMatrix(q_ring(), rows, cols);
    return out;
}

json braid_to_json(const BraidWord& w) {
    return json{{"n", w.n}, {"letters", w.letters}};
}

BraidWord braid_from_json(const json& j) {
    return BraidWord(j.at("n").get<int>(), j.at("letters").get<std::vector<int>>());
}

json state_to_json(const DecoratedGenerator& g) {
    json factors = json::array();
    for (const StateFactor& f : g.factors) {
        if (f.anchor)
            factors.push_back(json{{"anchor", f.anchor_index}});
        else
            factors.push_back(json{{"sign", f.mono.sign}, {"sheet", f.mono.sheet}});
    }
    return json{{"sigma", g.sigma},
                {"factors", std::move(factors)},
                {"a1", g.a1},
                {"a2", g.a2},
                {"msign", g.msign}};
}

json markov_report_to_json(const MarkovReport& r) {
    json failures = json::array();
    for (const MarkovFailure& f : r.failures)
        failures.push_back(json{{"move", f.move},
                                {"before", poly_to_json(f.before)},
                                {"after", poly_to_json(f.after)}});
    return json{{"trials", r.trials}, {"failures", std::move(failures)}};
}

}  // namespace braidrep
