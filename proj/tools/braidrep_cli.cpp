// Command-line front end: every library operation behind a subcommand with
// stable text/JSON output. Exit codes: 0 ok, 2 validation error, 3 resource
// budget exceeded, 1 internal invariant violation.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidrep/braid.hpp"
#include "braidrep/burau.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/gassner.hpp"
#include "braidrep/json_io.hpp"
#include "braidrep/quantum.hpp"
#include "braidrep/ring.hpp"
#include "braidrep/states.hpp"

namespace {

using braidrep::BraidWord;
using braidrep::LaurentPoly;
using braidrep::MultiIndex;
using braidrep::RingMatrix;
using nlohmann::json;

struct Options {
    std::string braid_text;
    std::optional<std::string> rows;
    std::optional<std::string> cols;
    std::string output = "text";
    std::string var_display = "t-if-even";
    std::uint64_t seed = 0;
    int trials = 100;
    std::uint64_t budget = braidrep::default_state_budget;
};

MultiIndex parse_multi_index(const std::string& text, int n) {
    std::vector<int> elems;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        elems.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else {
            cur.push_back(ch);
        }
    }
    flush();
    return MultiIndex(n, std::move(elems));
}

std::string render_poly(const LaurentPoly& p, const Options& opt) {
    if (opt.var_display == "t-if-even") {
        auto q = p.vars().index_of("q");
        if (q && p.only_even_powers_of(*q)) return p.to_string_halved(*q, "t");
    }
    return p.to_string();
}

std::string render_matrix(const RingMatrix& m, const Options& opt) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += render_poly(m.at(r, c), opt);
        }
        out += "]";
        if (r + 1 < m.rows()) out += "\n";
    }
    return out;
}

void emit_poly(const LaurentPoly& p, const Options& opt) {
    if (opt.output == "json")
        std::cout << braidrep::poly_to_json(p).dump(2) << "\n";
    else
        std::cout << render_poly(p, opt) << "\n";
}

void emit_matrix(const RingMatrix& m, const Options& opt) {
    if (opt.output == "json")
        std::cout << braidrep::matrix_to_json(m).dump(2) << "\n";
    else
        std::cout << render_matrix(m, opt) << "\n";
}

MultiIndex require_index(const std::optional<std::string>& text, int n,
                         const char* flag) {
    if (!text)
        throw braidrep::validation_error(std::string("missing required --") + flag);
    return parse_multi_index(*text, n);
}

std::string state_to_text(const braidrep::DecoratedGenerator& g) {
    std::string out = "sigma=[";
    for (std::size_t i = 0; i < g.sigma.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g.sigma[i]);
    }
    out += "] factors=[";
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        if (i) out += ", ";
        const auto& f = g.factors[i];
        if (f.anchor) {
            out += "anchor(" + std::to_string(f.anchor_index) + ")";
        } else {
            out += (f.mono.sign > 0 ? "+" : "-");
            out += "t^" + std::to_string(f.mono.sheet);
        }
    }
    out += "] a1=" + std::to_string(g.a1) + " a2=" + std::to_string(g.a2) +
           " msign=" + std::to_string(g.msign);
    return out;
}

int run(const std::string& command, const Options& opt) {
    BraidWord w = braidrep::parse_braid(opt.braid_text);

    if (command == "burau") {
        emit_matrix(braidrep::burau(w), opt);
    } else if (command == "gassner") {
        RingMatrix g = braidrep::gassner(w);
        if (opt.output == "json")
            emit_matrix(g.extended(braidrep::strand_lambda_ring(w.n)), opt);
        else
            emit_matrix(g, opt);
    } else if (command == "alexander") {
        emit_poly(braidrep::alexander_via_minor(w), opt);
    } else if (command == "morton") {
        emit_poly(braidrep::morton_det(w), opt);
    } else if (command == "hfb") {
        MultiIndex rows = require_index(opt.rows, w.n, "rows");
        MultiIndex cols = require_index(opt.cols, w.n, "cols");
        emit_poly(braidrep::hfb_poincare_minor(w, rows, cols), opt);
    } else if (command == "hfp") {
        MultiIndex rows = require_index(opt.rows, w.n, "rows");
        MultiIndex cols = require_index(opt.cols, w.n, "cols");
        emit_poly(braidrep::hfp_poincare_minor(w, rows, cols), opt);
    } else if (command == "wedge") {
        braidrep::WedgeMatrix wm = braidrep::wedge_rep(w);
        if (opt.output == "json") {
            json basis = json::array();
            for (const MultiIndex& b : wm.basis) basis.push_back(b.elems());
            json out{{"n", wm.n},
                     {"basis", std::move(basis)},
                     {"matrix", braidrep::matrix_to_json(wm.mat)}};
            std::cout << out.dump(2) << "\n";
        } else {
            for (const MultiIndex& b : wm.basis) std::cout << b.to_string() << " ";
            std::cout << "\n" << render_matrix(wm.mat, opt) << "\n";
        }
    } else if (command == "wedge-entry") {
        MultiIndex j = require_index(opt.rows, w.n, "rows");
        MultiIndex k = require_index(opt.cols, w.n, "cols");
        emit_poly(braidrep::wedge_entry_minor(w, j, k), opt);
    } else if (command == "qhat") {
        // The library value is the exact state sum; the CLI prints its
        // canonical unit form, like alexander.
        emit_poly(braidrep::qhat(w).canonical_unit_form(), opt);
    } else if (command == "strace") {
        emit_poly(braidrep::super_trace(w), opt);
    } else if (command == "states") {
        MultiIndex j = require_index(opt.rows, w.n, "rows");
        MultiIndex k = require_index(opt.cols, w.n, "cols");
        auto states = braidrep::enumerate_states(w, j, k, opt.budget);
        if (opt.output == "json") {
            json out = json::array();
            for (const auto& g : states) out.push_back(braidrep::state_to_json(g));
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& g : states) std::cout << state_to_text(g) << "\n";
        }
    } else if (command == "bijection") {
        auto pairs = braidrep::cfk_weight_bijection(w, opt.budget);
        if (opt.output == "json") {
            json items = json::array();
            for (const auto& [x, g] : pairs)
                items.push_back(json{{"state", braidrep::state_to_json(x)},
                                     {"gamma", braidrep::state_to_json(g)}});
            json out{{"pairs", pairs.size()}, {"items", std::move(items)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << pairs.size() << " pairs, all weight checks passed\n";
        }
    } else if (command == "tangle-delta") {
        MultiIndex jstar = require_index(opt.rows, w.n, "rows");
        MultiIndex k = require_index(opt.cols, w.n, "cols");
        emit_poly(braidrep::tangle_delta(w, jstar, k, opt.budget), opt);
    } else if (command == "markov-check") {
        auto report = braidrep::qhat_markov_check(w, opt.trials, opt.seed);
        if (opt.output == "json") {
            std::cout << braidrep::markov_report_to_json(report).dump(2) << "\n";
        } else {
            std::cout << report.trials << " trials, " << report.failures.size()
                      << " failures\n";
            for (const auto& f : report.failures)
                std::cout << "FAIL " << f.move << "\n";
        }
    } else if (command == "trivial-check") {
        bool ok = braidrep::trivial_braid_necessary(w);
        if (opt.output == "json")
            std::cout << json{{"trivial_necessary", ok}}.dump(2) << "\n";
        else
            std::cout << (ok ? "true" : "false") << "\n";
    } else {
        throw braidrep::validation_error("unknown command: " + command);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Burau/Gassner braid representations, Alexander-type "
                 "state sums and decategorified tangle invariants"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("BRAIDREP_BUDGET"))
        opt.budget = std::strtoull(env, nullptr, 10);

    const std::vector<std::string> commands = {
        "burau",  "gassner",     "alexander",    "morton",       "hfb",
        "hfp",    "wedge",       "wedge-entry",  "qhat",         "strace",
        "states", "bijection",   "tangle-delta", "markov-check", "trivial-check"};
    std::vector<CLI::App*> subs;
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--braid", opt.braid_text, "braid word, e.g. \"3: 1 -2 1 -2\"")
            ->required();
        sub->add_option("--rows", opt.rows, "first multi-index (j, or j* for tangle-delta)");
        sub->add_option("--cols", opt.cols, "second multi-index (k)");
        sub->add_option("--output", opt.output, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--var-display", opt.var_display,
                        "q, or t-if-even (render even q-powers in t)")
            ->check(CLI::IsMember({"q", "t-if-even"}));
        sub->add_option("--seed", opt.seed, "RNG seed for markov-check");
        sub->add_option("--trials", opt.trials, "trial count for markov-check");
        sub->add_option("--budget", opt.budget, "formal-state budget");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "E:2: " << e.what() << "\n";
        return 2;
    }

    try {
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (subs[i]->parsed()) return run(commands[i], opt);
        std::cerr << "E:2: no command given\n";
        return 2;
    } catch (const braidrep::budget_error& e) {
        std::cerr << "E:3: " << e.what() << "\n";
        return 3;
    } catch (const braidrep::validation_error& e) {
        std::cerr << "E:2: " << e.what() << "\n";
        return 2;
    } catch (const braidrep::internal_error& e) {
        std::cerr << "E:1: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "E:1: " << e.what() << "\n";
        return 1;
    }
}
