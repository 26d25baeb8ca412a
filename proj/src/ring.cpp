#include "braidrep/ring.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace braidrep {

const std::string lambda_name = "λ";

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw validation_error("variable names must be nonempty");
        if (!seen.insert(n).second)
            throw validation_error("duplicate variable name: " + n);
    }
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

VarSetPtr make_varset(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

VarSetPtr q_ring() {
    static const VarSetPtr v = make_varset({"q"});
    return v;
}

VarSetPtr q_lambda_ring() {
    static const VarSetPtr v = make_varset({"q", lambda_name});
    return v;
}

static std::vector<std::string> strand_names(int n) {
    if (n < 1) throw validation_error("strand ring needs n >= 1");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

VarSetPtr strand_ring(int n) { return make_varset(strand_names(n)); }

VarSetPtr strand_lambda_ring(int n) {
    auto names = strand_names(n);
    names.push_back(lambda_name);
    return make_varset(std::move(names));
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(VarSetPtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw validation_error("null variable set");
}

LaurentPoly LaurentPoly::constant(VarSetPtr vars, Int c) {
    LaurentPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(std::vector<int>(p.vars_->size(), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vars, std::vector<int> exps, Int c) {
    LaurentPoly p(std::move(vars));
    if (exps.size() != p.vars_->size())
        throw validation_error("exponent vector length does not match variable set");
    if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::var_power(VarSetPtr vars, std::size_t var, int power) {
    if (!vars || var >= vars->size())
        throw validation_error("variable index out of range");
    std::vector<int> exps(vars->size(), 0);
    exps[var] = power;
    return monomial(std::move(vars), std::move(exps), 1);
}

Int LaurentPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::insert_term(const std::vector<int>& exps, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void require_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars() != b.vars())
        throw validation_error("ring mismatch: operands live over different variable sets");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out += rhs;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    require_same_ring(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out -= rhs;
    return out;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    require_same_ring(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    require_same_ring(*this, rhs);
    LaurentPoly out(vars_);
    std::vector<int> e(vars_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    return vars() == rhs.vars() && terms_ == rhs.terms_;
}

static bool is_unit_monomial(const LaurentPoly& p) {
    if (p.terms().size() != 1) return false;
    const Int& c = p.terms().begin()->second;
    return c == 1 || c == -1;
}

// value^power for a unit monomial, power may be negative.
static LaurentPoly unit_monomial_power(const LaurentPoly& p, int power) {
    const auto& [e, c] = *p.terms().begin();
    std::vector<int> exps(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) exps[i] = e[i] * power;
    Int coeff = (c == -1 && (power % 2 != 0)) ? Int(-1) : Int(1);
    return LaurentPoly::monomial(p.vars_ptr(), std::move(exps), coeff);
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& assign,
                                    VarSetPtr target) const {
    if (!target) throw validation_error("null target variable set");
    struct Plan {
        bool assigned;
        const LaurentPoly* value;  // when assigned
        std::size_t target_index;  // when passed through
    };
    std::vector<Plan> plan(vars_->size());
    for (std::size_t v = 0; v < vars_->size(); ++v) {
        const std::string& name = vars_->name(v);
        auto it = assign.find(name);
        if (it != assign.end()) {
            if (it->second.vars() != *target)
                throw validation_error("substitution value for " + name +
                                       " is not over the target ring");
            plan[v] = Plan{true, &it->second, 0};
        } else {
            auto idx = target->index_of(name);
            if (!idx)
                throw validation_error("variable " + name +
                                       " neither assigned nor present in target ring");
            plan[v] = Plan{false, nullptr, *idx};
        }
    }
    // A variable with a negative exponent anywhere must get a unit value.
    for (std::size_t v = 0; v < vars_->size(); ++v) {
        if (!plan[v].assigned || is_unit_monomial(*plan[v].value)) continue;
        for (const auto& [e, c] : terms_) {
            if (e[v] < 0)
                throw validation_error(
                    "substitution error: non-invertible value assigned to " +
                    vars_->name(v) + ", which occurs with a negative exponent");
        }
    }

    LaurentPoly out(target);
    for (const auto& [e, c] : terms_) {
        LaurentPoly term = LaurentPoly::constant(target, c);
        std::vector<int> passthrough(target->size(), 0);
        for (std::size_t v = 0; v < vars_->size(); ++v) {
            if (e[v] == 0) continue;
            if (!plan[v].assigned) {
                passthrough[plan[v].target_index] += e[v];
            } else if (is_unit_monomial(*plan[v].value)) {
                term *= unit_monomial_power(*plan[v].value, e[v]);
            } else {
                LaurentPoly pow = LaurentPoly::constant(target, 1);
                for (int i = 0; i < e[v]; ++i) pow *= *plan[v].value;
                term *= pow;
            }
        }
        term *= LaurentPoly::monomial(target, std::move(passthrough), 1);
        out += term;
    }
    return out;
}

LaurentPoly LaurentPoly::extended(VarSetPtr bigger) const {
    if (!bigger) throw validation_error("null target variable set");
    std::vector<std::size_t> where(vars_->size());
    for (std::size_t v = 0; v < vars_->size(); ++v) {
        auto idx = bigger->index_of(vars_->name(v));
        if (!idx)
            throw validation_error("target ring lacks variable " + vars_->name(v));
        where[v] = *idx;
    }
    LaurentPoly out(bigger);
    for (const auto& [e, c] : terms_) {
        std::vector<int> exps(bigger->size(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) exps[where[v]] = e[v];
        out.terms_.emplace(std::move(exps), c);
    }
    return out;
}

LaurentPoly LaurentPoly::restricted(VarSetPtr smaller) const {
    if (!smaller) throw validation_error("null target variable set");
    std::vector<std::optional<std::size_t>> where(vars_->size());
    for (std::size_t v = 0; v < vars_->size(); ++v)
        where[v] = smaller->index_of(vars_->name(v));
    LaurentPoly out(smaller);
    for (const auto& [e, c] : terms_) {
        std::vector<int> exps(smaller->size(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (where[v]) {
                exps[*where[v]] = e[v];
            } else if (e[v] != 0) {
                throw validation_error("cannot drop variable " + vars_->name(v) +
                                       ": it occurs with nonzero exponent");
            }
        }
        out.insert_term(exps, c);
    }
    return out;
}

// Lexicographic comparison with `dist` most significant, then remaining
// variables in ring order.
static bool lex_less(const std::vector<int>& a, const std::vector<int>& b,
                     std::size_t dist) {
    if (a[dist] != b[dist]) return a[dist] < b[dist];
    return a < b;
}

LaurentPoly LaurentPoly::canonical_unit_form(std::size_t distinguished_var) const {
    if (terms_.empty()) return *this;
    if (distinguished_var >= vars_->size())
        throw validation_error("distinguished variable index out of range");
    auto min_it = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (lex_less(it->first, min_it->first, distinguished_var)) min_it = it;
    const std::vector<int>& shift = min_it->first;
    const bool flip = min_it->second < 0;
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> exps(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) exps[i] = e[i] - shift[i];
        out.terms_.emplace(std::move(exps), flip ? -c : c);
    }
    return out;
}

bool LaurentPoly::equal_up_to_unit(const LaurentPoly& rhs,
                                   std::size_t distinguished_var) const {
    require_same_ring(*this, rhs);
    return canonical_unit_form(distinguished_var) ==
           rhs.canonical_unit_form(distinguished_var);
}

bool LaurentPoly::only_even_powers_of(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] % 2 != 0) return false;
    return true;
}

std::string LaurentPoly::to_string() const { return render(std::nullopt, ""); }

std::string LaurentPoly::to_string_halved(std::size_t half_var,
                                          const std::string& half_name) const {
    return render(half_var, half_name);
}

std::string LaurentPoly::render(std::optional<std::size_t> half_var,
                                const std::string& half_name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending exponent order reads like handwritten polynomials.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> parts;
        for (std::size_t v = 0; v < e.size(); ++v) {
            int exp = e[v];
            if (exp == 0) continue;
            std::string nm = vars_->name(v);
            if (half_var && v == *half_var) {
                exp /= 2;
                nm = half_name;
            }
            parts.push_back(exp == 1 ? nm : nm + "^" + std::to_string(exp));
        }
        if (parts.empty()) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) os << "*";
                os << parts[i];
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// MultiIndex

MultiIndex::MultiIndex(int n, std::vector<int> elems)
    : n_(n), elems_(std::move(elems)) {
    if (n_ < 0) throw validation_error("multi-index ambient size must be >= 0");
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1 || elems_[i] > n_)
            throw validation_error("multi-index element " + std::to_string(elems_[i]) +
                                   " out of range 1.." + std::to_string(n_));
        if (i > 0 && elems_[i] <= elems_[i - 1])
            throw validation_error("multi-index elements must be strictly increasing");
    }
}

MultiIndex MultiIndex::full(int n) { return range(1, n, n); }

MultiIndex MultiIndex::range(int lo, int hi, int n) {
    std::vector<int> elems;
    for (int i = lo; i <= hi; ++i) elems.push_back(i);
    return MultiIndex(n, std::move(elems));
}

bool MultiIndex::contains(int i) const {
    return std::binary_search(elems_.begin(), elems_.end(), i);
}

MultiIndex MultiIndex::complement() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (!contains(i)) out.push_back(i);
    return MultiIndex(n_, std::move(out));
}

bool MultiIndex::operator==(const MultiIndex& rhs) const {
    return n_ == rhs.n_ && elems_ == rhs.elems_;
}

bool MultiIndex::operator<(const MultiIndex& rhs) const {
    if (elems_.size() != rhs.elems_.size())
        return elems_.size() < rhs.elems_.size();
    return elems_ < rhs.elems_;
}

std::string MultiIndex::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ",";
        os << elems_[i];
    }
    os << "}";
    return os.str();
}

std::vector<MultiIndex> subsets_of_size(int n, int m) {
    std::vector<MultiIndex> out;
    if (m < 0 || m > n) return out;
    std::vector<int> pick(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(n, pick);
        int i = m - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<MultiIndex> all_subsets(int n) {
    std::vector<MultiIndex> out;
    for (int m = 0; m <= n; ++m) {
        auto part = subsets_of_size(n, m);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// RingMatrix

RingMatrix::RingMatrix(VarSetPtr vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols) {
    if (!vars_) throw validation_error("null variable set");
    if (rows_ == 0 && cols_ != 0)
        throw validation_error("degenerate matrix shape");
    entries_.assign(rows_ * cols_, LaurentPoly(vars_));
}

RingMatrix RingMatrix::identity(VarSetPtr vars, std::size_t n) {
    RingMatrix m(vars, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = LaurentPoly::constant(m.vars_, 1);
    return m;
}

const LaurentPoly& RingMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw validation_error("matrix index out of range");
    return entries_[r * cols_ + c];
}

LaurentPoly& RingMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw validation_error("matrix index out of range");
    return entries_[r * cols_ + c];
}

RingMatrix RingMatrix::operator*(const RingMatrix& rhs) const {
    if (*vars_ != *rhs.vars_)
        throw validation_error("ring mismatch in matrix product");
    if (cols_ != rhs.rows_)
        throw validation_error("shape mismatch in matrix product");
    RingMatrix out(vars_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const LaurentPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const LaurentPoly& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& rhs) const {
    if (*vars_ != *rhs.vars_) throw validation_error("ring mismatch in matrix sum");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw validation_error("shape mismatch in matrix sum");
    RingMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] += rhs.entries_[i];
    return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& rhs) const {
    if (*vars_ != *rhs.vars_) throw validation_error("ring mismatch in matrix sum");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw validation_error("shape mismatch in matrix sum");
    RingMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] -= rhs.entries_[i];
    return out;
}

bool RingMatrix::operator==(const RingMatrix& rhs) const {
    return *vars_ == *rhs.vars_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

RingMatrix RingMatrix::submatrix(const MultiIndex& rows, const MultiIndex& cols) const {
    if (rows.ambient() != static_cast<int>(rows_) ||
        cols.ambient() != static_cast<int>(cols_))
        throw validation_error("multi-index ambient size does not match matrix shape");
    RingMatrix out(vars_, static_cast<std::size_t>(rows.size()),
                   static_cast<std::size_t>(cols.size()));
    for (int r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols.size(); ++c)
            out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                at(static_cast<std::size_t>(rows.at(r) - 1),
                   static_cast<std::size_t>(cols.at(c) - 1));
    return out;
}

LaurentPoly RingMatrix::det() const {
    if (rows_ != cols_) throw validation_error("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return LaurentPoly::constant(vars_, 1);
    if (n > 20) throw validation_error("determinant size out of supported range");
    // dp over column subsets: after placing rows 0..r-1, dp[mask] is the
    // signed minor using exactly the columns in mask.
    std::map<unsigned, LaurentPoly> dp;
    dp.emplace(0u, LaurentPoly::constant(vars_, 1));
    for (std::size_t r = 0; r < n; ++r) {
        std::map<unsigned, LaurentPoly> next;
        for (const auto& [mask, val] : dp) {
            if (val.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                unsigned bit = 1u << c;
                if (mask & bit) continue;
                const LaurentPoly& entry = at(r, c);
                if (entry.is_zero()) continue;
                // parity of the number of chosen columns above c
                int above = std::popcount(mask >> (c + 1));
                LaurentPoly contrib = val * entry;
                if (above % 2 != 0) contrib = -contrib;
                auto [it, inserted] = next.emplace(mask | bit, contrib);
                if (!inserted) it->second += contrib;
            }
        }
        dp = std::move(next);
    }
    auto it = dp.find((n == 32 ? 0xffffffffu : (1u << n) - 1u));
    return it == dp.end() ? LaurentPoly(vars_) : it->second;
}

RingMatrix RingMatrix::extended(VarSetPtr bigger) const {
    RingMatrix out(bigger, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i].extended(bigger);
    return out;
}

RingMatrix RingMatrix::substitute(const std::map<std::string, LaurentPoly>& assign,
                                  VarSetPtr target) const {
    RingMatrix out(target, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i].substitute(assign, target);
    return out;
}

std::string RingMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << at(r, c).to_string();
        }
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    return os.str();
}

}  // namespace braidrep
