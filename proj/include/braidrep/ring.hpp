#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidrep/errors.hpp"

namespace braidrep {

/// Arbitrary-precision integer coefficients. Entries of wedge matrices for
/// long words overflow 64 bits, so fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;

/// The name used for the characteristic variable everywhere (JSON, CLI).
extern const std::string lambda_name;

/// An ordered set of distinct variable names. The order fixes the layout of
/// exponent vectors for every polynomial built over it.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const VarSet& other) const { return names_ == other.names_; }
    bool operator!=(const VarSet& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names);

/// {"q"} — the single-variable ring, with t stored as q^2.
VarSetPtr q_ring();
/// {"q", "λ"}.
VarSetPtr q_lambda_ring();
/// {"t1", ..., "tn"}.
VarSetPtr strand_ring(int n);
/// {"t1", ..., "tn", "λ"}.
VarSetPtr strand_lambda_ring(int n);

/// Integer-coefficient multivariate Laurent polynomial in normal form:
/// no stored coefficient is zero, and terms are keyed by exponent vectors
/// (negative exponents allowed) in lexicographic map order.
class LaurentPoly {
public:
    using Terms = std::map<std::vector<int>, Int>;

    explicit LaurentPoly(VarSetPtr vars);

    static LaurentPoly constant(VarSetPtr vars, Int c);
    static LaurentPoly monomial(VarSetPtr vars, std::vector<int> exps, Int c);
    /// The monomial name^power, power may be negative.
    static LaurentPoly var_power(VarSetPtr vars, std::size_t var, int power);

    const VarSet& vars() const { return *vars_; }
    const VarSetPtr& vars_ptr() const { return vars_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Int coeff(const std::vector<int>& exps) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    bool operator==(const LaurentPoly& rhs) const;
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    /// Exact substitution into the target ring. Every variable of this
    /// polynomial must either appear in `assign` (with a value over
    /// `target`), or exist in `target` under the same name. A variable that
    /// occurs with a negative exponent may only be assigned a unit, i.e. a
    /// single monomial with coefficient ±1.
    LaurentPoly substitute(const std::map<std::string, LaurentPoly>& assign,
                           VarSetPtr target) const;

    /// Embed into a larger ring containing all current variables by name.
    LaurentPoly extended(VarSetPtr bigger) const;

    /// Project onto a smaller ring; every dropped variable must have
    /// exponent zero in all terms.
    LaurentPoly restricted(VarSetPtr smaller) const;

    /// Multiply by ±(monomial) so that the lexicographically minimal
    /// exponent vector (with `distinguished_var` most significant) becomes
    /// the zero vector with a positive coefficient. Zero maps to zero.
    LaurentPoly canonical_unit_form(std::size_t distinguished_var = 0) const;

    bool equal_up_to_unit(const LaurentPoly& rhs,
                          std::size_t distinguished_var = 0) const;

    bool only_even_powers_of(std::size_t var) const;

    /// Render with terms in descending lexicographic order ("t^2 - t + 1"
    /// style). If `half_var` is set, that variable's exponents are halved
    /// and it is displayed under `half_name` (used for the q -> t display).
    std::string to_string() const;
    std::string to_string_halved(std::size_t half_var,
                                 const std::string& half_name) const;

private:
    void insert_term(const std::vector<int>& exps, const Int& c);
    std::string render(std::optional<std::size_t> half_var,
                       const std::string& half_name) const;

    VarSetPtr vars_;
    Terms terms_;
};

void require_same_ring(const LaurentPoly& a, const LaurentPoly& b);

/// A sorted subset of {1..n}, possibly empty. Indexes minors, wedge basis
/// elements and idempotent summands.
class MultiIndex {
public:
    MultiIndex(int n, std::vector<int> elems);

    static MultiIndex empty(int n) { return MultiIndex(n, {}); }
    static MultiIndex full(int n);
    /// {lo, lo+1, ..., hi} inside {1..n}; empty when lo > hi.
    static MultiIndex range(int lo, int hi, int n);

    int ambient() const { return n_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elems() const { return elems_; }
    int at(int s) const { return elems_.at(static_cast<std::size_t>(s)); }
    bool contains(int i) const;
    MultiIndex complement() const;

    bool operator==(const MultiIndex& rhs) const;
    bool operator!=(const MultiIndex& rhs) const { return !(*this == rhs); }
    /// Size-then-lexicographic order, the wedge basis order.
    bool operator<(const MultiIndex& rhs) const;

    std::string to_string() const;

private:
    int n_;
    std::vector<int> elems_;
};

/// All subsets of {1..n} in size-then-lexicographic order.
std::vector<MultiIndex> all_subsets(int n);
std::vector<MultiIndex> subsets_of_size(int n, int m);

/// Dense matrix over LaurentPoly with a shared variable set.
class RingMatrix {
public:
    RingMatrix(VarSetPtr vars, std::size_t rows, std::size_t cols);

    static RingMatrix identity(VarSetPtr vars, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const VarSetPtr& vars_ptr() const { return vars_; }

    const LaurentPoly& at(std::size_t r, std::size_t c) const;
    LaurentPoly& at(std::size_t r, std::size_t c);

    RingMatrix operator*(const RingMatrix& rhs) const;
    RingMatrix operator+(const RingMatrix& rhs) const;
    RingMatrix operator-(const RingMatrix& rhs) const;
    bool operator==(const RingMatrix& rhs) const;
    bool operator!=(const RingMatrix& rhs) const { return !(*this == rhs); }

    /// The |rows|×|cols| submatrix picked by 1-based sorted multi-indices.
    RingMatrix submatrix(const MultiIndex& rows, const MultiIndex& cols) const;

    /// Exact determinant by cofactor expansion memoized over column
    /// subsets (2^n · n); matrices in scope are small.
    LaurentPoly det() const;

    RingMatrix extended(VarSetPtr bigger) const;
    RingMatrix substitute(const std::map<std::string, LaurentPoly>& assign,
                          VarSetPtr target) const;

    std::string to_string() const;

private:
    VarSetPtr vars_;
    std::size_t rows_, cols_;
    std::vector<LaurentPoly> entries_;
};

}  // namespace braidrep
