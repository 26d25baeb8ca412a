#include "braidrep/burau.hpp"

namespace braidrep {

LaurentPoly q_t_power(int sheet) {
    return LaurentPoly::var_power(q_ring(), 0, 2 * sheet);
}

RingMatrix burau_generator(int n, int i, int sign) {
    if (i < 1 || i > n - 1)
        throw validation_error("generator index " + std::to_string(i) +
                               " out of range for " + std::to_string(n) + " strands");
    if (sign != 1 && sign != -1)
        throw validation_error("generator sign must be +1 or -1");
    auto vars = q_ring();
    RingMatrix m = RingMatrix::identity(vars, static_cast<std::size_t>(n));
    const auto one = LaurentPoly::constant(vars, 1);
    const std::size_t r = static_cast<std::size_t>(i - 1);
    if (sign == 1) {
        m.at(r, r) = one - q_t_power(1);
        m.at(r, r + 1) = one;
        m.at(r + 1, r) = q_t_power(1);
        m.at(r + 1, r + 1) = LaurentPoly(vars);
    } else {
        m.at(r, r) = LaurentPoly(vars);
        m.at(r, r + 1) = q_t_power(-1);
        m.at(r + 1, r) = one;
        m.at(r + 1, r + 1) = one - q_t_power(-1);
    }
    return m;
}

RingMatrix burau(const BraidWord& w) {
    RingMatrix m = RingMatrix::identity(q_ring(), static_cast<std::size_t>(w.n));
    for (int letter : w.letters) {
        int idx = letter < 0 ? -letter : letter;
        m = m * burau_generator(w.n, idx, letter < 0 ? -1 : 1);
    }
    return m;
}

RingMatrix burau_char_matrix(const BraidWord& w) {
    auto vars = q_lambda_ring();
    RingMatrix m = burau(w).extended(vars);
    const LaurentPoly lambda = LaurentPoly::var_power(vars, 1, 1);
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) -= lambda;
    return m;
}

LaurentPoly hfb_poincare_minor(const BraidWord& w, const MultiIndex& rows,
                               const MultiIndex& cols) {
    if (rows.size() != cols.size())
        throw validation_error("row and column multi-indices differ in size");
    if (rows.size() < 1)
        throw validation_error("minor needs at least one row and column");
    if (rows.ambient() != w.n || cols.ambient() != w.n)
        throw validation_error("multi-index ambient size does not match strand count");
    return burau_char_matrix(w).submatrix(rows, cols).det();
}

LaurentPoly alexander_via_minor(const BraidWord& w) {
    if (w.n < 2) throw validation_error("Alexander minor needs n >= 2");
    MultiIndex tail = MultiIndex::range(2, w.n, w.n);
    LaurentPoly minor = hfb_poincare_minor(w, tail, tail);
    std::map<std::string, LaurentPoly> assign{
        {lambda_name, LaurentPoly::constant(q_ring(), 1)}};
    return minor.substitute(assign, q_ring()).canonical_unit_form();
}

LaurentPoly morton_det(const BraidWord& w) { return burau_char_matrix(w).det(); }

bool trivial_braid_necessary(const BraidWord& w) {
    std::map<std::string, LaurentPoly> assign{
        {"q", LaurentPoly::constant(q_ring(), 1)}};
    RingMatrix at_one = burau(w).substitute(assign, q_ring());
    return at_one == RingMatrix::identity(q_ring(), static_cast<std::size_t>(w.n));
}

}  // namespace braidrep
