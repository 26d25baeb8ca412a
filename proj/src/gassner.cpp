#include "braidrep/gassner.hpp"

namespace braidrep {

ColoredBurauState ColoredBurauState::initial(int n) {
    if (n < 1) throw validation_error("strand count must be >= 1");
    return ColoredBurauState{
        RingMatrix::identity(strand_ring(n), static_cast<std::size_t>(n)),
        Permutation::identity(n)};
}

// Identity except the σ_i block with the strand variable t_a.
static RingMatrix colored_generator(int n, int i, int sign, int a) {
    auto vars = strand_ring(n);
    RingMatrix m = RingMatrix::identity(vars, static_cast<std::size_t>(n));
    const auto one = LaurentPoly::constant(vars, 1);
    const auto ta = LaurentPoly::var_power(vars, static_cast<std::size_t>(a - 1), 1);
    const auto ta_inv = LaurentPoly::var_power(vars, static_cast<std::size_t>(a - 1), -1);
    const std::size_t r = static_cast<std::size_t>(i - 1);
    if (sign == 1) {
        m.at(r, r) = one - ta;
        m.at(r, r + 1) = one;
        m.at(r + 1, r) = ta;
        m.at(r + 1, r + 1) = LaurentPoly(vars);
    } else {
        m.at(r, r) = LaurentPoly(vars);
        m.at(r, r + 1) = ta_inv;
        m.at(r + 1, r) = one;
        m.at(r + 1, r + 1) = one - ta_inv;
    }
    return m;
}

ColoredBurauState colored_burau_step(const ColoredBurauState& state, int letter) {
    const int n = state.coloring.n();
    const int i = letter < 0 ? -letter : letter;
    if (letter == 0 || i < 1 || i > n - 1)
        throw validation_error("letter " + std::to_string(letter) +
                               " out of range for " + std::to_string(n) + " strands");
    const int a = letter > 0 ? state.coloring.image(i) : state.coloring.image(i + 1);
    RingMatrix step = colored_generator(n, i, letter > 0 ? 1 : -1, a);
    ColoredBurauState next{state.matrix * step, state.coloring};
    next.coloring.swap_adjacent(i);
    return next;
}

static RingMatrix colored_burau_matrix(const BraidWord& w) {
    ColoredBurauState state = ColoredBurauState::initial(w.n);
    for (int letter : w.letters) state = colored_burau_step(state, letter);
    return state.matrix;
}

RingMatrix gassner(const BraidWord& w) {
    if (!is_pure(w))
        throw validation_error("purity error: Gassner is defined for pure braids only");
    return colored_burau_matrix(w);
}

LaurentPoly hfp_poincare_minor(const BraidWord& w, const MultiIndex& rows,
                               const MultiIndex& cols) {
    if (rows.size() != cols.size())
        throw validation_error("row and column multi-indices differ in size");
    if (rows.size() < 1)
        throw validation_error("minor needs at least one row and column");
    if (rows.ambient() != w.n || cols.ambient() != w.n)
        throw validation_error("multi-index ambient size does not match strand count");
    auto vars = strand_lambda_ring(w.n);
    RingMatrix m = gassner(w).extended(vars);
    const LaurentPoly lambda = LaurentPoly::var_power(vars, static_cast<std::size_t>(w.n), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) -= lambda;
    return m.submatrix(rows, cols).det();
}

}  // namespace braidrep
