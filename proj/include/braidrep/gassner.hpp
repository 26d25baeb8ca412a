#pragma once

#include "braidrep/braid.hpp"
#include "braidrep/ring.hpp"

namespace braidrep {

/// Running state of the colored-Burau machine: the accumulated matrix over
/// {t1..tn} and the coloring, i.e. the strand label currently sitting at
/// each position. For a state built from a braid word the coloring equals
/// braid_permutation of the word consumed so far.
struct ColoredBurauState {
    RingMatrix matrix;
    Permutation coloring;

    static ColoredBurauState initial(int n);
};

/// One letter of the colored-Burau machine. For letter +i, with
/// a = coloring(i), multiply in the matrix that is identity except the
/// block [[1−t_a, 1],[t_a, 0]] at (i, i+1), then swap the coloring entries
/// i, i+1. For −i the step is the exact two-sided inverse: block
/// [[0, t_a^{-1}],[1, 1−t_a^{-1}]] with a = coloring(i+1), then swap.
ColoredBurauState colored_burau_step(const ColoredBurauState& state, int letter);

/// The unreduced Gassner matrix of a pure braid: the terminal state of the
/// colored-Burau machine. Rejects non-pure words.
RingMatrix gassner(const BraidWord& w);

/// det of the (rows, cols) submatrix of gassner(w) − λI over {t1..tn, λ}.
LaurentPoly hfp_poincare_minor(const BraidWord& w, const MultiIndex& rows,
                               const MultiIndex& cols);

}  // namespace braidrep
