#pragma once

#include "braidrep/braid.hpp"
#include "braidrep/ring.hpp"

namespace braidrep {

/// t as an element of the q-ring: t = q^2.
LaurentPoly q_t_power(int sheet);

/// The generator matrix: identity except the 2×2 block at rows/cols
/// (i, i+1), which is [[1−t, 1],[t, 0]] for sign +1 and its inverse
/// [[0, t^{-1}],[1, 1−t^{-1}]] for sign −1. Entries live over {q}, t = q^2.
RingMatrix burau_generator(int n, int i, int sign);

/// The full (unreduced) Burau matrix of a word: the ordered product of
/// generator matrices, first letter leftmost.
RingMatrix burau(const BraidWord& w);

/// burau(w) − λ·I over {q, λ}.
RingMatrix burau_char_matrix(const BraidWord& w);

/// det of the (rows, cols) submatrix of burau_char_matrix(w). Exact, not
/// normalized. |rows| = |cols| >= 1.
LaurentPoly hfb_poincare_minor(const BraidWord& w, const MultiIndex& rows,
                               const MultiIndex& cols);

/// Canonical unit form of the {2..n} codimension-one minor at λ = 1; the
/// Alexander polynomial of the closure, up to unit. Returned over {q}.
LaurentPoly alexander_via_minor(const BraidWord& w);

/// det(burau(w) − λI), exact over {q, λ}.
LaurentPoly morton_det(const BraidWord& w);

/// True iff burau(w) at t = 1 is the identity matrix. Necessary (not
/// sufficient) for w to be the trivial braid.
bool trivial_braid_necessary(const BraidWord& w);

}  // namespace braidrep
