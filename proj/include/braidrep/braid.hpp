#pragma once

#include <string>
#include <vector>

#include "braidrep/errors.hpp"

namespace braidrep {

/// A word in the Artin generators of the braid group on n strands. Letter
/// i > 0 is σ_i, letter i < 0 is σ_{|i|}^{-1}; the empty word is 1_n.
/// Words read left to right: in uv, u is applied first.
struct BraidWord {
    int n;
    std::vector<int> letters;

    BraidWord(int strand_count, std::vector<int> word);
};

/// Grammar: `<n> ":" <signed-int> { ("," | space) <signed-int> }*`, with an
/// optional empty letter list and free whitespace.
BraidWord parse_braid(const std::string& text);

BraidWord braid_invert(const BraidWord& w);

/// Conjugation by the disk reflection, realized as the letter map
/// ±i -> ±(n−i).
BraidWord braid_reflect(const BraidWord& w);

int braid_exponent(const BraidWord& w);

BraidWord braid_concat(const BraidWord& u, const BraidWord& v);

/// A bijection of {1..n}. image(i) is 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int image(int i) const;
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    /// (a ∘ b)(x) = a(b(x)).
    static Permutation compose(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    /// 0 for even, 1 for odd.
    int parity() const;
    int sign() const { return parity() == 0 ? 1 : -1; }

    /// Swap the images at positions i and i+1 (1-based i).
    void swap_adjacent(int i);

    bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
    bool operator!=(const Permutation& rhs) const { return !(*this == rhs); }

private:
    std::vector<int> images_;
};

/// The strand sitting at each position after the word is performed:
/// image(p) is the label of the strand ending at position p.
Permutation braid_permutation(const BraidWord& w);

bool is_pure(const BraidWord& w);

}  // namespace braidrep
