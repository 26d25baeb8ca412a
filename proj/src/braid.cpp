#include "braidrep/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace braidrep {

static void check_letter(int n, int letter) {
    int idx = letter < 0 ? -letter : letter;
    if (letter == 0 || idx < 1 || idx > n - 1)
        throw validation_error("letter " + std::to_string(letter) +
                               " out of range for " + std::to_string(n) + " strands");
}

BraidWord::BraidWord(int strand_count, std::vector<int> word)
    : n(strand_count), letters(std::move(word)) {
    if (n < 1) throw validation_error("strand count must be >= 1");
    for (int letter : letters) check_letter(n, letter);
}

BraidWord parse_braid(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto read_int = [&](const char* what) -> long {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits)
            throw parse_error(std::string("expected ") + what, start);
        return std::stol(text.substr(start, pos - start));
    };

    long n = read_int("strand count");
    skip_ws();
    if (pos >= text.size() || text[pos] != ':')
        throw parse_error("expected ':' after strand count", pos);
    ++pos;

    std::vector<int> letters;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        letters.push_back(static_cast<int>(read_int("letter")));
    }
    if (n < 1) throw validation_error("strand count must be >= 1");
    return BraidWord(static_cast<int>(n), std::move(letters));
}

BraidWord braid_invert(const BraidWord& w) {
    std::vector<int> out(w.letters.rbegin(), w.letters.rend());
    for (int& letter : out) letter = -letter;
    return BraidWord(w.n, std::move(out));
}

BraidWord braid_reflect(const BraidWord& w) {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int letter : w.letters) {
        int idx = letter < 0 ? -letter : letter;
        int refl = w.n - idx;
        out.push_back(letter < 0 ? -refl : refl);
    }
    return BraidWord(w.n, std::move(out));
}

int braid_exponent(const BraidWord& w) {
    int e = 0;
    for (int letter : w.letters) e += letter > 0 ? 1 : -1;
    return e;
}

BraidWord braid_concat(const BraidWord& u, const BraidWord& v) {
    if (u.n != v.n) throw validation_error("strand count mismatch in concatenation");
    std::vector<int> letters = u.letters;
    letters.insert(letters.end(), v.letters.begin(), v.letters.end());
    return BraidWord(u.n, std::move(letters));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)])
            throw validation_error("permutation images are not a bijection");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

int Permutation::image(int i) const {
    if (i < 1 || i > n()) throw validation_error("permutation input out of range");
    return images_[static_cast<std::size_t>(i - 1)];
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (image(i) != i) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw validation_error("permutation size mismatch");
    std::vector<int> images(static_cast<std::size_t>(a.n()));
    for (int i = 1; i <= a.n(); ++i)
        images[static_cast<std::size_t>(i - 1)] = a.image(b.image(i));
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (int i = 1; i <= n(); ++i)
        images[static_cast<std::size_t>(image(i) - 1)] = i;
    return Permutation(std::move(images));
}

int Permutation::parity() const {
    std::vector<bool> seen(images_.size(), false);
    int transpositions = 0;
    for (int i = 1; i <= n(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<std::size_t>(j - 1)]) {
            seen[static_cast<std::size_t>(j - 1)] = true;
            j = image(j);
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2;
}

void Permutation::swap_adjacent(int i) {
    if (i < 1 || i + 1 > n()) throw validation_error("swap position out of range");
    std::swap(images_[static_cast<std::size_t>(i - 1)], images_[static_cast<std::size_t>(i)]);
}

Permutation braid_permutation(const BraidWord& w) {
    Permutation p = Permutation::identity(w.n);
    for (int letter : w.letters) p.swap_adjacent(letter < 0 ? -letter : letter);
    return p;
}

bool is_pure(const BraidWord& w) { return braid_permutation(w).is_identity(); }

}  // namespace braidrep
