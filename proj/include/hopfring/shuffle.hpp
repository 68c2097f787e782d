#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hopfring/polyring.hpp"

namespace hopfring {

// Ordered word over the basis of B_d: letters are basis indices, the outer
// degree is the letter count. Basis index 0 is the order-largest letter
// (bases are listed in descending lex), so lexicographically smaller index
// sequences are larger words.
struct Word {
    int d = 0;
    std::vector<int> letters;

    int n() const { return static_cast<int>(letters.size()); }
    auto operator<=>(const Word&) const = default;
};

std::string to_string(const Word& w);

// Element of the (d, n) graded piece of the free tensor algebra on B_d.
struct TensorElement {
    int d = 0;
    int n = 0;
    std::map<Word, Rational> coeffs;

    static TensorElement zero(int d, int n) { return TensorElement{d, n, {}}; }
    static TensorElement monomial(Word w, Rational c = Rational(1));

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const Word& w, const Rational& c);
    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    void scale(const Rational& c);
    bool operator==(const TensorElement&) const = default;
};

std::string to_string(const TensorElement& f);

// Split of the positions [0, total): `left` receives the first factor's
// letters, `right` the second's. Both parts are strictly increasing.
struct Split {
    std::vector<int> left;
    std::vector<int> right;

    int total() const { return static_cast<int>(left.size() + right.size()); }
    static Split make(std::vector<int> left, int total);
    Split swapped() const { return Split{right, left}; }
};

// All C(n+m, n) splits with |left| = n, in colex order of the left part.
std::vector<Split> all_splits(int n, int m);

// Places a's letters at s.left and b's letters at s.right.
Word shuffle_words(const Word& a, const Word& b, const Split& s);

// f . g along one split; bilinear.
TensorElement shuffle_product(const TensorElement& f, const TensorElement& g, const Split& s);

// Sum of f . g over every split (the symmetrized dot product).
TensorElement shuffle_sum(const TensorElement& f, const TensorElement& g);

// Letterwise product in the ring; zero across different outer degrees,
// inner degrees add.
TensorElement star_words(const GradedRing& ring, const Word& u, const Word& v);
TensorElement star_product(const GradedRing& ring, const TensorElement& f,
                           const TensorElement& g);

// For words a (outer degree n+m), b (outer m) and an element f (outer n):
// a * (b . f along s) = h . (g * f along s), where g collects the letters of
// a at s.right and h multiplies a's letters at s.left into b letterwise.
// Requires every letterwise product to be a monic basis monomial, as in the
// free case; throws std::domain_error otherwise.
struct RewriteResult {
    Word h;
    Word g;
};
RewriteResult rewrite_star_shuffle(const GradedRing& ring, const Word& a, const Word& b,
                                   const TensorElement& f, const Split& s);

// Total order on words of one bidegree: compare letter sequences
// lexicographically, smaller basis index first. Returns w <= wp.
bool word_leq_order(const Word& w, const Word& wp);

// Largest word of a nonzero element, with its coefficient.
std::pair<Word, Rational> initial_term(const TensorElement& f);

// Words over free-ring letters, spelled as exponent vectors.
using FreeWord = std::vector<ExponentVector>;

FreeWord free_word(const GradedRing& ring, const Word& w);

// Subword embedding order: w <= wp iff some increasing choice of positions
// in wp dominates w letterwise (divisibility of monomials). The greedy scan
// is exact for this relation.
bool higman_leq(const FreeWord& w, const FreeWord& wp);

// Ideal-membership test by exhaustive search over position subsets.
// Exponential in the word length; rejects |wp| > 6.
bool monomial_membership_oracle(const FreeWord& w, const FreeWord& wp);

}  // namespace hopfring
