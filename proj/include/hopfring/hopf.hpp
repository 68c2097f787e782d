#pragma once

#include <utility>

#include "hopfring/shuffle.hpp"

namespace hopfring {

// Element of Sym^n(B_d) written over multiset words: every key keeps its
// letters sorted ascending.
struct SymElement {
    int d = 0;
    int n = 0;
    std::map<Word, Rational> coeffs;

    static SymElement zero(int d, int n) { return SymElement{d, n, {}}; }
    static SymElement monomial(Word w, Rational c = Rational(1));

    bool is_zero() const { return coeffs.empty(); }
    // Sorts the letters before inserting.
    void add_word(Word w, const Rational& c);
    SymElement& operator+=(const SymElement& other);
    void scale(const Rational& c);
    bool operator==(const SymElement&) const = default;
};

std::string to_string(const SymElement& s);

// Tensor fixed by every permutation of the outer positions. Constructed via
// the projection pi, the symmetrization frakS, or checked explicitly.
struct InvariantElement {
    TensorElement t;

    static InvariantElement checked(TensorElement tensor);
    static InvariantElement trusted(TensorElement tensor) { return InvariantElement{std::move(tensor)}; }
    bool operator==(const InvariantElement&) const = default;
};

bool is_invariant(const TensorElement& t);

// Two-sided tensors: formal sums of word pairs (a, b) with a common inner
// degree and |a| + |b| = n. Used for coproduct identities.
struct PairTensor {
    int d = 0;
    int n = 0;
    std::map<std::pair<Word, Word>, Rational> coeffs;

    static PairTensor zero(int d, int n) { return PairTensor{d, n, {}}; }
    bool is_zero() const { return coeffs.empty(); }
    void add_term(const Word& a, const Word& b, const Rational& c);
    PairTensor& operator+=(const PairTensor& other);
    // Both components swapped; detects cocommutativity.
    PairTensor flipped() const;
    bool operator==(const PairTensor&) const = default;
};

// Averaging projection onto invariants: f goes to (1/n!) sum of all letter
// permutations of f.
InvariantElement pi(const TensorElement& f);

// Symmetrization of a multiset word: the plain sum over all n! permutations,
// so repeated letters produce multiplicities (a square maps to twice the
// diagonal tensor).
InvariantElement frakS(const SymElement& s);

// Inverse of frakS: sort the letters of every word and divide by n!.
SymElement frakS_inv(const InvariantElement& x);

// Products on invariants.
InvariantElement dot_invariant(const InvariantElement& x, const InvariantElement& y);
InvariantElement star_invariant(const GradedRing& ring, const InvariantElement& x,
                                const InvariantElement& y);

// Products transported to multiset words. dot is multiset union; star sums
// letterwise ring products over all matchings of the two words, which is the
// conjugate of star_invariant under frakS.
SymElement dot_coinv(const SymElement& s, const SymElement& t);
SymElement star_coinv(const GradedRing& ring, const SymElement& s, const SymElement& t);

// Coproduct on multiset words: w splits over all 2^n position subsets.
PairTensor delta_coinv(const SymElement& s);

// Coproduct on invariants, as the frakS-conjugate of delta_coinv.
PairTensor delta_invariant(const InvariantElement& x);

// Same map computed without frakS: the size-j component of Delta(x) is
// (1/C(n,j)) sum over words and position subsets of size j. Kept as an
// independent route for cross-checking delta_invariant.
PairTensor delta_invariant_via_subsets(const InvariantElement& x);

// Componentwise operations on pair tensors (invariant mode).
PairTensor pair_of(const InvariantElement& x, const InvariantElement& y);
PairTensor pair_dot_invariant(const PairTensor& p, const PairTensor& q);
PairTensor pair_star_invariant(const GradedRing& ring, const PairTensor& p, const PairTensor& q);
// Componentwise multiset union (coinvariant mode).
PairTensor pair_dot_coinv(const PairTensor& p, const PairTensor& q);
// Applies frakS to both components of a coinvariant-mode pair tensor.
PairTensor pair_frakS(const PairTensor& p);
// Multiplies the two sides back together with the symmetrized dot product.
TensorElement pair_collapse_dot(const PairTensor& p);

}  // namespace hopfring
