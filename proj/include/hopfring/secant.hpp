#pragma once

#include <memory>
#include <mutex>

#include "hopfring/hopf.hpp"
#include "hopfring/rng.hpp"

namespace hopfring {

// Basis bookkeeping for Sym^n(B_d): multiset words in ascending lex order.
class SymBasis {
public:
    SymBasis(const GradedRing& ring, int d, int n);

    int d() const { return d_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(words_.size()); }
    const std::vector<Word>& words() const { return words_; }
    const Word& word(int i) const { return words_.at(i); }
    int index(const Word& w) const;

    SparseVec coords(const SymElement& s) const;
    SymElement element(const SparseVec& v) const;

private:
    int d_, n_;
    std::vector<Word> words_;
    std::map<std::vector<int>, int> index_;
};

long long multiset_dim(const GradedRing& ring, int d, int n);

// Multiplication Sym^n(B_d) -> B_{dn}. Rows are indexed by multiset words,
// columns by the basis of B_{dn}.
RatMatrix mult_map(const GradedRing& ring, int d, int n);

// rref basis of the kernel of mult_map in multiset-word coordinates.
RatMatrix veronese_ideal_piece(const GradedRing& ring, int d, int n);

// A bigraded family of subspaces of the pieces Sym^n(B_d), with memoized,
// synchronized piece computation. Pieces are stored in rref.
class BigradedSubspace {
public:
    explicit BigradedSubspace(const GradedRing& ring) : ring_(&ring) {}
    virtual ~BigradedSubspace() = default;

    BigradedSubspace(const BigradedSubspace&) = delete;
    BigradedSubspace& operator=(const BigradedSubspace&) = delete;

    const GradedRing& ring() const { return *ring_; }
    const RatMatrix& piece(int d, int n) const;

protected:
    virtual RatMatrix compute_piece(int d, int n) const = 0;

private:
    const GradedRing* ring_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, RatMatrix> memo_;
};

class ZeroIdeal final : public BigradedSubspace {
public:
    using BigradedSubspace::BigradedSubspace;

protected:
    RatMatrix compute_piece(int d, int n) const override;
};

// All of Sym^n(B_d) for n >= 1, zero at n = 0.
class AugmentationIdeal final : public BigradedSubspace {
public:
    using BigradedSubspace::BigradedSubspace;

protected:
    RatMatrix compute_piece(int d, int n) const override;
};

class VeroneseIdeal final : public BigradedSubspace {
public:
    using BigradedSubspace::BigradedSubspace;

protected:
    RatMatrix compute_piece(int d, int n) const override;
};

// Piece of the join I * J at (d, n): the kernel of the coproduct composed
// with the quotient projections onto the pieces of I and J.
RatMatrix join_piece(const BigradedSubspace& I, const BigradedSubspace& J, int d, int n);

class JoinIdeal final : public BigradedSubspace {
public:
    JoinIdeal(const BigradedSubspace& I, const BigradedSubspace& J);

protected:
    RatMatrix compute_piece(int d, int n) const override;

private:
    const BigradedSubspace* I_;
    const BigradedSubspace* J_;
};

// r-th secant ideal of the Veronese embedding: r = 1 is the Veronese ideal,
// and each further step joins with it on the left.
class SecantIdeal final : public BigradedSubspace {
public:
    SecantIdeal(const GradedRing& ring, int r);
    int r() const { return r_; }

protected:
    RatMatrix compute_piece(int d, int n) const override;

private:
    int r_;
    std::vector<std::unique_ptr<BigradedSubspace>> chain_;
};

struct ProfileRow {
    int d = 0;
    int n = 0;
    long long dim = 0;
    long long generated = 0;
    long long new_gens = 0;  // dim - generated
};

struct GeneratorProfile {
    std::vector<ProfileRow> rows;
    // Largest n carrying new generators; 0 when there are none.
    int max_new_n() const;
};

// Generators of the secant ideal at fixed inner degree d: each piece (d, n)
// is compared against the span of h . f for f in pieces (d, n') with n' < n
// and h running over the multiset basis of Sym^{n-n'}(B_d).
GeneratorProfile ordinary_generator_profile(const GradedRing& ring, int r, int d, int n_max);

// Generators in the two-sided sense: lower pieces (d'', n'') act through
// star against Sym^{n''}(B_{d-d''}) and then dot against Sym^{n-n''}(B_d).
GeneratorProfile di_generator_profile(const GradedRing& ring, int r, int d_max, int n_max);

struct ClosureReport {
    long long star_checks = 0;
    long long star_failures = 0;
    long long dot_checks = 0;
    long long dot_failures = 0;
    bool pass() const { return star_failures == 0 && dot_failures == 0; }
};

// Randomized check that I is closed under star against Sym^n(B_e) and dot
// against Sym^{n'}(B_d): draws elements of pieces within the given bounds and
// tests membership of the products in the expected pieces.
ClosureReport di_ideal_closure_check(const BigradedSubspace& I, long long trials,
                                     std::uint64_t seed, int d_max, int e_max, int n_max);

}  // namespace hopfring
