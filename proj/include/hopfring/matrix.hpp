#pragma once

#include <utility>
#include <vector>

#include "hopfring/rational.hpp"

namespace hopfring {

// Sparse vector: (column, value) pairs, strictly increasing columns, no
// explicit zeros. The empty vector is the zero vector.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_from_dense(const std::vector<Rational>& dense);
std::vector<Rational> sparse_to_dense(const SparseVec& v, int cols);

// a + c*b
SparseVec sparse_axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
void sparse_scale(SparseVec& v, const Rational& c);
Rational sparse_get(const SparseVec& v, int col);
// Column of the first nonzero entry, or -1 for the zero vector.
int sparse_leading(const SparseVec& v);
// Sorts by column and merges duplicates; drops zeros. For vectors assembled
// out of order.
SparseVec sparse_normalize(std::vector<std::pair<int, Rational>> entries);

// Row-sparse matrix over Q. Rows are kept explicitly (possibly zero), so
// `rows` is also the row count of the stored basis when the matrix encodes a
// subspace.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVec> data;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), data(r) {}

    static RatMatrix identity(int n);

    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;
    void append_row(SparseVec row);

    bool operator==(const RatMatrix& other) const;
};

RatMatrix transpose(const RatMatrix& m);

struct RrefResult {
    RatMatrix mat;              // zero rows dropped
    std::vector<int> pivots;    // pivot column of each surviving row
};

// Reduced row echelon form. Pivot selection: leftmost nonzero column, first
// nonzero row. The result is the canonical basis of the row space, so two
// matrices have equal rref iff they span the same subspace.
RrefResult rref(const RatMatrix& m);

// Basis of the right kernel {v : m v = 0}, one row per free column of
// rref(m), in the canonical free-column construction.
RatMatrix kernel_basis(const RatMatrix& m);

// Membership of v in the row space of `space`, which must already be in rref.
// Throws on a column-count mismatch.
bool subspace_contains(const RatMatrix& space, const SparseVec& v);

int subspace_sum_dim(const RatMatrix& a, const RatMatrix& b);
int subspace_intersect_dim(const RatMatrix& a, const RatMatrix& b);
bool subspace_equal(const RatMatrix& a, const RatMatrix& b);

// Incremental rref of a growing span. insert() reduces the candidate against
// the rows collected so far and keeps the full reduced form as an invariant,
// so matrix() is always a canonical rref.
class SpanBuilder {
public:
    explicit SpanBuilder(int cols) : cols_(cols) {}

    // True iff v was independent of the current span.
    bool insert(SparseVec v);
    bool contains(SparseVec v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<int>& pivots() const { return pivots_; }
    RatMatrix matrix() const;

private:
    SparseVec reduce(SparseVec v) const;

    int cols_;
    std::vector<SparseVec> rows_;   // sorted by pivot column
    std::vector<int> pivots_;
};

}  // namespace hopfring
