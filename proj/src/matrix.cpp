#include "hopfring/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfring {

SparseVec sparse_from_dense(const std::vector<Rational>& dense) {
    SparseVec out;
    for (int i = 0; i < static_cast<int>(dense.size()); ++i)
        if (dense[i] != 0) out.emplace_back(i, dense[i]);
    return out;
}

std::vector<Rational> sparse_to_dense(const SparseVec& v, int cols) {
    std::vector<Rational> out(cols, Rational(0));
    for (const auto& [c, val] : v) {
        if (c < 0 || c >= cols) throw std::out_of_range("sparse_to_dense: column out of range");
        out[c] = val;
    }
    return out;
}

SparseVec sparse_axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    if (c == 0) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + c * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(b[j].first, c * b[j].second);
    return out;
}

void sparse_scale(SparseVec& v, const Rational& c) {
    if (c == 0) {
        v.clear();
        return;
    }
    for (auto& [col, val] : v) val *= c;
}

Rational sparse_get(const SparseVec& v, int col) {
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != v.end() && it->first == col) return it->second;
    return Rational(0);
}

int sparse_leading(const SparseVec& v) { return v.empty() ? -1 : v.front().first; }

SparseVec sparse_normalize(std::vector<std::pair<int, Rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [c, val] : entries) {
        if (!out.empty() && out.back().first == c)
            out.back().second += val;
        else
            out.emplace_back(c, val);
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    return out;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data[i] = {{i, Rational(1)}};
    return m;
}

void RatMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("RatMatrix::set: index out of range");
    auto& row = data[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
}

Rational RatMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("RatMatrix::get: index out of range");
    return sparse_get(data[r], c);
}

void RatMatrix::append_row(SparseVec row) {
    if (!row.empty() && row.back().first >= cols)
        throw std::out_of_range("RatMatrix::append_row: column out of range");
    data.push_back(std::move(row));
    ++rows;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
    if (rows != other.rows || cols != other.cols) return false;
    for (int i = 0; i < rows; ++i) {
        if (data[i].size() != other.data[i].size()) return false;
        for (size_t k = 0; k < data[i].size(); ++k) {
            if (data[i][k].first != other.data[i][k].first) return false;
            if (data[i][k].second != other.data[i][k].second) return false;
        }
    }
    return true;
}

RatMatrix transpose(const RatMatrix& m) {
    RatMatrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (const auto& [c, v] : m.data[i]) t.data[c].emplace_back(i, v);
    return t;
}

RrefResult rref(const RatMatrix& m) {
    SpanBuilder span(m.cols);
    for (const auto& row : m.data) span.insert(row);
    RrefResult out;
    out.mat = span.matrix();
    out.pivots = span.pivots();
    return out;
}

RatMatrix kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : r.pivots) is_pivot[p] = true;

    RatMatrix out(0, m.cols);
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        // v[free] = 1, v[pivot of row i] = -row_i[free], elsewhere 0.
        std::vector<std::pair<int, Rational>> entries;
        entries.emplace_back(free, Rational(1));
        for (int i = 0; i < r.mat.rows; ++i) {
            Rational coeff = sparse_get(r.mat.data[i], free);
            if (coeff != 0) entries.emplace_back(r.pivots[i], -coeff);
        }
        out.append_row(sparse_normalize(std::move(entries)));
    }
    return out;
}

bool subspace_contains(const RatMatrix& space, const SparseVec& v) {
    if (!v.empty() && v.back().first >= space.cols)
        throw std::invalid_argument("subspace_contains: dimension mismatch");
    SparseVec rem = v;
    for (const auto& row : space.data) {
        if (rem.empty()) break;
        int p = sparse_leading(row);
        if (p < 0) continue;
        Rational c = sparse_get(rem, p);
        if (c != 0) rem = sparse_axpy(rem, -c / row.front().second, row);
    }
    return rem.empty();
}

int subspace_sum_dim(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("subspace_sum_dim: dimension mismatch");
    SpanBuilder span(a.cols);
    for (const auto& row : a.data) span.insert(row);
    for (const auto& row : b.data) span.insert(row);
    return span.dim();
}

int subspace_intersect_dim(const RatMatrix& a, const RatMatrix& b) {
    int ra = rref(a).mat.rows;
    int rb = rref(b).mat.rows;
    return ra + rb - subspace_sum_dim(a, b);
}

bool subspace_equal(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols != b.cols) return false;
    return rref(a).mat == rref(b).mat;
}

SparseVec SpanBuilder::reduce(SparseVec v) const {
    for (size_t i = 0; i < rows_.size() && !v.empty(); ++i) {
        Rational c = sparse_get(v, pivots_[i]);
        if (c != 0) v = sparse_axpy(v, -c, rows_[i]);
    }
    return v;
}

bool SpanBuilder::insert(SparseVec v) {
    if (!v.empty() && v.back().first >= cols_)
        throw std::out_of_range("SpanBuilder::insert: column out of range");
    v = reduce(std::move(v));
    if (v.empty()) return false;

    Rational lead = v.front().second;
    sparse_scale(v, Rational(1) / lead);
    int p = v.front().first;

    // Clear column p from existing rows, then insert keeping pivot order.
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rational c = sparse_get(rows_[i], p);
        if (c != 0) rows_[i] = sparse_axpy(rows_[i], -c, v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

bool SpanBuilder::contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

RatMatrix SpanBuilder::matrix() const {
    RatMatrix m(0, cols_);
    for (const auto& row : rows_) m.append_row(row);
    return m;
}

}  // namespace hopfring
