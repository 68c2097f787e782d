#include "hopfring/secant.hpp"

#include <algorithm>

namespace hopfring {

namespace {

void enum_multiset_words(int m, int n, int from, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v < m; ++v) {
        cur.push_back(v);
        enum_multiset_words(m, n, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SymBasis::SymBasis(const GradedRing& ring, int d, int n) : d_(d), n_(n) {
    if (d < 0 || n < 0) throw std::invalid_argument("SymBasis: negative bidegree");
    int m = ring.dim(d);
    std::vector<std::vector<int>> raw;
    std::vector<int> cur;
    enum_multiset_words(m, n, 0, cur, raw);
    words_.reserve(raw.size());
    for (auto& letters : raw) {
        index_.emplace(letters, static_cast<int>(words_.size()));
        words_.push_back(Word{d, std::move(letters)});
    }
}

int SymBasis::index(const Word& w) const {
    auto it = index_.find(w.letters);
    if (it == index_.end()) throw std::invalid_argument("SymBasis::index: unknown word");
    return it->second;
}

SparseVec SymBasis::coords(const SymElement& s) const {
    if (s.d != d_ || s.n != n_) throw std::invalid_argument("SymBasis::coords: bidegree mismatch");
    std::vector<std::pair<int, Rational>> entries;
    entries.reserve(s.coeffs.size());
    for (const auto& [w, c] : s.coeffs) entries.emplace_back(index(w), c);
    return sparse_normalize(std::move(entries));
}

SymElement SymBasis::element(const SparseVec& v) const {
    SymElement s = SymElement::zero(d_, n_);
    for (const auto& [i, c] : v) s.add_word(word(i), c);
    return s;
}

long long multiset_dim(const GradedRing& ring, int d, int n) {
    return binom_ll(ring.dim(d) + n - 1, n);
}

RatMatrix mult_map(const GradedRing& ring, int d, int n) {
    SymBasis basis(ring, d, n);
    RatMatrix m(0, ring.dim(d * n));
    for (const Word& w : basis.words()) {
        SparseVec cur = {{0, Rational(1)}};
        int deg = 0;
        for (int letter : w.letters) {
            cur = ring.multiply(deg, cur, d, {{letter, Rational(1)}});
            deg += d;
        }
        m.append_row(std::move(cur));
    }
    return m;
}

RatMatrix veronese_ideal_piece(const GradedRing& ring, int d, int n) {
    // elements of Sym^n(B_d) are row coefficient vectors, so the kernel of
    // the multiplication is the right kernel of the transpose
    return rref(kernel_basis(transpose(mult_map(ring, d, n)))).mat;
}

const RatMatrix& BigradedSubspace::piece(int d, int n) const {
    if (d < 0 || n < 0) throw std::invalid_argument("BigradedSubspace::piece: negative bidegree");
    std::pair<int, int> key(d, n);
    {
        std::scoped_lock lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    RatMatrix m = compute_piece(d, n);
    std::scoped_lock lock(mu_);
    return memo_.emplace(key, std::move(m)).first->second;
}

RatMatrix ZeroIdeal::compute_piece(int d, int n) const {
    return RatMatrix(0, static_cast<int>(multiset_dim(ring(), d, n)));
}

RatMatrix AugmentationIdeal::compute_piece(int d, int n) const {
    int cols = static_cast<int>(multiset_dim(ring(), d, n));
    if (n == 0) return RatMatrix(0, cols);
    return RatMatrix::identity(cols);
}

RatMatrix VeroneseIdeal::compute_piece(int d, int n) const {
    return veronese_ideal_piece(ring(), d, n);
}

namespace {

// Images of the ambient basis vectors in Sym^i(B_d) / piece, as sparse
// vectors over the non-pivot coordinates.
struct QuotientData {
    int qdim = 0;
    std::vector<SparseVec> mod;
};

QuotientData quotient_of(const RatMatrix& piece, int ambient) {
    QuotientData q;
    std::vector<int> qpos(ambient, -1);
    std::vector<int> pivot_row(ambient, -1);
    for (int i = 0; i < piece.rows; ++i) pivot_row[piece.data[i].front().first] = i;
    for (int c = 0; c < ambient; ++c)
        if (pivot_row[c] < 0) qpos[c] = q.qdim++;

    q.mod.resize(ambient);
    for (int c = 0; c < ambient; ++c) {
        if (pivot_row[c] < 0) {
            q.mod[c] = {{qpos[c], Rational(1)}};
        } else {
            // e_c = row - (row - e_c): modulo the piece, minus the tail
            for (const auto& [col, val] : piece.data[pivot_row[c]])
                if (col != c) q.mod[c].emplace_back(qpos[col], -val);
        }
    }
    return q;
}

}  // namespace

RatMatrix join_piece(const BigradedSubspace& I, const BigradedSubspace& J, int d, int n) {
    const GradedRing& ring = I.ring();
    if (&ring != &J.ring()) throw std::invalid_argument("join_piece: ideals over different rings");

    SymBasis domain(ring, d, n);
    std::vector<SymBasis> bases;
    bases.reserve(n + 1);
    for (int i = 0; i <= n; ++i) bases.emplace_back(ring, d, i);

    std::vector<QuotientData> qI(n + 1), qJ(n + 1);
    std::vector<int> offset(n + 2, 0);
    for (int i = 0; i <= n; ++i) {
        qI[i] = quotient_of(I.piece(d, i), bases[i].size());
        qJ[n - i] = quotient_of(J.piece(d, n - i), bases[n - i].size());
    }
    for (int i = 0; i <= n; ++i) offset[i + 1] = offset[i] + qI[i].qdim * qJ[n - i].qdim;

    // rows: quotient pairs over all splits sizes; cols: domain words
    std::vector<std::vector<std::pair<int, Rational>>> rows(offset[n + 1]);
    for (int c = 0; c < domain.size(); ++c) {
        const Word& w = domain.word(c);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Word left{d, {}}, right{d, {}};
            for (int i = 0; i < n; ++i)
                (mask & (1u << i) ? left : right).letters.push_back(w.letters[i]);
            int i = left.n();
            const SparseVec& lmod = qI[i].mod[bases[i].index(left)];
            const SparseVec& rmod = qJ[n - i].mod[bases[n - i].index(right)];
            for (const auto& [lp, lv] : lmod)
                for (const auto& [rp, rv] : rmod)
                    rows[offset[i] + lp * qJ[n - i].qdim + rp].emplace_back(c, lv * rv);
        }
    }

    RatMatrix m(0, domain.size());
    for (auto& entries : rows) m.append_row(sparse_normalize(std::move(entries)));
    return rref(kernel_basis(m)).mat;
}

JoinIdeal::JoinIdeal(const BigradedSubspace& I, const BigradedSubspace& J)
    : BigradedSubspace(I.ring()), I_(&I), J_(&J) {
    if (&I.ring() != &J.ring())
        throw std::invalid_argument("JoinIdeal: ideals over different rings");
}

RatMatrix JoinIdeal::compute_piece(int d, int n) const { return join_piece(*I_, *J_, d, n); }

SecantIdeal::SecantIdeal(const GradedRing& ring, int r) : BigradedSubspace(ring), r_(r) {
    if (r < 1) throw std::invalid_argument("SecantIdeal: r must be at least 1");
    chain_.push_back(std::make_unique<VeroneseIdeal>(ring));
    for (int k = 1; k < r; ++k)
        chain_.push_back(std::make_unique<JoinIdeal>(*chain_[0], *chain_[k - 1]));
}

RatMatrix SecantIdeal::compute_piece(int d, int n) const {
    return chain_.back()->piece(d, n);
}

int GeneratorProfile::max_new_n() const {
    int best = 0;
    for (const auto& row : rows)
        if (row.new_gens > 0) best = std::max(best, row.n);
    return best;
}

GeneratorProfile ordinary_generator_profile(const GradedRing& ring, int r, int d, int n_max) {
    SecantIdeal ideal(ring, r);
    GeneratorProfile out;
    for (int n = 1; n <= n_max; ++n) {
        SymBasis domain(ring, d, n);
        const RatMatrix& piece = ideal.piece(d, n);
        SpanBuilder span(domain.size());
        for (int np = 1; np < n; ++np) {
            const RatMatrix& lower = ideal.piece(d, np);
            if (lower.rows == 0) continue;
            SymBasis lower_basis(ring, d, np);
            SymBasis mult_basis(ring, d, n - np);
            for (int i = 0; i < lower.rows; ++i) {
                SymElement f = lower_basis.element(lower.data[i]);
                for (const Word& h : mult_basis.words())
                    span.insert(domain.coords(dot_coinv(SymElement::monomial(h), f)));
            }
        }
        out.rows.push_back(ProfileRow{d, n, piece.rows, span.dim(), piece.rows - span.dim()});
    }
    return out;
}

GeneratorProfile di_generator_profile(const GradedRing& ring, int r, int d_max, int n_max) {
    SecantIdeal ideal(ring, r);
    GeneratorProfile out;
    for (int d = 1; d <= d_max; ++d) {
        for (int n = 1; n <= n_max; ++n) {
            SymBasis domain(ring, d, n);
            const RatMatrix& piece = ideal.piece(d, n);
            SpanBuilder span(domain.size());
            for (int dpp = 1; dpp <= d; ++dpp) {
                for (int npp = 1; npp <= n; ++npp) {
                    if (dpp == d && npp == n) continue;
                    const RatMatrix& lower = ideal.piece(dpp, npp);
                    if (lower.rows == 0) continue;
                    SymBasis lower_basis(ring, dpp, npp);
                    SymBasis star_basis(ring, d - dpp, npp);
                    SymBasis dot_basis(ring, d, n - npp);
                    for (int i = 0; i < lower.rows; ++i) {
                        SymElement f = lower_basis.element(lower.data[i]);
                        for (const Word& g : star_basis.words()) {
                            SymElement sf = star_coinv(ring, SymElement::monomial(g), f);
                            if (sf.is_zero()) continue;
                            for (const Word& h : dot_basis.words())
                                span.insert(domain.coords(dot_coinv(SymElement::monomial(h), sf)));
                        }
                    }
                }
            }
            out.rows.push_back(ProfileRow{d, n, piece.rows, span.dim(), piece.rows - span.dim()});
        }
    }
    return out;
}

ClosureReport di_ideal_closure_check(const BigradedSubspace& I, long long trials,
                                     std::uint64_t seed, int d_max, int e_max, int n_max) {
    const GradedRing& ring = I.ring();
    DetRng rng(seed);
    ClosureReport report;
    for (long long t = 0; t < trials; ++t) {
        int d = rng.uniform(1, d_max);
        int n = rng.uniform(1, n_max);
        SymBasis basis(ring, d, n);
        const RatMatrix& piece = I.piece(d, n);

        SymElement f = SymElement::zero(d, n);
        if (piece.rows > 0)
            for (int k = 0; k < 2; ++k) {
                SymElement row = basis.element(piece.data[rng.uniform(0, piece.rows - 1)]);
                row.scale(rng.coeff());
                f += row;
            }

        {
            int e = rng.uniform(1, e_max);
            SymBasis gb(ring, e, n);
            SymElement g = SymElement::zero(e, n);
            for (int k = 0; k < 2; ++k)
                g.add_word(gb.word(rng.uniform(0, gb.size() - 1)), rng.coeff());
            SymElement sf = star_coinv(ring, g, f);
            SymBasis target(ring, d + e, n);
            ++report.star_checks;
            if (!subspace_contains(I.piece(d + e, n), target.coords(sf))) ++report.star_failures;
        }
        {
            int np = rng.uniform(1, n_max);
            SymBasis hb(ring, d, np);
            SymElement h = SymElement::zero(d, np);
            for (int k = 0; k < 2; ++k)
                h.add_word(hb.word(rng.uniform(0, hb.size() - 1)), rng.coeff());
            SymElement df = dot_coinv(h, f);
            SymBasis target(ring, d, n + np);
            ++report.dot_checks;
            if (!subspace_contains(I.piece(d, n + np), target.coords(df))) ++report.dot_failures;
        }
    }
    return report;
}

}  // namespace hopfring
