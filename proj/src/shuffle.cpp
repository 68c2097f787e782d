#include "hopfring/shuffle.hpp"

#include <algorithm>

namespace hopfring {

std::string to_string(const Word& w) {
    std::string out = "(" + std::to_string(w.d) + ";";
    for (int i = 0; i < w.n(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.letters[i]);
    }
    return out + ")";
}

TensorElement TensorElement::monomial(Word w, Rational c) {
    TensorElement t{w.d, w.n(), {}};
    if (c != 0) t.coeffs.emplace(std::move(w), std::move(c));
    return t;
}

void TensorElement::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    if (w.d != d || w.n() != n)
        throw std::invalid_argument("TensorElement::add_term: bidegree mismatch");
    auto [it, inserted] = coeffs.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    if (other.d != d || other.n != n)
        throw std::invalid_argument("TensorElement::operator+=: bidegree mismatch");
    for (const auto& [w, c] : other.coeffs) add_term(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
    if (other.d != d || other.n != n)
        throw std::invalid_argument("TensorElement::operator-=: bidegree mismatch");
    for (const auto& [w, c] : other.coeffs) add_term(w, -c);
    return *this;
}

void TensorElement::scale(const Rational& c) {
    if (c == 0) {
        coeffs.clear();
        return;
    }
    for (auto& [w, v] : coeffs) v *= c;
}

std::string to_string(const TensorElement& f) {
    if (f.coeffs.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : f.coeffs) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + "*" + to_string(w);
    }
    return out;
}

Split Split::make(std::vector<int> left, int total) {
    std::vector<bool> used(total, false);
    for (size_t i = 0; i < left.size(); ++i) {
        int p = left[i];
        if (p < 0 || p >= total || used[p])
            throw std::invalid_argument("Split::make: invalid left part");
        if (i > 0 && left[i - 1] >= p)
            throw std::invalid_argument("Split::make: left part must increase");
        used[p] = true;
    }
    std::vector<int> right;
    for (int p = 0; p < total; ++p)
        if (!used[p]) right.push_back(p);
    return Split{std::move(left), std::move(right)};
}

std::vector<Split> all_splits(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("all_splits: negative part");
    int total = n + m;
    std::vector<Split> out;
    std::vector<int> left(n);
    for (int i = 0; i < n; ++i) left[i] = i;
    while (true) {
        out.push_back(Split::make(left, total));
        // advance in colex: bump the first entry that has room, reset below
        int i = 0;
        while (i < n) {
            int cap = (i + 1 < n) ? left[i + 1] : total;
            if (left[i] + 1 < cap) break;
            ++i;
        }
        if (i == n) break;
        ++left[i];
        for (int j = 0; j < i; ++j) left[j] = j;
    }
    return out;
}

Word shuffle_words(const Word& a, const Word& b, const Split& s) {
    if (a.d != b.d) throw std::invalid_argument("shuffle_words: inner degree mismatch");
    if (static_cast<int>(s.left.size()) != a.n() || static_cast<int>(s.right.size()) != b.n())
        throw std::invalid_argument("shuffle_words: split shape mismatch");
    Word w{a.d, std::vector<int>(a.n() + b.n())};
    for (int i = 0; i < a.n(); ++i) w.letters[s.left[i]] = a.letters[i];
    for (int i = 0; i < b.n(); ++i) w.letters[s.right[i]] = b.letters[i];
    return w;
}

TensorElement shuffle_product(const TensorElement& f, const TensorElement& g, const Split& s) {
    if (f.d != g.d) throw std::invalid_argument("shuffle_product: inner degree mismatch");
    TensorElement out = TensorElement::zero(f.d, f.n + g.n);
    for (const auto& [u, cu] : f.coeffs)
        for (const auto& [v, cv] : g.coeffs) out.add_term(shuffle_words(u, v, s), cu * cv);
    return out;
}

TensorElement shuffle_sum(const TensorElement& f, const TensorElement& g) {
    TensorElement out = TensorElement::zero(f.d, f.n + g.n);
    for (const Split& s : all_splits(f.n, g.n)) out += shuffle_product(f, g, s);
    return out;
}

TensorElement star_words(const GradedRing& ring, const Word& u, const Word& v) {
    if (u.n() != v.n()) return TensorElement::zero(u.d + v.d, u.n());
    TensorElement out = TensorElement::zero(u.d + v.d, u.n());
    std::vector<std::pair<std::vector<int>, Rational>> partial = {{{}, Rational(1)}};
    for (int i = 0; i < u.n(); ++i) {
        const SparseVec& prod = ring.basis_product(u.d, u.letters[i], v.d, v.letters[i]);
        if (prod.empty()) return out;
        std::vector<std::pair<std::vector<int>, Rational>> next;
        next.reserve(partial.size() * prod.size());
        for (const auto& [letters, c] : partial)
            for (const auto& [idx, val] : prod) {
                auto ext = letters;
                ext.push_back(idx);
                next.emplace_back(std::move(ext), c * val);
            }
        partial = std::move(next);
    }
    for (auto& [letters, c] : partial) out.add_term(Word{u.d + v.d, std::move(letters)}, c);
    return out;
}

TensorElement star_product(const GradedRing& ring, const TensorElement& f,
                           const TensorElement& g) {
    TensorElement out = TensorElement::zero(f.d + g.d, f.n);
    if (f.n != g.n) return out;  // zero across different outer degrees
    for (const auto& [u, cu] : f.coeffs)
        for (const auto& [v, cv] : g.coeffs) {
            TensorElement t = star_words(ring, u, v);
            t.scale(cu * cv);
            out += t;
        }
    return out;
}

RewriteResult rewrite_star_shuffle(const GradedRing& ring, const Word& a, const Word& b,
                                   const TensorElement& f, const Split& s) {
    int m = b.n();
    int n = f.n;
    if (a.n() != n + m) throw std::invalid_argument("rewrite_star_shuffle: outer degree mismatch");
    if (b.d != f.d) throw std::invalid_argument("rewrite_star_shuffle: inner degree mismatch");
    if (static_cast<int>(s.left.size()) != m || static_cast<int>(s.right.size()) != n)
        throw std::invalid_argument("rewrite_star_shuffle: split shape mismatch");

    Word g{a.d, {}};
    for (int k = 0; k < n; ++k) g.letters.push_back(a.letters[s.right[k]]);

    Word h{a.d + b.d, {}};
    for (int k = 0; k < m; ++k) {
        const SparseVec& prod = ring.basis_product(a.d, a.letters[s.left[k]], b.d, b.letters[k]);
        if (prod.size() != 1 || prod[0].second != 1)
            throw std::domain_error(
                "rewrite_star_shuffle: letter product is not a monic basis monomial");
        h.letters.push_back(prod[0].first);
    }
    return RewriteResult{std::move(h), std::move(g)};
}

bool word_leq_order(const Word& w, const Word& wp) {
    if (w.d != wp.d || w.n() != wp.n())
        throw std::invalid_argument("word_leq_order: bidegree mismatch");
    // smaller index sequences are larger words
    return w.letters >= wp.letters;
}

std::pair<Word, Rational> initial_term(const TensorElement& f) {
    if (f.is_zero()) throw std::invalid_argument("initial_term: zero element");
    // map order is ascending on letter sequences, so begin() is the largest word
    const auto& [w, c] = *f.coeffs.begin();
    return {w, c};
}

FreeWord free_word(const GradedRing& ring, const Word& w) {
    FreeWord out;
    const auto& basis = ring.basis(w.d);
    for (int idx : w.letters) {
        if (idx < 0 || idx >= static_cast<int>(basis.size()))
            throw std::out_of_range("free_word: letter out of range");
        out.push_back(basis[idx]);
    }
    return out;
}

bool higman_leq(const FreeWord& w, const FreeWord& wp) {
    size_t j = 0;
    for (const auto& letter : w) {
        while (j < wp.size() && !exp_divides(letter, wp[j])) ++j;
        if (j == wp.size()) return false;
        ++j;
    }
    return true;
}

bool monomial_membership_oracle(const FreeWord& w, const FreeWord& wp) {
    if (wp.size() > 6)
        throw std::invalid_argument("monomial_membership_oracle: word longer than 6");
    int n = static_cast<int>(w.size());
    int np = static_cast<int>(wp.size());
    if (n > np) return false;
    for (const Split& s : all_splits(n, np - n)) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = exp_divides(w[i], wp[s.left[i]]);
        if (ok) return true;
    }
    return false;
}

}  // namespace hopfring
