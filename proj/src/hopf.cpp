#include "hopfring/hopf.hpp"

#include <algorithm>
#include <numeric>

namespace hopfring {

namespace {

// Visits every arrangement of [0, n), including repeats of equal content.
template <typename F>
void for_each_permutation(int n, F&& fn) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Word permute_word(const Word& w, const std::vector<int>& perm) {
    Word out{w.d, std::vector<int>(w.n())};
    for (int i = 0; i < w.n(); ++i) out.letters[i] = w.letters[perm[i]];
    return out;
}

Word sorted_word(Word w) {
    std::sort(w.letters.begin(), w.letters.end());
    return w;
}

}  // namespace

SymElement SymElement::monomial(Word w, Rational c) {
    SymElement s = SymElement::zero(w.d, w.n());
    s.add_word(std::move(w), c);
    return s;
}

void SymElement::add_word(Word w, const Rational& c) {
    if (c == 0) return;
    if (w.d != d || w.n() != n)
        throw std::invalid_argument("SymElement::add_word: bidegree mismatch");
    std::sort(w.letters.begin(), w.letters.end());
    auto [it, inserted] = coeffs.emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

SymElement& SymElement::operator+=(const SymElement& other) {
    if (other.d != d || other.n != n)
        throw std::invalid_argument("SymElement::operator+=: bidegree mismatch");
    for (const auto& [w, c] : other.coeffs) add_word(w, c);
    return *this;
}

void SymElement::scale(const Rational& c) {
    if (c == 0) {
        coeffs.clear();
        return;
    }
    for (auto& [w, v] : coeffs) v *= c;
}

std::string to_string(const SymElement& s) {
    if (s.coeffs.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : s.coeffs) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + "*" + to_string(w);
    }
    return out;
}

bool is_invariant(const TensorElement& t) {
    // Every permutation class must be fully present with one coefficient.
    std::map<Word, Rational> rep;
    for (const auto& [w, c] : t.coeffs) {
        Word key = sorted_word(w);
        auto [it, inserted] = rep.emplace(key, c);
        if (!inserted && it->second != c) return false;
    }
    for (const auto& [key, c] : rep) {
        // distinct permutations of the multiset
        mpz_class count;
        mpz_fac_ui(count.get_mpz_t(), static_cast<unsigned long>(key.n()));
        int run = 1;
        for (int i = 1; i <= key.n(); ++i) {
            if (i < key.n() && key.letters[i] == key.letters[i - 1]) {
                ++run;
            } else {
                mpz_class f;
                mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(run));
                count /= f;
                run = 1;
            }
        }
        long expected = count.get_si();
        long seen = 0;
        for (const auto& [w, cw] : t.coeffs)
            if (sorted_word(w) == key) ++seen;
        if (seen != expected) return false;
    }
    return true;
}

InvariantElement InvariantElement::checked(TensorElement tensor) {
    if (!is_invariant(tensor))
        throw std::invalid_argument("InvariantElement: tensor is not symmetric");
    return InvariantElement{std::move(tensor)};
}

void PairTensor::add_term(const Word& a, const Word& b, const Rational& c) {
    if (c == 0) return;
    if (a.d != d || b.d != d || a.n() + b.n() != n)
        throw std::invalid_argument("PairTensor::add_term: bidegree mismatch");
    auto [it, inserted] = coeffs.emplace(std::make_pair(a, b), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

PairTensor& PairTensor::operator+=(const PairTensor& other) {
    if (other.d != d || other.n != n)
        throw std::invalid_argument("PairTensor::operator+=: bidegree mismatch");
    for (const auto& [ab, c] : other.coeffs) add_term(ab.first, ab.second, c);
    return *this;
}

PairTensor PairTensor::flipped() const {
    PairTensor out = PairTensor::zero(d, n);
    for (const auto& [ab, c] : coeffs) out.add_term(ab.second, ab.first, c);
    return out;
}

InvariantElement pi(const TensorElement& f) {
    TensorElement out = TensorElement::zero(f.d, f.n);
    Rational inv_fact = Rational(1) / rat_factorial(f.n);
    for (const auto& [w, c] : f.coeffs) {
        Rational part = c * inv_fact;
        for_each_permutation(f.n, [&](const std::vector<int>& perm) {
            out.add_term(permute_word(w, perm), part);
        });
    }
    return InvariantElement::trusted(std::move(out));
}

InvariantElement frakS(const SymElement& s) {
    TensorElement out = TensorElement::zero(s.d, s.n);
    for (const auto& [w, c] : s.coeffs)
        for_each_permutation(s.n, [&](const std::vector<int>& perm) {
            out.add_term(permute_word(w, perm), c);
        });
    return InvariantElement::trusted(std::move(out));
}

SymElement frakS_inv(const InvariantElement& x) {
    SymElement out = SymElement::zero(x.t.d, x.t.n);
    Rational inv_fact = Rational(1) / rat_factorial(x.t.n);
    for (const auto& [w, c] : x.t.coeffs) out.add_word(w, c * inv_fact);
    return out;
}

InvariantElement dot_invariant(const InvariantElement& x, const InvariantElement& y) {
    return InvariantElement::trusted(shuffle_sum(x.t, y.t));
}

InvariantElement star_invariant(const GradedRing& ring, const InvariantElement& x,
                                const InvariantElement& y) {
    return InvariantElement::trusted(star_product(ring, x.t, y.t));
}

SymElement dot_coinv(const SymElement& s, const SymElement& t) {
    if (s.d != t.d) throw std::invalid_argument("dot_coinv: inner degree mismatch");
    SymElement out = SymElement::zero(s.d, s.n + t.n);
    for (const auto& [u, cu] : s.coeffs)
        for (const auto& [v, cv] : t.coeffs) {
            Word merged{s.d, {}};
            merged.letters.reserve(u.n() + v.n());
            std::merge(u.letters.begin(), u.letters.end(), v.letters.begin(), v.letters.end(),
                       std::back_inserter(merged.letters));
            out.add_word(std::move(merged), cu * cv);
        }
    return out;
}

SymElement star_coinv(const GradedRing& ring, const SymElement& s, const SymElement& t) {
    SymElement out = SymElement::zero(s.d + t.d, s.n);
    if (s.n != t.n) return out;
    int n = s.n;
    for (const auto& [u, cu] : s.coeffs)
        for (const auto& [v, cv] : t.coeffs) {
            Rational base = cu * cv;
            // sum over all matchings of positions of u with positions of v
            for_each_permutation(n, [&](const std::vector<int>& rho) {
                std::vector<std::pair<std::vector<int>, Rational>> partial = {{{}, base}};
                for (int i = 0; i < n; ++i) {
                    const SparseVec& prod =
                        ring.basis_product(u.d, u.letters[i], v.d, v.letters[rho[i]]);
                    std::vector<std::pair<std::vector<int>, Rational>> next;
                    next.reserve(partial.size() * prod.size());
                    for (const auto& [letters, c] : partial)
                        for (const auto& [idx, val] : prod) {
                            auto ext = letters;
                            ext.push_back(idx);
                            next.emplace_back(std::move(ext), c * val);
                        }
                    partial = std::move(next);
                    if (partial.empty()) break;
                }
                for (auto& [letters, c] : partial)
                    out.add_word(Word{s.d + t.d, std::move(letters)}, c);
            });
        }
    return out;
}

PairTensor delta_coinv(const SymElement& s) {
    PairTensor out = PairTensor::zero(s.d, s.n);
    for (const auto& [w, c] : s.coeffs) {
        int n = w.n();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Word left{w.d, {}}, right{w.d, {}};
            for (int i = 0; i < n; ++i)
                (mask & (1u << i) ? left : right).letters.push_back(w.letters[i]);
            out.add_term(left, right, c);
        }
    }
    return out;
}

PairTensor pair_frakS(const PairTensor& p) {
    PairTensor out = PairTensor::zero(p.d, p.n);
    for (const auto& [ab, c] : p.coeffs) {
        const auto& [a, b] = ab;
        for_each_permutation(a.n(), [&](const std::vector<int>& pa) {
            Word wa = permute_word(a, pa);
            for_each_permutation(b.n(), [&](const std::vector<int>& pb) {
                out.add_term(wa, permute_word(b, pb), c);
            });
        });
    }
    return out;
}

PairTensor delta_invariant(const InvariantElement& x) {
    return pair_frakS(delta_coinv(frakS_inv(x)));
}

PairTensor delta_invariant_via_subsets(const InvariantElement& x) {
    int n = x.t.n;
    PairTensor out = PairTensor::zero(x.t.d, n);
    for (const auto& [w, c] : x.t.coeffs) {
        for (int j = 0; j <= n; ++j) {
            // every size-j subset of an invariant tensor overcounts the
            // component by C(n, j)
            Rational part = c / Rational(static_cast<long>(binom_ll(n, j)));
            for (const Split& s : all_splits(j, n - j)) {
                Word left{w.d, {}}, right{w.d, {}};
                for (int p : s.left) left.letters.push_back(w.letters[p]);
                for (int p : s.right) right.letters.push_back(w.letters[p]);
                out.add_term(left, right, part);
            }
        }
    }
    return out;
}

PairTensor pair_of(const InvariantElement& x, const InvariantElement& y) {
    if (x.t.d != y.t.d) throw std::invalid_argument("pair_of: inner degree mismatch");
    PairTensor out = PairTensor::zero(x.t.d, x.t.n + y.t.n);
    for (const auto& [a, ca] : x.t.coeffs)
        for (const auto& [b, cb] : y.t.coeffs) out.add_term(a, b, ca * cb);
    return out;
}

PairTensor pair_dot_invariant(const PairTensor& p, const PairTensor& q) {
    if (p.d != q.d) throw std::invalid_argument("pair_dot_invariant: inner degree mismatch");
    PairTensor out = PairTensor::zero(p.d, p.n + q.n);
    for (const auto& [ab, cp] : p.coeffs)
        for (const auto& [cd, cq] : q.coeffs) {
            TensorElement l = shuffle_sum(TensorElement::monomial(ab.first),
                                          TensorElement::monomial(cd.first));
            TensorElement r = shuffle_sum(TensorElement::monomial(ab.second),
                                          TensorElement::monomial(cd.second));
            Rational base = cp * cq;
            for (const auto& [wl, cl] : l.coeffs)
                for (const auto& [wr, cr] : r.coeffs) out.add_term(wl, wr, base * cl * cr);
        }
    return out;
}

PairTensor pair_star_invariant(const GradedRing& ring, const PairTensor& p,
                               const PairTensor& q) {
    PairTensor out = PairTensor::zero(p.d + q.d, p.n);
    if (p.n != q.n) return out;
    for (const auto& [ab, cp] : p.coeffs)
        for (const auto& [cd, cq] : q.coeffs) {
            if (ab.first.n() != cd.first.n() || ab.second.n() != cd.second.n()) continue;
            TensorElement l = star_words(ring, ab.first, cd.first);
            TensorElement r = star_words(ring, ab.second, cd.second);
            Rational base = cp * cq;
            for (const auto& [wl, cl] : l.coeffs)
                for (const auto& [wr, cr] : r.coeffs) out.add_term(wl, wr, base * cl * cr);
        }
    return out;
}

PairTensor pair_dot_coinv(const PairTensor& p, const PairTensor& q) {
    if (p.d != q.d) throw std::invalid_argument("pair_dot_coinv: inner degree mismatch");
    PairTensor out = PairTensor::zero(p.d, p.n + q.n);
    for (const auto& [ab, cp] : p.coeffs)
        for (const auto& [cd, cq] : q.coeffs) {
            Word l{p.d, {}}, r{p.d, {}};
            std::merge(ab.first.letters.begin(), ab.first.letters.end(),
                       cd.first.letters.begin(), cd.first.letters.end(),
                       std::back_inserter(l.letters));
            std::merge(ab.second.letters.begin(), ab.second.letters.end(),
                       cd.second.letters.begin(), cd.second.letters.end(),
                       std::back_inserter(r.letters));
            out.add_term(l, r, cp * cq);
        }
    return out;
}

TensorElement pair_collapse_dot(const PairTensor& p) {
    TensorElement out = TensorElement::zero(p.d, p.n);
    for (const auto& [ab, c] : p.coeffs) {
        TensorElement prod =
            shuffle_sum(TensorElement::monomial(ab.first), TensorElement::monomial(ab.second));
        prod.scale(c);
        out += prod;
    }
    return out;
}

}  // namespace hopfring
