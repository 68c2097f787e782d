#include "hopfring/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace hopfring::verify {

namespace {

const GradedRing& ring_of(const Options& opt) {
    if (!opt.ring) throw std::invalid_argument("verify: Options::ring is required");
    if (opt.d_max < 1) throw std::invalid_argument("verify: d_max must be at least 1");
    if (opt.n_max < 0) throw std::invalid_argument("verify: n_max must be nonnegative");
    return *opt.ring;
}

// Each suite reads an independent stream so that adding trials to one suite
// never shifts the draws of another.
DetRng suite_rng(const Options& opt, std::uint64_t salt) {
    return DetRng(opt.seed + 1000003ULL * salt);
}

void record(SuiteResult& r, bool ok) {
    ++r.checks;
    if (!ok) ++r.failures;
}

}  // namespace

Word random_word(DetRng& rng, const GradedRing& ring, int d, int n) {
    int m = ring.dim(d);
    if (n > 0 && m <= 0) throw std::invalid_argument("random_word: B_d has no basis");
    Word w;
    w.d = d;
    w.letters.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w.letters.push_back(rng.uniform(0, m - 1));
    return w;
}

TensorElement random_tensor(DetRng& rng, const GradedRing& ring, int d, int n, int terms) {
    auto f = TensorElement::zero(d, n);
    if (n > 0 && ring.dim(d) <= 0) return f;
    for (int t = 0; t < terms; ++t) f.add_term(random_word(rng, ring, d, n), rng.coeff());
    return f;
}

SymElement random_sym(DetRng& rng, const GradedRing& ring, int d, int n, int terms) {
    auto s = SymElement::zero(d, n);
    if (n > 0 && ring.dim(d) <= 0) return s;
    for (int t = 0; t < terms; ++t) s.add_word(random_word(rng, ring, d, n), rng.coeff());
    return s;
}

InvariantElement random_invariant(DetRng& rng, const GradedRing& ring, int d, int n) {
    return frakS(random_sym(rng, ring, d, n));
}

Split random_split(DetRng& rng, int n, int m) {
    std::vector<int> pos(static_cast<std::size_t>(n + m));
    std::iota(pos.begin(), pos.end(), 0);
    for (int i = 0; i < n; ++i) std::swap(pos[i], pos[rng.uniform(i, n + m - 1)]);
    std::vector<int> left(pos.begin(), pos.begin() + n);
    std::sort(left.begin(), left.end());
    return Split::make(std::move(left), n + m);
}

SuiteResult shuffle_commutativity(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 1);
    SuiteResult res{"shuffle_commutativity"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int d = rng.uniform(1, opt.d_max);
        int n = rng.uniform(0, opt.n_max);
        int m = rng.uniform(0, opt.n_max);
        auto f = random_tensor(rng, ring, d, n);
        auto g = random_tensor(rng, ring, d, m);
        Split s = random_split(rng, n, m);
        record(res, shuffle_product(f, g, s) == shuffle_product(g, f, s.swapped()));
    }
    return res;
}

SuiteResult shuffle_associativity(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 2);
    SuiteResult res{"shuffle_associativity"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int d = rng.uniform(1, opt.d_max);
        int n1 = rng.uniform(0, opt.n_max);
        int n2 = rng.uniform(0, opt.n_max);
        int n3 = rng.uniform(0, opt.n_max);
        auto f = random_tensor(rng, ring, d, n1);
        auto g = random_tensor(rng, ring, d, n2);
        auto h = random_tensor(rng, ring, d, n3);
        Split tau = random_split(rng, n2, n3);
        Split sigma = random_split(rng, n1, n2 + n3);

        // Re-associate: recover the absolute positions of each factor and
        // build the split pair that nests on the left instead.
        std::vector<int> s2, s3;
        for (int p : tau.left) s2.push_back(sigma.right[static_cast<std::size_t>(p)]);
        for (int p : tau.right) s3.push_back(sigma.right[static_cast<std::size_t>(p)]);
        std::vector<int> u;
        std::merge(sigma.left.begin(), sigma.left.end(), s2.begin(), s2.end(),
                   std::back_inserter(u));
        std::vector<int> alpha_left;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (std::binary_search(sigma.left.begin(), sigma.left.end(), u[i]))
                alpha_left.push_back(static_cast<int>(i));
        Split alpha = Split::make(std::move(alpha_left), n1 + n2);
        Split beta = Split::make(u, n1 + n2 + n3);

        auto lhs = shuffle_product(shuffle_product(f, g, alpha), h, beta);
        auto rhs = shuffle_product(f, shuffle_product(g, h, tau), sigma);
        record(res, lhs == rhs);
    }
    return res;
}

SuiteResult star_shuffle_rewrite(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 3);
    SuiteResult res{"star_shuffle_rewrite"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int e = rng.uniform(1, opt.d_max);
        int d = rng.uniform(1, opt.d_max);
        int n = rng.uniform(0, opt.n_max);
        int m = rng.uniform(0, opt.n_max);
        if (n + m == 0) m = 1;
        Word a = random_word(rng, ring, e, n + m);
        Word b = random_word(rng, ring, d, m);
        auto f = random_tensor(rng, ring, d, n);
        Split s = random_split(rng, m, n);
        try {
            auto rw = rewrite_star_shuffle(ring, a, b, f, s);
            auto lhs = star_product(ring, TensorElement::monomial(a),
                                    shuffle_product(TensorElement::monomial(b), f, s));
            auto rhs = shuffle_product(
                TensorElement::monomial(rw.h),
                star_product(ring, TensorElement::monomial(rw.g), f), s);
            record(res, lhs == rhs);
        } catch (const std::domain_error&) {
            // Letter products left the basis-monomial regime; the identity
            // does not apply to this draw, so it does not count.
        }
    }
    return res;
}

SuiteResult order_monotonicity(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 4);
    SuiteResult res{"order_monotonicity"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int d = rng.uniform(1, opt.d_max);
        int n = rng.uniform(1, std::max(1, opt.n_max));
        int m = rng.uniform(1, std::max(1, opt.n_max));
        Word w = random_word(rng, ring, d, n);
        Word wp = random_word(rng, ring, d, n);
        if (!word_leq_order(w, wp)) std::swap(w, wp);
        Word u = random_word(rng, ring, d, m);
        Split s = random_split(rng, m, n);
        Word uw = shuffle_words(u, w, s);
        Word uwp = shuffle_words(u, wp, s);
        bool ok = word_leq_order(uw, uwp) && (w == wp || uw != uwp);
        record(res, ok);
    }
    return res;
}

SuiteResult initial_term_products(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    GradedRing free = GradedRing::free_ring(ring.vars());
    DetRng rng = suite_rng(opt, 5);
    SuiteResult res{"initial_term_products"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        // Shuffling with a fixed word is strictly monotone, so it commutes
        // with taking the initial term.
        int d = rng.uniform(1, opt.d_max);
        int n = rng.uniform(1, std::max(1, opt.n_max));
        int m = rng.uniform(0, opt.n_max);
        Word u = random_word(rng, ring, d, m);
        auto f = random_tensor(rng, ring, d, n);
        Split s = random_split(rng, m, n);
        if (!f.is_zero()) {
            auto prod = shuffle_product(TensorElement::monomial(u), f, s);
            auto [fw, fc] = initial_term(f);
            record(res, initial_term(prod) == std::make_pair(shuffle_words(u, fw, s), fc));
        }

        // In the free ring, star with a fixed word is strictly monotone too.
        int e = rng.uniform(1, opt.d_max);
        int d2 = rng.uniform(1, opt.d_max);
        int n2 = rng.uniform(1, std::max(1, opt.n_max));
        Word w = random_word(rng, free, e, n2);
        auto g = random_tensor(rng, free, d2, n2);
        if (!g.is_zero()) {
            auto sp = star_product(free, TensorElement::monomial(w), g);
            auto [gw, gc] = initial_term(g);
            auto sw = star_words(free, w, gw);
            record(res, initial_term(sp) == std::make_pair(sw.coeffs.begin()->first, gc));
        }
    }
    return res;
}

SuiteResult projection_star(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 6);
    SuiteResult res{"projection_star"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int e = rng.uniform(1, opt.d_max);
        int d = rng.uniform(1, opt.d_max);
        int n = rng.uniform(0, opt.n_max);
        auto x = random_invariant(rng, ring, e, n);
        auto f = random_tensor(rng, ring, d, n);
        auto lhs = pi(star_product(ring, x.t, f)).t;
        auto rhs = star_product(ring, x.t, pi(f).t);
        record(res, lhs == rhs);
    }
    return res;
}

SuiteResult projection_shuffle(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 7);
    SuiteResult res{"projection_shuffle"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int d = rng.uniform(1, opt.d_max);
        int n1 = rng.uniform(0, opt.n_max);
        int n2 = rng.uniform(0, opt.n_max - n1);
        auto f = random_tensor(rng, ring, d, n1);
        auto g = random_tensor(rng, ring, d, n2);
        auto target = dot_invariant(pi(f), pi(g)).t;
        Rational c(static_cast<long>(binom_ll(n1 + n2, n1)));
        for (const Split& s : all_splits(n1, n2)) {
            auto lhs = pi(shuffle_product(f, g, s)).t;
            lhs.scale(c);
            record(res, lhs == target);
        }
    }
    return res;
}

SuiteResult coproduct_dot(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 8);
    SuiteResult res{"coproduct_dot"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int d = rng.uniform(1, opt.d_max);
        int n1 = rng.uniform(0, opt.n_max);
        int n2 = rng.uniform(0, opt.n_max - n1);
        auto y = random_invariant(rng, ring, d, n1);
        auto v = random_invariant(rng, ring, d, n2);
        auto lhs = delta_invariant(dot_invariant(y, v));
        auto rhs = pair_dot_invariant(delta_invariant(y), delta_invariant(v));
        record(res, lhs == rhs);
    }
    return res;
}

SuiteResult coproduct_star(const Options& opt, const StarFn& star) {
    const GradedRing& ring = ring_of(opt);
    StarFn product = star;
    if (!product)
        product = [](const GradedRing& r, const InvariantElement& a, const InvariantElement& b) {
            return star_invariant(r, a, b);
        };
    DetRng rng = suite_rng(opt, 9);
    SuiteResult res{"coproduct_star"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int e = rng.uniform(1, opt.d_max);
        int d = rng.uniform(1, opt.d_max);
        int n = rng.uniform(0, opt.n_max);
        auto x = random_invariant(rng, ring, e, n);
        auto v = random_invariant(rng, ring, d, n);
        auto lhs = delta_invariant(product(ring, x, v));
        auto rhs = pair_star_invariant(ring, delta_invariant(x), delta_invariant(v));
        record(res, lhs == rhs);
    }
    return res;
}

SuiteResult star_dot_expansion(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 10);
    SuiteResult res{"star_dot_expansion"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int e = rng.uniform(1, opt.d_max);
        int d = rng.uniform(1, opt.d_max);
        int m = rng.uniform(0, opt.n_max);
        int n = rng.uniform(0, opt.n_max - m);
        auto a = random_invariant(rng, ring, e, n + m);
        auto b = random_invariant(rng, ring, d, m);
        auto f = random_invariant(rng, ring, d, n);
        auto lhs = star_invariant(ring, a, dot_invariant(b, f)).t;
        auto rhs = pair_collapse_dot(
            pair_star_invariant(ring, delta_invariant(a), pair_of(b, f)));
        record(res, lhs == rhs);
    }
    return res;
}

SuiteResult symmetrization_dot(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 11);
    SuiteResult res{"symmetrization_dot"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int d = rng.uniform(1, opt.d_max);
        int n1 = rng.uniform(0, opt.n_max);
        int n2 = rng.uniform(0, opt.n_max - n1);
        auto s = random_sym(rng, ring, d, n1);
        auto t = random_sym(rng, ring, d, n2);
        record(res, frakS(dot_coinv(s, t)) == dot_invariant(frakS(s), frakS(t)));
    }
    return res;
}

SuiteResult symmetrization_coproduct(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 12);
    SuiteResult res{"symmetrization_coproduct"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int d = rng.uniform(1, opt.d_max);
        int n = rng.uniform(0, opt.n_max);
        auto s = random_sym(rng, ring, d, n);
        // The subset formula never routes through frakS, so the two sides
        // are independent computations of the same coproduct.
        auto lhs = delta_invariant_via_subsets(frakS(s));
        auto rhs = pair_frakS(delta_coinv(s));
        record(res, lhs == rhs);
    }
    return res;
}

SuiteResult symmetrization_round_trip(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 13);
    SuiteResult res{"symmetrization_round_trip"};
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int d = rng.uniform(1, opt.d_max);
        int n = rng.uniform(0, opt.n_max);
        auto s = random_sym(rng, ring, d, n);
        record(res, frakS_inv(frakS(s)) == s);
        auto x = random_invariant(rng, ring, d, n);
        record(res, frakS(frakS_inv(x)) == x);
        record(res, pi(x.t) == x);
    }
    return res;
}

SuiteResult coproduct_coassociativity(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    DetRng rng = suite_rng(opt, 14);
    SuiteResult res{"coproduct_coassociativity"};
    using Triple = std::tuple<Word, Word, Word>;
    for (long long trial = 0; trial < opt.trials; ++trial) {
        int d = rng.uniform(1, opt.d_max);
        int n = rng.uniform(0, opt.n_max);
        auto s = random_sym(rng, ring, d, n);
        auto p = delta_coinv(s);

        std::map<Triple, Rational> lhs, rhs;
        for (const auto& [ab, c] : p.coeffs) {
            for (const auto& [a12, ca] : delta_coinv(SymElement::monomial(ab.first)).coeffs)
                lhs[{a12.first, a12.second, ab.second}] += c * ca;
            for (const auto& [b12, cb] : delta_coinv(SymElement::monomial(ab.second)).coeffs)
                rhs[{ab.first, b12.first, b12.second}] += c * cb;
        }
        std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
        record(res, lhs == rhs);

        // Counit laws: the extreme components recover the element.
        auto left_unit = SymElement::zero(d, n);
        auto right_unit = SymElement::zero(d, n);
        for (const auto& [ab, c] : p.coeffs) {
            if (ab.first.letters.empty()) left_unit.add_word(ab.second, c);
            if (ab.second.letters.empty()) right_unit.add_word(ab.first, c);
        }
        record(res, left_unit == s);
        record(res, right_unit == s);
    }
    return res;
}

SuiteResult embedding_order_agreement(const Options& opt) {
    (void)opt;  // fixed exhaustive domain, independent of the ring and seed
    SuiteResult res{"embedding_order_agreement"};

    // Two variables, exponent entries at most 2, every letter of one word of
    // the same degree, lengths 0 through 3.
    std::vector<FreeWord> words;
    words.push_back({});
    for (int deg = 0; deg <= 4; ++deg) {
        std::vector<ExponentVector> letters;
        for (int a = 0; a <= 2; ++a) {
            int b = deg - a;
            if (b >= 0 && b <= 2) letters.push_back({a, b});
        }
        if (letters.empty()) continue;
        std::vector<FreeWord> layer = {{}};
        for (int len = 1; len <= 3; ++len) {
            std::vector<FreeWord> next;
            for (const auto& w : layer)
                for (const auto& l : letters) {
                    FreeWord e = w;
                    e.push_back(l);
                    next.push_back(std::move(e));
                }
            words.insert(words.end(), next.begin(), next.end());
            layer = std::move(next);
        }
    }

    for (const auto& w : words)
        for (const auto& wp : words)
            record(res, higman_leq(w, wp) == monomial_membership_oracle(w, wp));
    return res;
}

SuiteResult join_identity_laws(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    SuiteResult res{"join_identity_laws"};
    VeroneseIdeal ver(ring);
    ZeroIdeal zero(ring);
    AugmentationIdeal aug(ring);
    SecantIdeal sec2(ring, 2);
    for (int d = 1; d <= opt.d_max; ++d)
        for (int n = 0; n <= opt.n_max; ++n) {
            const RatMatrix& vp = ver.piece(d, n);
            record(res, join_piece(ver, zero, d, n).rows == 0);
            record(res, join_piece(zero, ver, d, n).rows == 0);
            record(res, join_piece(ver, aug, d, n) == vp);
            record(res, join_piece(aug, ver, d, n) == vp);
            record(res, join_piece(ver, sec2, d, n) == join_piece(sec2, ver, d, n));
        }
    return res;
}

SuiteResult product_closure(const Options& opt) {
    const GradedRing& ring = ring_of(opt);
    SuiteResult res{"product_closure"};
    VeroneseIdeal ver(ring);
    SecantIdeal sec2(ring, 2);
    auto r1 = di_ideal_closure_check(ver, opt.trials, opt.seed + 1000003ULL * 17,
                                     opt.d_max, opt.d_max, opt.n_max);
    auto r2 = di_ideal_closure_check(sec2, opt.trials, opt.seed + 1000003ULL * 17 + 1,
                                     opt.d_max, opt.d_max, opt.n_max);
    res.checks = r1.star_checks + r1.dot_checks + r2.star_checks + r2.dot_checks;
    res.failures = r1.star_failures + r1.dot_failures + r2.star_failures + r2.dot_failures;
    return res;
}

std::vector<SuiteResult> run_all(const Options& opt) {
    return {
        shuffle_commutativity(opt),
        shuffle_associativity(opt),
        star_shuffle_rewrite(opt),
        order_monotonicity(opt),
        initial_term_products(opt),
        projection_star(opt),
        projection_shuffle(opt),
        coproduct_dot(opt),
        coproduct_star(opt),
        star_dot_expansion(opt),
        symmetrization_dot(opt),
        symmetrization_coproduct(opt),
        symmetrization_round_trip(opt),
        coproduct_coassociativity(opt),
        embedding_order_agreement(opt),
        join_identity_laws(opt),
        product_closure(opt),
    };
}

}  // namespace hopfring::verify
