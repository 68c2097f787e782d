#include <doctest.h>

#include "hopfring/verify.hpp"

using namespace hopfring;
namespace hv = hopfring::verify;

namespace {

GradedRing conic_ring() {
    return GradedRing(3, {parse_poly("x0*x2-x1^2", 3)});
}

hv::Options base_options(const GradedRing& ring, long long trials) {
    hv::Options opt;
    opt.ring = &ring;
    opt.d_max = 3;
    opt.n_max = 3;
    opt.seed = 42;
    opt.trials = trials;
    return opt;
}

}  // namespace

TEST_CASE("random_split produces valid splits") {
    DetRng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.uniform(0, 4);
        int m = rng.uniform(0, 4);
        Split s = hv::random_split(rng, n, m);
        CHECK(static_cast<int>(s.left.size()) == n);
        CHECK(static_cast<int>(s.right.size()) == m);
        std::vector<int> all = s.left;
        all.insert(all.end(), s.right.begin(), s.right.end());
        std::sort(all.begin(), all.end());
        for (int i = 0; i < n + m; ++i) CHECK(all[static_cast<std::size_t>(i)] == i);
    }
}

TEST_CASE("all suites pass on the free ring in two variables") {
    GradedRing ring = GradedRing::free_ring(2);
    auto opt = base_options(ring, 20);
    auto results = hv::run_all(opt);
    REQUIRE(results.size() == 17);

    std::vector<std::string> expected = {
        "shuffle_commutativity",  "shuffle_associativity", "star_shuffle_rewrite",
        "order_monotonicity",     "initial_term_products", "projection_star",
        "projection_shuffle",     "coproduct_dot",         "coproduct_star",
        "star_dot_expansion",     "symmetrization_dot",    "symmetrization_coproduct",
        "symmetrization_round_trip", "coproduct_coassociativity",
        "embedding_order_agreement", "join_identity_laws", "product_closure",
    };
    for (std::size_t i = 0; i < results.size(); ++i) {
        CAPTURE(results[i].name);
        CHECK(results[i].name == expected[i]);
        CHECK(results[i].checks > 0);
        CHECK(results[i].failures == 0);
        CHECK(results[i].pass());
    }
}

TEST_CASE("suites are deterministic for a fixed seed") {
    GradedRing ring = GradedRing::free_ring(2);
    auto opt = base_options(ring, 8);
    auto first = hv::run_all(opt);
    auto second = hv::run_all(opt);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].name == second[i].name);
        CHECK(first[i].checks == second[i].checks);
        CHECK(first[i].failures == second[i].failures);
    }
}

TEST_CASE("suites pass on a quotient ring") {
    GradedRing ring = conic_ring();
    auto opt = base_options(ring, 10);
    opt.d_max = 2;
    opt.n_max = 2;
    auto results = hv::run_all(opt);
    for (const auto& r : results) {
        CAPTURE(r.name);
        CHECK(r.failures == 0);
    }
}

TEST_CASE("exhaustive order agreement covers the full fixed domain") {
    GradedRing ring = GradedRing::free_ring(2);
    auto opt = base_options(ring, 1);
    auto res = hv::embedding_order_agreement(opt);
    // 74 words: the empty word plus all uniform-degree words of lengths 1..3
    // over the letters with entries at most 2.
    CHECK(res.checks == 74 * 74);
    CHECK(res.failures == 0);
}

TEST_CASE("negative control: a corrupted star product is detected") {
    GradedRing ring = GradedRing::free_ring(2);
    auto opt = base_options(ring, 30);

    hv::StarFn doubled = [](const GradedRing& r, const InvariantElement& a,
                            const InvariantElement& b) {
        auto x = star_invariant(r, a, b);
        x.t.scale(Rational(2));
        return x;
    };
    auto res = hv::coproduct_star(opt, doubled);
    CHECK(res.checks == 30);
    CHECK(res.failures > 0);

    hv::StarFn flipped_sign = [](const GradedRing& r, const InvariantElement& a,
                                 const InvariantElement& b) {
        auto x = star_invariant(r, a, b);
        x.t.scale(Rational(-1));
        return x;
    };
    CHECK(hv::coproduct_star(opt, flipped_sign).failures > 0);

    // The honest product passes under the same draws.
    CHECK(hv::coproduct_star(opt).failures == 0);
}

TEST_CASE("zero trials leave randomized suites vacuous but valid") {
    GradedRing ring = GradedRing::free_ring(2);
    auto opt = base_options(ring, 0);
    CHECK(hv::shuffle_commutativity(opt).checks == 0);
    CHECK(hv::coproduct_dot(opt).pass());
    // Exhaustive suites still run.
    CHECK(hv::join_identity_laws(opt).checks > 0);
}

TEST_CASE("options validation") {
    hv::Options opt;
    CHECK_THROWS_AS(hv::shuffle_commutativity(opt), std::invalid_argument);
    GradedRing ring = GradedRing::free_ring(2);
    opt.ring = &ring;
    opt.d_max = 0;
    CHECK_THROWS_AS(hv::shuffle_commutativity(opt), std::invalid_argument);
}
