#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfring/secant.hpp"

namespace hopfring::verify {

struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    bool pass() const { return failures == 0; }
};

struct Options {
    const GradedRing* ring = nullptr;
    int d_max = 3;
    int n_max = 3;
    std::uint64_t seed = 42;
    long long trials = 100;
};

// Random element helpers. Draw order is part of the contract: fixed seeds
// give identical streams on every platform.
Word random_word(DetRng& rng, const GradedRing& ring, int d, int n);
TensorElement random_tensor(DetRng& rng, const GradedRing& ring, int d, int n, int terms = 2);
SymElement random_sym(DetRng& rng, const GradedRing& ring, int d, int n, int terms = 2);
InvariantElement random_invariant(DetRng& rng, const GradedRing& ring, int d, int n);
Split random_split(DetRng& rng, int n, int m);

// Identity suites. Each draws its own deterministic stream from the seed and
// reports how many checks ran and how many failed.
SuiteResult shuffle_commutativity(const Options& opt);
SuiteResult shuffle_associativity(const Options& opt);
SuiteResult star_shuffle_rewrite(const Options& opt);
SuiteResult order_monotonicity(const Options& opt);
SuiteResult initial_term_products(const Options& opt);
SuiteResult projection_star(const Options& opt);
SuiteResult projection_shuffle(const Options& opt);
SuiteResult coproduct_dot(const Options& opt);

// The star product used by the coproduct compatibility suite is injectable
// so tests can prove the suite detects a broken product.
using StarFn = std::function<InvariantElement(const GradedRing&, const InvariantElement&,
                                              const InvariantElement&)>;
SuiteResult coproduct_star(const Options& opt, const StarFn& star = {});

SuiteResult star_dot_expansion(const Options& opt);
SuiteResult symmetrization_dot(const Options& opt);
SuiteResult symmetrization_coproduct(const Options& opt);
SuiteResult symmetrization_round_trip(const Options& opt);
SuiteResult coproduct_coassociativity(const Options& opt);
SuiteResult embedding_order_agreement(const Options& opt);
SuiteResult join_identity_laws(const Options& opt);
SuiteResult product_closure(const Options& opt);

std::vector<SuiteResult> run_all(const Options& opt);

}  // namespace hopfring::verify
