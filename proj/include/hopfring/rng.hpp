#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "hopfring/rational.hpp"

namespace hopfring {

// Deterministic random source: mt19937_64 driven by an explicit seed, with
// modular draws instead of std distributions so that streams are identical
// across platforms and compilers.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish draw in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("DetRng::uniform: empty range");
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Small nonzero integer coefficient in [-3, 3].
    Rational coeff() {
        int c = uniform(1, 3);
        return Rational(uniform(0, 1) ? c : -c);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hopfring
