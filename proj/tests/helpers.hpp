#ifndef HITPROB_TEST_HELPERS_HPP
#define HITPROB_TEST_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hitprob/polynomial.hpp"

namespace hitprob::testing {

inline Monomial mono(std::initializer_list<int> exps) {
    std::vector<std::uint16_t> e;
    for (int v : exps) e.push_back(static_cast<std::uint16_t>(v));
    return Monomial(std::move(e));
}

/// Deterministic RNG so failures reproduce.
inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

/// Random homogeneous polynomial: a few random monomials of the same degree.
inline Polynomial random_poly(int k, long degree, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::vector<Monomial> terms;
    for (int t = nterms(rng()); t > 0; --t) {
        std::vector<std::uint16_t> e(k, 0);
        long rem = degree;
        for (int j = 0; j + 1 < k; ++j) {
            std::uniform_int_distribution<long> part(0, rem);
            long a = part(rng());
            e[j] = static_cast<std::uint16_t>(a);
            rem -= a;
        }
        e[k - 1] = static_cast<std::uint16_t>(rem);
        terms.emplace_back(std::move(e));
    }
    return Polynomial(k, std::move(terms));
}

}  // namespace hitprob::testing

#endif
