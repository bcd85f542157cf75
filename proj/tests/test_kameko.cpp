#include <doctest.h>

#include "helpers.hpp"
#include "hitprob/kameko.hpp"

using namespace hitprob;
using hitprob::testing::mono;

TEST_CASE("phi halves all-odd monomials and kills the rest") {
    CHECK(kameko_phi(mono({3, 5, 1})) == mono({1, 2, 0}));
    CHECK(kameko_phi(mono({1, 1, 1})) == mono({0, 0, 0}));
    CHECK(!kameko_phi(mono({2, 1, 1})).has_value());
    CHECK(!kameko_phi(mono({0, 3, 3})).has_value());
}

TEST_CASE("psi doubles and adds the full product") {
    CHECK(kameko_psi(mono({1, 2, 0})) == mono({3, 5, 1}));
    CHECK(kameko_psi(mono({0, 0, 0})) == mono({1, 1, 1}));
    // phi o psi = id
    for (const auto& m : degree_slice(4, 6)) CHECK(kameko_phi(kameko_psi(m)) == m);
}

TEST_CASE("down map composed with the section is the identity") {
    Solver solver({.use_cache = false});
    for (int k = 2; k <= 4; ++k) {
        for (long d : {2L, 3L, 5L}) {
            auto map = kameko_down(solver, k, d);
            auto section = map.section_columns();
            REQUIRE(section.size() == map.lower_dim());
            for (std::size_t j = 0; j < section.size(); ++j) {
                gf2::BitVec e(map.lower_dim());
                e.set(j);
                CHECK(map.apply(section[j]) == e);
            }
            CHECK(map.surjective());
            CHECK(map.kernel().rank() == map.upper_dim() - map.rank());
        }
    }
}

TEST_CASE("down map is linear on classes") {
    Solver solver({.use_cache = false});
    auto map = kameko_down(solver, 3, 4);
    const auto& up = map.upper();
    // the map factors through representatives: column of an admissible x is
    // [phi(x)] in the lower quotient
    for (std::size_t j = 0; j < map.upper_dim(); ++j) {
        auto x = up.admissible[j];
        auto phi = kameko_phi(x);
        gf2::BitVec want(map.lower_dim());
        if (phi) want = coordinates(Polynomial(*phi), map.lower());
        CHECK(map.matrix_columns()[j] == want);
    }
}

TEST_CASE("squaring degrees where the down map is an isomorphism") {
    // mu(2d + k) = k forces an isomorphism
    auto rep = stability_report(5, 23);
    CHECK(rep.mu_2d_plus_k == 5);
    CHECK(rep.iso_by_squaring);
    CHECK(stability_report(5, 2).t_value == 2);
    CHECK(!stability_report(5, 2).iso_by_squaring);
    Solver solver({.use_cache = false});
    // verify an instance: (QP_3)_{2*3+3} -> (QP_3)_3 with mu(9) = 3
    REQUIRE(mu(9) == 3);
    auto map = kameko_down(solver, 3, 3);
    CHECK(map.upper_dim() == map.lower_dim());
    CHECK(map.rank() == map.lower_dim());
}

TEST_CASE("degree and dimension contract") {
    Solver solver({.use_cache = false});
    auto map = kameko_down(solver, 4, 5);
    CHECK(map.upper().n == 2 * 5 + 4);
    CHECK(map.lower().n == 5);
}
