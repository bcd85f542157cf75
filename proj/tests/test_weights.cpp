#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "hitprob/weights.hpp"

using namespace hitprob;
using hitprob::testing::mono;

TEST_CASE("weight vector of a monomial counts bits per level") {
    CHECK(WeightVector::of(mono({1, 3, 6, 6, 7})) == WeightVector({3, 4, 3}));
    CHECK(WeightVector::of(mono({1, 2, 2, 3, 15})) == WeightVector({3, 4, 1, 1}));
    CHECK(WeightVector::of(Monomial::one(5)) == WeightVector(std::vector<int>{}));
    // deg w = deg x
    Monomial m = mono({5, 9, 2});
    CHECK(WeightVector::of(m).degree() == m.degree());
}

TEST_CASE("weight vectors ignore trailing zeros") {
    CHECK(WeightVector({3, 1, 1}) == WeightVector({3, 1, 1, 0}));
    CHECK(WeightVector({3, 1, 1}) < WeightVector({3, 2}));
    CHECK(WeightVector({5, 2}) > WeightVector({3, 3}));
    CHECK(WeightVector::parse("(3,2,2,1)") == WeightVector({3, 2, 2, 1}));
    CHECK(WeightVector({3, 2, 2, 1}).text() == "(3,2,2,1)");
}

TEST_CASE("admissible order sorts by weight then exponents, left-lex") {
    // weights first: x1^3 has weight (1,1), x1x2x3 weight (3), and (1,1) < (3)
    CHECK(admissible_less(mono({3, 0, 0}), mono({1, 1, 1})));
    CHECK(!admissible_less(mono({1, 1, 1}), mono({3, 0, 0})));
    // equal weights: exponent sequence left-lex
    CHECK(admissible_less(mono({1, 2, 0}), mono({2, 1, 0})));
    CHECK_THROWS(admissible_cmp(mono({1, 0, 0}), mono({2, 0, 0})));  // degree mismatch
}

TEST_CASE("alpha zeta mu") {
    CHECK(alpha(0) == 0);
    CHECK(alpha(7) == 3);
    CHECK(alpha(23 + 5) == 3);
    CHECK(zeta(8) == 3);
    CHECK(zeta(5) == 0);
    CHECK(mu(1) == 1);
    CHECK(mu(2) == 2);
    CHECK(mu(3) == 1);
    CHECK(mu(9) == 3);
    CHECK(mu(10) == 2);
    CHECK(mu(23) == 3);  // 15 + 7 + 1
    // the doubled degree feeding the stable squaring map
    CHECK(mu(2 * 23 + 5) == 5);
}

TEST_CASE("stability threshold") {
    CHECK(t_bound(5, 2) == 2);
    CHECK(t_bound(5, 9) == 1);
    // k - alpha(d+k) - zeta(d+k), clamped at zero
    CHECK(t_bound(5, 23) == std::max(0, 5 - alpha(28) - zeta(28)));
    CHECK(t_bound(1, 100) == 0);
}

TEST_CASE("minimal spike") {
    CHECK(minimal_spike(9, 5) == mono({7, 1, 1, 0, 0}));
    CHECK(minimal_spike(10, 5) == mono({7, 3, 0, 0, 0}));
    CHECK(minimal_spike(23, 5) == mono({15, 7, 1, 0, 0}));
    CHECK(minimal_spike(23, 4) == mono({15, 7, 1, 0}));
    CHECK_THROWS(minimal_spike(23, 2));  // mu(23) = 5 > 2
    // minimality: no spike of the same degree has smaller weight
    Monomial ms = minimal_spike(23, 5);
    auto wms = WeightVector::of(ms);
    for (const auto& m : degree_slice(5, 23))
        if (m.is_spike()) CHECK(!(WeightVector::of(m) < wms));
}

TEST_CASE("degree slice is complete and strictly descending") {
    auto slice = degree_slice(3, 6);
    CHECK(slice.size() == 28);  // C(6+2, 2)
    for (std::size_t i = 1; i < slice.size(); ++i)
        CHECK(admissible_less(slice[i], slice[i - 1]));
    for (const auto& m : slice) CHECK(m.degree() == 6);
}

TEST_CASE("weight vectors of a degree cover the slice") {
    auto ws = weight_vectors_of_degree(5, 9);
    // the three blocks of the degree plus those with no monomials
    for (const auto& m : degree_slice(5, 9)) {
        auto w = WeightVector::of(m);
        CHECK(std::find(ws.begin(), ws.end(), w) != ws.end());
    }
    for (const auto& w : ws) {
        CHECK(w.degree() == 9);
        for (int e : w.entries()) CHECK(e <= 5);
    }
}

TEST_CASE("weight block matches filtering the slice") {
    WeightVector w({3, 3});
    auto block = weight_block(5, w);
    std::vector<Monomial> eq, lo;
    for (const auto& m : degree_slice(5, 9)) {
        auto wm = WeightVector::of(m);
        if (wm == w) eq.push_back(m);
        else if (wm < w) lo.push_back(m);
    }
    auto sorted = [](std::vector<Monomial> v) {
        std::sort(v.begin(), v.end(), admissible_less);
        return v;
    };
    CHECK(sorted(block.equal) == sorted(eq));
    CHECK(sorted(block.lower) == sorted(lo));
}

TEST_CASE("singer filter requires lower weight than the minimal spike") {
    // x1^2 x2^3 x3^4 has weight (1,2,1) < (3,1,1) = w(minimal spike of 9)
    CHECK(singer_filter(mono({2, 3, 4, 0, 0})));
    CHECK(!singer_filter(minimal_spike(9, 5)));
    CHECK(!singer_filter(mono({1, 1, 7, 0, 0})));  // weight (3,1,1), not lower
}
