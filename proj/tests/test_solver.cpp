#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "hitprob/solver.hpp"
#include "hitprob/steenrod.hpp"

using namespace hitprob;
using hitprob::testing::mono;

namespace {

// Independent oracle: eliminate images of EVERY Sq^i with the serial
// reference rref and read the admissible set off the free columns.
std::vector<Monomial> brute_force_admissible(int k, long n) {
    ColumnIndex cols = ColumnIndex::full_degree(k, n);
    std::vector<gf2::BitVec> rows;
    for (long i = 1; i <= n; ++i)
        for (const auto& m : degree_slice(k, n - i)) {
            Polynomial g = sq(i, Polynomial(m));
            if (!g.zero()) rows.push_back(cols.vector_of(g));
        }
    auto ref = gf2::serial::rref(std::move(rows), cols.size());
    std::vector<bool> pivot(cols.size(), false);
    for (const auto& r : ref) pivot[r.leading()] = true;
    std::vector<Monomial> out;
    for (std::size_t c = cols.size(); c-- > 0;)
        if (!pivot[c]) out.push_back(cols.monomial(c));
    return out;
}

}  // namespace

TEST_CASE("brute-force oracle equivalence at small k") {
    Solver solver({.use_cache = false});
    for (int k = 1; k <= 2; ++k)
        for (long n = 0; n <= 10; ++n)
            CHECK(solver.basis(k, n)->admissible == brute_force_admissible(k, n));
}

TEST_CASE("one-variable quotient is nonzero exactly at spike degrees") {
    Solver solver({.use_cache = false});
    for (long n = 0; n <= 20; ++n) {
        std::size_t want = (n & (n + 1)) == 0 ? 1 : 0;  // n = 2^t - 1
        CHECK(solver.basis(1, n)->dim() == want);
    }
}

TEST_CASE("all-squares generator plan yields the same quotient") {
    Solver fast({.use_cache = false});
    Solver oracle({.all_squares = true, .use_cache = false});
    for (int k = 2; k <= 4; ++k)
        for (long n : {5L, 9L, 10L})
            CHECK(fast.basis(k, n)->admissible == oracle.basis(k, n)->admissible);
}

TEST_CASE("Wood vanishing") {
    Solver solver({.use_cache = false});
    for (int k = 1; k <= 3; ++k)
        for (long n = 1; n <= 20; ++n)
            if (mu(n) > k) CHECK(solver.basis(k, n)->dim() == 0);
}

TEST_CASE("spikes are never hit") {
    Solver solver({.use_cache = false});
    for (int k = 1; k <= 5; ++k)
        for (long n = 1; n <= 23; ++n) {
            if (mu(n) > k) continue;
            auto q = solver.basis(k, n);
            for (const auto& m : q->columns->monomials())
                if (m.is_spike()) CHECK(!coordinates(Polynomial(m), *q).zero());
        }
}

TEST_CASE("Singer filter is sound: filtered monomials are hit") {
    Solver solver({.use_cache = false});
    for (long n : {9L, 10L, 23L}) {
        auto q = solver.basis(5, n);
        q->hit.finalize();
        std::map<std::size_t, std::size_t> row_at;  // pivot column -> row
        for (std::size_t i = 0; i < q->hit.rank(); ++i) row_at[q->hit.pivot_of(i)] = i;
        for (std::size_t c = 0; c < q->columns->size(); ++c) {
            if (!singer_filter(q->columns->monomial(c))) continue;
            // the unit vector e_c is in the span iff the canonical row with
            // pivot c is e_c itself
            REQUIRE(q->hit.is_pivot(c));
            CHECK(q->hit.rows()[row_at[c]].popcount() == 1);
        }
    }
}

TEST_CASE("hit rank at four variables, degree nine") {
    Solver solver({.use_cache = false});
    auto q = solver.basis(4, 9);
    CHECK(q->hit.rank() == 174);
    CHECK(q->columns->size() == 220);
    CHECK(q->dim() == 46);
}

TEST_CASE("coordinates vanish exactly on hit polynomials") {
    Solver solver({.use_cache = false});
    auto q = solver.basis(3, 8);
    // an explicit hit element
    Polynomial h = sq(2, Polynomial::parse("x1^3 x2 x3^2", 3)) +
                   sq(1, Polynomial::parse("x1^3 x2^3 x3", 3));
    CHECK(coordinates(h, *q).zero());
    // an admissible monomial is its own residue
    Monomial a = q->admissible.front();
    auto v = coordinates(Polynomial(a), *q);
    CHECK(v.popcount() == 1);
    CHECK(v.test(q->index_of(a)));
    CHECK_THROWS(coordinates(Polynomial::parse("x1", 3), *q));  // degree mismatch
}

TEST_CASE("weight-restricted coordinates truncate lower weights and reject higher") {
    Solver solver({.use_cache = false});
    auto q = solver.weight_basis(5, WeightVector({3, 3}));
    // lower-weight terms die silently
    Polynomial lower(mono({1, 2, 2, 4, 0}));  // weight (1,2,1) < (3,3)
    CHECK(coordinates(lower, *q).zero());
    // higher-weight terms are a contract violation
    Polynomial higher(mono({1, 1, 1, 3, 3}));  // weight (5,2) > (3,3)
    CHECK_THROWS(coordinates(higher, *q));
}

TEST_CASE("weight block quotient agrees with the generic column intersection") {
    Solver solver({.use_cache = false});
    for (long n : {9L, 10L}) {
        auto full = solver.basis(5, n);
        for (const auto& w : weight_vectors_of_degree(5, n)) {
            auto block = solver.weight_basis(5, w);
            // generic route: restrict (hit + lower-weight columns) to the
            // weight-w columns
            gf2::EchelonBasis modulus(full->columns->size());
            for (const auto& r : full->hit.rows()) modulus.insert(r);
            std::vector<bool> keep(full->columns->size());
            for (std::size_t c = 0; c < keep.size(); ++c) {
                auto wc = WeightVector::of(full->columns->monomial(c));
                keep[c] = wc == w;
                if (wc < w) {
                    gf2::BitVec e(keep.size());
                    e.set(c);
                    modulus.insert(std::move(e));
                }
            }
            auto sub = intersect_columns(modulus, keep);
            CHECK(sub.rank() == block->hit.rank());
            for (const auto& r : sub.rows()) {
                gf2::BitVec t(block->columns->size());
                for (std::size_t c = 0; c < keep.size(); ++c)
                    if (r.test(c)) t.set(block->columns->position(full->columns->monomial(c)));
                CHECK(block->hit.contains(t));
            }
            // projection identity: block admissibles = weight slice
            CHECK(block->admissible == solver.weight_slice(5, w));
        }
    }
}

TEST_CASE("zero/plus split partitions the basis") {
    Solver solver({.use_cache = false});
    auto q = solver.basis(4, 9);
    auto [zero, plus] = split_zero_plus(*q);
    CHECK(zero.size() + plus.size() == q->dim());
    for (const auto& m : plus) CHECK(m.all_positive());
    for (const auto& m : zero) CHECK(!m.all_positive());
}

TEST_CASE("embedding and restriction maps act on quotient representatives") {
    // f_embed sends degree-n classes of P_{k-1} into P_k
    Polynomial f = Polynomial::parse("x1 x2^2", 2);
    CHECK(f_embed(2, f) == Polynomial::parse("x1 x3^2", 3));
    CHECK(p_restrict(1, 2, Polynomial::parse("x1 x2 x3", 3)) ==
          Polynomial::parse("x1^2 x2", 2));
}
