#include "hitprob/verify.hpp"

#include <chrono>
#include <functional>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <unordered_set>

#include "hitprob/invariants.hpp"
#include "hitprob/kameko.hpp"
#include "hitprob/serialize.hpp"

namespace hitprob {

VerifyScope parse_scope(const std::string& s) {
    if (s == "all") return VerifyScope::All;
    if (s == "degree9") return VerifyScope::Degree9;
    if (s == "degree10") return VerifyScope::Degree10;
    if (s == "degree23") return VerifyScope::Degree23;
    if (s == "invariants") return VerifyScope::Invariants;
    throw std::invalid_argument("unknown scope '" + s + "' (all|degree9|degree10|degree23|invariants)");
}

bool VerificationReport::pass() const {
    for (const auto& c : claims)
        if (!c.pass) return false;
    return true;
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : claims) {
        nlohmann::json j{{"id", c.id}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
        if (with_timing) j["seconds"] = c.seconds;
        arr.push_back(std::move(j));
    }
    return nlohmann::json{{"claims", std::move(arr)}, {"pass", pass()}};
}

namespace {

enum : unsigned { D9 = 1, D10 = 2, D23 = 4, INV = 8 };

unsigned mask_of(VerifyScope s) {
    switch (s) {
        case VerifyScope::Degree9: return D9;
        case VerifyScope::Degree10: return D10;
        case VerifyScope::Degree23: return D23;
        case VerifyScope::Invariants: return INV;
        case VerifyScope::All: return D9 | D10 | D23 | INV;
    }
    return 0;
}

using MonoSet = std::unordered_set<Monomial, MonomialHash>;

MonoSet as_set(const std::vector<Monomial>& v) { return MonoSet(v.begin(), v.end()); }

std::string count_and_match(const std::vector<Monomial>& computed,
                            const std::vector<Monomial>& expected) {
    bool eq = computed.size() == expected.size() && as_set(computed) == as_set(expected);
    return std::to_string(computed.size()) + (eq ? " set=match" : " set=mismatch");
}

// Images of a basis of P_{k-1} under the k variable-inserting embeddings;
// by design these reproduce the some-exponent-zero part of the basis of P_k.
std::vector<Monomial> embedded_zero_part(const std::vector<Monomial>& lower_basis, int k) {
    MonoSet out;
    for (int i = 1; i <= k; ++i) {
        RingMap fi = RingMap::f_embed(k, i);
        for (const auto& m : lower_basis) {
            Polynomial img = fi.apply(m);
            out.insert(img.terms().front());
        }
    }
    return std::vector<Monomial>(out.begin(), out.end());
}

Monomial mono(std::initializer_list<int> exps) {
    std::vector<std::uint16_t> e;
    for (int v : exps) e.push_back(static_cast<std::uint16_t>(v));
    return Monomial(std::move(e));
}

// Sum over the whole symmetric orbit of z, admissible or not.
Polynomial symmetrized(const Monomial& z) {
    auto e = z.exponents();
    std::sort(e.begin(), e.end());
    std::vector<Monomial> terms;
    do terms.push_back(Monomial(std::vector<std::uint16_t>(e.begin(), e.end())));
    while (std::next_permutation(e.begin(), e.end()));
    return Polynomial(z.k(), std::move(terms));
}

// Echelon span of the classes of the full symmetric orbits of the given
// monomials: the smallest permutation-stable subspace containing them.
gf2::EchelonBasis orbit_module(const std::vector<Monomial>& gens, const QuotientBasis& q) {
    gf2::EchelonBasis span(q.dim());
    for (const auto& z : gens) {
        auto e = z.exponents();
        std::sort(e.begin(), e.end());
        do span.insert(coordinates(Polynomial(Monomial(std::vector<std::uint16_t>(e.begin(), e.end()))), q));
        while (std::next_permutation(e.begin(), e.end()));
    }
    return span;
}

std::string yn(bool b) { return b ? "true" : "false"; }

struct Runner {
    VerificationReport& report;
    unsigned want;

    void claim(unsigned scopes, const std::string& id, const std::string& expected,
               const std::function<std::string()>& compute) {
        if (!(scopes & want)) return;
        Claim c;
        c.id = id;
        c.expected = expected;
        auto t0 = std::chrono::steady_clock::now();
        c.computed = compute();
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.pass = c.computed == c.expected;
        report.claims.push_back(std::move(c));
    }
};

}  // namespace

VerificationReport verify_paper(VerifyScope scope, const VerifyOptions& opts) {
    VerificationReport report;
    Runner run{report, mask_of(scope)};
    Solver solver(opts.solver);
    const std::string& dir = opts.fixture_dir;
    auto list = [&](const std::string& id, int k) { return load_monomial_list(dir + "/" + id + ".txt", k); };
    auto poly = [&](const std::string& id) { return load_polynomial(dir + "/" + id + ".txt", 5); };

    const WeightVector w1({3, 2, 2, 1}), w2({3, 4, 1, 1}), w3({3, 4, 3}), w4({3, 2, 4});

    // ---- degree 9 (and the degree-2 quotient feeding its Kameko map) ----
    run.claim(D9, "basis_k4_n9", "46 set=match", [&] {
        return count_and_match(solver.basis(4, 9)->admissible, list("B4_9", 4));
    });
    run.claim(D9, "dim_k5_n2", "10", [&] { return std::to_string(solver.basis(5, 2)->dim()); });
    run.claim(D9, "dim_k5_n9", "191", [&] { return std::to_string(solver.basis(5, 9)->dim()); });
    run.claim(D9, "split_k5_n9", "160+31", [&] {
        auto [zero, plus] = split_zero_plus(*solver.basis(5, 9));
        return std::to_string(zero.size()) + "+" + std::to_string(plus.size());
    });
    run.claim(D9, "zero_part_from_embeddings_n9", "set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.basis(5, 9));
        auto images = embedded_zero_part(solver.basis(4, 9)->admissible, 5);
        return as_set(zero) == as_set(images) ? "set=match" : "set=mismatch";
    });
    run.claim(D9, "block_k5_w311_plus", "6 set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.weight_basis(5, WeightVector({3, 1, 1})));
        return count_and_match(plus, list("B5_9_plus_311", 5));
    });
    run.claim(D9, "block_k5_w33_plus", "15 set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.weight_basis(5, WeightVector({3, 3})));
        return count_and_match(plus, list("B5_9_plus_33", 5));
    });
    run.claim(D9, "block_k5_w52", "10 set=match", [&] {
        return count_and_match(solver.weight_basis(5, WeightVector({5, 2}))->admissible,
                               list("B5_9_52", 5));
    });
    run.claim(D9, "block_sum_k5_n9", "191", [&] {
        std::size_t total = 0;
        for (const auto& w : weight_vectors_of_degree(5, 9)) total += solver.weight_basis(5, w)->dim();
        return std::to_string(total);
    });
    run.claim(D9, "kameko_kernel_k5_d2", "181", [&] {
        return std::to_string(kameko_down(solver, 5, 2).kernel().rank());
    });
    run.claim(D9, "kameko_surjective_k5_d2", "true", [&] {
        return yn(kameko_down(solver, 5, 2).surjective());
    });
    run.claim(D9, "kameko_section_identity_k5_d2", "true", [&] {
        auto map = kameko_down(solver, 5, 2);
        auto section = map.section_columns();
        for (std::size_t j = 0; j < section.size(); ++j) {
            gf2::BitVec e(map.lower_dim());
            e.set(j);
            if (map.apply(section[j]) != e) return yn(false);
        }
        return yn(true);
    });

    // ---- degree 10 ----
    run.claim(D10, "basis_k4_n10", "70 set=match", [&] {
        return count_and_match(solver.basis(4, 10)->admissible, list("B4_10", 4));
    });
    run.claim(D10, "dim_k5_n10", "280", [&] { return std::to_string(solver.basis(5, 10)->dim()); });
    run.claim(D10, "split_k5_n10", "230+50", [&] {
        auto [zero, plus] = split_zero_plus(*solver.basis(5, 10));
        return std::to_string(zero.size()) + "+" + std::to_string(plus.size());
    });
    run.claim(D10, "zero_part_from_embeddings_n10", "set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.basis(5, 10));
        auto images = embedded_zero_part(solver.basis(4, 10)->admissible, 5);
        return as_set(zero) == as_set(images) ? "set=match" : "set=mismatch";
    });
    run.claim(D10, "block_k5_w221_plus", "5 set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.weight_basis(5, WeightVector({2, 2, 1})));
        return count_and_match(plus, list("B5_10_plus_221", 5));
    });
    run.claim(D10, "block_k5_w24_plus", "5 set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.weight_basis(5, WeightVector({2, 4})));
        return count_and_match(plus, list("B5_10_plus_24", 5));
    });
    run.claim(D10, "block_k5_w411_plus", "20 set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.weight_basis(5, WeightVector({4, 1, 1})));
        return count_and_match(plus, list("B5_10_plus_411", 5));
    });
    run.claim(D10, "block_k5_w43_plus", "20 set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.weight_basis(5, WeightVector({4, 3})));
        return count_and_match(plus, list("B5_10_plus_43", 5));
    });
    run.claim(D10, "block_sum_k5_n10", "280", [&] {
        std::size_t total = 0;
        for (const auto& w : weight_vectors_of_degree(5, 10)) total += solver.weight_basis(5, w)->dim();
        return std::to_string(total);
    });

    // ---- degree 23 ----
    run.claim(D23, "basis_k4_n23", "155 set=match", [&] {
        return count_and_match(solver.basis(4, 23)->admissible, list("B4_23", 4));
    });
    run.claim(D23, "dim_k5_n23", "1245", [&] { return std::to_string(solver.basis(5, 23)->dim()); });
    run.claim(D23, "split_k5_n23", "635+610", [&] {
        auto [zero, plus] = split_zero_plus(*solver.basis(5, 23));
        return std::to_string(zero.size()) + "+" + std::to_string(plus.size());
    });
    run.claim(D23, "zero_part_from_embeddings_n23", "set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.basis(5, 23));
        auto images = embedded_zero_part(solver.basis(4, 23)->admissible, 5);
        return as_set(zero) == as_set(images) ? "set=match" : "set=mismatch";
    });
    run.claim(D23, "block_k5_w3221_plus", "290 set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.weight_basis(5, w1));
        return count_and_match(plus, list("B5_23_plus_3221", 5));
    });
    run.claim(D23, "block_k5_w3411_plus", "105 set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.weight_basis(5, w2));
        return count_and_match(plus, list("B5_23_plus_3411", 5));
    });
    run.claim(D23, "block_k5_w343_plus", "24 set=match", [&] {
        auto [zero, plus] = split_zero_plus(*solver.weight_basis(5, w3));
        return count_and_match(plus, list("B5_23_plus_343", 5));
    });
    run.claim(D23, "block_k5_w324", "0", [&] {
        return std::to_string(solver.weight_basis(5, w4)->dim());
    });
    run.claim(D23, "block_dims_k5_n23", "925/105/24", [&] {
        return std::to_string(solver.weight_basis(5, w1)->dim()) + "/" +
               std::to_string(solver.weight_basis(5, w2)->dim()) + "/" +
               std::to_string(solver.weight_basis(5, w3)->dim());
    });
    run.claim(D23, "block_sum_k5_n23", "1245", [&] {
        // partition of the full admissible set by weight; agreement of the
        // per-block quotients with these slices is checked at the four
        // blocks above and exhaustively at degrees 9 and 10
        std::size_t total = 0;
        for (const auto& w : weight_vectors_of_degree(5, 23))
            total += solver.weight_slice(5, w).size();
        return std::to_string(total);
    });
    run.claim(D23, "block_slices_match_quotients_n23", "true", [&] {
        for (const auto* w : {&w1, &w2, &w3, &w4})
            if (solver.weight_basis(5, *w)->dim() != solver.weight_slice(5, *w).size())
                return yn(false);
        return yn(true);
    });
    run.claim(D23, "kameko_kernel_k5_d9", "1054", [&] {
        return std::to_string(kameko_down(solver, 5, 9).kernel().rank());
    });
    run.claim(D23, "kameko_surjective_k5_d9", "true", [&] {
        return yn(kameko_down(solver, 5, 9).surjective());
    });
    run.claim(D23, "kameko_section_identity_k5_d9", "true", [&] {
        auto map = kameko_down(solver, 5, 9);
        auto section = map.section_columns();
        for (std::size_t j = 0; j < section.size(); ++j) {
            gf2::BitVec e(map.lower_dim());
            e.set(j);
            if (map.apply(section[j]) != e) return yn(false);
        }
        return yn(true);
    });
    run.claim(D23, "psi_images_admissible_n23", "191", [&] {
        auto upper = solver.basis(5, 23);
        std::size_t count = 0;
        for (const auto& y : solver.basis(5, 9)->admissible)
            if (upper->is_admissible(kameko_psi(y))) ++count;
        return std::to_string(count);
    });

    // ---- invariants ----
    run.claim(D9 | INV, "gl_invariants_k5_n2", "0", [&] {
        return std::to_string(invariants(*solver.basis(5, 2), Group::GL).rank());
    });
    run.claim(D9 | INV, "gl_invariants_k5_n9", "0", [&] {
        return std::to_string(invariants(*solver.basis(5, 9), Group::GL).rank());
    });
    run.claim(D23 | INV, "gl_invariants_k5_n23", "0", [&] {
        return std::to_string(invariants(*solver.basis(5, 23), Group::GL).rank());
    });
    run.claim(D9 | INV, "sigma_invariants_kameko_kernel_n9", "6", [&] {
        auto q9 = solver.basis(5, 9);
        auto kernel = kameko_down(solver, 5, 2).kernel();
        return std::to_string(invariants_on_subspace(*q9, kernel, Group::Sigma).rank());
    });
    run.claim(INV, "sigma_invariants_w3411", "4", [&] {
        return std::to_string(invariants(*solver.weight_basis(5, w2), Group::Sigma).rank());
    });
    run.claim(INV, "sigma_invariants_w343", "1", [&] {
        return std::to_string(invariants(*solver.weight_basis(5, w3), Group::Sigma).rank());
    });
    run.claim(INV, "sigma_invariants_w3221", "14", [&] {
        return std::to_string(invariants(*solver.weight_basis(5, w1), Group::Sigma).rank());
    });
    run.claim(INV, "sigma_invariants_kernel_n23_full_route", "19", [&] {
        // independent route over full-degree coordinates; must equal the
        // per-block sums 14 + 4 + 1
        auto q23 = solver.basis(5, 23);
        auto kernel = kameko_down(solver, 5, 9).kernel();
        return std::to_string(invariants_on_subspace(*q23, kernel, Group::Sigma).rank());
    });
    run.claim(D9 | INV, "p1_p2_p3_sigma_invariant_n9", "true/true/true", [&] {
        auto q9 = solver.basis(5, 9);
        return yn(is_invariant_class(poly("p1"), *q9, Group::Sigma)) + std::string("/") +
               yn(is_invariant_class(poly("p2"), *q9, Group::Sigma)) + "/" +
               yn(is_invariant_class(poly("p3"), *q9, Group::Sigma));
    });
    run.claim(D9 | INV, "orbit_sums_u1_u2_u3_sigma_invariant_n9", "true/true/true", [&] {
        auto q9 = solver.basis(5, 9);
        std::string out;
        for (const auto& u : {mono({1, 1, 7, 0, 0}), mono({3, 3, 3, 0, 0}), mono({1, 3, 5, 0, 0})}) {
            if (!out.empty()) out += "/";
            out += yn(is_invariant_class(orbit_sum(u, *q9), *q9, Group::Sigma));
        }
        return out;
    });
    run.claim(INV, "p4_sigma_invariant_w3411", "true", [&] {
        return yn(is_invariant_class(poly("p4"), *solver.weight_basis(5, w2), Group::Sigma));
    });
    run.claim(INV, "orbit_sums_sigma_invariant_w3411", "true/true", [&] {
        auto q = solver.weight_basis(5, w2);
        return yn(is_invariant_class(orbit_sum(mono({1, 2, 2, 3, 15}), *q), *q, Group::Sigma)) +
               std::string("/") +
               yn(is_invariant_class(orbit_sum(mono({1, 2, 2, 7, 11}), *q), *q, Group::Sigma));
    });
    run.claim(INV, "corrected_generator_w3411", "true", [&] {
        // the fourth invariant of the block is a sum of two orbit sums, not
        // a single one
        auto q = solver.weight_basis(5, w2);
        Polynomial f = orbit_sum(mono({1, 3, 3, 6, 10}), *q) +
                       orbit_sum(mono({3, 3, 5, 2, 10}), *q);
        return yn(is_invariant_class(f, *q, Group::Sigma) && !coordinates(f, *q).zero());
    });
    run.claim(INV, "submodules_w3411", "dims 20/10/15/60 invariants 1/1/1/1", [&] {
        auto q = solver.weight_basis(5, w2);
        std::string dims, invs;
        for (const auto& z : {mono({1, 2, 2, 3, 15}), mono({1, 2, 2, 7, 11}),
                              mono({1, 3, 3, 6, 10}), mono({1, 2, 3, 6, 11})}) {
            auto m = orbit_module({z}, *q);
            if (!dims.empty()) { dims += "/"; invs += "/"; }
            dims += std::to_string(m.rank());
            invs += std::to_string(invariants_on_subspace(*q, m, Group::Sigma).rank());
        }
        return "dims " + dims + " invariants " + invs;
    });
    run.claim(INV, "submodules_w343", "dims 20/4 invariants 1/0", [&] {
        auto q = solver.weight_basis(5, w3);
        auto m1 = orbit_module({mono({1, 3, 6, 6, 7})}, *q);
        auto m2 = orbit_module({mono({3, 3, 5, 6, 6})}, *q);
        return "dims " + std::to_string(m1.rank()) + "/" + std::to_string(m2.rank()) +
               " invariants " +
               std::to_string(invariants_on_subspace(*q, m1, Group::Sigma).rank()) + "/" +
               std::to_string(invariants_on_subspace(*q, m2, Group::Sigma).rank());
    });
    run.claim(INV, "symmetrized_orbit_invariant_w343", "true", [&] {
        auto q = solver.weight_basis(5, w3);
        Polynomial f = symmetrized(mono({1, 3, 6, 6, 7}));
        return yn(is_invariant_class(f, *q, Group::Sigma) && !coordinates(f, *q).zero());
    });
    run.claim(INV, "submodules_w3221", "dims 60/30/50/120/15/375/275 sum 925 invariants 1/1/1/1/1/4/5", [&] {
        auto q = solver.weight_basis(5, w1);
        std::vector<std::vector<Monomial>> gens = {
            {mono({1, 7, 15, 0, 0})}, {mono({3, 5, 15, 0, 0})}, {mono({3, 7, 13, 0, 0})},
            {mono({1, 2, 5, 15, 0})}, {mono({1, 1, 2, 4, 15})},
            {mono({1, 2, 7, 13, 0}), mono({1, 3, 5, 14, 0}), mono({1, 3, 6, 13, 0}),
             mono({1, 3, 7, 12, 0}), mono({3, 5, 6, 9, 0})},
            {mono({1, 1, 2, 6, 13}), mono({1, 1, 2, 7, 12}), mono({1, 1, 3, 6, 12}),
             mono({1, 2, 3, 4, 13}), mono({1, 2, 3, 5, 12}), mono({1, 2, 5, 6, 9}),
             mono({1, 2, 5, 7, 8})}};
        std::string dims, invs;
        std::size_t total = 0;
        for (const auto& g : gens) {
            auto m = orbit_module(g, *q);
            if (!dims.empty()) { dims += "/"; invs += "/"; }
            dims += std::to_string(m.rank());
            invs += std::to_string(invariants_on_subspace(*q, m, Group::Sigma).rank());
            total += m.rank();
        }
        return "dims " + dims + " sum " + std::to_string(total) + " invariants " + invs;
    });
    run.claim(D9 | INV, "submodules_kernel_n9", "dims 30/10/30/21/90 sum 181 invariants 1/1/1/2/1", [&] {
        auto q9 = solver.basis(5, 9);
        std::vector<std::vector<Monomial>> gens = {
            {mono({1, 1, 7, 0, 0})}, {mono({3, 3, 3, 0, 0})}, {mono({1, 3, 5, 0, 0})},
            {mono({1, 1, 2, 2, 3})},
            {mono({1, 1, 2, 5, 0}), mono({1, 2, 3, 3, 0})}};
        std::string dims, invs;
        std::size_t total = 0;
        for (const auto& g : gens) {
            auto m = orbit_module(g, *q9);
            if (!dims.empty()) { dims += "/"; invs += "/"; }
            dims += std::to_string(m.rank());
            invs += std::to_string(invariants_on_subspace(*q9, m, Group::Sigma).rank());
            total += m.rank();
        }
        return "dims " + dims + " sum " + std::to_string(total) + " invariants " + invs;
    });
    run.claim(INV, "p5p6_p6p7_sigma_invariant_w3221", "true/true", [&] {
        auto q = solver.weight_basis(5, w1);
        Polynomial p5 = poly("p5"), p6 = poly("p6"), p7 = poly("p7");
        return yn(is_invariant_class(p5 + p6, *q, Group::Sigma)) + std::string("/") +
               yn(is_invariant_class(p6 + p7, *q, Group::Sigma));
    });

    return report;
}

}  // namespace hitprob
