#include "hitprob/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace hitprob {

RingMap group_generator(int k, int i) {
    if (i < 1 || i > k) throw std::out_of_range("group_generator: need 1 <= i <= k");
    if (i < k) return RingMap::transposition(k, i);
    return RingMap::unipotent(k);
}

std::vector<RingMap> group_generators(int k, Group group) {
    std::vector<RingMap> out;
    int top = group == Group::GL ? k : k - 1;
    for (int i = 1; i <= top; ++i) out.push_back(group_generator(k, i));
    return out;
}

std::vector<gf2::BitVec> induced_matrix(const RingMap& g, const QuotientBasis& q) {
    if (g.k_in() != q.k || g.k_out() != q.k)
        throw std::invalid_argument("induced_matrix: map must be an endomorphism of P_k");
    std::vector<gf2::BitVec> cols;
    cols.reserve(q.dim());
    for (const auto& m : q.admissible)
        cols.push_back(coordinates(g.apply(m), q));
    return cols;
}

gf2::EchelonBasis invariants(const QuotientBasis& q, Group group) {
    const std::size_t d = q.dim();
    std::vector<gf2::BitVec> system;
    for (const auto& g : group_generators(q.k, group)) {
        auto cols = induced_matrix(g, q);
        // rows of (M - I) as functionals on the coordinates
        std::vector<gf2::BitVec> rows(d, gf2::BitVec(d));
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < d; ++i)
                if (cols[j].test(i)) rows[i].set(j);
        }
        for (std::size_t i = 0; i < d; ++i) {
            rows[i].flip(i);
            if (!rows[i].zero()) system.push_back(std::move(rows[i]));
        }
    }
    return gf2::kernel_of(system, d);
}

gf2::EchelonBasis invariants_on_subspace(const QuotientBasis& q,
                                         const gf2::EchelonBasis& subspace,
                                         Group group) {
    if (subspace.ncols() != q.dim())
        throw std::invalid_argument("invariants_on_subspace: subspace over wrong coordinates");
    const auto& base = subspace.rows();
    const std::size_t s = base.size();
    // coordinates w.r.t. the reduced-echelon rows read off at the pivots
    auto sub_coords = [&](const gf2::BitVec& v) {
        gf2::BitVec c(s);
        for (std::size_t r = 0; r < s; ++r)
            if (v.test(subspace.pivot_of(r))) c.set(r);
        return c;
    };
    std::vector<gf2::BitVec> system;
    for (const auto& g : group_generators(q.k, group)) {
        auto cols = induced_matrix(g, q);
        std::vector<gf2::BitVec> action(s);  // images of the subspace basis, sub coords
        for (std::size_t r = 0; r < s; ++r) {
            gf2::BitVec img(q.dim());
            for (std::size_t j = 0; j < q.dim(); ++j)
                if (base[r].test(j)) img ^= cols[j];
            if (!subspace.contains(img))
                throw std::domain_error("invariants_on_subspace: subspace is not stable");
            action[r] = sub_coords(img);
        }
        std::vector<gf2::BitVec> rows(s, gf2::BitVec(s));
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t i = 0; i < s; ++i)
                if (action[j].test(i)) rows[i].set(j);
        for (std::size_t i = 0; i < s; ++i) {
            rows[i].flip(i);
            if (!rows[i].zero()) system.push_back(std::move(rows[i]));
        }
    }
    return gf2::kernel_of(system, s);
}

bool is_invariant_class(const Polynomial& f, const QuotientBasis& q, Group group) {
    gf2::BitVec c = coordinates(f, q);
    for (const auto& g : group_generators(q.k, group))
        if (coordinates(g.apply(f), q) != c) return false;
    return true;
}

Polynomial orbit_sum(const Monomial& z, const QuotientBasis& q) {
    if (!q.is_admissible(z))
        throw std::invalid_argument("orbit_sum: '" + z.text() + "' is not admissible here");
    std::vector<std::uint16_t> e(z.exponents());
    std::sort(e.begin(), e.end());
    std::vector<Monomial> terms;
    do {
        Monomial m{std::vector<std::uint16_t>(e)};
        if (q.is_admissible(m)) terms.push_back(std::move(m));
    } while (std::next_permutation(e.begin(), e.end()));
    return Polynomial(q.k, std::move(terms));
}

}  // namespace hitprob
