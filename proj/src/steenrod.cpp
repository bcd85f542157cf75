#include "hitprob/steenrod.hpp"

#include <stdexcept>

#include "hitprob/weights.hpp"

namespace hitprob {

namespace {

// Distribute i across the variables: Sq^i(x^e) (one variable) is
// C(e, i) x^{e+i}, and the Cartan formula turns a monomial into the sum
// over all compositions i = i_1 + ... + i_k with every C(e_j, i_j) odd.
void distribute(const Monomial& m, std::size_t j, long rem,
                std::vector<std::uint16_t>& cur, std::vector<Monomial>& out) {
    const auto& e = m.exponents();
    if (j + 1 == e.size()) {
        if (rem > e[j]) return;
        if (!binom_mod2(e[j], static_cast<unsigned long>(rem))) return;
        unsigned long s = e[j] + static_cast<unsigned long>(rem);
        if (s > 0xFFFF) throw std::overflow_error("sq: exponent exceeds 16 bits");
        cur[j] = static_cast<std::uint16_t>(s);
        out.emplace_back(cur);
        cur[j] = e[j];
        return;
    }
    long hi = std::min<long>(rem, e[j]);
    for (long i = 0; i <= hi; ++i) {
        if (!binom_mod2(e[j], static_cast<unsigned long>(i))) continue;
        unsigned long s = e[j] + static_cast<unsigned long>(i);
        if (s > 0xFFFF) throw std::overflow_error("sq: exponent exceeds 16 bits");
        cur[j] = static_cast<std::uint16_t>(s);
        distribute(m, j + 1, rem - i, cur, out);
    }
    cur[j] = e[j];
}

}  // namespace

Polynomial sq(long i, const Monomial& m) {
    if (i < 0) throw std::invalid_argument("sq: i must be >= 0");
    if (i == 0) return Polynomial(m);
    if (i > m.degree()) return Polynomial();
    std::vector<Monomial> terms;
    std::vector<std::uint16_t> cur(m.exponents());
    distribute(m, 0, i, cur, terms);
    return Polynomial(m.k(), std::move(terms));
}

Polynomial sq(long i, const Polynomial& f) {
    if (i < 0) throw std::invalid_argument("sq: i must be >= 0");
    if (f.zero()) return Polynomial();
    Polynomial out;
    for (const auto& m : f.terms()) out = out + sq(i, m);
    return out;
}

std::vector<HitSource> hit_sources(int k, long n, bool all_squares) {
    if (k < 1 || n < 0) throw std::invalid_argument("hit_sources: need k >= 1, n >= 0");
    std::vector<HitSource> out;
    auto add = [&](long i) {
        if (i < 1 || i > n) return;
        out.push_back({i, degree_slice(k, n - i)});
    };
    if (all_squares) {
        for (long i = 1; i <= n; ++i) add(i);
    } else {
        for (long i = 1; i <= n; i <<= 1) add(i);
    }
    return out;
}

std::vector<Polynomial> hit_generators(int k, long n, bool all_squares) {
    std::vector<Polynomial> out;
    for (const auto& src : hit_sources(k, n, all_squares)) {
        for (const auto& m : src.sources) {
            Polynomial g = sq(src.sq_i, m);
            if (!g.zero()) out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace hitprob
