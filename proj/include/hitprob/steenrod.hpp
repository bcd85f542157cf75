#ifndef HITPROB_STEENROD_HPP
#define HITPROB_STEENROD_HPP

#include <functional>
#include <utility>
#include <vector>

#include "hitprob/polynomial.hpp"

namespace hitprob {

/// Sq^i on a homogeneous polynomial. Sq^0 = id, Sq^i f = 0 for i > deg f,
/// Sq^{deg f} m = m^2 on monomials; Cartan formula across variables.
Polynomial sq(long i, const Polynomial& f);
Polynomial sq(long i, const Monomial& m);

/// One group of hit-space generators: apply Sq^{sq_i} to each source
/// monomial of degree n - sq_i.
struct HitSource {
    long sq_i;
    std::vector<Monomial> sources;
};

/// Generator plan for (A+ P_k)_n. By default only the Sq^{2^u} are used:
/// the Steenrod algebra is generated by them, so A+ P_k = sum_u Sq^{2^u} P_k.
/// With all_squares the plan covers every Sq^i, 1 <= i <= n, as a
/// cross-check oracle.
std::vector<HitSource> hit_sources(int k, long n, bool all_squares = false);

/// Flat stream Sq^{2^u}(m); zero images are skipped (span unchanged).
std::vector<Polynomial> hit_generators(int k, long n, bool all_squares = false);

}  // namespace hitprob

#endif
