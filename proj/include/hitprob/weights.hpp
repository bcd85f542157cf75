#ifndef HITPROB_WEIGHTS_HPP
#define HITPROB_WEIGHTS_HPP

#include <compare>
#include <string>
#include <vector>

#include "hitprob/monomial.hpp"

namespace hitprob {

/// Weight vector (w1, w2, ...): per bit-level counts of exponents with that
/// bit set. Stored with trailing zeros trimmed; comparison pads with zeros,
/// so (3,1,1) and (3,1,1,0) compare equal.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> entries);

    static WeightVector of(const Monomial& m);

    const std::vector<int>& entries() const { return entries_; }
    int entry(int i) const;  // 1-based level, 0 past the end
    int levels() const { return static_cast<int>(entries_.size()); }

    /// deg w = sum 2^{i-1} w_i.
    long degree() const;

    /// Left-lexicographic order.
    std::strong_ordering operator<=>(const WeightVector& o) const;
    bool operator==(const WeightVector& o) const;

    std::string text() const;  // "(3,2,2,1)"
    static WeightVector parse(const std::string& s);

private:
    std::vector<int> entries_;
};

/// Total order on monomials of equal degree: weight vectors left-lex first,
/// then exponent sequences left-lex. Throws on k or degree mismatch.
std::strong_ordering admissible_cmp(const Monomial& x, const Monomial& y);
bool admissible_less(const Monomial& x, const Monomial& y);

/// Number of ones in the dyadic expansion of n (n >= 0).
int alpha(long n);
/// Largest u with 2^u dividing n (n >= 1).
int zeta(long n);
/// Least r such that n is a sum of r terms 2^{u_i}-1, u_i > 0 (n >= 1).
int mu(long n);
/// t(k,d) = max{0, k - alpha(d+k) - zeta(d+k)}.
int t_bound(int k, long d);

/// The unique minimal spike of degree n in k variables. Requires mu(n) <= k.
Monomial minimal_spike(long n, int k);

/// Singer's hit certificate: true iff w(x) < w(minimal spike of deg x).
/// Sound but not complete. Requires mu(deg x) <= k.
bool singer_filter(const Monomial& x);

/// All monomials of degree n in k variables, sorted strictly descending
/// under the admissible order (largest first).
std::vector<Monomial> degree_slice(int k, long n);

/// All weight vectors w with deg w = n and entries in [0, k].
std::vector<WeightVector> weight_vectors_of_degree(int k, long n);

struct WeightBlock {
    std::vector<Monomial> equal;  // w(y) = w
    std::vector<Monomial> lower;  // w(y) < w, same degree
};

/// Monomials of degree (deg w) with weight <= w, partitioned into the
/// {w(y) = w} and {w(y) < w} parts. Enumerates per bit-level variable
/// subsets rather than filtering the full degree slice.
WeightBlock weight_block(int k, const WeightVector& w);

}  // namespace hitprob

#endif
