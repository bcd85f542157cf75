#ifndef HITPROB_POLYNOMIAL_HPP
#define HITPROB_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "hitprob/monomial.hpp"

namespace hitprob {

/// Homogeneous polynomial over F2: a set of monomials of equal degree.
/// Terms are kept sorted ascending under the admissible order, so the
/// representation (and every serialization) is deterministic. The zero
/// polynomial is the empty term set.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int k, long degree) : k_(k), degree_(degree) {}
    explicit Polynomial(const Monomial& m);
    /// Terms need not be sorted or distinct; duplicates cancel mod 2.
    Polynomial(int k, std::vector<Monomial> terms);

    int k() const { return k_; }
    long degree() const { return degree_; }
    bool zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    /// Zero polynomials are equal regardless of their declared k and degree.
    bool operator==(const Polynomial& g) const;

    std::string text() const;  // terms joined by " + "; zero prints "0"
    static Polynomial parse(const std::string& s, int k);

private:
    int k_ = 0;
    long degree_ = 0;
    std::vector<Monomial> terms_;
};

/// Linear substitution homomorphism: each input variable maps to a sum of
/// distinct output variables (a degree-1 polynomial over k_out variables).
class RingMap {
public:
    RingMap(int k_in, int k_out, std::vector<Polynomial> images);

    /// x_i <-> x_{i+1} transposition (1-based i < k).
    static RingMap transposition(int k, int i);
    /// x_1 -> x_1 + x_2, other variables fixed.
    static RingMap unipotent(int k);
    /// f_i : P_{k-1} -> P_k skipping variable i (1-based).
    static RingMap f_embed(int k, int i);
    /// p_(i;j) : P_k -> P_{k-1}, identifying x_i with x_j (1 <= i < j <= k).
    static RingMap p_restrict(int k, int i, int j);

    int k_in() const { return k_in_; }
    int k_out() const { return k_out_; }

    Polynomial apply(const Polynomial& f) const;
    Polynomial apply(const Monomial& m) const;

private:
    int k_in_, k_out_;
    std::vector<Polynomial> images_;
};

/// C(a, b) mod 2 via Lucas: 1 iff the bits of b are a subset of those of a.
inline int binom_mod2(unsigned long a, unsigned long b) {
    return (b & a) == b ? 1 : 0;
}

}  // namespace hitprob

#endif
