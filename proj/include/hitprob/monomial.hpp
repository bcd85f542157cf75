#ifndef HITPROB_MONOMIAL_HPP
#define HITPROB_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hitprob {

/// A monomial in F2[x1,...,xk], stored as its exponent vector.
/// Exponents are bounded to 16 bits; exceeding that is a hard error.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint16_t> exponents);

    /// The constant monomial 1 in k variables.
    static Monomial one(int k);

    int k() const { return static_cast<int>(exps_.size()); }
    long degree() const;
    std::uint16_t exponent(int j) const { return exps_[static_cast<std::size_t>(j)]; }
    const std::vector<std::uint16_t>& exponents() const { return exps_; }

    bool all_positive() const;
    bool is_spike() const;  // every exponent of the form 2^t - 1

    Monomial operator*(const Monomial& other) const;
    bool operator==(const Monomial&) const = default;

    /// Canonical text form: "x1^7 x2 x3"; the constant monomial prints "1".
    std::string text() const;
    static Monomial parse(const std::string& s, int k);

private:
    std::vector<std::uint16_t> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace hitprob

#endif
