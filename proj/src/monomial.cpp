#include "hitprob/monomial.hpp"

#include <cctype>
#include <stdexcept>

namespace hitprob {

Monomial::Monomial(std::vector<std::uint16_t> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw std::invalid_argument("Monomial: k must be >= 1");
}

Monomial Monomial::one(int k) {
    if (k < 1) throw std::invalid_argument("Monomial: k must be >= 1");
    return Monomial(std::vector<std::uint16_t>(static_cast<std::size_t>(k), 0));
}

long Monomial::degree() const {
    long d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::all_positive() const {
    for (auto e : exps_)
        if (e == 0) return false;
    return true;
}

bool Monomial::is_spike() const {
    for (auto e : exps_) {
        unsigned v = static_cast<unsigned>(e) + 1u;
        if (v & (v - 1)) return false;  // e must be 2^t - 1
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (k() != other.k()) throw std::invalid_argument("Monomial product: k mismatch");
    std::vector<std::uint16_t> e(exps_.size());
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        unsigned long s = static_cast<unsigned long>(exps_[j]) + other.exps_[j];
        if (s > 0xFFFF) throw std::overflow_error("Monomial product: exponent exceeds 16 bits");
        e[j] = static_cast<std::uint16_t>(s);
    }
    return Monomial(std::move(e));
}

std::string Monomial::text() const {
    std::string out;
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (exps_[j] == 0) continue;
        if (!out.empty()) out += ' ';
        out += 'x';
        out += std::to_string(j + 1);
        if (exps_[j] > 1) {
            out += '^';
            out += std::to_string(exps_[j]);
        }
    }
    return out.empty() ? "1" : out;
}

Monomial Monomial::parse(const std::string& s, int k) {
    if (k < 1) throw std::invalid_argument("Monomial::parse: k must be >= 1");
    std::vector<std::uint16_t> e(static_cast<std::size_t>(k), 0);
    std::size_t i = 0;
    auto skip_sep = [&] {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
    };
    auto read_number = [&]() -> unsigned long {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("Monomial::parse: expected a number in '" + s + "'");
        unsigned long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<unsigned long>(s[i] - '0');
            if (v > 0xFFFF) throw std::overflow_error("Monomial::parse: value exceeds 16 bits");
            ++i;
        }
        return v;
    };
    skip_sep();
    if (i < s.size() && s[i] == '1' && (i + 1 == s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
        ++i;
        skip_sep();
        if (i != s.size()) throw std::invalid_argument("Monomial::parse: trailing input after '1'");
        return Monomial(std::move(e));
    }
    bool any = false;
    while (i < s.size()) {
        if (s[i] != 'x') throw std::invalid_argument("Monomial::parse: expected 'x' in '" + s + "'");
        ++i;
        unsigned long var = read_number();
        if (var < 1 || var > static_cast<unsigned long>(k))
            throw std::out_of_range("Monomial::parse: variable index out of range in '" + s + "'");
        unsigned long exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            exp = read_number();
        }
        unsigned long total = e[var - 1] + exp;
        if (total > 0xFFFF) throw std::overflow_error("Monomial::parse: exponent exceeds 16 bits");
        e[var - 1] = static_cast<std::uint16_t>(total);
        any = true;
        skip_sep();
    }
    if (!any) throw std::invalid_argument("Monomial::parse: empty input");
    return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ull;
    return h;
}

}  // namespace hitprob
