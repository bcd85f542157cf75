#include "hitprob/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "hitprob/weights.hpp"

namespace hitprob {

namespace {

// Sort ascending under the admissible order and cancel duplicate pairs.
std::vector<Monomial> normalize(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), admissible_less);
    std::vector<Monomial> out;
    out.reserve(terms.size());
    std::size_t i = 0;
    while (i < terms.size()) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) & 1) out.push_back(terms[i]);
        i = j;
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(const Monomial& m)
    : k_(m.k()), degree_(m.degree()), terms_{m} {}

Polynomial::Polynomial(int k, std::vector<Monomial> terms) : k_(k) {
    for (const auto& m : terms) {
        if (m.k() != k) throw std::invalid_argument("Polynomial: term has wrong k");
        if (m.degree() != terms.front().degree())
            throw std::invalid_argument("Polynomial: terms of mixed degree");
    }
    if (!terms.empty()) degree_ = terms.front().degree();
    terms_ = normalize(std::move(terms));
    if (terms_.empty()) degree_ = 0;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    if (zero()) return g;
    if (g.zero()) return *this;
    if (k_ != g.k_) throw std::invalid_argument("poly_add: k mismatch");
    if (degree_ != g.degree_) throw std::invalid_argument("poly_add: degree mismatch");
    // symmetric difference of two sorted term lists
    std::vector<Monomial> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        auto c = admissible_cmp(terms_[i], g.terms_[j]);
        if (c == std::strong_ordering::less) out.push_back(terms_[i++]);
        else if (c == std::strong_ordering::greater) out.push_back(g.terms_[j++]);
        else { ++i; ++j; }
    }
    out.insert(out.end(), terms_.begin() + static_cast<long>(i), terms_.end());
    out.insert(out.end(), g.terms_.begin() + static_cast<long>(j), g.terms_.end());
    Polynomial r(k_, degree_);
    r.terms_ = std::move(out);
    if (r.terms_.empty()) r.degree_ = 0;
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (zero() || g.zero()) return zero() && g.zero();
    return k_ == g.k_ && degree_ == g.degree_ && terms_ == g.terms_;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    if (zero() || g.zero()) return Polynomial();
    if (k_ != g.k_) throw std::invalid_argument("poly_mul: k mismatch");
    std::vector<Monomial> prods;
    prods.reserve(terms_.size() * g.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : g.terms_) prods.push_back(a * b);
    return Polynomial(k_, std::move(prods));
}

std::string Polynomial::text() const {
    if (zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += " + ";
        s += terms_[i].text();
    }
    return s;
}

Polynomial Polynomial::parse(const std::string& s, int k) {
    std::vector<Monomial> terms;
    std::size_t start = 0;
    bool any_nonzero = false;
    while (start <= s.size()) {
        std::size_t plus = s.find('+', start);
        std::string piece = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        std::size_t a = piece.find_first_not_of(" \t\r\n");
        if (a != std::string::npos) {
            std::size_t b = piece.find_last_not_of(" \t\r\n");
            piece = piece.substr(a, b - a + 1);
            if (piece == "0") {
                // zero term contributes nothing
            } else {
                terms.push_back(Monomial::parse(piece, k));
                any_nonzero = true;
            }
        }
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    if (!any_nonzero) return Polynomial();
    return Polynomial(k, std::move(terms));
}

RingMap::RingMap(int k_in, int k_out, std::vector<Polynomial> images)
    : k_in_(k_in), k_out_(k_out), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != k_in)
        throw std::invalid_argument("RingMap: need one image per input variable");
    for (const auto& im : images_) {
        if (im.k() != k_out || im.degree() != 1)
            throw std::invalid_argument("RingMap: images must be linear forms over k_out variables");
    }
}

namespace {

Polynomial variable(int k, int j) {  // 1-based
    std::vector<std::uint16_t> e(static_cast<std::size_t>(k), 0);
    e[static_cast<std::size_t>(j - 1)] = 1;
    return Polynomial(Monomial(std::move(e)));
}

}  // namespace

RingMap RingMap::transposition(int k, int i) {
    if (i < 1 || i >= k) throw std::out_of_range("RingMap::transposition: need 1 <= i < k");
    std::vector<Polynomial> im;
    for (int j = 1; j <= k; ++j) {
        int t = j == i ? i + 1 : (j == i + 1 ? i : j);
        im.push_back(variable(k, t));
    }
    return RingMap(k, k, std::move(im));
}

RingMap RingMap::unipotent(int k) {
    std::vector<Polynomial> im;
    im.push_back(variable(k, 1) + variable(k, 2));
    for (int j = 2; j <= k; ++j) im.push_back(variable(k, j));
    return RingMap(k, k, std::move(im));
}

RingMap RingMap::f_embed(int k, int i) {
    if (i < 1 || i > k) throw std::out_of_range("RingMap::f_embed: need 1 <= i <= k");
    std::vector<Polynomial> im;
    for (int j = 1; j < k; ++j) im.push_back(variable(k, j < i ? j : j + 1));
    return RingMap(k - 1, k, std::move(im));
}

RingMap RingMap::p_restrict(int k, int i, int j) {
    if (!(1 <= i && i < j && j <= k)) throw std::out_of_range("RingMap::p_restrict: need 1 <= i < j <= k");
    std::vector<Polynomial> im;
    for (int u = 1; u <= k; ++u) {
        int t = u < i ? u : (u == i ? j - 1 : u - 1);
        im.push_back(variable(k - 1, t));
    }
    return RingMap(k, k - 1, std::move(im));
}

Polynomial RingMap::apply(const Monomial& m) const {
    if (m.k() != k_in_) throw std::invalid_argument("RingMap::apply: k mismatch");
    Polynomial acc(Monomial::one(k_out_));
    for (int j = 0; j < k_in_; ++j) {
        unsigned e = m.exponent(j);
        if (!e) continue;
        // image^e = product over set bits t of (sum of variables)^{2^t},
        // and the 2^t-th power of a linear form is the sum of the 2^t-th
        // powers of its variables (Frobenius).
        for (int t = 0; e; ++t, e >>= 1) {
            if (!(e & 1)) continue;
            std::vector<Monomial> pw;
            for (const auto& v : images_[static_cast<std::size_t>(j)].terms()) {
                std::vector<std::uint16_t> ex(v.exponents());
                for (auto& a : ex) {
                    unsigned long s = static_cast<unsigned long>(a) << t;
                    if (s > 0xFFFF) throw std::overflow_error("RingMap::apply: exponent overflow");
                    a = static_cast<std::uint16_t>(s);
                }
                pw.emplace_back(std::move(ex));
            }
            acc = acc * Polynomial(k_out_, std::move(pw));
        }
    }
    return acc;
}

Polynomial RingMap::apply(const Polynomial& f) const {
    Polynomial out;
    for (const auto& m : f.terms()) out = out + apply(m);
    return out;
}

}  // namespace hitprob
