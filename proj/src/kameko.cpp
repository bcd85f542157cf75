#include "hitprob/kameko.hpp"

#include <stdexcept>

namespace hitprob {

std::optional<Monomial> kameko_phi(const Monomial& x) {
    std::vector<std::uint16_t> e(x.exponents());
    for (auto& a : e) {
        if (!(a & 1)) return std::nullopt;
        a = static_cast<std::uint16_t>((a - 1) >> 1);
    }
    return Monomial(std::move(e));
}

Monomial kameko_psi(const Monomial& x) {
    std::vector<std::uint16_t> e(x.exponents());
    for (auto& a : e) {
        unsigned long s = 2ul * a + 1ul;
        if (s > 0xFFFF) throw std::overflow_error("kameko_psi: exponent exceeds 16 bits");
        a = static_cast<std::uint16_t>(s);
    }
    return Monomial(std::move(e));
}

KamekoMap::KamekoMap(std::shared_ptr<const QuotientBasis> upper,
                     std::shared_ptr<const QuotientBasis> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (upper_->k != lower_->k)
        throw std::invalid_argument("KamekoMap: k mismatch");
    if (upper_->n != 2 * lower_->n + upper_->k)
        throw std::invalid_argument("KamekoMap: degrees must satisfy n_up = 2 n_low + k");
    if (upper_->omega || lower_->omega)
        throw std::invalid_argument("KamekoMap: expects full-degree bases");
    cols_.reserve(upper_->dim());
    for (const auto& m : upper_->admissible) {
        auto y = kameko_phi(m);
        if (!y) {
            cols_.emplace_back(lower_->dim());
            continue;
        }
        cols_.push_back(coordinates(Polynomial(*y), *lower_));
    }
}

gf2::BitVec KamekoMap::apply(const gf2::BitVec& upper_coords) const {
    if (upper_coords.size() != upper_->dim())
        throw std::invalid_argument("KamekoMap::apply: coordinate length mismatch");
    gf2::BitVec out(lower_->dim());
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (upper_coords.test(j)) out ^= cols_[j];
    return out;
}

std::size_t KamekoMap::rank() const {
    gf2::EchelonBasis image(lower_->dim());
    for (const auto& c : cols_) image.insert(c);
    return image.rank();
}

gf2::EchelonBasis KamekoMap::kernel() const {
    // rows of the matrix as functionals on the upper coordinates
    std::vector<gf2::BitVec> rows(lower_->dim(), gf2::BitVec(upper_->dim()));
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (std::size_t i = 0; i < lower_->dim(); ++i)
            if (cols_[j].test(i)) rows[i].set(j);
    return gf2::kernel_of(rows, upper_->dim());
}

std::vector<gf2::BitVec> KamekoMap::section_columns() const {
    std::vector<gf2::BitVec> out;
    out.reserve(lower_->dim());
    for (const auto& y : lower_->admissible)
        out.push_back(coordinates(Polynomial(kameko_psi(y)), *upper_));
    return out;
}

KamekoMap kameko_down(Solver& solver, int k, long d) {
    return KamekoMap(solver.basis(k, 2 * d + k), solver.basis(k, d));
}

StabilityReport stability_report(int k, long d) {
    StabilityReport r{};
    r.k = k;
    r.d = d;
    r.mu_2d_plus_k = mu(2 * d + k);
    r.iso_by_squaring = (r.mu_2d_plus_k == k);
    r.t_value = t_bound(k, d);
    return r;
}

}  // namespace hitprob
