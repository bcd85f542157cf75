#ifndef HITPROB_KAMEKO_HPP
#define HITPROB_KAMEKO_HPP

#include <optional>

#include "hitprob/solver.hpp"

namespace hitprob {

/// phi(x) = y if x = x_1...x_k y^2 (all exponents odd), zero otherwise.
std::optional<Monomial> kameko_phi(const Monomial& x);
/// psi(x) = X_empty x^2: exponents 2a+1. phi(psi(x)) = x.
Monomial kameko_psi(const Monomial& x);

/// The down map Sq^0_* : (QP_k)_{2d+k} -> (QP_k)_d on admissible
/// coordinates, plus its kernel and the psi-induced section.
class KamekoMap {
public:
    KamekoMap(std::shared_ptr<const QuotientBasis> upper,
              std::shared_ptr<const QuotientBasis> lower);

    std::size_t upper_dim() const { return upper_->dim(); }
    std::size_t lower_dim() const { return lower_->dim(); }

    /// Column j = coordinates of phi(upper admissible j) in the lower basis.
    const std::vector<gf2::BitVec>& matrix_columns() const { return cols_; }
    gf2::BitVec apply(const gf2::BitVec& upper_coords) const;

    std::size_t rank() const;
    bool surjective() const { return rank() == lower_dim(); }
    gf2::EchelonBasis kernel() const;  // over upper coordinates

    /// Section matrix: column j = coordinates of psi(lower admissible j) in
    /// the upper basis. down o section = identity when psi never hits.
    std::vector<gf2::BitVec> section_columns() const;

    const QuotientBasis& upper() const { return *upper_; }
    const QuotientBasis& lower() const { return *lower_; }

private:
    std::shared_ptr<const QuotientBasis> upper_, lower_;
    std::vector<gf2::BitVec> cols_;
};

KamekoMap kameko_down(Solver& solver, int k, long d);

struct StabilityReport {
    int k;
    long d;
    int mu_2d_plus_k;
    bool iso_by_squaring;  // mu(2d+k) == k forces the down map to be an iso
    int t_value;           // stability threshold t(k,d)
};

StabilityReport stability_report(int k, long d);

}  // namespace hitprob

#endif
