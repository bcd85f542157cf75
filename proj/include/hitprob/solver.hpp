#ifndef HITPROB_SOLVER_HPP
#define HITPROB_SOLVER_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hitprob/gf2.hpp"
#include "hitprob/polynomial.hpp"
#include "hitprob/weights.hpp"

namespace hitprob {

/// An ordered monomial column basis: strictly descending under the
/// admissible order, so pivot (= leading, lowest-index) columns of an
/// echelon basis are the maximal monomials of their rows.
class ColumnIndex {
public:
    explicit ColumnIndex(std::vector<Monomial> columns_descending);
    static ColumnIndex full_degree(int k, long n);

    std::size_t size() const { return cols_.size(); }
    const Monomial& monomial(std::size_t i) const { return cols_[i]; }
    const std::vector<Monomial>& monomials() const { return cols_; }
    std::size_t position(const Monomial& m) const;  // throws if absent
    bool has(const Monomial& m) const;

    gf2::BitVec vector_of(const Polynomial& f) const;
    /// Terms at columns absent from the index are dropped when
    /// `drop_missing`; otherwise absence throws.
    gf2::BitVec vector_of(const Polynomial& f, bool drop_missing) const;
    Polynomial polynomial_of(const gf2::BitVec& v, int k, long degree) const;

private:
    std::vector<Monomial> cols_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> pos_;
};

/// Admissible-monomial basis of a quotient: either the full (QP_k)_n or the
/// weight-restricted QP_k(w). `hit` is the modulus echelon basis over
/// `columns`; `admissible` are the non-pivot columns, sorted ascending.
struct QuotientBasis {
    int k = 0;
    long n = 0;
    std::optional<WeightVector> omega;  // set for QP_k(w)
    std::shared_ptr<const ColumnIndex> columns;
    gf2::EchelonBasis hit;
    std::vector<Monomial> admissible;
    std::unordered_map<Monomial, std::size_t, MonomialHash> admissible_pos;

    std::size_t dim() const { return admissible.size(); }
    bool is_admissible(const Monomial& m) const;
    std::size_t index_of(const Monomial& m) const;  // position in admissible
};

struct SolverOptions {
    bool all_squares = false;   // use every Sq^i as generators (oracle mode)
    bool use_cache = true;      // honor HITPROB_CACHE if set
    std::string cache_dir;      // overrides the environment variable
};

/// Coordinates of [f] on q.admissible (ascending). For weight-restricted q,
/// terms of lower weight are dropped first (the P^-(w) quotient), then the
/// remainder is reduced against the hit rows. coordinates(f) == 0 iff f is
/// hit (resp. f ===_w 0).
gf2::BitVec coordinates(const Polynomial& f, const QuotientBasis& q);

/// B^0 / B^+ split of the admissible set: some exponent zero vs all positive.
std::pair<std::vector<Monomial>, std::vector<Monomial>>
split_zero_plus(const QuotientBasis& q);

Polynomial f_embed(int i, const Polynomial& f);              // P_{k-1} -> P_k
Polynomial p_restrict(int i, int j, const Polynomial& f);    // P_k -> P_{k-1}

/// Hit-problem driver with an in-process memo and optional on-disk cache.
class Solver {
public:
    explicit Solver(SolverOptions opts = {});

    /// Echelon basis of (A+ P_k)_n over the full degree-n column index.
    std::shared_ptr<const QuotientBasis> basis(int k, long n);

    /// QP_k(w) by coordinate-subspace intersection: the hit space is
    /// re-eliminated with the {w(y) = w} columns ordered last and rows
    /// supported there harvested, after quotienting out P^-(w).
    std::shared_ptr<const QuotientBasis> weight_basis(int k, const WeightVector& w);

    /// Fast projection route: admissible monomials of basis(k, deg w) with
    /// weight exactly w. Dimension must agree with weight_basis (tested).
    std::vector<Monomial> weight_slice(int k, const WeightVector& w);

    const SolverOptions& options() const { return opts_; }

private:
    std::shared_ptr<const QuotientBasis> compute_full(int k, long n);
    SolverOptions opts_;
    std::map<std::pair<int, long>, std::shared_ptr<const QuotientBasis>> memo_;
    std::map<std::pair<int, std::string>, std::shared_ptr<const QuotientBasis>> memo_w_;
};

}  // namespace hitprob

#endif
