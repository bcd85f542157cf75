#ifndef HITPROB_GF2_HPP
#define HITPROB_GF2_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace hitprob::gf2 {

/// Dense bit vector; bit index = column index.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    std::size_t nwords() const { return words_.size(); }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool zero() const;
    std::size_t popcount() const;
    /// Lowest set bit index, or npos if zero.
    std::size_t leading() const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// this ^= other, starting at word index `from` (words before are known equal-zero effects).
    void xor_from(const BitVec& other, std::size_t from);
    BitVec& operator^=(const BitVec& other) { xor_from(other, 0); return *this; }

    bool operator==(const BitVec&) const = default;

    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }
    std::uint64_t word(std::size_t w) const { return words_[w]; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Span of a set of bit vectors, maintained in row-echelon form keyed by the
/// leading (lowest-index) column of each row. Column 0 is the largest
/// monomial of the column index, so "leading term" = maximal monomial.
/// Rows are fully back-substituted lazily: `rows()` returns the canonical
/// reduced echelon rows, which are independent of insertion order.
class EchelonBasis {
public:
    EchelonBasis() = default;
    explicit EchelonBasis(std::size_t ncols);

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduce v against current pivots; a nonzero remainder becomes a new
    /// row. Returns whether the rank grew.
    bool insert(BitVec v);

    /// Canonical remainder of v modulo the span: no pivot column is set.
    /// reduce(v) == 0  <=>  v in span. Does not require back-substitution.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return reduce(v).zero(); }

    bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
    /// Columns that are not pivots, ascending.
    std::vector<std::size_t> free_columns() const;

    /// Canonical reduced-echelon rows, sorted by pivot column ascending.
    const std::vector<BitVec>& rows() const;
    /// Forward-echelon rows in insertion order, without back-substitution.
    /// The span is the same; rows are not canonical.
    const std::vector<BitVec>& raw_rows() const { return rows_; }
    /// Pivot column of rows()[i].
    std::size_t pivot_of(std::size_t i) const { return row_pivot_[i]; }

    /// Insert every row of `other` (same ncols).
    void merge(EchelonBasis&& other);

    /// Back-substitute to reduced echelon form; idempotent. The span is
    /// unchanged, so this is logically const (storage is mutable).
    void finalize() const;

private:
    std::size_t ncols_ = 0;
    mutable std::vector<BitVec> rows_;
    mutable std::vector<std::size_t> row_pivot_;
    mutable std::vector<std::int32_t> pivot_row_;  // column -> row index, -1 if free
    mutable bool rref_ = true;
};

/// Deterministic bulk construction; shards the input across OpenMP threads
/// and merges the per-shard bases in shard order. The resulting span (and
/// its canonical rows) is identical to serial insertion.
EchelonBasis echelon_from(std::vector<BitVec>&& vecs, std::size_t ncols);

/// Echelon basis of { v in span(basis) : support(v) subset of keep }.
/// Vectors are returned in the original column indexing.
EchelonBasis intersect_columns(const EchelonBasis& basis, const std::vector<bool>& keep);

/// Echelon basis of { x : row . x = 0 for every row }, rows acting as
/// linear functionals on an ncols-dimensional coordinate space.
EchelonBasis kernel_of(const std::vector<BitVec>& rows, std::size_t ncols);

/// Serial textbook reduced row echelon form, kept as a reference
/// implementation for testing and benchmarking the echelon kernels.
namespace serial {
std::vector<BitVec> rref(std::vector<BitVec> rows, std::size_t ncols);
}

}  // namespace hitprob::gf2

#endif
