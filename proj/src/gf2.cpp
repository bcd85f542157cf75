#include "hitprob/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hitprob::gf2 {

bool BitVec::zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVec::leading() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
}

void BitVec::xor_from(const BitVec& other, std::size_t from) {
    std::uint64_t* a = words_.data();
    const std::uint64_t* b = other.words_.data();
    const std::size_t n = words_.size();
    for (std::size_t i = from; i < n; ++i) a[i] ^= b[i];
}

EchelonBasis::EchelonBasis(std::size_t ncols)
    : ncols_(ncols), pivot_row_(ncols, -1) {}

namespace {

// Single left-to-right pass: XORing a pivot row only changes columns past
// its pivot, so every bit at or below the cursor is final once visited.
void forward_reduce(BitVec& v, const std::vector<BitVec>& rows,
                    const std::vector<std::int32_t>& pivot_row, std::size_t ncols) {
    const std::size_t nw = v.nwords();
    for (std::size_t wi = 0; wi < nw; ++wi) {
        std::uint64_t done = 0;
        std::uint64_t m;
        while ((m = v.word(wi) & ~done) != 0) {
            int b = std::countr_zero(m);
            std::size_t c = (wi << 6) + static_cast<std::size_t>(b);
            if (c < ncols) {
                std::int32_t r = pivot_row[c];
                if (r >= 0) v.xor_from(rows[static_cast<std::size_t>(r)], wi);
            }
            done |= (std::uint64_t{2} << b) - 1;
        }
    }
}

}  // namespace

bool EchelonBasis::insert(BitVec v) {
    if (v.size() != ncols_) throw std::invalid_argument("EchelonBasis::insert: length mismatch");
    forward_reduce(v, rows_, pivot_row_, ncols_);
    std::size_t p = v.leading();
    if (p == BitVec::npos) return false;
    pivot_row_[p] = static_cast<std::int32_t>(rows_.size());
    row_pivot_.push_back(p);
    rows_.push_back(std::move(v));
    rref_ = false;
    return true;
}

BitVec EchelonBasis::reduce(BitVec v) const {
    if (v.size() != ncols_) throw std::invalid_argument("EchelonBasis::reduce: length mismatch");
    forward_reduce(v, rows_, pivot_row_, ncols_);
    return v;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ncols_; ++c)
        if (pivot_row_[c] < 0) out.push_back(c);
    return out;
}

void EchelonBasis::finalize() const {
    if (rref_) return;
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [this](std::size_t a, std::size_t b) { return row_pivot_[a] < row_pivot_[b]; });
    std::vector<BitVec> out(rows_.size());
    // Canonical row for pivot c = e_c + reduce(row - e_c); each row is
    // independent, so the back-substitution sweep is data parallel.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long ii = 0; ii < static_cast<long>(order.size()); ++ii) {
        std::size_t i = order[static_cast<std::size_t>(ii)];
        BitVec r = rows_[i];
        std::size_t p = row_pivot_[i];
        r.flip(p);
        forward_reduce(r, rows_, pivot_row_, ncols_);
        r.flip(p);
        out[static_cast<std::size_t>(ii)] = std::move(r);
    }
    rows_ = std::move(out);
    std::vector<std::size_t> piv(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        piv[i] = rows_[i].leading();
        pivot_row_[piv[i]] = static_cast<std::int32_t>(i);
    }
    row_pivot_ = std::move(piv);
    rref_ = true;
}

const std::vector<BitVec>& EchelonBasis::rows() const {
    finalize();
    return rows_;
}

void EchelonBasis::merge(EchelonBasis&& other) {
    if (other.ncols() != ncols_) throw std::invalid_argument("EchelonBasis::merge: ncols mismatch");
    std::vector<std::size_t> order(other.rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&other](std::size_t a, std::size_t b) {
        return other.row_pivot_[a] < other.row_pivot_[b];
    });
    for (std::size_t i : order) insert(std::move(other.rows_[i]));
    other.rows_.clear();
}

EchelonBasis echelon_from(std::vector<BitVec>&& vecs, std::size_t ncols) {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    EchelonBasis basis(ncols);
    if (threads <= 1 || vecs.size() < 512) {
        for (auto& v : vecs) basis.insert(std::move(v));
        return basis;
    }
    std::size_t shards = static_cast<std::size_t>(threads);
    std::vector<EchelonBasis> partial(shards, EchelonBasis(ncols));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long s = 0; s < static_cast<long>(shards); ++s) {
        std::size_t lo = vecs.size() * static_cast<std::size_t>(s) / shards;
        std::size_t hi = vecs.size() * (static_cast<std::size_t>(s) + 1) / shards;
        for (std::size_t i = lo; i < hi; ++i) partial[static_cast<std::size_t>(s)].insert(std::move(vecs[i]));
    }
    // merge in shard order; the reduced echelon form is canonical, so the
    // result matches serial insertion exactly
    for (auto& p : partial) basis.merge(std::move(p));
    return basis;
}

EchelonBasis intersect_columns(const EchelonBasis& basis, const std::vector<bool>& keep) {
    const std::size_t n = basis.ncols();
    if (keep.size() != n) throw std::invalid_argument("intersect_columns: keep mask size mismatch");
    // permutation putting discarded columns first
    std::vector<std::size_t> to_new(n);
    std::size_t next = 0;
    for (std::size_t c = 0; c < n; ++c)
        if (!keep[c]) to_new[c] = next++;
    const std::size_t n_discard = next;
    for (std::size_t c = 0; c < n; ++c)
        if (keep[c]) to_new[c] = next++;

    const auto& rows = basis.rows();
    EchelonBasis permuted(n);
    for (const auto& r : rows) {
        BitVec p(n);
        for (std::size_t wi = 0; wi < r.nwords(); ++wi) {
            std::uint64_t w = r.word(wi);
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                p.set(to_new[(wi << 6) + static_cast<std::size_t>(b)]);
            }
        }
        permuted.insert(std::move(p));
    }
    permuted.finalize();
    // echelon rows whose pivot lies in the kept region have no support on
    // the discarded columns, and they span exactly the intersection
    EchelonBasis result(n);
    std::vector<std::size_t> to_old(n);
    for (std::size_t c = 0; c < n; ++c) to_old[to_new[c]] = c;
    for (std::size_t i = 0; i < permuted.rank(); ++i) {
        if (permuted.pivot_of(i) < n_discard) continue;
        const BitVec& pr = permuted.rows()[i];
        BitVec v(n);
        for (std::size_t wi = 0; wi < pr.nwords(); ++wi) {
            std::uint64_t w = pr.word(wi);
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                v.set(to_old[(wi << 6) + static_cast<std::size_t>(b)]);
            }
        }
        result.insert(std::move(v));
    }
    result.finalize();
    return result;
}

EchelonBasis kernel_of(const std::vector<BitVec>& rows, std::size_t ncols) {
    EchelonBasis system(ncols);
    for (const auto& r : rows) {
        if (r.size() != ncols) throw std::invalid_argument("kernel_of: dimension mismatch");
        system.insert(r);
    }
    system.finalize();
    EchelonBasis null(ncols);
    for (std::size_t f : system.free_columns()) {
        BitVec x(ncols);
        x.set(f);
        for (std::size_t i = 0; i < system.rank(); ++i)
            if (system.rows()[i].test(f)) x.set(system.pivot_of(i));
        null.insert(std::move(x));
    }
    null.finalize();
    return null;
}

namespace serial {

std::vector<BitVec> rref(std::vector<BitVec> rows, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i].test(c)) { pivot = i; break; }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].test(c)) rows[i] ^= rows[r];
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace serial

}  // namespace hitprob::gf2
