#include "hitprob/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "hitprob/cache.hpp"
#include "hitprob/steenrod.hpp"

namespace hitprob {

ColumnIndex::ColumnIndex(std::vector<Monomial> columns_descending)
    : cols_(std::move(columns_descending)) {
    pos_.reserve(cols_.size());
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (i && admissible_cmp(cols_[i - 1], cols_[i]) != std::strong_ordering::greater)
            throw std::invalid_argument("ColumnIndex: columns must be strictly descending");
        pos_.emplace(cols_[i], i);
    }
}

ColumnIndex ColumnIndex::full_degree(int k, long n) {
    return ColumnIndex(degree_slice(k, n));
}

std::size_t ColumnIndex::position(const Monomial& m) const {
    auto it = pos_.find(m);
    if (it == pos_.end()) throw std::out_of_range("ColumnIndex: monomial not in index");
    return it->second;
}

bool ColumnIndex::has(const Monomial& m) const { return pos_.count(m) != 0; }

gf2::BitVec ColumnIndex::vector_of(const Polynomial& f) const {
    return vector_of(f, false);
}

gf2::BitVec ColumnIndex::vector_of(const Polynomial& f, bool drop_missing) const {
    gf2::BitVec v(cols_.size());
    for (const auto& m : f.terms()) {
        auto it = pos_.find(m);
        if (it == pos_.end()) {
            if (drop_missing) continue;
            throw std::out_of_range("ColumnIndex: term '" + m.text() + "' not in index");
        }
        v.set(it->second);
    }
    return v;
}

Polynomial ColumnIndex::polynomial_of(const gf2::BitVec& v, int k, long degree) const {
    if (v.size() != cols_.size()) throw std::invalid_argument("ColumnIndex: vector length mismatch");
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < cols_.size(); ++i)
        if (v.test(i)) terms.push_back(cols_[i]);
    if (terms.empty()) return Polynomial(k, degree);
    return Polynomial(k, std::move(terms));
}

bool QuotientBasis::is_admissible(const Monomial& m) const {
    return admissible_pos.count(m) != 0;
}

std::size_t QuotientBasis::index_of(const Monomial& m) const {
    auto it = admissible_pos.find(m);
    if (it == admissible_pos.end())
        throw std::out_of_range("QuotientBasis: monomial '" + m.text() + "' is not admissible here");
    return it->second;
}

gf2::BitVec coordinates(const Polynomial& f, const QuotientBasis& q) {
    gf2::BitVec out(q.dim());
    if (f.zero()) return out;
    if (f.k() != q.k) throw std::invalid_argument("coordinates: k mismatch");
    Polynomial g = f;
    if (q.omega) {
        if (f.degree() != q.n) throw std::invalid_argument("coordinates: degree mismatch");
        std::vector<Monomial> kept;
        for (const auto& m : f.terms()) {
            auto w = WeightVector::of(m);
            if (w == *q.omega) kept.push_back(m);
            else if (*q.omega < w)
                throw std::invalid_argument("coordinates: term of higher weight than the block");
            // strictly lower weight dies in the quotient
        }
        g = Polynomial(q.k, std::move(kept));
        if (g.zero()) return out;
    } else if (f.degree() != q.n) {
        throw std::invalid_argument("coordinates: degree mismatch");
    }
    gf2::BitVec rem = q.hit.reduce(q.columns->vector_of(g));
    // the remainder is supported on the non-pivot (= admissible) columns
    for (std::size_t i = 0; i < q.admissible.size(); ++i)
        if (rem.test(q.columns->position(q.admissible[i]))) out.set(i);
    return out;
}

std::pair<std::vector<Monomial>, std::vector<Monomial>>
split_zero_plus(const QuotientBasis& q) {
    std::pair<std::vector<Monomial>, std::vector<Monomial>> out;
    for (const auto& m : q.admissible)
        (m.all_positive() ? out.second : out.first).push_back(m);
    return out;
}

Polynomial f_embed(int i, const Polynomial& f) {
    return RingMap::f_embed(f.k() + 1, i).apply(f);
}

Polynomial p_restrict(int i, int j, const Polynomial& f) {
    return RingMap::p_restrict(f.k(), i, j).apply(f);
}

Solver::Solver(SolverOptions opts) : opts_(std::move(opts)) {}

namespace {

std::optional<Cache> open_cache(const SolverOptions& opts) {
    if (!opts.cache_dir.empty()) return Cache(opts.cache_dir);
    if (!opts.use_cache) return std::nullopt;
    return Cache::from_env();
}

// Fill the admissible set (ascending) from the finalized hit basis.
void fill_admissible(QuotientBasis& q) {
    q.hit.finalize();
    auto free_cols = q.hit.free_columns();  // ascending index = descending monomial
    q.admissible.reserve(free_cols.size());
    for (auto it = free_cols.rbegin(); it != free_cols.rend(); ++it)
        q.admissible.push_back(q.columns->monomial(*it));
    q.admissible_pos.reserve(q.admissible.size());
    for (std::size_t i = 0; i < q.admissible.size(); ++i)
        q.admissible_pos.emplace(q.admissible[i], i);
}

}  // namespace

std::shared_ptr<const QuotientBasis> Solver::compute_full(int k, long n) {
    auto q = std::make_shared<QuotientBasis>();
    q->k = k;
    q->n = n;
    q->columns = std::make_shared<const ColumnIndex>(ColumnIndex::full_degree(k, n));

    auto cache = open_cache(opts_);
    if (cache) {
        if (auto hit = cache->get_rows(k, n, std::nullopt, q->columns->size())) {
            q->hit = std::move(*hit);
            fill_admissible(*q);
            return q;
        }
    }

    std::vector<gf2::BitVec> rows;
    for (const auto& src : hit_sources(k, n, opts_.all_squares)) {
        for (const auto& m : src.sources) {
            Polynomial g = sq(src.sq_i, m);
            if (!g.zero()) rows.push_back(q->columns->vector_of(g));
        }
    }
    q->hit = gf2::echelon_from(std::move(rows), q->columns->size());
    fill_admissible(*q);
    if (cache) cache->put(*q);
    return q;
}

std::shared_ptr<const QuotientBasis> Solver::basis(int k, long n) {
    if (k < 1 || n < 0) throw std::invalid_argument("Solver::basis: need k >= 1, n >= 0");
    auto key = std::make_pair(k, n);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto q = compute_full(k, n);
    memo_.emplace(key, q);
    return q;
}

std::shared_ptr<const QuotientBasis> Solver::weight_basis(int k, const WeightVector& w) {
    auto key = std::make_pair(k, w.text());
    auto it = memo_w_.find(key);
    if (it != memo_w_.end()) return it->second;

    long n = w.degree();
    auto full = basis(k, n);
    const auto& cols = *full->columns;

    auto q = std::make_shared<QuotientBasis>();
    q->k = k;
    q->n = n;
    q->omega = w;
    std::vector<Monomial> block_cols;
    for (const auto& m : cols.monomials())
        if (WeightVector::of(m) == w) block_cols.push_back(m);
    q->columns = std::make_shared<const ColumnIndex>(std::move(block_cols));

    auto cache = open_cache(opts_);
    if (cache) {
        if (auto hit = cache->get_rows(k, n, w, q->columns->size())) {
            q->hit = std::move(*hit);
            fill_admissible(*q);
            memo_w_.emplace(key, q);
            return q;
        }
    }

    // The full column order is weight-descending, so the weight-w columns
    // form a contiguous range: higher-weight columns are a prefix before it
    // and lower-weight ones a suffix after it. The block modulus is
    // (hit + span of lower columns) intersected with the block span; since
    // every lower column is in the modulus, those coordinates can simply be
    // projected away (truncated), and the prefix plays the role of the
    // discarded region of intersect_columns: an echelon row whose pivot
    // lands in the block range is supported entirely inside it.
    std::size_t block_begin = cols.size(), block_end = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (WeightVector::of(cols.monomial(c)) == w) {
            block_begin = std::min(block_begin, c);
            block_end = c + 1;
        }
    }
    const std::size_t block_size = q->columns->size();
    if (block_end - block_begin != block_size)
        throw std::logic_error("weight_basis: block columns are not contiguous");

    gf2::EchelonBasis trunc(block_end);
    const std::size_t nwords = (block_end + 63) / 64;
    for (const auto& r : full->hit.rows()) {
        gf2::BitVec t(block_end);
        for (std::size_t wi = 0; wi < nwords; ++wi) t.data()[wi] = r.word(wi);
        if (block_end & 63) t.data()[nwords - 1] &= (std::uint64_t{1} << (block_end & 63)) - 1;
        trunc.insert(std::move(t));
    }
    q->hit = gf2::EchelonBasis(block_size);
    const auto& trows = trunc.raw_rows();
    for (std::size_t i = 0; i < trunc.rank(); ++i) {
        std::size_t p = trows[i].leading();
        if (p < block_begin) continue;
        gf2::BitVec v(block_size);
        for (std::size_t c = p; c < block_end; ++c)
            if (trows[i].test(c)) v.set(c - block_begin);
        q->hit.insert(std::move(v));
    }
    fill_admissible(*q);
    if (cache) cache->put(*q);
    memo_w_.emplace(key, q);
    return q;
}

std::vector<Monomial> Solver::weight_slice(int k, const WeightVector& w) {
    auto full = basis(k, w.degree());
    std::vector<Monomial> out;
    for (const auto& m : full->admissible)
        if (WeightVector::of(m) == w) out.push_back(m);
    return out;
}

}  // namespace hitprob
