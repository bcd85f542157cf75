#include "hitprob/weights.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace hitprob {

WeightVector::WeightVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("WeightVector: negative entry");
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

WeightVector WeightVector::of(const Monomial& m) {
    std::vector<int> w;
    for (auto e : m.exponents()) {
        unsigned v = e;
        int level = 0;
        while (v) {
            if (static_cast<std::size_t>(level) >= w.size()) w.resize(level + 1, 0);
            w[level] += static_cast<int>(v & 1u);
            v >>= 1;
            ++level;
        }
    }
    return WeightVector(std::move(w));
}

int WeightVector::entry(int i) const {
    if (i < 1) throw std::out_of_range("WeightVector::entry: levels are 1-based");
    return i <= levels() ? entries_[static_cast<std::size_t>(i - 1)] : 0;
}

long WeightVector::degree() const {
    long d = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) d += (1L << i) * entries_[i];
    return d;
}

std::strong_ordering WeightVector::operator<=>(const WeightVector& o) const {
    std::size_t n = std::max(entries_.size(), o.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int a = i < entries_.size() ? entries_[i] : 0;
        int b = i < o.entries_.size() ? o.entries_[i] : 0;
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

bool WeightVector::operator==(const WeightVector& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
}

std::string WeightVector::text() const {
    if (entries_.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

WeightVector WeightVector::parse(const std::string& s) {
    std::vector<int> e;
    std::size_t i = 0;
    auto skip = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == '(' || s[i] == ')' || s[i] == ',')) ++i; };
    skip();
    while (i < s.size()) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("WeightVector::parse: bad input '" + s + "'");
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        e.push_back(v);
        skip();
    }
    if (e.empty()) throw std::invalid_argument("WeightVector::parse: empty input");
    return WeightVector(std::move(e));
}

std::strong_ordering admissible_cmp(const Monomial& x, const Monomial& y) {
    if (x.k() != y.k()) throw std::invalid_argument("admissible_cmp: k mismatch");
    if (x.degree() != y.degree()) throw std::invalid_argument("admissible_cmp: degree mismatch");
    auto c = WeightVector::of(x) <=> WeightVector::of(y);
    if (c != std::strong_ordering::equal) return c;
    return x.exponents() <=> y.exponents();  // sigma left-lex
}

bool admissible_less(const Monomial& x, const Monomial& y) {
    return admissible_cmp(x, y) == std::strong_ordering::less;
}

int alpha(long n) {
    if (n < 0) throw std::invalid_argument("alpha: n must be >= 0");
    return std::popcount(static_cast<unsigned long>(n));
}

int zeta(long n) {
    if (n < 1) throw std::invalid_argument("zeta: n must be >= 1");
    return std::countr_zero(static_cast<unsigned long>(n));
}

// DP over representations n = sum (2^{u_i} - 1); the recursion is its own
// correctness argument, no closed form involved.
int mu(long n) {
    if (n < 1) throw std::invalid_argument("mu: n must be >= 1");
    thread_local std::map<long, int> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    int best = static_cast<int>(n);  // all parts equal to 1
    for (int u = 2; (1L << u) - 1 <= n; ++u) {
        long rest = n - ((1L << u) - 1);
        int r = rest == 0 ? 1 : 1 + mu(rest);
        best = std::min(best, r);
    }
    memo[n] = best;
    return best;
}

int t_bound(int k, long d) {
    if (k < 1 || d < 0) throw std::invalid_argument("t_bound: need k >= 1, d >= 0");
    long v = k - alpha(d + k) - zeta(d + k);
    return v > 0 ? static_cast<int>(v) : 0;
}

namespace {

// All decreasing exponent-shape sequences t_1 > ... > t_{r-1} >= t_r > 0
// with sum (2^{t_i} - 1) = n; there is exactly one when r = mu(n).
bool find_spike_shape(long n, int r, int max_t, bool strict, std::vector<int>& out) {
    if (r == 0) return n == 0;
    int hi = strict ? max_t - 1 : max_t;
    for (int t = hi; t >= 1; --t) {
        long part = (1L << t) - 1;
        if (part > n) continue;
        out.push_back(t);
        // the last step (r == 1) may repeat the previous value; earlier ones are strict
        if (find_spike_shape(n - part, r - 1, t, r > 2, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

Monomial minimal_spike(long n, int k) {
    if (n < 1) throw std::invalid_argument("minimal_spike: n must be >= 1");
    int r = mu(n);
    if (r > k) throw std::domain_error("minimal_spike: mu(n) > k, no spike of degree n exists");
    std::vector<int> shape;
    if (!find_spike_shape(n, r, 60, false, shape) || static_cast<int>(shape.size()) != r)
        throw std::logic_error("minimal_spike: no shape found (unreachable for mu(n) <= k)");
    std::vector<std::uint16_t> e(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((1L << shape[static_cast<std::size_t>(i)]) - 1);
    return Monomial(std::move(e));
}

bool singer_filter(const Monomial& x) {
    long n = x.degree();
    if (n < 1) return false;
    Monomial z = minimal_spike(n, x.k());  // throws when mu(n) > k
    return WeightVector::of(x) < WeightVector::of(z);
}

namespace {

void enumerate_slice(int k, long n, std::vector<std::uint16_t>& cur, std::size_t j,
                     std::vector<Monomial>& out) {
    if (j + 1 == cur.size()) {
        if (n > 0xFFFF) return;
        cur[j] = static_cast<std::uint16_t>(n);
        out.emplace_back(cur);
        return;
    }
    long hi = std::min<long>(n, 0xFFFF);
    for (long e = 0; e <= hi; ++e) {
        cur[j] = static_cast<std::uint16_t>(e);
        enumerate_slice(k, n - e, cur, j + 1, out);
    }
    cur[j] = 0;
}

}  // namespace

std::vector<Monomial> degree_slice(int k, long n) {
    if (k < 1 || n < 0) throw std::invalid_argument("degree_slice: need k >= 1, n >= 0");
    std::vector<Monomial> out;
    std::vector<std::uint16_t> cur(static_cast<std::size_t>(k), 0);
    enumerate_slice(k, n, cur, 0, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return admissible_less(b, a); });
    return out;
}

namespace {

void enumerate_weights(int k, long n, int level, std::vector<int>& cur,
                       std::vector<WeightVector>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    long unit = 1L << level;
    if (unit > n) return;
    for (int w = 0; w <= k && w * unit <= n; ++w) {
        cur.push_back(w);
        enumerate_weights(k, n - w * unit, level + 1, cur, out);
        cur.pop_back();
    }
}

// Monomials with exactly the given per-level variable counts: choose a
// subset of size w_i per level, exponent bit i goes to the chosen variables.
void enumerate_block(int k, const std::vector<int>& w, std::size_t level,
                     std::vector<std::uint16_t>& cur, std::vector<Monomial>& out) {
    if (level == w.size()) {
        out.emplace_back(cur);
        return;
    }
    int need = w[level];
    if (need > k) return;  // empty block
    std::vector<int> pick(static_cast<std::size_t>(need));
    // iterate subsets of {0..k-1} of size `need` in lexicographic order
    for (int i = 0; i < need; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (int v : pick) cur[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(cur[static_cast<std::size_t>(v)] | (1u << level));
        enumerate_block(k, w, level + 1, cur, out);
        for (int v : pick) cur[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(cur[static_cast<std::size_t>(v)] & ~(1u << level));
        if (need == 0) break;
        int i = need - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == k - need + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < need; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

std::vector<WeightVector> weight_vectors_of_degree(int k, long n) {
    std::vector<WeightVector> out;
    std::vector<int> cur;
    enumerate_weights(k, n, 0, cur, out);
    std::sort(out.begin(), out.end(), [](const WeightVector& a, const WeightVector& b) { return a < b; });
    return out;
}

WeightBlock weight_block(int k, const WeightVector& w) {
    WeightBlock block;
    std::vector<std::uint16_t> cur(static_cast<std::size_t>(k), 0);
    enumerate_block(k, w.entries(), 0, cur, block.equal);
    for (const auto& lower : weight_vectors_of_degree(k, w.degree())) {
        if (!(lower < w)) continue;
        enumerate_block(k, lower.entries(), 0, cur, block.lower);
    }
    auto desc = [](const Monomial& a, const Monomial& b) { return admissible_less(b, a); };
    std::sort(block.equal.begin(), block.equal.end(), desc);
    std::sort(block.lower.begin(), block.lower.end(), desc);
    return block;
}

}  // namespace hitprob
