#ifndef HITPROB_CACHE_HPP
#define HITPROB_CACHE_HPP

#include <optional>
#include <string>

#include "hitprob/solver.hpp"

namespace hitprob {

/// On-disk cache of hit echelon bases, keyed by (k, n, w?, format version).
/// Stale version tags miss and are recomputed. Directory comes from the
/// HITPROB_CACHE environment variable unless overridden.
class Cache {
public:
    static constexpr std::uint32_t kVersion = 1;

    explicit Cache(std::string dir) : dir_(std::move(dir)) {}
    /// Environment-configured cache; nullopt when HITPROB_CACHE is unset.
    static std::optional<Cache> from_env();

    const std::string& dir() const { return dir_; }
    std::string path_for(int k, long n, const std::optional<WeightVector>& w) const;

    bool put(const QuotientBasis& q);
    /// Rows are validated against the expected column count; a corrupt or
    /// version-mismatched file is treated as a miss.
    std::optional<gf2::EchelonBasis> get_rows(int k, long n,
                                              const std::optional<WeightVector>& w,
                                              std::size_t ncols) const;
    std::size_t clear();  // removes cache files, returns count

private:
    std::string dir_;
};

}  // namespace hitprob

#endif
