#include "hitprob/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace hitprob {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[4] = {'H', 'P', 'C', 'B'};

template <typename T>
void write_pod(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
bool read_pod(std::istream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return static_cast<bool>(is);
}

std::string weight_tag(const std::optional<WeightVector>& w) {
    if (!w) return "";
    std::string s = "_w";
    for (int i = 1; i <= w->levels(); ++i) {
        if (i > 1) s += '-';
        s += std::to_string(w->entry(i));
    }
    return s;
}

}  // namespace

std::optional<Cache> Cache::from_env() {
    const char* dir = std::getenv("HITPROB_CACHE");
    if (!dir || !*dir) return std::nullopt;
    return Cache(dir);
}

std::string Cache::path_for(int k, long n, const std::optional<WeightVector>& w) const {
    return (fs::path(dir_) /
            ("k" + std::to_string(k) + "_n" + std::to_string(n) + weight_tag(w) + ".hitbin"))
        .string();
}

bool Cache::put(const QuotientBasis& q) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return false;
    const auto& rows = q.hit.rows();  // canonical, insertion-order independent
    std::string path = path_for(q.k, q.n, q.omega);
    std::ofstream os(path + ".tmp", std::ios::binary | std::ios::trunc);
    if (!os) return false;
    os.write(kMagic, 4);
    write_pod(os, kVersion);
    write_pod(os, static_cast<std::uint64_t>(q.columns->size()));
    write_pod(os, static_cast<std::uint64_t>(rows.size()));
    for (const auto& r : rows)
        os.write(reinterpret_cast<const char*>(r.data()),
                 static_cast<std::streamsize>(r.nwords() * sizeof(std::uint64_t)));
    os.close();
    if (!os) {
        fs::remove(path + ".tmp", ec);
        return false;
    }
    fs::rename(path + ".tmp", path, ec);
    return !ec;
}

std::optional<gf2::EchelonBasis> Cache::get_rows(int k, long n,
                                                 const std::optional<WeightVector>& w,
                                                 std::size_t ncols) const {
    std::ifstream is(path_for(k, n, w), std::ios::binary);
    if (!is) return std::nullopt;
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != std::string(kMagic, 4)) return std::nullopt;
    std::uint32_t version;
    std::uint64_t file_ncols, nrows;
    if (!read_pod(is, version) || version != kVersion) return std::nullopt;
    if (!read_pod(is, file_ncols) || file_ncols != ncols) return std::nullopt;
    if (!read_pod(is, nrows) || nrows > ncols) return std::nullopt;
    gf2::EchelonBasis basis(ncols);
    for (std::uint64_t i = 0; i < nrows; ++i) {
        gf2::BitVec r(ncols);
        is.read(reinterpret_cast<char*>(r.data()),
                static_cast<std::streamsize>(r.nwords() * sizeof(std::uint64_t)));
        if (!is) return std::nullopt;
        if (!basis.insert(std::move(r))) return std::nullopt;  // corrupt: dependent rows
    }
    basis.finalize();
    return basis;
}

std::size_t Cache::clear() {
    std::size_t n = 0;
    std::error_code ec;
    for (auto it = fs::directory_iterator(dir_, ec); !ec && it != fs::directory_iterator(); ++it) {
        if (it->path().extension() == ".hitbin" && fs::remove(it->path(), ec)) ++n;
    }
    return n;
}

}  // namespace hitprob
