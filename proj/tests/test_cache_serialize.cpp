#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "hitprob/cache.hpp"
#include "hitprob/serialize.hpp"

using namespace hitprob;
using hitprob::testing::mono;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("hitprob-test-" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cache round trip reproduces the stored elimination") {
    TempDir tmp;
    Solver direct({.use_cache = false});
    auto q = direct.basis(4, 9);

    Cache cache(tmp.path.string());
    CHECK(cache.put(*q));
    auto rows = cache.get_rows(4, 9, std::nullopt, q->columns->size());
    REQUIRE(rows.has_value());
    CHECK(rows->rank() == q->hit.rank());
    CHECK(rows->rows() == q->hit.rows());

    // a cached solver produces an identical quotient
    Solver warm({.cache_dir = tmp.path.string()});
    CHECK(warm.basis(4, 9)->admissible == q->admissible);
}

TEST_CASE("cache keys distinguish weight blocks") {
    TempDir tmp;
    Cache cache(tmp.path.string());
    CHECK(cache.path_for(5, 9, WeightVector({3, 1, 1})) !=
          cache.path_for(5, 9, std::nullopt));
    CHECK(!cache.get_rows(5, 9, WeightVector({3, 1, 1}), 10).has_value());  // cold miss
}

TEST_CASE("corrupt or stale cache files are misses") {
    TempDir tmp;
    Solver direct({.use_cache = false});
    auto q = direct.basis(3, 5);
    Cache cache(tmp.path.string());
    REQUIRE(cache.put(*q));

    SUBCASE("wrong column count") {
        CHECK(!cache.get_rows(3, 5, std::nullopt, q->columns->size() + 1).has_value());
    }
    SUBCASE("stale version tag") {
        auto path = cache.path_for(3, 5, std::nullopt);
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(4);  // version field follows the magic
        std::uint32_t bogus = 0xffffffffu;
        f.write(reinterpret_cast<const char*>(&bogus), sizeof bogus);
        f.close();
        CHECK(!cache.get_rows(3, 5, std::nullopt, q->columns->size()).has_value());
    }
    SUBCASE("truncated file") {
        auto path = cache.path_for(3, 5, std::nullopt);
        fs::resize_file(path, fs::file_size(path) / 2);
        CHECK(!cache.get_rows(3, 5, std::nullopt, q->columns->size()).has_value());
    }
    SUBCASE("clear removes entries") {
        CHECK(cache.clear() == 1);
        CHECK(!cache.get_rows(3, 5, std::nullopt, q->columns->size()).has_value());
    }
}

TEST_CASE("json forms round trip") {
    Monomial m = mono({1, 0, 7});
    CHECK(monomial_from_json(to_json(m)) == m);
    Polynomial f = Polynomial::parse("x1^3 x2 + x3^4", 3);
    CHECK(polynomial_from_json(to_json(f)) == f);
    CHECK(to_json(WeightVector({3, 2, 2, 1})) == nlohmann::json::array({3, 2, 2, 1}));
    CHECK(to_json(f)["degree"] == 4);
    CHECK(to_json(Polynomial(3, 5))["terms"].empty());
}

TEST_CASE("fixture files parse and round trip") {
    TempDir tmp;
    auto path = (tmp.path / "list.txt").string();
    {
        std::ofstream out(path);
        out << "# comment line\n\nx1 x2^2\nx3^3\n";
    }
    auto ms = load_monomial_list(path, 3);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == mono({1, 2, 0}));
    CHECK(ms[1] == mono({0, 0, 3}));

    auto ppath = (tmp.path / "poly.txt").string();
    {
        std::ofstream out(ppath);
        out << "# a two-term polynomial\nx1 x2^2\n+ x3^3\n";
    }
    CHECK(load_polynomial(ppath, 3) == Polynomial::parse("x1 x2^2 + x3^3", 3));
    CHECK_THROWS(load_monomial_list((tmp.path / "absent.txt").string(), 3));
}
