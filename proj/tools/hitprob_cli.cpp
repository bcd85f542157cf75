// Command-line front end: basis/dimension queries, Steenrod action, hit
// tests, Kameko's homomorphism, group invariants, the fixture verification
// suite, and cache management.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>
#include <omp.h>
#include <regex>

#include "hitprob/cache.hpp"
#include "hitprob/invariants.hpp"
#include "hitprob/kameko.hpp"
#include "hitprob/serialize.hpp"
#include "hitprob/steenrod.hpp"
#include "hitprob/verify.hpp"

using namespace hitprob;
using nlohmann::json;

namespace {

int infer_k(const std::string& poly_text) {
    static const std::regex var(R"(x(\d+))");
    int k = 0;
    for (auto it = std::sregex_iterator(poly_text.begin(), poly_text.end(), var);
         it != std::sregex_iterator(); ++it)
        k = std::max(k, std::stoi((*it)[1].str()));
    if (k == 0) throw std::invalid_argument("cannot infer variable count from '" + poly_text + "'");
    return k;
}

json monomials_json(const std::vector<Monomial>& ms) {
    json arr = json::array();
    for (const auto& m : ms) arr.push_back(m.text());
    return arr;
}

void print_monomials(const std::vector<Monomial>& ms) {
    for (const auto& m : ms) std::cout << m.text() << "\n";
}

Group parse_group(const std::string& s) {
    if (s == "sigma") return Group::Sigma;
    if (s == "gl") return Group::GL;
    throw CLI::ValidationError("--group", "expected 'sigma' or 'gl'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for the mod-2 hit problem: admissible bases, "
                 "weight blocks, Kameko maps, and group invariants"};
    app.require_subcommand(1);

    int jobs = 0;
    std::string cache_dir;
    app.add_option("--jobs", jobs, "Cap the number of worker threads");
    app.add_option("--cache-dir", cache_dir, "Cache directory (overrides HITPROB_CACHE)");

    bool as_json = false;
    int k = 0;
    long n = 0, d = 0, sq_i = 0;
    std::string weight_text, poly_text, group_text = "sigma", scope_text = "all";
    std::string fixture_dir = "fixtures";
    bool only_plus = false, only_zero = false, kernel_basis = false, show_basis = false;
    bool with_timing = false;

    auto* c_dim = app.add_subcommand("dim", "Dimension of the quotient at (k, n) or of a weight block");
    c_dim->add_option("k", k)->required();
    c_dim->add_option("n", n)->required();
    c_dim->add_option("--weight", weight_text, "Weight vector, e.g. \"(3,2,2,1)\"");
    c_dim->add_flag("--json", as_json);

    auto* c_basis = app.add_subcommand("basis", "Admissible monomial basis at (k, n) or of a weight block");
    c_basis->add_option("k", k)->required();
    c_basis->add_option("n", n)->required();
    c_basis->add_option("--weight", weight_text, "Weight vector, e.g. \"(3,2,2,1)\"");
    c_basis->add_flag("--plus", only_plus, "Only monomials with all exponents positive");
    c_basis->add_flag("--zero", only_zero, "Only monomials with some zero exponent");
    c_basis->add_flag("--json", as_json);

    auto* c_sq = app.add_subcommand("sq", "Apply the Steenrod square Sq^i to a polynomial");
    c_sq->add_option("i", sq_i)->required();
    c_sq->add_option("--poly", poly_text, "Polynomial in text form, e.g. \"x1 x2^2 + x3^3\"")->required();
    c_sq->add_option("--k", k, "Variable count (default: inferred from the polynomial)");
    c_sq->add_flag("--json", as_json);

    auto* c_hit = app.add_subcommand("hit-test", "Decide whether a polynomial is hit at (k, n)");
    c_hit->add_option("k", k)->required();
    c_hit->add_option("n", n)->required();
    c_hit->add_option("--poly", poly_text)->required();
    c_hit->add_flag("--json", as_json);

    auto* c_kam = app.add_subcommand("kameko", "Kameko down map (QP_k)_{2d+k} -> (QP_k)_d");
    c_kam->add_option("k", k)->required();
    c_kam->add_option("d", d)->required();
    c_kam->add_flag("--kernel-basis", kernel_basis, "Print a kernel basis as polynomials");
    c_kam->add_flag("--json", as_json);

    auto* c_inv = app.add_subcommand("invariants", "Fixed points of the symmetric or general linear group");
    c_inv->add_option("k", k)->required();
    c_inv->add_option("n", n)->required();
    c_inv->add_option("--group", group_text, "sigma or gl")->required();
    c_inv->add_option("--weight", weight_text, "Restrict to a weight block");
    c_inv->add_flag("--basis", show_basis, "Print invariant classes as polynomials");
    c_inv->add_flag("--json", as_json);

    auto* c_ver = app.add_subcommand("verify-paper", "Run the fixture-backed verification suite");
    c_ver->add_option("scope", scope_text, "all|degree9|degree10|degree23|invariants");
    c_ver->add_option("--fixtures", fixture_dir, "Fixture directory");
    c_ver->add_flag("--json", as_json);
    c_ver->add_flag("--timing", with_timing, "Include wall times in JSON output");

    auto* c_cache = app.add_subcommand("cache", "Manage the on-disk result cache");
    auto* cc_dir = c_cache->add_subcommand("dir", "Print the active cache directory");
    auto* cc_clear = c_cache->add_subcommand("clear", "Remove all cached results");
    c_cache->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (jobs > 0) omp_set_num_threads(jobs);
        SolverOptions sopts;
        sopts.cache_dir = cache_dir;
        Solver solver(sopts);

        auto quotient = [&]() {
            if (!weight_text.empty()) {
                WeightVector w = WeightVector::parse(weight_text);
                if (n != 0 && w.degree() != n)
                    throw std::invalid_argument("weight vector degree does not match n");
                return solver.weight_basis(k, w);
            }
            return solver.basis(k, n);
        };

        if (*c_dim) {
            auto q = quotient();
            if (as_json)
                std::cout << json{{"k", k}, {"n", q->n}, {"dim", q->dim()}}.dump() << "\n";
            else
                std::cout << q->dim() << "\n";
        } else if (*c_basis) {
            if (only_plus && only_zero)
                throw CLI::ValidationError("--plus/--zero", "mutually exclusive");
            auto q = quotient();
            std::vector<Monomial> out = q->admissible;
            if (only_plus || only_zero) {
                auto [zero, plus] = split_zero_plus(*q);
                out = only_plus ? plus : zero;
            }
            if (as_json)
                std::cout << json{{"k", k}, {"n", q->n}, {"count", out.size()},
                                  {"monomials", monomials_json(out)}}.dump() << "\n";
            else
                print_monomials(out);
        } else if (*c_sq) {
            if (k == 0) k = infer_k(poly_text);
            Polynomial f = Polynomial::parse(poly_text, k);
            Polynomial g = sq(sq_i, f);
            if (as_json) std::cout << to_json(g).dump() << "\n";
            else std::cout << g.text() << "\n";
        } else if (*c_hit) {
            Polynomial f = Polynomial::parse(poly_text, k);
            if (f.degree() != n && !f.zero())
                throw std::invalid_argument("polynomial degree does not match n");
            auto q = solver.basis(k, n);
            auto coords = coordinates(f, *q);
            bool hit = coords.zero();
            Polynomial residue = Polynomial(k, n);
            std::vector<Monomial> terms;
            for (std::size_t i = 0; i < q->dim(); ++i)
                if (coords.test(i)) terms.push_back(q->admissible[i]);
            if (!terms.empty()) residue = Polynomial(k, std::move(terms));
            if (as_json)
                std::cout << json{{"k", k}, {"n", n}, {"hit", hit},
                                  {"residue", residue.text()}}.dump() << "\n";
            else
                std::cout << (hit ? "hit" : "not hit: " + residue.text()) << "\n";
        } else if (*c_kam) {
            auto map = kameko_down(solver, k, d);
            auto stab = stability_report(k, d);
            json j{{"k", k}, {"d", d},
                   {"upper_dim", map.upper_dim()}, {"lower_dim", map.lower_dim()},
                   {"rank", map.rank()}, {"kernel_dim", map.upper_dim() - map.rank()},
                   {"surjective", map.surjective()},
                   {"iso_by_squaring", stab.iso_by_squaring},
                   {"t_value", stab.t_value}};
            if (kernel_basis) {
                auto kernel = map.kernel();
                kernel.finalize();
                json arr = json::array();
                for (const auto& v : kernel.rows()) {
                    std::vector<Monomial> terms;
                    for (std::size_t i = 0; i < map.upper_dim(); ++i)
                        if (v.test(i)) terms.push_back(map.upper().admissible[i]);
                    arr.push_back(Polynomial(k, std::move(terms)).text());
                }
                j["kernel_basis"] = std::move(arr);
            }
            if (as_json) {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "upper dim " << map.upper_dim() << ", lower dim " << map.lower_dim()
                          << ", rank " << map.rank() << ", kernel dim "
                          << (map.upper_dim() - map.rank())
                          << (map.surjective() ? ", surjective" : "") << "\n";
                if (kernel_basis)
                    for (const auto& e : j["kernel_basis"]) std::cout << e.get<std::string>() << "\n";
            }
        } else if (*c_inv) {
            Group group = parse_group(group_text);
            auto q = quotient();
            auto inv = invariants(*q, group);
            inv.finalize();
            json j{{"k", k}, {"n", q->n}, {"group", group_text}, {"dim", inv.rank()}};
            json arr = json::array();
            if (show_basis) {
                for (const auto& v : inv.rows()) {
                    std::vector<Monomial> terms;
                    for (std::size_t i = 0; i < q->dim(); ++i)
                        if (v.test(i)) terms.push_back(q->admissible[i]);
                    arr.push_back(Polynomial(k, std::move(terms)).text());
                }
                j["basis"] = arr;
            }
            if (as_json) {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << inv.rank() << "\n";
                if (show_basis)
                    for (const auto& e : arr) std::cout << e.get<std::string>() << "\n";
            }
        } else if (*c_ver) {
            VerifyOptions vopts;
            vopts.fixture_dir = fixture_dir;
            vopts.solver = sopts;
            auto report = verify_paper(parse_scope(scope_text), vopts);
            if (as_json) {
                std::cout << report.to_json(with_timing).dump(2) << "\n";
            } else {
                for (const auto& c : report.claims)
                    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.id
                              << "  expected " << c.expected << ", got " << c.computed << "\n";
                std::cout << (report.pass() ? "all claims pass" : "CLAIM FAILURES") << "\n";
            }
            return report.pass() ? 0 : 1;
        } else if (*c_cache) {
            std::optional<Cache> cache;
            if (!cache_dir.empty()) cache = Cache(cache_dir);
            else cache = Cache::from_env();
            if (!cache) {
                std::cerr << "no cache configured (set HITPROB_CACHE or pass --cache-dir)\n";
                return 2;
            }
            if (*cc_dir) std::cout << cache->dir() << "\n";
            else if (*cc_clear) std::cout << "removed " << cache->clear() << " cached results\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
