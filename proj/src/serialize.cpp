#include "hitprob/serialize.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace hitprob {

nlohmann::json to_json(const Monomial& m) {
    return nlohmann::json{{"exponents", m.exponents()}};
}

nlohmann::json to_json(const Polynomial& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& m : f.terms()) terms.push_back(to_json(m));
    return nlohmann::json{{"k", f.k()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

nlohmann::json to_json(const WeightVector& w) {
    return nlohmann::json(w.entries());
}

Monomial monomial_from_json(const nlohmann::json& j) {
    return Monomial(j.at("exponents").get<std::vector<std::uint16_t>>());
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    int k = j.at("k").get<int>();
    std::vector<Monomial> terms;
    for (const auto& t : j.at("terms")) terms.push_back(monomial_from_json(t));
    return Polynomial(k, std::move(terms));
}

std::vector<Monomial> load_monomial_list(const std::string& path, int k) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open monomial list '" + path + "'");
    std::vector<Monomial> out;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        auto b = line.find_last_not_of(" \t\r\n");
        out.push_back(Monomial::parse(line.substr(a, b - a + 1), k));
    }
    return out;
}

Polynomial load_polynomial(const std::string& path, int k) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open polynomial file '" + path + "'");
    std::ostringstream buf;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        buf << line << ' ';
    }
    return Polynomial::parse(buf.str(), k);
}

}  // namespace hitprob
