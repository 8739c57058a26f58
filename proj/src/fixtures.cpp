#include "toricflip/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "toricflip/errors.hpp"

#ifndef TORICFLIP_FIXTURE_DIR
#define TORICFLIP_FIXTURE_DIR "fixtures"
#endif

namespace toricflip {

std::string fixture_dir() {
    if (const char* env = std::getenv("TORICFLIP_FIXTURES"); env && *env) return env;
    return TORICFLIP_FIXTURE_DIR;
}

std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(fixture_dir(), ec))
        if (entry.path().extension() == ".json") ids.push_back(entry.path().stem().string());
    if (ec) throw Error(ErrorKind::IO, "cannot list fixtures in " + fixture_dir());
    std::sort(ids.begin(), ids.end());
    return ids;
}

nlohmann::json load_fixture(const std::string& id) {
    std::string path = fixture_dir() + "/" + id + ".json";
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IO, "no fixture named " + id);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

GradingMatrix fixture_matrix(const nlohmann::json& fx) {
    return validate_grading(IntMatrix::from_rows(fx.at("matrix").get<std::vector<IntVector>>()));
}

VariableNames fixture_names(const nlohmann::json& fx) {
    return fx.value("names", "letters") == "indexed" ? VariableNames::Indexed : VariableNames::Letters;
}

std::vector<Binomial> canonical_set(std::vector<Binomial> items) {
    for (auto& b : items) b = canonical_pair(b.lead, b.trail);
    std::sort(items.begin(), items.end(), [](const Binomial& x, const Binomial& y) {
        return x.lead != y.lead ? x.lead < y.lead : x.trail < y.trail;
    });
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

std::vector<Binomial> fixture_binomials(const nlohmann::json& list, std::size_t n) {
    std::vector<Binomial> out;
    for (const auto& s : list) out.push_back(parse_binomial(s.get<std::string>(), n));
    return canonical_set(std::move(out));
}

MonomialIdeal fixture_ideal(const nlohmann::json& list, std::size_t n) {
    return parse_ideal_text(list.get<std::vector<std::string>>(), n);
}

std::vector<std::string> format_all(const std::vector<Binomial>& items, VariableNames names) {
    std::vector<std::string> out;
    for (const auto& b : items) out.push_back(format_binomial(b, names));
    return out;
}

}  // namespace toricflip
