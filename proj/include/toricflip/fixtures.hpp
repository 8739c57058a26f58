#pragma once

// Versioned example data kept as JSON files under fixtures/.

#include <string>
#include <vector>

#include <json.hpp>

#include "toricflip/graver.hpp"
#include "toricflip/io.hpp"

namespace toricflip {

/// TORICFLIP_FIXTURES from the environment, else the source-tree directory.
std::string fixture_dir();
std::vector<std::string> fixture_ids();
nlohmann::json load_fixture(const std::string& id);

GradingMatrix fixture_matrix(const nlohmann::json& fx);
VariableNames fixture_names(const nlohmann::json& fx);
/// Binomials in canonical Graver orientation, sorted.
std::vector<Binomial> fixture_binomials(const nlohmann::json& list, std::size_t n);
MonomialIdeal fixture_ideal(const nlohmann::json& list, std::size_t n);

/// Canonical orientation and sorted order, for set comparisons.
std::vector<Binomial> canonical_set(std::vector<Binomial> items);
std::vector<std::string> format_all(const std::vector<Binomial>& items, VariableNames names);

}  // namespace toricflip
