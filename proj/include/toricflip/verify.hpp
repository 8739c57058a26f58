#pragma once

// Reproduction of the catalogued examples against their fixture files.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace toricflip {

struct VerifyOptions {
    std::uint64_t seed = 20240611;
    unsigned workers = 1;
};

/// {example, status, expected, actual}; status is "pass" or "fail".
struct VerifyReport {
    std::string example;
    bool pass = false;
    nlohmann::json expected;
    nlohmann::json actual;
    double seconds = 0;

    nlohmann::json to_json() const;
};

std::vector<std::string> example_ids();
/// Throws Error{PreconditionViolated} for an unknown id.
VerifyReport verify_example(const std::string& id, const VerifyOptions& options = {});

}  // namespace toricflip
