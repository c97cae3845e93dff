#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace nolat {

enum class CheckStatus { Pass, Fail, Skipped };

struct SuiteCheck {
    std::string id;
    /// The claim being replayed, in words.
    std::string anchor;
    CheckStatus status = CheckStatus::Skipped;
    std::string details;
};

struct SuiteReport {
    std::string suite;
    std::size_t max_n = 0;
    std::vector<SuiteCheck> checks;  ///< sorted by id
    std::size_t passed = 0, failed = 0, skipped = 0;

    bool ok() const { return failed == 0; }
};

struct SuiteOptions {
    /// "all", "constructions", "theorems" or "coherence".
    std::string suite = "all";
    std::size_t max_n = 8;
    unsigned jobs = 1;
};

/// Throws InvalidArgument for an unknown suite name.
SuiteReport run_suite(const SuiteOptions& options);

std::vector<std::string> suite_names();

nlohmann::json suite_to_json(const SuiteReport& report);

}  // namespace nolat
