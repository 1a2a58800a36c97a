#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fpt {

/// Named, versioned generator used for every seeded sweep.
inline constexpr const char* kRngName = "mt19937_64/v1";
inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct AcceptanceOptions {
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0.0;
    double time_limit = 0.0;
    std::string detail;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const AcceptanceOptions& options);
/// Runs every criterion in order, calling `report` after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& report = {});
/// One line: `[PASS] 3 <title> (1.23 s) <detail>`.
std::string format_result(const CriterionResult& r);

}  // namespace fpt
