#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fbmx::cli {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    double alpha = 0.01;
    std::size_t paths = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::vector<std::string> only;  ///< empty runs every check
};

/// Names accepted by VerifyOptions::only, in execution order.
const std::vector<std::string>& verification_checks();

/// Throws ConfigError for an unknown name in `only`.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace fbmx::cli
