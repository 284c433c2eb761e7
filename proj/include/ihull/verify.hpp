#ifndef IHULL_VERIFY_HPP
#define IHULL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ihull/numbers.hpp"

namespace ihull {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    Int point_cap = Int(1) << 32;
    Int c_cap = 400;   // witness cap for the minimum-b table
    unsigned jobs = 1;
    std::uint64_t seed = 20260816;
};

/** Canonical check names, in execution order. */
const std::vector<std::string>& acceptance_check_names();

/**
 * Run the acceptance checks. An empty filter list runs all of them; filters
 * match canonical names or the short aliases c1..c13. Unknown names throw
 * InputError. A check that throws is reported failed with the error text.
 */
std::vector<CheckResult> run_acceptance(const std::vector<std::string>& filters,
                                        const VerifyOptions& opt = {});

} // namespace ihull

#endif
