#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gconvex {

// One acceptance criterion outcome. `details` is a short human-readable
// summary (worst observed slack, counts, timings).
struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string details;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 42;
};

// Runs the acceptance battery; `only` restricts to a single criterion id
// (1..8), -1 runs everything. Each criterion is self-contained and
// deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, int only = -1);

}  // namespace gconvex
