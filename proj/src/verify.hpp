#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "limit_theorems.hpp"

namespace weyl {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    uint64_t seed = 20250101;  // master seed of the suite's deterministic streams
    int threads = 0;           // 0 = all cores
};

// One entry of the pinned theorem-sweep grid used by criterion 8.
struct SweepGridEntry {
    const char* theorem;
    RegimeSpec spec;
    double pinned_final;  // oracle value at n = 20000 (frozen fixture)
};

const std::vector<SweepGridEntry>& acceptance_sweep_grid();

// Runs the full acceptance suite; one result per criterion, in order.
// `progress`, when set, receives a PASS/FAIL line per criterion as it lands.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            std::ostream* progress = nullptr);

}  // namespace weyl
