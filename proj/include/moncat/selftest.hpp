#pragma once

#include <ostream>

namespace moncat {

// Scale knobs for the acceptance suite.
//   max_size   boundary bound for the exhaustive matrix/relation sweeps
//   max_moves  game-size bound for the exhaustive strategy sweeps
//   quick      shrink the randomized trial counts for a fast smoke run
// Wall-clock budgets are enforced only at the default full scale
// (max_size = 3, max_moves = 3, quick = false), where they are pinned.
struct AcceptanceOptions {
    int max_size = 3;
    int max_moves = 3;
    bool quick = false;
};

// Runs the built-in acceptance suite, printing one [PASS]/[FAIL] line per
// criterion to `out`. Returns the number of failed criteria (0 = all green).
int run_acceptance(std::ostream& out, const AcceptanceOptions& opts);

// Full run (quick = false) or reduced smoke run (quick = true).
int run_acceptance(std::ostream& out, bool quick = false);

} // namespace moncat
