#pragma once

#include <chrono>
#include <optional>

#include "burn/graph.hpp"

namespace burn {

struct SolveOptions {
    // Report exceeds_limit instead of searching past this schedule length.
    std::optional<int> limit;
    // 0 picks std::thread::hardware_concurrency(); 1 forces the sequential path.
    unsigned threads = 0;
    // Hard refusal above this size.
    int vertex_cap = 4096;
    // At or below this size the search always runs to completion; above it
    // the time budget applies and the solve is best-effort.
    int guaranteed_vertices = 64;
    std::chrono::milliseconds budget{10'000};
};

enum class SolveStatus { found, exceeds_limit, exceeds_budget };

struct SolveOutcome {
    SolveStatus status = SolveStatus::found;
    int burning_number = 0;   // meaningful when status == found
    BurningSchedule witness;  // covers the graph; identical across thread counts
};

// Minimum length of a covering burning schedule, by iterative deepening: for
// B = 1, 2, ... a depth-first search places sources with radii B-1..0,
// pruning a branch as soon as its uncovered count exceeds the sum of the
// largest ball volumes the remaining radii could contribute. A greedy
// schedule seeds the search as incumbent: once every shorter length is
// proved infeasible the incumbent is optimal and returned as the witness.
// When the search beats the incumbent, the witness is the first covering
// schedule in lexicographic order among schedules without repeated sources
// (a repeat burns with a smaller radius, so it never adds coverage).
// First-source branches may run on several threads; results merge on the
// smallest succeeding first source, so the outcome, witness included, is
// identical to the sequential run.
//
// Throws InputError for empty or disconnected graphs, ResourceError above
// vertex_cap.
SolveOutcome exact_burning_number(const ExplicitGraph& g, const SolveOptions& opts = {});

}  // namespace burn
