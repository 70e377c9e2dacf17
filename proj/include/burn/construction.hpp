#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "burn/bigint.hpp"
#include "burn/hamming.hpp"

namespace burn {

// Burning schedule for H(n,q) built from constant words x_i = (i,...,i).
// Write n = q*k + r with r in [0,q) and s = ceil((2r(q-1) + q^2 - q + 1) / (2q));
// the schedule has length b+1 = (q-1)k + s. A word lies in the ball of x_i
// exactly when it uses symbol i at least t_i = k + r - s + 1 + i times, and no
// word can sit below every threshold at once, so the schedule covers the graph.
// When b+1 < q only the first b+1 constant words are placed; when b+1 > q the
// tail repeats x_0, which adds nothing but keeps the length exact.
struct ConstructionPlan {
    HammingParams params;
    std::int64_t k = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t b = 0;               // schedule length is b + 1
    std::vector<int> source_symbols;  // one entry per placed constant word
    std::vector<std::int64_t> radii;  // b - i, aligned with source_symbols
    ThresholdVector thresholds;       // length q

    std::int64_t length() const { return b + 1; }
};

ConstructionPlan plan(const HammingParams& p);

// Same shape with a caller-chosen s. Exists so tests can probe values of s
// the coverage argument rejects; plan() computes the canonical s.
ConstructionPlan plan_with_s(const HammingParams& p, std::int64_t s);

// Exact count of words left uncovered by the plan; zero certifies coverage.
BigInt verify_plan_analytic(const ConstructionPlan& c, unsigned threads = 1);

// Materializes the graph and checks the schedule ball by ball.
bool verify_plan_exhaustive(const ConstructionPlan& c,
                            std::int64_t vertex_cap = kDefaultMaterializeCap);

// Explicit schedule of length b+1 on the materialized graph's vertex ids.
BurningSchedule plan_schedule(const ConstructionPlan& c);

// {n, q, k, r, s, length, thresholds, sources}; sources are the constant
// symbols, one per placed word.
nlohmann::ordered_json plan_to_json(const ConstructionPlan& c);

}  // namespace burn
