#include "burn/construction.hpp"

#include <algorithm>

namespace burn {

ConstructionPlan plan_with_s(const HammingParams& p, std::int64_t s) {
    ConstructionPlan c{.params = p};
    c.k = p.n / p.q;
    c.r = p.n % p.q;
    c.s = s;
    c.b = (p.q - 1) * c.k + s - 1;
    if (c.b < 0) throw InputError("plan_with_s: schedule length must be positive");
    const std::int64_t placed = std::min<std::int64_t>(p.q, c.b + 1);
    for (std::int64_t i = 0; i < placed; ++i) {
        c.source_symbols.push_back(static_cast<int>(i));
        c.radii.push_back(c.b - i);
    }
    c.thresholds.resize(p.q);
    for (std::int64_t i = 0; i < p.q; ++i) c.thresholds[i] = c.k + c.r - s + 1 + i;
    return c;
}

ConstructionPlan plan(const HammingParams& p) {
    const std::int64_t r = p.n % p.q;
    // s = ceil(r - r/q + (q-1)/2 + 1/(2q)) over a common denominator of 2q
    const std::int64_t numer = 2 * r * (p.q - 1) + p.q * p.q - p.q + 1;
    const std::int64_t s = (numer + 2 * p.q - 1) / (2 * p.q);
    return plan_with_s(p, s);
}

BigInt verify_plan_analytic(const ConstructionPlan& c, unsigned threads) {
    // A word is uncovered iff its count of symbol i stays below t_i for every
    // placed source. Symbols without a source (possible only when b+1 < q)
    // impose no constraint.
    ThresholdVector effective(c.params.q);
    for (std::int64_t i = 0; i < c.params.q; ++i)
        effective[i] = (i <= c.b) ? c.thresholds[i] : c.params.n + 1;
    return count_with_thresholds_violated(c.params, effective, threads);
}

BurningSchedule plan_schedule(const ConstructionPlan& c) {
    BurningSchedule s;
    for (std::int64_t i = 0; i <= c.b; ++i) {
        const int symbol = i < c.params.q ? static_cast<int>(i) : 0;  // tail repeats x_0
        const Word w(c.params.n, symbol);
        s.sources.push_back(static_cast<int>(word_index(c.params, w)));
    }
    return s;
}

bool verify_plan_exhaustive(const ConstructionPlan& c, std::int64_t vertex_cap) {
    const ExplicitGraph g = materialize(c.params, vertex_cap);
    return verify_schedule(g, plan_schedule(c)).covered;
}

nlohmann::ordered_json plan_to_json(const ConstructionPlan& c) {
    nlohmann::ordered_json j;
    j["n"] = c.params.n;
    j["q"] = c.params.q;
    j["k"] = c.k;
    j["r"] = c.r;
    j["s"] = c.s;
    j["length"] = c.length();
    j["thresholds"] = c.thresholds;
    j["sources"] = c.source_symbols;
    return j;
}

}  // namespace burn
