#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "burn/bigint.hpp"
#include "burn/errors.hpp"
#include "burn/graph.hpp"

namespace burn {

// Parameters of the Hamming graph H(n,q): words of length n over {0..q-1},
// edges between words that differ in exactly one coordinate.
struct HammingParams {
    std::int64_t n;
    std::int64_t q;

    HammingParams(std::int64_t n_, std::int64_t q_);
};

using Word = std::vector<int>;                      // length n, symbols in [0,q)
using CountVector = std::vector<std::int64_t>;      // per-symbol counts, length q
using ThresholdVector = std::vector<std::int64_t>;  // per-symbol membership thresholds

// Number of coordinates where the words differ.
int hamming_distance(const Word& x, const Word& y);

CountVector symbol_counts(const HammingParams& p, const Word& w);

// Words map to vertex ids little-endian: coordinate 0 is the least
// significant base-q digit. Only valid while q^n fits in 63 bits; the
// materialization cap keeps real uses far below that.
std::int64_t word_index(const HammingParams& p, const Word& w);
Word index_word(const HammingParams& p, std::int64_t index);

BigInt total_volume(const HammingParams& p);  // q^n

// |{y : d(x,y) <= k}| = sum_{i<=k} (q-1)^i C(n,i), independent of the center.
// Clamped naturally: 0 for k < 0, q^n for k >= n. Exact integers throughout.
BigInt ball_volume(const HammingParams& p, std::int64_t k);

// Number of words with the given symbol counts: n! / prod c_i!.
BigInt multiplicity(std::int64_t n, std::span<const std::int64_t> counts);

// Visits every tuple (c_0..c_{m-1}) with sum == total and 0 <= c_i <= caps[i],
// in lexicographic order. Branches that cannot reach the total are skipped, so
// an infeasible cap set costs nothing.
template <typename Visit>
void for_each_bounded_composition(std::int64_t total, std::span<const std::int64_t> caps,
                                  Visit&& visit);

// Exact number of words whose count of symbol i is < t_i for every i, i.e.
// the words lying in none of the sets {x : count_i(x) >= t_i}. Enumerates
// bounded compositions of n into q parts, never the q^n words. threads > 1
// splits the first coordinate's range; the result is an exact sum either way.
BigInt count_with_thresholds_violated(const HammingParams& p, const ThresholdVector& t,
                                      unsigned threads = 1);

inline constexpr std::int64_t kDefaultMaterializeCap = 4096;

// Explicit H(n,q) on base-q encoded vertex ids; requires q^n <= vertex_cap.
ExplicitGraph materialize(const HammingParams& p, std::int64_t vertex_cap = kDefaultMaterializeCap);

namespace detail {

template <typename Visit>
void compositions_rec(std::int64_t rem, std::span<const std::int64_t> caps,
                      std::span<const std::int64_t> suffix, std::size_t i,
                      std::vector<std::int64_t>& out, Visit& visit) {
    if (i + 1 == caps.size()) {
        out[i] = rem;  // range bookkeeping below guarantees 0 <= rem <= caps[i]
        visit(std::span<const std::int64_t>(out));
        return;
    }
    const std::int64_t lo = std::max<std::int64_t>(0, rem - suffix[i + 1]);
    const std::int64_t hi = std::min<std::int64_t>(caps[i], rem);
    for (std::int64_t c = lo; c <= hi; ++c) {
        out[i] = c;
        compositions_rec(rem - c, caps, suffix, i + 1, out, visit);
    }
}

}  // namespace detail

template <typename Visit>
void for_each_bounded_composition(std::int64_t total, std::span<const std::int64_t> caps,
                                  Visit&& visit) {
    if (caps.empty() || total < 0) return;
    for (std::int64_t cap : caps)
        if (cap < 0) return;
    std::vector<std::int64_t> suffix(caps.size() + 1, 0);
    for (std::size_t i = caps.size(); i-- > 0;) suffix[i] = suffix[i + 1] + caps[i];
    if (total > suffix[0]) return;
    std::vector<std::int64_t> out(caps.size(), 0);
    detail::compositions_rec(total, caps, std::span<const std::int64_t>(suffix), 0, out, visit);
}

}  // namespace burn
