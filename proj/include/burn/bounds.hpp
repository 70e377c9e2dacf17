#pragma once

#include <cstdint>
#include <optional>

#include <nlohmann/json.hpp>

namespace burn {

// floor((1 - 1/q) n + (q+1)/2): the constant-word schedule length, an upper
// bound on the burning number of H(n,q) for every n >= 1, q >= 2. Pure
// integer arithmetic: floor((2n(q-1) + q(q+1)) / (2q)).
std::int64_t upper_bound(std::int64_t n, std::int64_t q);

// ceil(n/2) + 1, the burning number of H(n,2) exactly; coincides with
// upper_bound(n, 2) for every n.
std::int64_t alon_exact(std::int64_t n);

struct LowerBound {
    double real = 0.0;         // p n - sqrt(2 p n ln n), p = 1 - 1/q
    std::int64_t integer = 1;  // smallest burning number consistent with it
};

// The burning number strictly exceeds `real`, so `integer` is floor(real)+1
// (clamped to 1) even when `real` lands exactly on an integer. The log is
// natural: the tail bound's algebra exp(-mu eps^2 / 2) = 1/n forces ln.
LowerBound lower_bound(std::int64_t n, std::int64_t q);

// floor(p n - sqrt(2 p n ln n)) when nonnegative.
std::optional<std::int64_t> b_star(std::int64_t n, std::int64_t q);

// Exact certificate that b+1 balls of radius b cannot cover H(n,q):
// (b+1) * ball_volume(b) < q^n in integer arithmetic. True proves the
// burning number exceeds b unconditionally, and at small n this is strictly
// stronger than the closed-form lower bound.
bool volume_certificate(std::int64_t n, std::int64_t q, std::int64_t b);

enum class TailCheck { holds, fails, not_applicable };

// Exact form of the tail inequality at b*: n * ball_volume(b*) <= q^n,
// i.e. P[X <= b*] <= 1/n where X counts coordinates that differ from a
// fixed center. not_applicable when b* < 0.
TailCheck exact_tail_le_inv_n(std::int64_t n, std::int64_t q);

struct BoundsReport {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::int64_t p_num = 0;  // p = 1 - 1/q as an exact rational
    std::int64_t p_den = 1;
    std::int64_t upper = 0;
    double lower_real = 0.0;
    std::int64_t lower_int = 1;
    std::optional<std::int64_t> alon;  // populated for q == 2
    std::optional<std::int64_t> bstar;
    bool volume_certificate_ok = false;  // evaluated at b = lower_int - 1
    TailCheck tail = TailCheck::not_applicable;
};

BoundsReport bounds_report(std::int64_t n, std::int64_t q);

// Fixed key order: n, q, p, upper, lower_real, lower_int, alon_exact,
// b_star, volume_certificate_ok, tail_le_inv_n. Optional fields serialize
// as null.
nlohmann::ordered_json report_to_json(const BoundsReport& r);

}  // namespace burn
