#include "burn/hamming.hpp"

#include <future>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace burn {

HammingParams::HammingParams(std::int64_t n_, std::int64_t q_) : n(n_), q(q_) {
    if (n < 1) throw InputError("Hamming graph needs word length n >= 1");
    if (q < 2) throw InputError("Hamming graph needs alphabet size q >= 2");
}

int hamming_distance(const Word& x, const Word& y) {
    if (x.size() != y.size()) throw InputError("hamming_distance: word lengths differ");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
    return d;
}

CountVector symbol_counts(const HammingParams& p, const Word& w) {
    if (static_cast<std::int64_t>(w.size()) != p.n) throw InputError("word length does not match n");
    CountVector counts(p.q, 0);
    for (int sym : w) {
        if (sym < 0 || sym >= p.q) throw InputError("word symbol out of range");
        ++counts[sym];
    }
    return counts;
}

std::int64_t word_index(const HammingParams& p, const Word& w) {
    if (static_cast<std::int64_t>(w.size()) != p.n) throw InputError("word length does not match n");
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    std::int64_t index = 0;
    std::int64_t place = 1;
    for (std::int64_t i = 0; i < p.n; ++i) {
        const int sym = w[i];
        if (sym < 0 || sym >= p.q) throw InputError("word symbol out of range");
        index += sym * place;
        if (i + 1 < p.n) {
            if (place > kMax / p.q) throw InputError("word_index: q^n does not fit in 63 bits");
            place *= p.q;
        }
    }
    return index;
}

Word index_word(const HammingParams& p, std::int64_t index) {
    if (index < 0) throw InputError("index_word: index must be nonnegative");
    Word w(p.n, 0);
    for (std::int64_t i = 0; i < p.n; ++i) {
        w[i] = static_cast<int>(index % p.q);
        index /= p.q;
    }
    if (index != 0) throw InputError("index_word: index out of range");
    return w;
}

BigInt total_volume(const HammingParams& p) {
    return boost::multiprecision::pow(BigInt(p.q), static_cast<unsigned>(p.n));
}

BigInt ball_volume(const HammingParams& p, std::int64_t k) {
    if (k < 0) return 0;
    if (k >= p.n) return total_volume(p);
    BigInt total = 1;  // i = 0
    BigInt term = 1;   // (q-1)^i C(n,i)
    for (std::int64_t i = 0; i < k; ++i) {
        // term(i+1) = term(i) * (q-1) * (n-i) / (i+1); the division is exact
        term *= (p.q - 1) * (p.n - i);
        term /= (i + 1);
        total += term;
    }
    return total;
}

namespace {

std::vector<BigInt> factorials(std::int64_t n) {
    std::vector<BigInt> fact(n + 1);
    fact[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    return fact;
}

BigInt multiplicity_from(const std::vector<BigInt>& fact, std::span<const std::int64_t> counts) {
    BigInt value = fact.back();
    for (std::int64_t c : counts) value /= fact[c];
    return value;
}

// Sums multiplicities over all completions of counts[i..] with the given
// remainder; suffix[j] bounds what coordinates j.. can still absorb.
BigInt sum_over_tail(const std::vector<std::int64_t>& caps, const std::vector<std::int64_t>& suffix,
                     const std::vector<BigInt>& fact, std::size_t i, std::int64_t rem,
                     std::vector<std::int64_t>& counts) {
    if (i + 1 == caps.size()) {
        counts[i] = rem;
        return multiplicity_from(fact, counts);
    }
    const std::int64_t lo = std::max<std::int64_t>(0, rem - suffix[i + 1]);
    const std::int64_t hi = std::min<std::int64_t>(caps[i], rem);
    BigInt total = 0;
    for (std::int64_t c = lo; c <= hi; ++c) {
        counts[i] = c;
        total += sum_over_tail(caps, suffix, fact, i + 1, rem - c, counts);
    }
    return total;
}

}  // namespace

BigInt multiplicity(std::int64_t n, std::span<const std::int64_t> counts) {
    if (n < 0) throw InputError("multiplicity: n must be nonnegative");
    std::int64_t sum = 0;
    for (std::int64_t c : counts) {
        if (c < 0) throw InputError("multiplicity: counts must be nonnegative");
        sum += c;
    }
    if (sum != n) throw InputError("multiplicity: counts must sum to n");
    const auto fact = factorials(n);
    return multiplicity_from(fact, counts);
}

BigInt count_with_thresholds_violated(const HammingParams& p, const ThresholdVector& t,
                                      unsigned threads) {
    if (static_cast<std::int64_t>(t.size()) != p.q)
        throw InputError("threshold vector length must equal q");
    std::vector<std::int64_t> caps(p.q);
    for (std::int64_t i = 0; i < p.q; ++i) {
        caps[i] = std::min(t[i] - 1, p.n);
        if (caps[i] < 0) return 0;  // counts are nonnegative, so t_i <= 0 excludes every word
    }
    std::vector<std::int64_t> suffix(p.q + 1, 0);
    for (std::int64_t i = p.q - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + caps[i];
    if (suffix[0] < p.n) return 0;  // every word must exceed some threshold

    const auto fact = factorials(p.n);
    const std::int64_t lo = std::max<std::int64_t>(0, p.n - suffix[1]);
    const std::int64_t hi = std::min<std::int64_t>(caps[0], p.n);

    if (threads <= 1 || hi - lo + 1 < 2) {
        std::vector<std::int64_t> counts(p.q, 0);
        return sum_over_tail(caps, suffix, fact, 0, p.n, counts);
    }

    // Deterministic split of the first coordinate's range; partial sums of
    // exact integers combine identically in any order.
    const std::int64_t span = hi - lo + 1;
    const std::int64_t tasks = std::min<std::int64_t>(threads, span);
    std::vector<std::future<BigInt>> futures;
    futures.reserve(tasks);
    for (std::int64_t task = 0; task < tasks; ++task) {
        const std::int64_t from = lo + span * task / tasks;
        const std::int64_t to = lo + span * (task + 1) / tasks;  // exclusive
        futures.push_back(std::async(std::launch::async, [&, from, to] {
            std::vector<std::int64_t> counts(p.q, 0);
            BigInt partial = 0;
            for (std::int64_t c0 = from; c0 < to; ++c0) {
                counts[0] = c0;
                partial += sum_over_tail(caps, suffix, fact, 1, p.n - c0, counts);
            }
            return partial;
        }));
    }
    BigInt total = 0;
    for (auto& f : futures) total += f.get();
    return total;
}

ExplicitGraph materialize(const HammingParams& p, std::int64_t vertex_cap) {
    const BigInt size = total_volume(p);
    if (size > vertex_cap)
        throw ResourceError("H(" + std::to_string(p.n) + "," + std::to_string(p.q) + ") has " +
                            size.str() + " vertices, above the cap " + std::to_string(vertex_cap));
    const int count = size.convert_to<int>();
    ExplicitGraph g(count);
    std::int64_t place = 1;
    for (std::int64_t coord = 0; coord < p.n; ++coord) {
        for (std::int64_t idx = 0; idx < count; ++idx) {
            const std::int64_t sym = (idx / place) % p.q;
            for (std::int64_t other = sym + 1; other < p.q; ++other)
                g.add_edge(static_cast<int>(idx), static_cast<int>(idx + (other - sym) * place));
        }
        place *= p.q;
    }
    return g;
}

}  // namespace burn
