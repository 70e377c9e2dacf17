#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace burn {

// Fixed-width bitset over vertex ids. Coverage unions and popcounts are the
// solver's hot loop, so the few operations it needs are fused here.
class CoverageSet {
public:
    CoverageSet() = default;
    explicit CoverageSet(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int size() const { return bits_; }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    int count() const {
        int total = 0;
        for (std::uint64_t w : words_) total += std::popcount(w);
        return total;
    }

    void unite(const CoverageSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    }

    // In-place union returning the resulting popcount.
    int unite_count(const CoverageSet& other) {
        int total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= other.words_[i];
            total += std::popcount(words_[i]);
        }
        return total;
    }

    // How many bits of `other` are not set here.
    int count_added(const CoverageSet& other) const {
        int total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            total += std::popcount(other.words_[i] & ~words_[i]);
        return total;
    }

    bool operator==(const CoverageSet&) const = default;

private:
    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace burn
