#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "oov/bits.hpp"

namespace oov {

namespace detail {

inline constexpr uint32_t kBinomTableDim = 65;

struct BinomTable {
    // entries beyond uint64 range are marked invalid
    std::array<std::array<uint64_t, kBinomTableDim>, kBinomTableDim> value{};
    std::array<std::array<bool, kBinomTableDim>, kBinomTableDim> ok{};

    BinomTable() {
        for (uint32_t n = 0; n < kBinomTableDim; ++n) {
            value[n][0] = 1;
            ok[n][0] = true;
            for (uint32_t k = 1; k <= n; ++k) {
                uint64_t a = value[n - 1][k - 1];
                uint64_t b = (k <= n - 1) ? value[n - 1][k] : 0;
                bool good = ok[n - 1][k - 1] && (k > n - 1 || ok[n - 1][k]);
                uint64_t s = a + b;
                if (!good || s < a) {
                    ok[n][k] = false;
                    value[n][k] = 0;
                } else {
                    ok[n][k] = true;
                    value[n][k] = s;
                }
            }
        }
    }
};

inline const BinomTable& binom_table() {
    static const BinomTable table;
    return table;
}

}  // namespace detail

// Exact binomial coefficient; throws if the value does not fit in 64 bits.
inline uint64_t binom(uint32_t n, uint32_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    if (n < detail::kBinomTableDim) {
        const auto& t = detail::binom_table();
        if (!t.ok[n][k]) throw std::overflow_error("binom: value exceeds 64 bits");
        return t.value[n][k];
    }
    // multiplicative evaluation with explicit overflow checks, for rank
    // computations in high dimensions (small k)
    unsigned __int128 acc = 1;
    for (uint32_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > UINT64_MAX) throw std::overflow_error("binom: value exceeds 64 bits");
    }
    return static_cast<uint64_t>(acc);
}

// Sum of binom(n, w) for w = 0..k; throws on 64-bit overflow.
inline uint64_t binom_leq(uint32_t n, uint32_t k) {
    if (k > n) k = n;
    uint64_t sum = 0;
    for (uint32_t w = 0; w <= k; ++w) {
        uint64_t b = binom(n, w);
        uint64_t s = sum + b;
        if (s < sum) throw std::overflow_error("binom_leq: value exceeds 64 bits");
        sum = s;
    }
    return sum;
}

// Colexicographic rank of a size-t subset among all size-t subsets of [0, d):
// rank({c_1 < ... < c_t}) = sum_i binom(c_i, i).
inline uint64_t rank_subset(const CoordSet& c) {
    uint64_t r = 0;
    auto m = c.members();
    for (uint32_t i = 0; i < c.size(); ++i) r += binom(m[i], i + 1);
    return r;
}

inline uint64_t rank_subset(std::span<const uint32_t> members) {
    uint64_t r = 0;
    for (uint32_t i = 0; i < members.size(); ++i) r += binom(members[i], i + 1);
    return r;
}

// Inverse of rank_subset.
inline CoordSet unrank_subset(uint64_t rank, uint32_t d, uint32_t t) {
    if (t > d) throw std::invalid_argument("unrank_subset: t > d");
    if (rank >= binom(d, t)) throw std::invalid_argument("unrank_subset: rank out of range");
    std::vector<uint32_t> members(t);
    uint32_t hi = d;  // exclusive upper bound for the next member
    for (uint32_t i = t; i >= 1; --i) {
        // largest c < hi with binom(c, i) <= rank
        uint32_t c = i - 1;
        uint64_t b = 0;
        while (c + 1 < hi && binom(c + 1, i) <= rank) {
            ++c;
            b = binom(c, i);
        }
        members[i - 1] = c;
        rank -= b;
        hi = c;
    }
    return CoordSet(d, std::move(members));
}

// Rank of a sparse query among all vectors of Hamming weight < t:
// offset of the weight class plus the colex rank of the support.
inline uint64_t rank_sparse_query(const BitVec& q, uint32_t t) {
    uint32_t w = q.popcount();
    if (w >= t)
        throw std::invalid_argument("rank_sparse_query: query weight must be below t");
    uint64_t offset = (w == 0) ? 0 : binom_leq(q.dim(), w - 1);
    auto supp = q.support();
    return offset + rank_subset(supp);
}

}  // namespace oov
