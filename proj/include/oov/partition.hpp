#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "oov/binomial.hpp"
#include "oov/bits.hpp"
#include "oov/instance.hpp"
#include "oov/subset_build.hpp"

namespace oov {

struct PartitionStats {
    uint64_t zero_probes = 0;  // single-coordinate (vector, bit) tests
    uint64_t extra_passes = 0; // re-passes over a leaf list after an extraction
    uint64_t moved = 0;        // vectors moved into blocks
};

struct PartitionPart {
    std::vector<uint32_t> indices;  // original positions, ascending
    CoordSet zero_set;
};

struct PartitionResult {
    std::vector<uint32_t> residual;  // original positions, ascending
    std::vector<PartitionPart> parts;
};

// Enumerates all size-t subsets of [0, d), ascending members, colex order.
template <typename Fn>
void for_each_subset_colex(uint32_t d, uint32_t t, Fn&& fn) {
    if (t > d) return;
    std::vector<uint32_t> c(t);
    for (uint32_t i = 0; i < t; ++i) c[i] = i;
    while (true) {
        fn(std::span<const uint32_t>(c));
        if (t == 0) break;
        // bump the first member with room before its successor, reset below it
        uint32_t i = 0;
        while (i + 1 < t && c[i] + 1 == c[i + 1]) ++i;
        if (i + 1 == t && c[i] + 1 == d) break;
        ++c[i];
        for (uint32_t j = 0; j < i; ++j) c[j] = j;
    }
}

namespace detail {

struct PartitionState {
    const WordMatrix* m = nullptr;
    uint32_t t = 0;
    uint64_t min_block = 0;  // m
    std::vector<char> alive;
    std::vector<std::vector<uint32_t>> lists;
    std::vector<uint32_t> chosen;  // strictly decreasing
    PartitionResult* result = nullptr;
    PartitionStats* stats = nullptr;
    uint32_t dim = 0;

    void extract_at_leaf(std::vector<uint32_t>& list) {
        while (list.size() >= min_block) {
            PartitionPart part;
            part.indices.assign(list.begin(), list.begin() + min_block);
            std::vector<uint32_t> members(chosen.rbegin(), chosen.rend());
            part.zero_set = CoordSet(dim, std::move(members));
            for (uint32_t idx : part.indices) alive[idx] = 0;
            if (stats) {
                stats->moved += min_block;
                stats->extra_passes++;
            }
            result->parts.push_back(std::move(part));
            list.erase(list.begin(), list.begin() + min_block);
        }
    }

    void descend(uint32_t depth, uint32_t hi) {
        for (uint32_t c = 0; c < hi; ++c) {
            const uint64_t* row = m->row(c);
            uint32_t shift = c & 63;
            const auto& parent = lists[depth];
            auto& next = lists[depth + 1];
            next.clear();
            next.resize(parent.size());
            uint32_t* dst = next.data();
            size_t count = 0;
            for (uint32_t idx : parent) {
                dst[count] = idx;
                count += alive[idx] & (1u - ((row[idx] >> shift) & 1u));
            }
            next.resize(count);
            if (stats) stats->zero_probes += parent.size();
            if (next.size() < min_block) continue;  // no subset below can form a block
            chosen.push_back(c);
            if (depth + 1 == t) {
                extract_at_leaf(next);
            } else {
                descend(depth + 1, c);
            }
            chosen.pop_back();
        }
    }
};

}  // namespace detail

// Greedy decomposition: scans coordinate sets S of size t in colex order; while
// at least m surviving vectors are zero on S, the m with the lowest original
// indices become a block. Whatever survives is (m, t)-pseudorandom.
inline PartitionResult pseudorandom_partition(const OVInstance& x, uint64_t m, uint32_t t,
                                              PartitionStats* stats = nullptr) {
    if (m < 1 || m > x.n())
        throw std::invalid_argument("pseudorandom_partition: need 1 <= m <= n");
    if (t < 1 || t > x.dim)
        throw std::invalid_argument("pseudorandom_partition: need 1 <= t <= d");

    PartitionResult result;
    WordMatrix matrix(x.vectors, x.dim);

    detail::PartitionState st;
    st.m = &matrix;
    st.t = t;
    st.min_block = m;
    st.alive.assign(x.n(), 1);
    st.lists.resize(t + 1);
    st.result = &result;
    st.stats = stats;
    st.dim = x.dim;
    st.lists[0].resize(x.n());
    for (uint32_t i = 0; i < x.n(); ++i) st.lists[0][i] = i;
    st.chosen.reserve(t);
    st.descend(0, x.dim);

    for (uint32_t i = 0; i < x.n(); ++i)
        if (st.alive[i]) result.residual.push_back(i);
    return result;
}

inline OVInstance gather(const OVInstance& x, std::span<const uint32_t> indices) {
    std::vector<BitVec> vecs;
    vecs.reserve(indices.size());
    for (uint32_t i : indices) vecs.push_back(x.vectors[i]);
    return OVInstance(x.dim, std::move(vecs));
}

// Definition check by exhaustive enumeration; cost binom(d,t) * n * t.
inline bool is_pseudorandom(const OVInstance& x, uint64_t m, uint32_t t) {
    if (t > x.dim) throw std::invalid_argument("is_pseudorandom: t > d");
    bool ok = true;
    for_each_subset_colex(x.dim, t, [&](std::span<const uint32_t> c) {
        if (!ok) return;
        uint64_t count = 0;
        for (const BitVec& v : x.vectors) {
            bool zero = true;
            for (uint32_t j : c)
                if (v.get(j)) {
                    zero = false;
                    break;
                }
            if (zero && ++count >= m) break;
        }
        if (count >= m) ok = false;
    });
    return ok;
}

// Largest |Y_C| over all size-t coordinate sets C.
inline uint64_t max_candidate_count(const OVInstance& x, uint32_t t) {
    if (t > x.dim) throw std::invalid_argument("max_candidate_count: t > d");
    uint64_t best = 0;
    for_each_subset_colex(x.dim, t, [&](std::span<const uint32_t> c) {
        uint64_t count = 0;
        for (const BitVec& v : x.vectors) {
            bool zero = true;
            for (uint32_t j : c)
                if (v.get(j)) {
                    zero = false;
                    break;
                }
            if (zero) ++count;
        }
        if (count > best) best = count;
    });
    return best;
}

}  // namespace oov
