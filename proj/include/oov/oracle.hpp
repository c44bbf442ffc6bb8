#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oov/bits.hpp"
#include "oov/instance.hpp"

namespace oov {

// Hard ceiling on dense bitmap dimension: 2^28 bits = 32 MiB.
inline constexpr uint32_t kDenseDimCap = 28;

// Scans vectors in stored order, short-circuiting on the first hit.
inline bool linear_scan_query(const OVInstance& x, const BitVec& q) {
    require_same_dim(x.dim, q.dim(), "linear_scan_query");
    for (const BitVec& v : x.vectors)
        if (is_orthogonal(v, q)) return true;
    return false;
}

// Answers to all 2^d queries, indexed by to_index() of the query.
struct FullBitmap {
    uint32_t dim = 0;
    std::vector<uint64_t> words;

    bool get(uint64_t idx) const { return (words[idx >> 6] >> (idx & 63)) & 1u; }
    void set(uint64_t idx) { words[idx >> 6] |= uint64_t{1} << (idx & 63); }

    bool operator==(const FullBitmap&) const = default;
};

inline FullBitmap build_full_bitmap(const OVInstance& x, uint64_t* probe_count = nullptr) {
    if (x.dim > kDenseDimCap)
        throw std::invalid_argument("build_full_bitmap: dimension " + std::to_string(x.dim) +
                                    " exceeds dense cap " + std::to_string(kDenseDimCap));
    FullBitmap b;
    b.dim = x.dim;
    uint64_t total = uint64_t{1} << x.dim;
    b.words.assign((total + 63) / 64, 0);
    uint64_t probes = 0;
    for (uint64_t q = 0; q < total; ++q) {
        for (const BitVec& v : x.vectors) {
            uint64_t mask = v.words().empty() ? 0 : v.words()[0];
            ++probes;
            if ((mask & q) == 0) {
                b.set(q);
                break;
            }
        }
    }
    if (probe_count) *probe_count += probes;
    return b;
}

inline bool query_full_bitmap(const FullBitmap& b, const BitVec& q) {
    require_same_dim(b.dim, q.dim(), "query_full_bitmap");
    return b.get(q.to_index());
}

}  // namespace oov
