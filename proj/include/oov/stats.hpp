#pragma once

#include <cstdint>

namespace oov {

// Caller-owned per-query counters.
struct QueryStats {
    uint64_t candidate_checks = 0;  // orthogonality tests against stored vectors
    uint64_t bitmap_lookups = 0;
    uint64_t nodes_visited = 0;
};

}  // namespace oov
