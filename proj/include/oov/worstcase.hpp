#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "oov/binomial.hpp"
#include "oov/bits.hpp"
#include "oov/instance.hpp"
#include "oov/oracle.hpp"
#include "oov/partition.hpp"
#include "oov/stats.hpp"
#include "oov/subset_build.hpp"

namespace oov {

struct BuildStats {
    uint64_t filter_probes = 0;
    uint64_t subsets_visited = 0;
    uint64_t values_stored = 0;
    uint64_t partition_probes = 0;
    uint64_t dense_probes = 0;
    uint64_t nodes_built = 0;

    uint64_t total() const {
        return filter_probes + subsets_visited + values_stored + partition_probes +
               dense_probes + nodes_built;
    }
};

// Largest r with r^i <= n.
inline uint64_t iroot(uint64_t n, uint32_t i) {
    if (i == 0) throw std::invalid_argument("iroot: i must be >= 1");
    if (i == 1 || n <= 1) return n;
    uint64_t lo = 1, hi = n;
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo + 1) / 2;
        unsigned __int128 acc = 1;
        bool over = false;
        for (uint32_t k = 0; k < i; ++k) {
            acc *= mid;
            if (acc > n) {
                over = true;
                break;
            }
        }
        if (over) {
            hi = mid - 1;
        } else {
            lo = mid;
        }
    }
    return lo;
}

struct WorstParams {
    uint64_t m;
    uint32_t t;
};

namespace detail {

// t = max(1, floor(d/i)); m = max(1, ceil(n / floor(n^(1/i)))) -- all integer,
// no floating point. Valid for any i >= 1 (i = 1 gives t = d, m = 1).
inline WorstParams worst_params_raw(uint64_t n, uint32_t d, uint32_t i) {
    uint32_t t = d / i;
    if (t < 1) t = 1;
    uint64_t root = iroot(n, i);
    uint64_t m = (root == 0) ? 1 : (n + root - 1) / root;
    if (m < 1) m = 1;
    return WorstParams{m, t};
}

}  // namespace detail

inline WorstParams derive_params(uint64_t n, uint32_t d, uint32_t i) {
    if (i < 2 || i > d) throw std::invalid_argument("derive_params: need 2 <= i <= d");
    if (n < 2) throw std::invalid_argument("derive_params: need n >= 2");
    return detail::worst_params_raw(n, d, i);
}

struct WorstNode {
    enum class Kind : uint8_t { leaf = 0, dense = 1, internal = 2 };

    Kind kind = Kind::leaf;
    uint32_t dim = 0;

    // leaf (n = 1)
    BitVec vector;

    // dense (i = 1)
    FullBitmap bitmap;

    // internal
    uint32_t level = 0;  // recursion parameter i at this node
    uint32_t t = 0;
    uint64_t m = 0;
    std::vector<BitVec> residual;  // pseudorandom part, original relative order
    SparseBitmap sparse_bitmap;
    CandidateTable candidates;  // positions into residual
    struct Child {
        CoordSet zero_set;
        std::unique_ptr<WorstNode> node;
    };
    std::vector<Child> children;
};

namespace detail {

inline std::unique_ptr<WorstNode> build_worst_node(OVInstance x, uint32_t i, BuildStats* bs) {
    auto node = std::make_unique<WorstNode>();
    node->dim = x.dim;
    if (bs) bs->nodes_built++;

    if (x.n() == 1) {
        node->kind = WorstNode::Kind::leaf;
        node->vector = std::move(x.vectors[0]);
        return node;
    }
    if (i <= 1 || i > x.dim) {
        // i = 1 base case; i > d can only arise from degenerate rounding and
        // is answered exactly the same way
        node->kind = WorstNode::Kind::dense;
        node->bitmap = build_full_bitmap(x, bs ? &bs->dense_probes : nullptr);
        return node;
    }

    node->kind = WorstNode::Kind::internal;
    node->level = i;
    WorstParams params = worst_params_raw(x.n(), x.dim, i);
    node->t = params.t;
    node->m = params.m;

    PartitionStats pstats;
    PartitionResult parts = pseudorandom_partition(x, params.m, params.t, &pstats);
    if (bs) bs->partition_probes += pstats.zero_probes;

    node->residual.reserve(parts.residual.size());
    for (uint32_t idx : parts.residual) node->residual.push_back(x.vectors[idx]);

    BuildCounters counters;
    SparseAndCandidates built =
        build_sparse_and_candidates(x.vectors, node->residual, x.dim, params.t,
                                    bs ? &counters : nullptr, params.m);
    node->sparse_bitmap = std::move(built.bitmap);
    node->candidates = std::move(built.table);
    if (bs) {
        bs->filter_probes += counters.filter_probes;
        bs->subsets_visited += counters.subsets_visited;
        bs->values_stored += counters.values_stored;
    }

    node->children.reserve(parts.parts.size());
    for (const PartitionPart& part : parts.parts) {
        CoordSet keep = part.zero_set.complement();
        std::vector<BitVec> restricted;
        restricted.reserve(part.indices.size());
        for (uint32_t idx : part.indices) restricted.push_back(restrict_to(x.vectors[idx], keep));
        OVInstance block(keep.size(), std::move(restricted));
        auto child = build_worst_node(std::move(block), i - 1, bs);
        node->children.push_back(WorstNode::Child{part.zero_set, std::move(child)});
    }
    return node;
}

}  // namespace detail

inline std::unique_ptr<WorstNode> ov_pre(OVInstance x, uint32_t i, BuildStats* bs = nullptr) {
    if (x.n() < 1) throw std::invalid_argument("ov_pre: need n >= 1");
    if (i < 1 || i > x.dim) throw std::invalid_argument("ov_pre: need 1 <= i <= d");
    return detail::build_worst_node(std::move(x), i, bs);
}

// With short_circuit off, every candidate and every child is still examined
// after a hit, so QueryStats reflect the worst case.
inline bool ov_onl(const WorstNode& node, const BitVec& q, QueryStats* stats = nullptr,
                   bool short_circuit = true) {
    require_same_dim(node.dim, q.dim(), "ov_onl");
    if (stats) stats->nodes_visited++;

    switch (node.kind) {
        case WorstNode::Kind::leaf:
            if (stats) stats->candidate_checks++;
            return is_orthogonal(node.vector, q);
        case WorstNode::Kind::dense:
            if (stats) stats->bitmap_lookups++;
            return query_full_bitmap(node.bitmap, q);
        case WorstNode::Kind::internal:
            break;
    }

    if (q.popcount() < node.t) {
        if (stats) stats->bitmap_lookups++;
        return node.sparse_bitmap.get(rank_sparse_query(q, node.t));
    }

    bool found = false;
    auto supp = q.support(node.t);
    for (uint32_t idx : node.candidates.list(rank_subset(supp))) {
        if (stats) stats->candidate_checks++;
        if (is_orthogonal(node.residual[idx], q)) {
            found = true;
            if (short_circuit) return true;
        }
    }
    for (const auto& child : node.children) {
        BitVec qc = restrict_to(q, child.zero_set.complement());
        if (ov_onl(*child.node, qc, stats, short_circuit)) {
            found = true;
            if (short_circuit) return true;
        }
    }
    return found;
}

struct SpaceAccount {
    uint64_t accounted_bits = 0;
};

// The ledger charges what the flat encoding would: bitmap bits, d bits per
// stored vector, d bits per child zero-set, independent of physical layout.
inline SpaceAccount space_account(const WorstNode& node) {
    SpaceAccount acc;
    switch (node.kind) {
        case WorstNode::Kind::leaf:
            acc.accounted_bits = node.dim;
            return acc;
        case WorstNode::Kind::dense:
            acc.accounted_bits = uint64_t{1} << node.dim;
            return acc;
        case WorstNode::Kind::internal:
            break;
    }
    acc.accounted_bits = node.sparse_bitmap.num_bits +
                         uint64_t{node.dim} * node.candidates.values.size();
    for (const auto& child : node.children)
        acc.accounted_bits += node.dim + space_account(*child.node).accounted_bits;
    return acc;
}

namespace detail {

inline uint64_t saturating_u64(unsigned __int128 v) {
    return v > UINT64_MAX ? UINT64_MAX : static_cast<uint64_t>(v);
}

}  // namespace detail

// Ceiling-adjusted counter bound 2 * i * d * m on candidate checks per query.
inline uint64_t query_check_bound(uint64_t n, uint32_t d, uint32_t i) {
    WorstParams p = detail::worst_params_raw(n, d, i);
    unsigned __int128 b = static_cast<unsigned __int128>(2) * i * d * p.m;
    return detail::saturating_u64(b);
}

// Ceiling-adjusted space bound binom(d, <=t) * i * d * m in accounted bits.
inline uint64_t space_bound_bits(uint64_t n, uint32_t d, uint32_t i) {
    WorstParams p = detail::worst_params_raw(n, d, i);
    unsigned __int128 b = static_cast<unsigned __int128>(binom_leq(d, p.t)) * i * d * p.m;
    return detail::saturating_u64(b);
}

// Preprocessing bound binom(d, <=t) * i * d * n in elementary build operations.
inline uint64_t preprocessing_bound_ops(uint64_t n, uint32_t d, uint32_t i) {
    WorstParams p = detail::worst_params_raw(n, d, i);
    unsigned __int128 b = static_cast<unsigned __int128>(binom_leq(d, p.t)) * i * d * n;
    return detail::saturating_u64(b);
}

struct ScheduleResult {
    uint32_t i = 1;
    bool hypothesis_ok = true;
};

// i = round(2 c log2(c) / delta), clamped to [1, c log2(n)].
inline ScheduleResult schedule_for_loglinear(uint64_t n, double c, double delta) {
    if (n < 2 || c < 2.0 || delta <= 0.0)
        throw std::invalid_argument("schedule_for_loglinear: need n >= 2, c >= 2, delta > 0");
    ScheduleResult out;
    out.hypothesis_ok = delta + 1e-12 >= 2.0 * std::exp(1.0) * std::log2(c) / c;
    double d = c * std::log2(static_cast<double>(n));
    long long i = std::llround(2.0 * c * std::log2(c) / delta);
    long long cap = std::max<long long>(1, static_cast<long long>(std::floor(d)));
    if (i < 1) i = 1;
    if (i > cap) i = cap;
    out.i = static_cast<uint32_t>(i);
    return out;
}

// i = floor(log n / (eps log n + log log n)), logs base 2, clamped below at 1.
// Callers that know d clamp the result above at d.
inline ScheduleResult schedule_for_eps(uint64_t n, double eps) {
    if (n < 2 || eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("schedule_for_eps: need n >= 2, eps in (0,1)");
    ScheduleResult out;
    double logn = std::log2(static_cast<double>(n));
    double loglogn = logn > 1.0 ? std::log2(logn) : 0.0;
    out.hypothesis_ok = (logn > 1.0) && (loglogn / logn <= eps + 1e-12) && (eps < 0.5);
    long long i = static_cast<long long>(std::floor(logn / (eps * logn + loglogn) + 1e-9));
    if (i < 1) i = 1;
    out.i = static_cast<uint32_t>(i);
    return out;
}

}  // namespace oov
