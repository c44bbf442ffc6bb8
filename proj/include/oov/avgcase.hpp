#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>

#include "oov/binomial.hpp"
#include "oov/bits.hpp"
#include "oov/instance.hpp"
#include "oov/stats.hpp"
#include "oov/subset_build.hpp"

namespace oov {

// Smallest integer t with (1/p)^t >= 6 n^eps, i.e. ceil(log_{1/p}(6 n^eps)).
// Values within 1e-9 of an integer are snapped before the ceiling so exact
// powers land exactly. Callers clamp the result to [1, d].
inline uint32_t choose_t_avg(uint64_t n, const Rational& p, const Rational& eps) {
    if (n < 2) throw std::invalid_argument("choose_t_avg: need n >= 2");
    if (p.num == 0 || p.num >= p.den)
        throw std::invalid_argument("choose_t_avg: p must be in (0,1)");
    if (eps.num == 0 || eps.num >= eps.den)
        throw std::invalid_argument("choose_t_avg: eps must be in (0,1)");
    double target = std::log2(6.0) + eps.value() * std::log2(static_cast<double>(n));
    double base = -std::log2(p.value());  // log2(1/p)
    double raw = target / base;
    double snapped = std::round(raw);
    if (std::abs(raw - snapped) < 1e-9) raw = snapped;
    double t = std::ceil(raw);
    if (t < 1.0) t = 1.0;
    return static_cast<uint32_t>(t);
}

struct AvgStructure {
    uint32_t dim = 0;
    uint32_t t = 0;
    std::shared_ptr<const OVInstance> instance;
    SparseBitmap sparse_bitmap;
    CandidateTable candidates;  // values are indices into *instance
    uint64_t accounted_bits = 0;

    bool query(const BitVec& q, QueryStats* stats = nullptr) const {
        require_same_dim(dim, q.dim(), "avg_query");
        if (q.popcount() < t) {
            if (stats) stats->bitmap_lookups++;
            return sparse_bitmap.get(rank_sparse_query(q, t));
        }
        auto supp = q.support(t);
        for (uint32_t idx : candidates.list(rank_subset(supp))) {
            if (stats) stats->candidate_checks++;
            if (is_orthogonal(instance->vectors[idx], q)) return true;
        }
        return false;
    }
};

inline AvgStructure avg_build(OVInstance x, uint32_t t, BuildCounters* counters = nullptr) {
    if (t < 1 || t > x.dim) throw std::invalid_argument("avg_build: need 1 <= t <= d");
    if (x.n() < 1) throw std::invalid_argument("avg_build: need n >= 1");
    AvgStructure s;
    s.dim = x.dim;
    s.t = t;
    s.instance = std::make_shared<const OVInstance>(std::move(x));
    SparseAndCandidates built = build_sparse_and_candidates(
        s.instance->vectors, s.instance->vectors, s.dim, t, counters);
    s.sparse_bitmap = std::move(built.bitmap);
    s.candidates = std::move(built.table);
    // accounted size: one bit per sparse query plus d bits per stored vector
    s.accounted_bits = s.sparse_bitmap.num_bits +
                       uint64_t{s.dim} * s.candidates.values.size();
    return s;
}

}  // namespace oov
