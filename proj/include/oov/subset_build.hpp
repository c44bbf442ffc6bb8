#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "oov/binomial.hpp"
#include "oov/bits.hpp"

namespace oov {

// One bit per query of Hamming weight < t, indexed by rank_sparse_query.
struct SparseBitmap {
    uint64_t num_bits = 0;
    std::vector<uint64_t> words;

    void resize(uint64_t bits) {
        num_bits = bits;
        words.assign((bits + 63) / 64, 0);
    }
    bool get(uint64_t i) const { return (words[i >> 6] >> (i & 63)) & 1u; }
    void set(uint64_t i) { words[i >> 6] |= uint64_t{1} << (i & 63); }

    bool operator==(const SparseBitmap&) const = default;
};

// All Y_C lists in one flat array, keyed by the colex rank of C. Empty lists
// cost one offset entry, so lookups stay O(1) without a sparse map.
struct CandidateTable {
    uint64_t num_ranks = 0;
    std::vector<uint32_t> offsets;  // num_ranks + 1 entries
    std::vector<uint32_t> values;   // positions into the candidate vector array

    std::span<const uint32_t> list(uint64_t rank) const {
        return std::span<const uint32_t>(values.data() + offsets[rank],
                                         values.data() + offsets[rank + 1]);
    }

    bool operator==(const CandidateTable&) const = default;
};

// Guards against parameter choices whose tables cannot fit in memory.
inline constexpr uint64_t kCandidateRankCap = uint64_t{1} << 28;
inline constexpr uint64_t kSparseBitmapBitCap = uint64_t{1} << 31;

struct BuildCounters {
    uint64_t filter_probes = 0;
    uint64_t subsets_visited = 0;
    uint64_t values_stored = 0;

    uint64_t total() const { return filter_probes + subsets_visited + values_stored; }
};

// Bit-matrix view of a vector set, chunk-major so that filtering a list of
// vector indices on one coordinate touches contiguous memory.
struct WordMatrix {
    size_t n = 0;
    uint32_t chunks = 0;
    std::vector<uint64_t> w;  // w[chunk * n + i] = words(i)[chunk]

    WordMatrix(std::span<const BitVec> vecs, uint32_t dim) {
        n = vecs.size();
        chunks = static_cast<uint32_t>(BitVec::word_count(dim));
        w.assign(size_t{chunks} * n, 0);
        for (size_t i = 0; i < n; ++i) {
            auto words = vecs[i].words();
            for (uint32_t c = 0; c < chunks; ++c) w[size_t{c} * n + i] = words[c];
        }
    }

    bool bit(uint32_t coord, uint32_t idx) const {
        return (w[size_t{coord >> 6} * n + idx] >> (coord & 63)) & 1u;
    }

    // contiguous word row for one 64-coordinate chunk
    const uint64_t* row(uint32_t coord) const { return w.data() + size_t{coord >> 6} * n; }
};

struct SparseAndCandidates {
    SparseBitmap bitmap;
    CandidateTable table;
};

namespace detail {

struct SubsetBuildState {
    const WordMatrix* full_m = nullptr;
    const WordMatrix* cand_m = nullptr;  // null when candidates == full set
    uint32_t t = 0;
    uint64_t list_cap = UINT64_MAX;
    std::vector<std::vector<uint32_t>> full_lists;
    std::vector<std::vector<uint32_t>> cand_lists;
    std::vector<uint32_t> chosen;  // strictly decreasing coordinates
    std::vector<uint64_t> weight_offset;
    SparseBitmap* bitmap = nullptr;
    CandidateTable* table = nullptr;
    uint64_t next_rank = 0;
    BuildCounters* counters = nullptr;

    uint64_t support_rank(uint32_t size) const {
        // chosen[0] > ... > chosen[size-1]; ascending member i is chosen[size-1-i]
        uint64_t r = 0;
        for (uint32_t i = 0; i < size; ++i) r += binom(chosen[size - 1 - i], i + 1);
        return r;
    }

    void emit(uint32_t depth) {
        if (counters) counters->subsets_visited++;
        if (depth < t) {
            if (!full_lists[depth].empty())
                bitmap->set(weight_offset[depth] + support_rank(depth));
            return;
        }
        // leaf: append this Y_C at its colex rank, back-filling skipped ranks
        uint64_t rank = support_rank(t);
        uint32_t begin = static_cast<uint32_t>(table->values.size());
        for (uint64_t r = next_rank; r <= rank; ++r) table->offsets[r] = begin;
        const auto& list = cand_m ? cand_lists[depth] : full_lists[depth];
        if (list.size() >= list_cap)
            throw std::logic_error("candidate list exceeds the pseudorandomness cap");
        if (table->values.size() + list.size() > UINT32_MAX)
            throw std::overflow_error("candidate table exceeds 2^32 entries");
        table->values.insert(table->values.end(), list.begin(), list.end());
        if (counters) counters->values_stored += list.size();
        next_rank = rank + 1;
    }

    // branchless filter: selecting on a random bit mispredicts half the time
    static void filter_zero_at(const std::vector<uint32_t>& in, std::vector<uint32_t>& out,
                               const uint64_t* row, uint32_t shift) {
        out.clear();
        out.resize(in.size());
        uint32_t* dst = out.data();
        size_t count = 0;
        for (uint32_t idx : in) {
            dst[count] = idx;
            count += 1 - ((row[idx] >> shift) & 1u);
        }
        out.resize(count);
    }

    void descend(uint32_t depth, uint32_t hi) {
        for (uint32_t c = 0; c < hi; ++c) {
            const auto& pf = full_lists[depth];
            auto& nf = full_lists[depth + 1];
            filter_zero_at(pf, nf, full_m->row(c), c & 63);
            if (counters) counters->filter_probes += pf.size();
            if (nf.empty()) continue;  // every deeper bitmap bit is 0, every list empty
            if (cand_m) {
                const auto& pc = cand_lists[depth];
                filter_zero_at(pc, cand_lists[depth + 1], cand_m->row(c), c & 63);
                if (counters) counters->filter_probes += pc.size();
            }
            chosen[depth] = c;
            emit(depth + 1);
            if (depth + 1 < t) descend(depth + 1, c);
        }
    }
};

}  // namespace detail

// Single walk over all coordinate sets of size <= t. Sets of size < t produce
// the sparse-query bitmap bits (answers over `all`); sets of size exactly t
// produce the candidate lists (positions into `cand`). Subtrees whose
// surviving vector list is empty are skipped: their bits and lists stay zero.
inline SparseAndCandidates build_sparse_and_candidates(std::span<const BitVec> all,
                                                       std::span<const BitVec> cand,
                                                       uint32_t d, uint32_t t,
                                                       BuildCounters* counters = nullptr,
                                                       uint64_t list_cap = UINT64_MAX) {
    if (t < 1 || t > d)
        throw std::invalid_argument("build_sparse_and_candidates: need 1 <= t <= d");
    uint64_t bitmap_bits = binom_leq(d, t - 1);
    uint64_t num_ranks = binom(d, t);
    if (bitmap_bits > kSparseBitmapBitCap)
        throw std::invalid_argument("sparse bitmap too large: " + std::to_string(bitmap_bits) +
                                    " bits");
    if (num_ranks > kCandidateRankCap)
        throw std::invalid_argument("candidate table too large: " + std::to_string(num_ranks) +
                                    " lists");

    SparseAndCandidates out;
    out.bitmap.resize(bitmap_bits);
    out.table.num_ranks = num_ranks;
    out.table.offsets.assign(num_ranks + 1, 0);

    bool same = all.data() == cand.data() && all.size() == cand.size();
    WordMatrix full_m(all, d);
    WordMatrix cand_m(same ? std::span<const BitVec>{} : cand, d);

    detail::SubsetBuildState st;
    st.full_m = &full_m;
    st.cand_m = same ? nullptr : &cand_m;
    st.t = t;
    st.list_cap = list_cap;
    st.bitmap = &out.bitmap;
    st.table = &out.table;
    st.counters = counters;
    st.full_lists.resize(t + 1);
    st.cand_lists.resize(same ? 0 : t + 1);
    st.chosen.resize(t);
    st.weight_offset.resize(t);
    for (uint32_t w = 0; w < t; ++w) st.weight_offset[w] = (w == 0) ? 0 : binom_leq(d, w - 1);

    st.full_lists[0].resize(all.size());
    for (size_t i = 0; i < all.size(); ++i) st.full_lists[0][i] = static_cast<uint32_t>(i);
    if (!same) {
        st.cand_lists[0].resize(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) st.cand_lists[0][i] = static_cast<uint32_t>(i);
    }

    st.emit(0);  // the zero-weight query
    st.descend(0, d);

    // ranks past the last visited leaf hold empty lists
    uint32_t end = static_cast<uint32_t>(out.table.values.size());
    for (uint64_t r = st.next_rank; r <= num_ranks; ++r) out.table.offsets[r] = end;
    return out;
}

}  // namespace oov
