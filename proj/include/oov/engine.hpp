#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oov/avgcase.hpp"
#include "oov/oracle.hpp"
#include "oov/serialize.hpp"
#include "oov/worstcase.hpp"

namespace oov {

enum class EngineKind : uint8_t { oracle = 0, avg = 1, worst = 2 };

inline const char* engine_name(EngineKind k) {
    switch (k) {
        case EngineKind::oracle: return "oracle";
        case EngineKind::avg: return "avg";
        case EngineKind::worst: return "worst";
    }
    return "?";
}

inline EngineKind parse_engine(const std::string& name) {
    if (name == "oracle") return EngineKind::oracle;
    if (name == "avg") return EngineKind::avg;
    if (name == "worst") return EngineKind::worst;
    throw std::invalid_argument("unknown engine '" + name + "' (expected oracle, avg or worst)");
}

struct EngineConfig {
    EngineKind kind = EngineKind::oracle;
    uint32_t t = 0;  // avg
    uint32_t i = 0;  // worst
};

namespace detail {

inline void write_bitvec_words(ByteWriter& w, const BitVec& v) { w.u64_span(v.words()); }

inline BitVec read_bitvec_words(ByteReader& r, uint32_t dim) {
    auto words = r.u64_vec(BitVec::word_count(dim));
    BitVec v(dim);
    for (uint32_t j = 0; j < dim; ++j)
        if ((words[j >> 6] >> (j & 63)) & 1) v.set(j);
    return v;
}

inline void write_sparse_bitmap(ByteWriter& w, const SparseBitmap& b) {
    w.u64(b.num_bits);
    w.u64_span(b.words);
}

inline SparseBitmap read_sparse_bitmap(ByteReader& r) {
    SparseBitmap b;
    b.num_bits = r.u64();
    if (b.num_bits > kSparseBitmapBitCap) throw std::runtime_error("container: bitmap too large");
    b.words = r.u64_vec((b.num_bits + 63) / 64);
    return b;
}

inline void write_candidate_table(ByteWriter& w, const CandidateTable& t) {
    w.u64(t.num_ranks);
    w.u64(t.values.size());
    w.u32_span(t.offsets);
    w.u32_span(t.values);
}

inline CandidateTable read_candidate_table(ByteReader& r) {
    CandidateTable t;
    t.num_ranks = r.u64();
    if (t.num_ranks > kCandidateRankCap) throw std::runtime_error("container: table too large");
    uint64_t value_count = r.u64();
    t.offsets = r.u32_vec(t.num_ranks + 1);
    t.values = r.u32_vec(value_count);
    for (size_t i = 0; i + 1 < t.offsets.size(); ++i)
        if (t.offsets[i] > t.offsets[i + 1])
            throw std::runtime_error("container: non-monotone table offsets");
    if (t.offsets.empty() || t.offsets.back() != t.values.size())
        throw std::runtime_error("container: table offsets do not cover the values");
    return t;
}

inline void write_worst_node(ByteWriter& w, const WorstNode& node) {
    w.u8(static_cast<uint8_t>(node.kind));
    w.u32(node.dim);
    switch (node.kind) {
        case WorstNode::Kind::leaf:
            write_bitvec_words(w, node.vector);
            return;
        case WorstNode::Kind::dense:
            w.u64_span(node.bitmap.words);
            return;
        case WorstNode::Kind::internal:
            break;
    }
    w.u32(node.level);
    w.u32(node.t);
    w.u64(node.m);
    w.u32(static_cast<uint32_t>(node.residual.size()));
    for (const BitVec& v : node.residual) write_bitvec_words(w, v);
    write_sparse_bitmap(w, node.sparse_bitmap);
    write_candidate_table(w, node.candidates);
    w.u32(static_cast<uint32_t>(node.children.size()));
    for (const auto& child : node.children) {
        w.u32(child.zero_set.size());
        w.u32_span(child.zero_set.members());
        write_worst_node(w, *child.node);
    }
}

inline std::unique_ptr<WorstNode> read_worst_node(ByteReader& r) {
    auto node = std::make_unique<WorstNode>();
    uint8_t kind = r.u8();
    if (kind > 2) throw std::runtime_error("container: bad node kind");
    node->kind = static_cast<WorstNode::Kind>(kind);
    node->dim = r.u32();
    switch (node->kind) {
        case WorstNode::Kind::leaf:
            node->vector = read_bitvec_words(r, node->dim);
            return node;
        case WorstNode::Kind::dense: {
            if (node->dim > kDenseDimCap) throw std::runtime_error("container: dense node too wide");
            node->bitmap.dim = node->dim;
            uint64_t total = uint64_t{1} << node->dim;
            node->bitmap.words = r.u64_vec((total + 63) / 64);
            return node;
        }
        case WorstNode::Kind::internal:
            break;
    }
    node->level = r.u32();
    node->t = r.u32();
    node->m = r.u64();
    uint32_t residual_count = r.u32();
    node->residual.reserve(residual_count);
    for (uint32_t i = 0; i < residual_count; ++i)
        node->residual.push_back(read_bitvec_words(r, node->dim));
    node->sparse_bitmap = read_sparse_bitmap(r);
    node->candidates = read_candidate_table(r);
    uint32_t child_count = r.u32();
    node->children.reserve(child_count);
    for (uint32_t c = 0; c < child_count; ++c) {
        uint32_t zs_size = r.u32();
        auto members = r.u32_vec(zs_size);
        CoordSet zero_set(node->dim, std::move(members));
        node->children.push_back(WorstNode::Child{std::move(zero_set), read_worst_node(r)});
    }
    return node;
}

}  // namespace detail

// One built structure of any engine kind, with bit-exact (de)serialization.
class Engine {
public:
    static Engine build(OVInstance x, const EngineConfig& cfg, BuildStats* bs = nullptr) {
        Engine e;
        e.cfg_ = cfg;
        e.dim_ = x.dim;
        switch (cfg.kind) {
            case EngineKind::oracle: {
                uint64_t probes = 0;
                e.oracle_ = build_full_bitmap(x, &probes);
                if (bs) bs->dense_probes += probes;
                break;
            }
            case EngineKind::avg: {
                BuildCounters counters;
                e.avg_ = avg_build(std::move(x), cfg.t, &counters);
                if (bs) {
                    bs->filter_probes += counters.filter_probes;
                    bs->subsets_visited += counters.subsets_visited;
                    bs->values_stored += counters.values_stored;
                }
                break;
            }
            case EngineKind::worst:
                e.worst_ = ov_pre(std::move(x), cfg.i, bs);
                break;
        }
        return e;
    }

    bool query(const BitVec& q, QueryStats* stats = nullptr, bool short_circuit = true) const {
        switch (cfg_.kind) {
            case EngineKind::oracle:
                if (stats) stats->bitmap_lookups++;
                return query_full_bitmap(oracle_, q);
            case EngineKind::avg:
                return avg_.query(q, stats);
            case EngineKind::worst:
                return ov_onl(*worst_, q, stats, short_circuit);
        }
        return false;
    }

    EngineKind kind() const { return cfg_.kind; }
    const EngineConfig& config() const { return cfg_; }
    uint32_t dim() const { return dim_; }
    const WorstNode& worst_root() const { return *worst_; }
    const AvgStructure& avg_structure() const { return avg_; }

    uint64_t accounted_bits() const {
        switch (cfg_.kind) {
            case EngineKind::oracle: return uint64_t{1} << dim_;
            case EngineKind::avg: return avg_.accounted_bits;
            case EngineKind::worst: return space_account(*worst_).accounted_bits;
        }
        return 0;
    }

    // container: magic, version, engine tag, parameter block, payload, crc64
    std::vector<uint8_t> serialize() const {
        ByteWriter payload;
        switch (cfg_.kind) {
            case EngineKind::oracle:
                payload.u32(oracle_.dim);
                payload.u64_span(oracle_.words);
                break;
            case EngineKind::avg: {
                payload.u32(avg_.dim);
                payload.u32(avg_.t);
                payload.u32(avg_.instance->n());
                for (const BitVec& v : avg_.instance->vectors)
                    detail::write_bitvec_words(payload, v);
                detail::write_sparse_bitmap(payload, avg_.sparse_bitmap);
                detail::write_candidate_table(payload, avg_.candidates);
                break;
            }
            case EngineKind::worst:
                detail::write_worst_node(payload, *worst_);
                break;
        }
        ByteWriter out;
        out.u8('O');
        out.u8('O');
        out.u8('V');
        out.u8('S');
        out.u8(kFormatVersion);
        out.u8(static_cast<uint8_t>(cfg_.kind));
        switch (cfg_.kind) {
            case EngineKind::oracle: break;
            case EngineKind::avg: out.u32(cfg_.t); break;
            case EngineKind::worst: out.u32(cfg_.i); break;
        }
        out.u64(payload.bytes.size());
        out.bytes.insert(out.bytes.end(), payload.bytes.begin(), payload.bytes.end());
        out.u64(crc64(payload.bytes));
        return out.bytes;
    }

    static Engine deserialize(std::span<const uint8_t> bytes) {
        ByteReader r{bytes};
        if (r.u8() != 'O' || r.u8() != 'O' || r.u8() != 'V' || r.u8() != 'S')
            throw std::runtime_error("container: bad magic");
        uint8_t version = r.u8();
        if (version != kFormatVersion)
            throw std::runtime_error("container: unsupported version " + std::to_string(version));
        uint8_t tag = r.u8();
        if (tag > 2) throw std::runtime_error("container: bad engine tag");
        Engine e;
        e.cfg_.kind = static_cast<EngineKind>(tag);
        switch (e.cfg_.kind) {
            case EngineKind::oracle: break;
            case EngineKind::avg: e.cfg_.t = r.u32(); break;
            case EngineKind::worst: e.cfg_.i = r.u32(); break;
        }
        uint64_t payload_size = r.u64();
        r.need(payload_size);
        std::span<const uint8_t> payload = bytes.subspan(r.pos, payload_size);
        r.pos += payload_size;
        uint64_t expect = r.u64();
        if (!r.done()) throw std::runtime_error("container: trailing bytes");
        if (crc64(payload) != expect) throw std::runtime_error("container: checksum mismatch");

        ByteReader pr{payload};
        switch (e.cfg_.kind) {
            case EngineKind::oracle: {
                e.oracle_.dim = pr.u32();
                if (e.oracle_.dim > kDenseDimCap)
                    throw std::runtime_error("container: oracle bitmap too wide");
                uint64_t total = uint64_t{1} << e.oracle_.dim;
                e.oracle_.words = pr.u64_vec((total + 63) / 64);
                e.dim_ = e.oracle_.dim;
                break;
            }
            case EngineKind::avg: {
                e.avg_.dim = pr.u32();
                e.avg_.t = pr.u32();
                uint32_t n = pr.u32();
                std::vector<BitVec> vecs;
                vecs.reserve(n);
                for (uint32_t i = 0; i < n; ++i)
                    vecs.push_back(detail::read_bitvec_words(pr, e.avg_.dim));
                e.avg_.instance =
                    std::make_shared<const OVInstance>(e.avg_.dim, std::move(vecs));
                e.avg_.sparse_bitmap = detail::read_sparse_bitmap(pr);
                e.avg_.candidates = detail::read_candidate_table(pr);
                e.avg_.accounted_bits = e.avg_.sparse_bitmap.num_bits +
                                        uint64_t{e.avg_.dim} * e.avg_.candidates.values.size();
                e.dim_ = e.avg_.dim;
                break;
            }
            case EngineKind::worst: {
                e.worst_ = detail::read_worst_node(pr);
                e.dim_ = e.worst_->dim;
                break;
            }
        }
        if (!pr.done()) throw std::runtime_error("container: trailing payload bytes");
        return e;
    }

    static constexpr uint8_t kFormatVersion = 1;

private:
    EngineConfig cfg_;
    uint32_t dim_ = 0;
    FullBitmap oracle_;
    AvgStructure avg_;
    std::shared_ptr<WorstNode> worst_;
};

}  // namespace oov
