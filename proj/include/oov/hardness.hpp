#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "oov/binomial.hpp"
#include "oov/bits.hpp"
#include "oov/instance.hpp"
#include "oov/partition.hpp"

namespace oov {

// ---------------------------------------------------------------------------
// k-CNF formulas and a brute-force satisfiability oracle
// ---------------------------------------------------------------------------

struct CNFLiteral {
    uint32_t var;
    bool negated;
};

struct Cnf {
    uint32_t var_count = 0;
    uint32_t width = 0;  // largest clause size
    std::vector<std::vector<CNFLiteral>> clauses;

    Cnf() = default;
    Cnf(uint32_t vars, std::vector<std::vector<CNFLiteral>> cls)
        : var_count(vars), clauses(std::move(cls)) {
        for (const auto& clause : clauses) {
            for (const CNFLiteral& lit : clause)
                if (lit.var >= var_count)
                    throw std::invalid_argument("Cnf: variable index out of range");
            if (clause.size() > width) width = static_cast<uint32_t>(clause.size());
        }
    }

    bool clause_satisfied(size_t ci, uint64_t assignment) const {
        for (const CNFLiteral& lit : clauses[ci]) {
            bool value = (assignment >> lit.var) & 1;
            if (value != lit.negated) return true;
        }
        return false;
    }

    bool satisfied_by(uint64_t assignment) const {
        for (size_t ci = 0; ci < clauses.size(); ++ci)
            if (!clause_satisfied(ci, assignment)) return false;
        return true;
    }
};

// DIMACS-like input: optional 'c' comment lines, a 'p cnf <vars> <clauses>'
// header, then 1-based signed literals terminated by 0.
inline Cnf parse_cnf(std::istream& in) {
    std::string line;
    uint32_t vars = 0;
    bool have_header = false;
    std::vector<std::vector<CNFLiteral>> clauses;
    std::vector<CNFLiteral> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, kind;
            uint64_t nv = 0, nc = 0;
            if (!(hs >> p >> kind >> nv >> nc) || kind != "cnf")
                throw std::runtime_error("cnf: bad header line: " + line);
            vars = static_cast<uint32_t>(nv);
            have_header = true;
            continue;
        }
        std::istringstream ls(line);
        long long lit;
        while (ls >> lit) {
            if (lit == 0) {
                clauses.push_back(current);
                current.clear();
            } else {
                uint64_t v = static_cast<uint64_t>(lit > 0 ? lit : -lit) - 1;
                current.push_back(CNFLiteral{static_cast<uint32_t>(v), lit < 0});
            }
        }
    }
    if (!have_header) throw std::runtime_error("cnf: missing 'p cnf' header");
    if (!current.empty()) clauses.push_back(current);
    return Cnf(vars, std::move(clauses));
}

// Exhaustive satisfiability check; intended for small variable counts.
inline bool sat_oracle(const Cnf& phi) {
    if (phi.var_count > 24)
        throw std::invalid_argument("sat_oracle: variable count above the desk cap of 24");
    uint64_t total = uint64_t{1} << phi.var_count;
    for (uint64_t a = 0; a < total; ++a)
        if (phi.satisfied_by(a)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// The fixed formula-independent instance whose orthogonality queries decide
// satisfiability of every width-k CNF on n variables
// ---------------------------------------------------------------------------

struct CoordLabel {
    std::span<const uint32_t> blocks;  // size-k block indices, ascending
    uint64_t mu;                       // assignment to those blocks' variables
};

struct HardInstance {
    uint32_t n = 0;      // variable count; N = 2^n input vectors
    uint32_t k = 0;      // clause width
    Rational delta;      // theta = k / delta
    uint32_t theta = 0;  // number of variable blocks
    uint32_t block_size = 0;  // n / theta
    uint64_t mu_count = 0;    // assignments per block set: 2^(k * block_size)
    uint64_t w = 0;           // sparsity: binom(theta, k)
    uint64_t dim = 0;         // w * mu_count
    std::vector<std::vector<uint32_t>> block_sets;  // colex-ordered size-k block sets
    std::vector<BitVec> vectors;  // index = assignment, LSB = variable 0

    // coordinate index -> its (B, mu_B) pair; mu_B packs the variables of B's
    // blocks ascending, lowest variable in the least significant bit
    CoordLabel label(uint64_t coord) const {
        return CoordLabel{block_sets[coord / mu_count], coord % mu_count};
    }

    OVInstance instance() const { return OVInstance(static_cast<uint32_t>(dim), vectors); }
};

inline constexpr uint32_t kHardestVarCap = 16;

// Coordinates are (B, mu_B) pairs: B runs over size-k block-index sets in
// colex order, mu_B over block-variable assignments as integers with the
// lowest variable in the least significant bit. The vector of assignment mu
// sets (B, mu_B) exactly when mu_B agrees with mu on B's variables, so every
// vector has exactly binom(theta, k) ones.
inline HardInstance build_hardest_instance(uint32_t n, uint32_t k, const Rational& delta,
                                           uint32_t var_cap = kHardestVarCap) {
    if (delta.num == 0 || delta.num > delta.den)
        throw std::invalid_argument("build_hardest_instance: delta must be in (0, 1]");
    uint64_t theta_num = uint64_t{k} * delta.den;
    if (theta_num % delta.num != 0)
        throw std::invalid_argument("build_hardest_instance: k/delta = " +
                                    std::to_string(k) + "*" + std::to_string(delta.den) + "/" +
                                    std::to_string(delta.num) + " is not an integer");
    uint64_t theta = theta_num / delta.num;
    if (theta < k)
        throw std::invalid_argument("build_hardest_instance: need k/delta >= k");
    if (n == 0 || n % theta != 0)
        throw std::invalid_argument("build_hardest_instance: theta = " + std::to_string(theta) +
                                    " must divide n = " + std::to_string(n));
    if (n > var_cap)
        throw std::invalid_argument("build_hardest_instance: n = " + std::to_string(n) +
                                    " above the desk cap of " + std::to_string(var_cap));

    HardInstance h;
    h.n = n;
    h.k = k;
    h.delta = delta;
    h.theta = static_cast<uint32_t>(theta);
    h.block_size = n / h.theta;
    h.mu_count = uint64_t{1} << (uint64_t{k} * h.block_size);
    h.w = binom(h.theta, k);
    h.dim = h.w * h.mu_count;
    if (h.dim > (uint64_t{1} << 24))
        throw std::invalid_argument("build_hardest_instance: dimension too large");

    // ascending variables of each block set, reused across assignments
    std::vector<std::vector<uint32_t>> block_vars;
    for_each_subset_colex(h.theta, k, [&](std::span<const uint32_t> blocks) {
        h.block_sets.emplace_back(blocks.begin(), blocks.end());
        std::vector<uint32_t> vars;
        vars.reserve(size_t{k} * h.block_size);
        for (uint32_t b : blocks)
            for (uint32_t v = b * h.block_size; v < (b + 1) * h.block_size; ++v)
                vars.push_back(v);
        block_vars.push_back(std::move(vars));
    });

    uint64_t total = uint64_t{1} << n;
    h.vectors.reserve(total);
    for (uint64_t mu = 0; mu < total; ++mu) {
        BitVec v(static_cast<uint32_t>(h.dim));
        for (uint64_t rank_b = 0; rank_b < h.w; ++rank_b) {
            const auto& vars = block_vars[rank_b];
            uint64_t mu_b = 0;
            for (size_t pos = 0; pos < vars.size(); ++pos)
                if ((mu >> vars[pos]) & 1) mu_b |= uint64_t{1} << pos;
            v.set(static_cast<uint32_t>(rank_b * h.mu_count + mu_b));
        }
        h.vectors.push_back(std::move(v));
    }
    return h;
}

// Query vector for a CNF: coordinate (B, mu_B) is 0 iff every clause whose
// padded block neighborhood is B is satisfied by mu_B. Clauses touching fewer
// than k blocks are padded with the lowest-index blocks not already present.
inline BitVec encode_cnf_query(const HardInstance& h, const Cnf& phi) {
    if (phi.var_count != h.n)
        throw std::invalid_argument("encode_cnf_query: formula has " +
                                    std::to_string(phi.var_count) + " variables, instance has " +
                                    std::to_string(h.n));
    if (phi.width > h.k)
        throw std::invalid_argument("encode_cnf_query: clause width " +
                                    std::to_string(phi.width) + " exceeds k = " +
                                    std::to_string(h.k));

    // group clauses by padded neighborhood rank
    std::map<uint64_t, std::vector<size_t>> groups;
    for (size_t ci = 0; ci < phi.clauses.size(); ++ci) {
        std::vector<char> present(h.theta, 0);
        uint32_t count = 0;
        for (const CNFLiteral& lit : phi.clauses[ci]) {
            uint32_t b = lit.var / h.block_size;
            if (!present[b]) {
                present[b] = 1;
                ++count;
            }
        }
        for (uint32_t b = 0; count < h.k; ++b) {
            if (!present[b]) {
                present[b] = 1;
                ++count;
            }
        }
        std::vector<uint32_t> blocks;
        for (uint32_t b = 0; b < h.theta; ++b)
            if (present[b]) blocks.push_back(b);
        groups[rank_subset(blocks)].push_back(ci);
    }

    BitVec q(static_cast<uint32_t>(h.dim));
    for (const auto& [rank_b, clause_ids] : groups) {
        CoordSet blocks = unrank_subset(rank_b, h.theta, h.k);
        std::vector<uint32_t> vars;
        vars.reserve(size_t{h.k} * h.block_size);
        for (uint32_t b : blocks.members())
            for (uint32_t v = b * h.block_size; v < (b + 1) * h.block_size; ++v)
                vars.push_back(v);
        for (uint64_t mu_b = 0; mu_b < h.mu_count; ++mu_b) {
            // spread mu_b onto the full variable set, then test each clause
            uint64_t assignment = 0;
            for (size_t pos = 0; pos < vars.size(); ++pos)
                if ((mu_b >> pos) & 1) assignment |= uint64_t{1} << vars[pos];
            bool all_satisfied = true;
            for (size_t ci : clause_ids) {
                if (!phi.clause_satisfied(ci, assignment)) {
                    all_satisfied = false;
                    break;
                }
            }
            if (!all_satisfied) q.set(static_cast<uint32_t>(rank_b * h.mu_count + mu_b));
        }
    }
    return q;
}

// ---------------------------------------------------------------------------
// Directed graphs, the all-simple-paths table, and the Hamiltonian path
// reduction to kSUM with preprocessing
// ---------------------------------------------------------------------------

struct Digraph {
    uint32_t vertex_count = 0;
    std::vector<uint64_t> out_mask;  // out_mask[u] bit v <=> edge (u, v)
    std::vector<uint64_t> in_mask;   // in_mask[v] bit u <=> edge (u, v)

    explicit Digraph(uint32_t n = 0)
        : vertex_count(n), out_mask(n, 0), in_mask(n, 0) {
        if (n > 63) throw std::invalid_argument("Digraph: vertex count above 63");
    }

    void add_edge(uint32_t u, uint32_t v) {
        if (u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("Digraph: vertex out of range");
        out_mask[u] |= uint64_t{1} << v;
        in_mask[v] |= uint64_t{1} << u;
    }

    bool has_edge(uint32_t u, uint32_t v) const { return (out_mask[u] >> v) & 1; }

    uint64_t edge_count() const {
        uint64_t c = 0;
        for (uint64_t m : out_mask) c += static_cast<uint64_t>(std::popcount(m));
        return c;
    }
};

// Edge list, one "u v" pair per line, 0-based; an optional leading line
// "n <count>" pins the vertex count (needed for isolated vertices).
inline Digraph parse_digraph(std::istream& in) {
    std::string line;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    uint32_t declared = 0;
    uint32_t max_seen = 0;
    bool any = false;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (first && line[0] == 'n') {
            std::string tag;
            uint64_t count = 0;
            if ((ls >> tag >> count) && tag == "n") {
                declared = static_cast<uint32_t>(count);
                first = false;
                continue;
            }
            ls.clear();
            ls.seekg(0);
        }
        first = false;
        uint64_t u, v;
        if (!(ls >> u >> v)) throw std::runtime_error("digraph: bad edge line: " + line);
        edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
        max_seen = std::max({max_seen, static_cast<uint32_t>(u + 1), static_cast<uint32_t>(v + 1)});
        any = true;
    }
    uint32_t n = declared ? declared : max_seen;
    if (!any && declared == 0) throw std::runtime_error("digraph: empty input and no 'n' line");
    Digraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Appends a path of (k - n mod k) fresh vertices and an edge from every
// original vertex to the path head; Hamiltonian-path equivalent to the input.
inline Digraph pad_graph_for_k(const Digraph& g, uint32_t k) {
    uint32_t r = g.vertex_count % k;
    if (r == 0) return g;
    uint32_t extra = k - r;
    Digraph padded(g.vertex_count + extra);
    for (uint32_t u = 0; u < g.vertex_count; ++u)
        for (uint32_t v = 0; v < g.vertex_count; ++v)
            if (g.has_edge(u, v)) padded.add_edge(u, v);
    uint32_t head = g.vertex_count;
    for (uint32_t u = 0; u < g.vertex_count; ++u) padded.add_edge(u, head);
    for (uint32_t j = 0; j + 1 < extra; ++j) padded.add_edge(head + j, head + j + 1);
    return padded;
}

inline constexpr uint32_t kPathTableVertexCap = 12;

// D[S, u, v] = 1 iff a simple path starts at u, uses exactly the vertices of
// S, and ends at v. Stored as an end-vertex bitmask per (S, u).
struct PathTable {
    uint32_t n = 0;
    uint32_t len = 0;
    std::vector<uint64_t> ends_;  // ends_[mask * n + u]
    uint64_t entries_touched = 0;

    uint64_t ends(uint32_t mask, uint32_t u) const { return ends_[size_t{mask} * n + u]; }
};

inline PathTable simple_paths_dp(const Digraph& g, uint32_t len) {
    if (g.vertex_count > kPathTableVertexCap)
        throw std::invalid_argument("simple_paths_dp: vertex count above the desk cap of " +
                                    std::to_string(kPathTableVertexCap));
    if (len > g.vertex_count)
        throw std::invalid_argument("simple_paths_dp: len exceeds vertex count");
    PathTable table;
    table.n = g.vertex_count;
    table.len = len;
    uint32_t n = g.vertex_count;
    table.ends_.assign((size_t{1} << n) * n, 0);
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        uint32_t size = static_cast<uint32_t>(std::popcount(mask));
        if (size > len) continue;
        for (uint32_t u = 0; u < n; ++u) {
            if (!((mask >> u) & 1)) continue;
            if (size == 1) {
                table.ends_[size_t{mask} * n + u] = uint64_t{1} << u;
                table.entries_touched++;
                continue;
            }
            uint64_t ends = 0;
            for (uint32_t v = 0; v < n; ++v) {
                if (v == u || !((mask >> v) & 1)) continue;
                table.entries_touched++;
                uint64_t prev = table.ends_[size_t{mask ^ (uint32_t{1} << v)} * n + u];
                if (prev & g.in_mask[v]) ends |= uint64_t{1} << v;
            }
            table.ends_[size_t{mask} * n + u] = ends;
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// kSUM with preprocessing
// ---------------------------------------------------------------------------

struct KSumInstance {
    uint32_t k = 0;
    std::vector<std::vector<uint64_t>> lists;  // k lists of N values each
};

struct KSumQuery {
    std::vector<std::vector<char>> masks;  // k membership masks over [0, N)
};

// All size-(n/k) vertex sets as masks, ascending integer value (= colex).
inline std::vector<uint32_t> vertex_set_masks(uint32_t n, uint32_t size) {
    std::vector<uint32_t> masks;
    for_each_subset_colex(n, size, [&](std::span<const uint32_t> members) {
        uint32_t m = 0;
        for (uint32_t v : members) m |= uint32_t{1} << v;
        masks.push_back(m);
    });
    return masks;
}

// Int(S) places vertex 0 at the least significant bit. Lists 1..k-1 hold
// Int(S); list k holds 2^n - 1 - Int(S). The instance depends only on (n, k).
inline KSumInstance hampath_reduction_build(uint32_t n, uint32_t k) {
    if (k < 2) throw std::invalid_argument("hampath_reduction_build: need k >= 2");
    if (n == 0 || n % k != 0)
        throw std::invalid_argument("hampath_reduction_build: k must divide n (pad the graph first)");
    if (n > 12)
        throw std::invalid_argument("hampath_reduction_build: n above the desk cap of 12");
    auto masks = vertex_set_masks(n, n / k);
    KSumInstance inst;
    inst.k = k;
    inst.lists.assign(k, {});
    uint64_t full = (uint64_t{1} << n) - 1;
    for (uint32_t i = 0; i + 1 < k; ++i) {
        inst.lists[i].reserve(masks.size());
        for (uint32_t m : masks) inst.lists[i].push_back(m);
    }
    inst.lists[k - 1].reserve(masks.size());
    for (uint32_t m : masks) inst.lists[k - 1].push_back(full - m);
    return inst;
}

// One query per tuple (v_1, ..., v_{k+1}) in [n]^{k+1}. Mask i selects the
// sets S with v_i in S and a simple path from v_i through all of S ending at
// an in-neighbor of v_{i+1}. For the final segment the endpoint's adjacency
// may go either way: that edge is not part of the assembled path, and a
// Hamiltonian path ending at a vertex with no out-edge must still be found.
inline std::vector<KSumQuery> hampath_reduction_queries(const Digraph& g, uint32_t k,
                                                        const PathTable& table) {
    uint32_t n = g.vertex_count;
    if (k < 2 || n % k != 0)
        throw std::invalid_argument("hampath_reduction_queries: k must divide n");
    if (table.len != n / k)
        throw std::invalid_argument("hampath_reduction_queries: table built with wrong length");
    auto masks = vertex_set_masks(n, n / k);
    size_t count = masks.size();

    // selected[u][v][s] for middle segments; selected_last for the k-th
    auto flag_table = [&](bool last) {
        std::vector<char> f(size_t{n} * n * count, 0);
        for (uint32_t u = 0; u < n; ++u)
            for (size_t s = 0; s < count; ++s) {
                uint32_t mask = masks[s];
                if (!((mask >> u) & 1)) continue;
                uint64_t ends = table.ends(mask, u);
                if (!ends) continue;
                for (uint32_t v = 0; v < n; ++v) {
                    uint64_t adjacent = g.in_mask[v];
                    if (last) adjacent |= g.out_mask[v];
                    if (ends & adjacent) f[(size_t{u} * n + v) * count + s] = 1;
                }
            }
        return f;
    };
    std::vector<char> mid = flag_table(false);
    std::vector<char> fin = flag_table(true);

    std::vector<KSumQuery> queries;
    std::vector<uint32_t> tuple(k + 1, 0);
    while (true) {
        KSumQuery q;
        q.masks.resize(k);
        for (uint32_t i = 0; i < k; ++i) {
            const std::vector<char>& f = (i + 1 == k) ? fin : mid;
            size_t base = (size_t{tuple[i]} * n + tuple[i + 1]) * count;
            q.masks[i].assign(f.begin() + base, f.begin() + base + count);
        }
        queries.push_back(std::move(q));
        // next tuple, odometer order
        uint32_t pos = k + 1;
        while (pos > 0) {
            if (++tuple[pos - 1] < n) break;
            tuple[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return queries;
}

// Meet in the middle: hash the partial sums of the first ceil((k-1)/2)
// selected lists, then enumerate the remainder against the target list.
inline bool ksum_query_solve(const KSumInstance& inst, const KSumQuery& query) {
    uint32_t k = inst.k;
    if (query.masks.size() != k)
        throw std::invalid_argument("ksum_query_solve: mask count mismatch");
    std::vector<std::vector<uint64_t>> selected(k);
    for (uint32_t i = 0; i < k; ++i) {
        if (query.masks[i].size() != inst.lists[i].size())
            throw std::invalid_argument("ksum_query_solve: mask length mismatch");
        for (size_t s = 0; s < inst.lists[i].size(); ++s)
            if (query.masks[i][s]) selected[i].push_back(inst.lists[i][s]);
        if (selected[i].empty()) return false;
    }

    uint32_t h = (k - 1 + 1) / 2;  // ceil((k-1)/2)
    std::unordered_set<uint64_t> left_sums;
    std::vector<uint64_t> stack;
    auto enumerate_left = [&](auto&& self, uint32_t list_idx, uint64_t sum) -> void {
        if (list_idx == h) {
            left_sums.insert(sum);
            return;
        }
        for (uint64_t v : selected[list_idx]) self(self, list_idx + 1, sum + v);
    };
    enumerate_left(enumerate_left, 0, 0);

    bool found = false;
    auto enumerate_right = [&](auto&& self, uint32_t list_idx, uint64_t sum) -> void {
        if (found) return;
        if (list_idx == k - 1) {
            for (uint64_t target : selected[k - 1]) {
                if (target < sum) continue;
                if (left_sums.count(target - sum)) {
                    found = true;
                    return;
                }
            }
            return;
        }
        for (uint64_t v : selected[list_idx]) {
            self(self, list_idx + 1, sum + v);
            if (found) return;
        }
    };
    enumerate_right(enumerate_right, h, 0);
    return found;
}

// Exhaustive Hamiltonian path check via subset DP.
inline bool hampath_oracle(const Digraph& g) {
    uint32_t n = g.vertex_count;
    if (n == 0) throw std::invalid_argument("hampath_oracle: empty graph");
    if (n > 16) throw std::invalid_argument("hampath_oracle: vertex count above the desk cap of 16");
    if (n == 1) return true;
    std::vector<uint64_t> reach(size_t{1} << n, 0);  // reach[mask] = possible end vertices
    for (uint32_t v = 0; v < n; ++v) reach[uint64_t{1} << v] = uint64_t{1} << v;
    uint32_t full = (uint32_t{1} << n) - 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        uint64_t ends = reach[mask];
        if (!ends) continue;
        for (uint32_t v = 0; v < n; ++v) {
            if ((mask >> v) & 1) continue;
            if (ends & g.in_mask[v]) reach[mask | (uint32_t{1} << v)] |= uint64_t{1} << v;
        }
    }
    return reach[full] != 0;
}

}  // namespace oov
