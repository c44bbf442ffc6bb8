#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "oov/hardness.hpp"
#include "oov/instance.hpp"
#include "oov/oracle.hpp"
#include "oov/worstcase.hpp"

using namespace oov;

namespace {

Cnf random_cnf(uint32_t vars, uint32_t k, uint32_t clause_count, uint64_t seed) {
    std::vector<std::vector<CNFLiteral>> clauses;
    for (uint32_t c = 0; c < clause_count; ++c) {
        std::vector<uint32_t> used;
        std::vector<CNFLiteral> clause;
        uint32_t width = 1 + static_cast<uint32_t>(splitmix64_at(seed, c * 97) % k);
        while (clause.size() < width) {
            uint32_t v = static_cast<uint32_t>(
                splitmix64_at(seed, c * 97 + 13 * clause.size() + 1) % vars);
            if (std::find(used.begin(), used.end(), v) != used.end()) {
                v = (v + 1) % vars;
                if (std::find(used.begin(), used.end(), v) != used.end()) break;
            }
            used.push_back(v);
            bool neg = splitmix64_at(seed, c * 97 + 13 * clause.size() + 2) & 1;
            clause.push_back(CNFLiteral{v, neg});
        }
        clauses.push_back(std::move(clause));
    }
    return Cnf(vars, std::move(clauses));
}

bool instance_decides(const HardInstance& h, const Cnf& phi) {
    BitVec q = encode_cnf_query(h, phi);
    for (const BitVec& v : h.vectors)
        if (is_orthogonal(v, q)) return true;
    return false;
}

Digraph random_digraph(uint32_t n, uint64_t seed) {
    Digraph g(n);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = 0; v < n; ++v)
            if (u != v && (splitmix64_at(seed, u * 64 + v) & 1)) g.add_edge(u, v);
    return g;
}

bool reduction_answer(const Digraph& g, uint32_t k) {
    PathTable table = simple_paths_dp(g, g.vertex_count / k);
    KSumInstance inst = hampath_reduction_build(g.vertex_count, k);
    for (const KSumQuery& q : hampath_reduction_queries(g, k, table))
        if (ksum_query_solve(inst, q)) return true;
    return false;
}

// factorial-time reference for the DP table
bool path_exists_brute(const Digraph& g, uint32_t mask, uint32_t u, uint32_t v) {
    std::vector<uint32_t> vertices;
    for (uint32_t w = 0; w < g.vertex_count; ++w)
        if ((mask >> w) & 1) vertices.push_back(w);
    std::sort(vertices.begin(), vertices.end());
    do {
        if (vertices.front() != u || vertices.back() != v) continue;
        bool ok = true;
        for (size_t i = 0; i + 1 < vertices.size(); ++i)
            if (!g.has_edge(vertices[i], vertices[i + 1])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(vertices.begin(), vertices.end()));
    return false;
}

}  // namespace

TEST_CASE("hardest instance shape") {
    HardInstance h = build_hardest_instance(4, 2, Rational(1, 2));
    CHECK(h.theta == 4);
    CHECK(h.w == 6);
    CHECK(h.dim == 24);
    CHECK(h.vectors.size() == 16);
    for (const BitVec& v : h.vectors) CHECK(v.popcount() == h.w);

    HardInstance h2 = build_hardest_instance(6, 3, Rational(1, 2));
    CHECK(h2.theta == 6);
    CHECK(h2.w == 20);
    CHECK(h2.dim == 160);
    CHECK(h2.vectors.size() == 64);
    for (const BitVec& v : h2.vectors) CHECK(v.popcount() == h2.w);

    CHECK_THROWS_AS(build_hardest_instance(5, 2, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(build_hardest_instance(4, 3, Rational(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(build_hardest_instance(4, 2, Rational(3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(build_hardest_instance(32, 2, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("hardness contract errors") {
    HardInstance h = build_hardest_instance(4, 2, Rational(1, 2));
    Cnf wide(4, {{{0, false}, {1, false}, {2, false}}});  // width 3 > k = 2
    CHECK_THROWS_AS(encode_cnf_query(h, wide), std::invalid_argument);
    Cnf wrong_vars(6, {{{0, false}}});
    CHECK_THROWS_AS(encode_cnf_query(h, wrong_vars), std::invalid_argument);
    CHECK_THROWS_AS(sat_oracle(Cnf(25, {})), std::invalid_argument);
    CHECK_THROWS_AS(hampath_reduction_build(7, 3), std::invalid_argument);
}

TEST_CASE("coordinate labels match the vector bits") {
    HardInstance h = build_hardest_instance(6, 3, Rational(1, 2));
    REQUIRE(h.block_sets.size() == h.w);
    for (uint64_t mu : {uint64_t{0}, uint64_t{23}, uint64_t{63}}) {
        const BitVec& v = h.vectors[mu];
        for (uint64_t coord = 0; coord < h.dim; ++coord) {
            CoordLabel lab = h.label(coord);
            // bit set iff mu restricted to the label's blocks equals mu_B
            uint64_t restricted = 0;
            size_t pos = 0;
            for (uint32_t b : lab.blocks)
                for (uint32_t var = b * h.block_size; var < (b + 1) * h.block_size; ++var, ++pos)
                    if ((mu >> var) & 1) restricted |= uint64_t{1} << pos;
            CHECK(v.get(static_cast<uint32_t>(coord)) == (restricted == lab.mu));
        }
    }
}

TEST_CASE("cnf query encoding decides satisfiability") {
    HardInstance h = build_hardest_instance(4, 2, Rational(1, 2));

    // empty formula: all-zero query, satisfiable
    Cnf empty(4, {});
    CHECK(encode_cnf_query(h, empty) == BitVec(static_cast<uint32_t>(h.dim)));
    CHECK(instance_decides(h, empty));

    // (x0) and (not x0): unsatisfiable
    Cnf contra(4, {{{0, false}}, {{0, true}}});
    CHECK_FALSE(sat_oracle(contra));
    CHECK_FALSE(instance_decides(h, contra));

    for (uint64_t seed = 0; seed < 120; ++seed) {
        Cnf phi = random_cnf(4, 2, 1 + seed % 7, seed);
        CHECK(instance_decides(h, phi) == sat_oracle(phi));
    }

    HardInstance h3 = build_hardest_instance(6, 3, Rational(1, 2));
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Cnf phi = random_cnf(6, 3, 1 + seed % 9, seed * 31 + 5);
        CHECK(instance_decides(h3, phi) == sat_oracle(phi));
    }
}

TEST_CASE("cnf equivalence holds through the worst-case engine") {
    HardInstance h = build_hardest_instance(6, 3, Rational(1, 2));
    OVInstance inst = h.instance();
    auto node = ov_pre(inst, inst.dim);  // t = 1
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Cnf phi = random_cnf(6, 3, 1 + seed % 8, seed * 7 + 3);
        BitVec q = encode_cnf_query(h, phi);
        bool direct = linear_scan_query(inst, q);
        CHECK(direct == sat_oracle(phi));
        CHECK(ov_onl(*node, q) == direct);
    }
}

TEST_CASE("sat_oracle basics and dimacs parsing") {
    std::istringstream in(
        "c tiny example\n"
        "p cnf 3 2\n"
        "1 -2 0\n"
        "2 3 0\n");
    Cnf phi = parse_cnf(in);
    CHECK(phi.var_count == 3);
    CHECK(phi.width == 2);
    REQUIRE(phi.clauses.size() == 2);
    CHECK(sat_oracle(phi));
    CHECK(sat_oracle(Cnf(2, {})));
    CHECK_FALSE(sat_oracle(Cnf(1, {{{0, false}}, {{0, true}}})));
}

TEST_CASE("simple paths dp on 8-vertex digraphs") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        Digraph g = random_digraph(8, seed + 500);
        PathTable table = simple_paths_dp(g, 4);
        CHECK(table.entries_touched <= binom_leq(8, 4) * 64);
        for (uint32_t mask = 0; mask < 256; ++mask) {
            uint32_t size = static_cast<uint32_t>(std::popcount(mask));
            if (size < 2 || size > 4) continue;
            for (uint32_t u = 0; u < 8; ++u) {
                if (!((mask >> u) & 1)) continue;
                for (uint32_t v = 0; v < 8; ++v) {
                    if (v == u || !((mask >> v) & 1)) continue;
                    bool dp = (table.ends(mask, u) >> v) & 1;
                    CHECK(dp == path_exists_brute(g, mask, u, v));
                }
            }
        }
    }
}

TEST_CASE("simple paths dp") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        Digraph g = random_digraph(6, seed);
        PathTable table = simple_paths_dp(g, 4);
        CHECK(table.entries_touched <= binom_leq(6, 4) * 36);
        for (uint32_t u = 0; u < 6; ++u)
            CHECK(table.ends(uint32_t{1} << u, u) == uint64_t{1} << u);
        for (uint32_t u = 0; u < 6; ++u)
            for (uint32_t v = 0; v < 6; ++v) {
                if (u == v) continue;
                uint32_t mask = (uint32_t{1} << u) | (uint32_t{1} << v);
                bool has = (table.ends(mask, u) >> v) & 1;
                CHECK(has == g.has_edge(u, v));
            }
        // spot-check larger sets against permutation enumeration
        for (uint32_t mask = 0; mask < 64; ++mask) {
            if (std::popcount(mask) != 3 && std::popcount(mask) != 4) continue;
            for (uint32_t u = 0; u < 6; ++u) {
                if (!((mask >> u) & 1)) continue;
                for (uint32_t v = 0; v < 6; ++v) {
                    if (v == u || !((mask >> v) & 1)) continue;
                    bool dp = (table.ends(mask, u) >> v) & 1;
                    bool brute = path_exists_brute(g, mask, u, v);
                    CHECK(dp == brute);
                }
            }
        }
    }
}

TEST_CASE("disjoint set sum identity") {
    // sum of three Int(S) values hits 2^6 - 1 exactly for partitions
    auto masks = vertex_set_masks(6, 2);
    REQUIRE(masks.size() == 15);
    for (uint32_t a : masks)
        for (uint32_t b : masks)
            for (uint32_t c : masks) {
                bool disjoint = (a & b) == 0 && (a & c) == 0 && (b & c) == 0;
                bool sums = uint64_t{a} + b + c == 63;
                CHECK(disjoint == sums);
            }
}

TEST_CASE("ksum instance and solver") {
    KSumInstance inst = hampath_reduction_build(6, 3);
    REQUIRE(inst.lists.size() == 3);
    for (const auto& list : inst.lists) CHECK(list.size() == 15);
    CHECK(inst.lists[0][0] == 3);  // Int({0,1})
    CHECK(inst.lists[2][0] == 60); // 63 - Int({0,1})

    // direct solver checks
    KSumInstance tiny;
    tiny.k = 3;
    tiny.lists = {{1}, {2}, {3}};
    KSumQuery q;
    q.masks = {{1}, {1}, {1}};
    CHECK(ksum_query_solve(tiny, q));
    tiny.lists = {{1}, {1}, {3}};
    CHECK_FALSE(ksum_query_solve(tiny, q));

    // random masks against cartesian enumeration
    for (uint64_t seed = 0; seed < 40; ++seed) {
        KSumQuery rq;
        rq.masks.assign(3, std::vector<char>(15, 0));
        for (int i = 0; i < 3; ++i)
            for (int s = 0; s < 15; ++s)
                rq.masks[i][s] = (splitmix64_at(seed, i * 31 + s) & 1) ? 1 : 0;
        bool brute = false;
        for (int a = 0; a < 15 && !brute; ++a)
            for (int b = 0; b < 15 && !brute; ++b)
                for (int c = 0; c < 15 && !brute; ++c)
                    if (rq.masks[0][a] && rq.masks[1][b] && rq.masks[2][c] &&
                        inst.lists[0][a] + inst.lists[1][b] == inst.lists[2][c])
                        brute = true;
        CHECK(ksum_query_solve(inst, rq) == brute);
    }
}

TEST_CASE("hampath oracle basics") {
    Digraph path(6);
    for (uint32_t v = 0; v + 1 < 6; ++v) path.add_edge(v, v + 1);
    CHECK(hampath_oracle(path));
    CHECK_FALSE(hampath_oracle(Digraph(6)));
}

TEST_CASE("hampath reduction equals the oracle") {
    SUBCASE("directed path graph, including the forced endpoint") {
        Digraph path(6);
        for (uint32_t v = 0; v + 1 < 6; ++v) path.add_edge(v, v + 1);
        CHECK(reduction_answer(path, 3));

        // the specific witnessing tuple (0, 2, 4, 4): segments {0,1}, {2,3},
        // {4,5}; the last ends at 5 whose only adjacency is 4 -> 5
        PathTable table = simple_paths_dp(path, 2);
        KSumInstance inst = hampath_reduction_build(6, 3);
        auto queries = hampath_reduction_queries(path, 3, table);
        REQUIRE(queries.size() == 1296);
        size_t tuple_index = ((0 * 6 + 2) * 6 + 4) * 6 + 4;
        CHECK(ksum_query_solve(inst, queries[tuple_index]));
    }
    SUBCASE("structured graphs") {
        Digraph cycle(6);
        for (uint32_t v = 0; v < 6; ++v) cycle.add_edge(v, (v + 1) % 6);
        CHECK(reduction_answer(cycle, 3) == hampath_oracle(cycle));

        CHECK_FALSE(reduction_answer(Digraph(6), 3));

        Digraph complete(6);
        for (uint32_t u = 0; u < 6; ++u)
            for (uint32_t v = 0; v < 6; ++v)
                if (u != v) complete.add_edge(u, v);
        CHECK(reduction_answer(complete, 3));
    }
    SUBCASE("random digraphs") {
        for (uint64_t seed = 0; seed < 60; ++seed) {
            Digraph g = random_digraph(6, seed);
            CHECK(reduction_answer(g, 3) == hampath_oracle(g));
        }
    }
    SUBCASE("all tournaments on 5 vertices, padded to 6") {
        // every tournament has a Hamiltonian path; the padding keeps that
        for (uint32_t bits = 0; bits < 1024; ++bits) {
            Digraph g(5);
            uint32_t b = 0;
            for (uint32_t u = 0; u < 5; ++u)
                for (uint32_t v = u + 1; v < 5; ++v, ++b) {
                    if ((bits >> b) & 1) {
                        g.add_edge(u, v);
                    } else {
                        g.add_edge(v, u);
                    }
                }
            Digraph padded = pad_graph_for_k(g, 3);
            REQUIRE(padded.vertex_count == 6);
            bool oracle = hampath_oracle(padded);
            CHECK(oracle);  // tournaments always have one
            CHECK(reduction_answer(padded, 3) == oracle);
        }
    }
}

TEST_CASE("graph padding preserves hamiltonicity") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        uint32_t n = 4 + seed % 3;  // 4, 5, 6
        Digraph g = random_digraph(n, seed + 1000);
        Digraph padded = pad_graph_for_k(g, 3);
        CHECK(padded.vertex_count % 3 == 0);
        CHECK(hampath_oracle(padded) == hampath_oracle(g));
    }
}

TEST_CASE("digraph parsing") {
    std::istringstream in("n 4\n0 1\n1 2\n");
    Digraph g = parse_digraph(in);
    CHECK(g.vertex_count == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(2, 1));

    std::istringstream in2("0 1\n2 0\n");
    Digraph g2 = parse_digraph(in2);
    CHECK(g2.vertex_count == 3);
}
