#include <doctest.h>

#include "oov/avgcase.hpp"
#include "oov/instance.hpp"
#include "oov/oracle.hpp"
#include "oov/reductions.hpp"
#include "oov/worstcase.hpp"

using namespace oov;

namespace {

CoordSet random_set(uint32_t d, uint64_t seed, uint64_t stream) {
    std::vector<uint32_t> members;
    for (uint32_t j = 0; j < d; ++j)
        if (splitmix64_at(seed, stream * 131 + j) & 1) members.push_back(j);
    return CoordSet(d, std::move(members));
}

bool subset_of(const CoordSet& a, const CoordSet& b) {
    for (uint32_t j : a.members())
        if (!b.contains(j)) return false;
    return true;
}

}  // namespace

TEST_CASE("partial match encoding semantics") {
    BitVec x = BitVec::from_string("10");
    CHECK(is_orthogonal(pm_encode_input(x), pm_encode_query(PMPattern::from_string("1*"))));
    CHECK_FALSE(is_orthogonal(pm_encode_input(x), pm_encode_query(PMPattern::from_string("0*"))));
    // all-wildcard queries encode to zero and match everything
    CHECK(pm_encode_query(PMPattern::from_string("***")) == BitVec(6));

    for (uint64_t seed = 0; seed < 40; ++seed) {
        uint32_t d = 1 + static_cast<uint32_t>(splitmix64_at(seed, 50) % 16);
        OVInstance x1 = sample_instance(1, d, Rational(1, 2), seed);
        std::string pattern;
        for (uint32_t j = 0; j < d; ++j) pattern += "01*"[splitmix64_at(seed, 51 + j) % 3];
        PMPattern y = PMPattern::from_string(pattern);
        CHECK(is_orthogonal(pm_encode_input(x1.vectors[0]), pm_encode_query(y)) ==
              y.matches(x1.vectors[0]));
    }
}

TEST_CASE("subset and containment encoding semantics") {
    CHECK(is_orthogonal(subset_encode_input(CoordSet(3, {0, 1})),
                        subset_encode_query(CoordSet(3, {0}))));
    CHECK_FALSE(is_orthogonal(subset_encode_input(CoordSet(3, {0})),
                              subset_encode_query(CoordSet(3, {0, 1}))));
    CHECK(subset_encode_query(CoordSet(3, {})) == BitVec(3));

    CHECK(is_orthogonal(containment_encode_input(CoordSet(3, {2})),
                        containment_encode_query(CoordSet(3, {1, 2}))));
    CHECK_FALSE(is_orthogonal(containment_encode_input(CoordSet(3, {0, 2})),
                              containment_encode_query(CoordSet(3, {2}))));
    CHECK(containment_encode_input(CoordSet(3, {})) == BitVec(3));

    for (uint64_t seed = 0; seed < 40; ++seed) {
        uint32_t d = 1 + static_cast<uint32_t>(splitmix64_at(seed, 60) % 16);
        CoordSet s = random_set(d, seed, 1);
        CoordSet q = random_set(d, seed, 2);
        CHECK(is_orthogonal(subset_encode_input(s), subset_encode_query(q)) == subset_of(q, s));
        CHECK(is_orthogonal(containment_encode_input(s), containment_encode_query(q)) ==
              subset_of(s, q));
    }
}

TEST_CASE("dnf encoding semantics") {
    DNFFormula phi(2, {{{0, false}, {1, true}}});  // x0 and not x1
    OVInstance enc = dnf_encode(phi);
    REQUIRE(enc.n() == 1);
    CHECK(enc.dim == 4);
    CHECK(is_orthogonal(enc.vectors[0], dnf_encode_assignment(BitVec::from_string("10"))));
    CHECK_FALSE(is_orthogonal(enc.vectors[0], dnf_encode_assignment(BitVec::from_string("11"))));
    DNFFormula single(1, {{{0, false}}});
    CHECK(is_orthogonal(dnf_encode(single).vectors[0],
                        dnf_encode_assignment(BitVec::from_string("1"))));

    CHECK_THROWS_AS(DNFFormula(2, {{{0, false}, {0, true}}}), std::invalid_argument);
    CHECK_THROWS_AS(DNFFormula(2, {{{0, false}, {0, false}}}), std::invalid_argument);
    CHECK_THROWS_AS(DNFFormula(2, {std::vector<DNFLiteral>{}}), std::invalid_argument);

    // monotone w-DNF clauses encode to w-sparse vectors
    DNFFormula mono(4, {{{0, false}, {2, false}, {3, false}}});
    CHECK(dnf_encode(mono).vectors[0].popcount() == 3);
}

TEST_CASE("dnf truth table equivalence through engines") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        uint32_t vars = 2 + static_cast<uint32_t>(splitmix64_at(seed, 70) % 5);
        uint32_t clause_count = 1 + static_cast<uint32_t>(splitmix64_at(seed, 71) % 6);
        std::vector<std::vector<DNFLiteral>> clauses;
        for (uint32_t c = 0; c < clause_count; ++c) {
            std::vector<DNFLiteral> clause;
            for (uint32_t v = 0; v < vars; ++v) {
                uint64_t r = splitmix64_at(seed, 72 + c * 17 + v) % 3;
                if (r == 0) clause.push_back(DNFLiteral{v, false});
                if (r == 1) clause.push_back(DNFLiteral{v, true});
            }
            if (clause.empty()) clause.push_back(DNFLiteral{0, false});
            clauses.push_back(std::move(clause));
        }
        DNFFormula phi(vars, std::move(clauses));
        OVInstance enc = dnf_encode(phi);
        auto worst = ov_pre(enc, enc.dim);  // t = 1 keeps tables tiny
        for (uint64_t a = 0; a < (uint64_t{1} << vars); ++a) {
            BitVec assignment(vars);
            for (uint32_t v = 0; v < vars; ++v)
                if ((a >> v) & 1) assignment.set(v);
            BitVec q = dnf_encode_assignment(assignment);
            bool expected = phi.eval(assignment);
            CHECK(linear_scan_query(enc, q) == expected);
            CHECK(ov_onl(*worst, q) == expected);
        }
    }
}
