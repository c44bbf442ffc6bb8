#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "oov/binomial.hpp"
#include "oov/bits.hpp"
#include "oov/instance.hpp"

using namespace oov;

namespace {

// per-coordinate reference for the packed implementation
bool orthogonal_by_loop(const BitVec& x, const BitVec& q) {
    uint64_t inner = 0;
    for (uint32_t j = 0; j < x.dim(); ++j) inner += (x.get(j) ? 1 : 0) * (q.get(j) ? 1 : 0);
    return inner == 0;
}

// all size-t subsets of [0,d) in colex order via direct comparison sort
std::vector<std::vector<uint32_t>> enumerate_colex(uint32_t d, uint32_t t) {
    std::vector<std::vector<uint32_t>> subsets;
    std::vector<uint32_t> cur;
    auto rec = [&](auto&& self, uint32_t next) -> void {
        if (cur.size() == t) {
            subsets.push_back(cur);
            return;
        }
        for (uint32_t c = next; c < d; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(subsets.begin(), subsets.end(),
              [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
                  // colex: compare reversed
                  for (size_t i = a.size(); i-- > 0;)
                      if (a[i] != b[i]) return a[i] < b[i];
                  return false;
              });
    return subsets;
}

}  // namespace

TEST_CASE("is_orthogonal basics") {
    CHECK(is_orthogonal(BitVec::from_string("1100"), BitVec::from_string("0011")));
    CHECK(is_orthogonal(BitVec::from_string("0000"), BitVec::from_string("1111")));
    CHECK_FALSE(is_orthogonal(BitVec::from_string("1010"), BitVec::from_string("0010")));
    CHECK_THROWS_AS(is_orthogonal(BitVec::from_string("10"), BitVec::from_string("100")),
                    std::invalid_argument);
}

TEST_CASE("is_orthogonal agrees with per-coordinate loop") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        uint32_t d = 1 + static_cast<uint32_t>(splitmix64_at(seed, 1000) % 130);
        OVInstance x = sample_instance(2, d, Rational(1, 2), seed);
        CHECK(is_orthogonal(x.vectors[0], x.vectors[1]) ==
              orthogonal_by_loop(x.vectors[0], x.vectors[1]));
    }
}

TEST_CASE("restrict_to selects coordinates") {
    BitVec v = BitVec::from_string("1010");
    CHECK(restrict_to(v, CoordSet(4, {0, 2})) == BitVec::from_string("11"));
    CHECK(restrict_to(v, CoordSet(4, {})) == BitVec(0));
    CHECK(restrict_to(BitVec::from_string("0110"), CoordSet(4, {1, 3})) ==
          BitVec::from_string("10"));
}

TEST_CASE("restrict_to composes with the identity") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        OVInstance x = sample_instance(1, 20, Rational(1, 2), seed);
        std::vector<uint32_t> members;
        for (uint32_t j = 0; j < 20; ++j)
            if (splitmix64_at(seed, 77 + j) & 1) members.push_back(j);
        CoordSet c(20, members);
        BitVec once = restrict_to(x.vectors[0], c);
        std::vector<uint32_t> identity(c.size());
        for (uint32_t j = 0; j < c.size(); ++j) identity[j] = j;
        CHECK(restrict_to(once, CoordSet(c.size(), identity)) == once);
    }
}

TEST_CASE("is_zero_on") {
    BitVec v = BitVec::from_string("1010");
    CHECK(is_zero_on(v, CoordSet(4, {1, 3})));
    CHECK_FALSE(is_zero_on(v, CoordSet(4, {0})));
    CHECK(is_zero_on(BitVec::from_string("0000"), CoordSet(4, {0, 1, 2, 3})));
}

TEST_CASE("dimension and ordering contracts are enforced") {
    CHECK_THROWS_AS(restrict_to(BitVec::from_string("10"), CoordSet(3, {0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_zero_on(BitVec::from_string("10"), CoordSet(3, {0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(CoordSet(4, {2, 1}), std::invalid_argument);   // not increasing
    CHECK_THROWS_AS(CoordSet(4, {1, 1}), std::invalid_argument);   // repeated
    CHECK_THROWS_AS(CoordSet(4, {4}), std::invalid_argument);      // out of range
    CHECK_THROWS_AS(BitVec::from_string("01x"), std::invalid_argument);
}

TEST_CASE("binom_leq examples") {
    CHECK(binom_leq(4, 0) == 1);
    CHECK(binom_leq(4, 2) == 11);
    CHECK(binom_leq(10, 10) == 1024);
    CHECK_THROWS_AS(binom_leq(64, 64), std::overflow_error);  // exactly 2^64
    CHECK(binom(64, 32) == 1832624140942590534ull);
}

TEST_CASE("rank_subset matches the colex enumeration oracle") {
    CHECK(rank_subset(CoordSet(4, {0, 1})) == 0);
    CHECK(unrank_subset(5, 4, 2) == CoordSet(4, {2, 3}));
    CHECK(rank_subset(CoordSet(3, {0, 1, 2})) == 0);

    for (uint32_t d = 0; d <= 16; ++d) {
        for (uint32_t t = 0; t <= d; ++t) {
            auto subsets = enumerate_colex(d, t);
            REQUIRE(subsets.size() == binom(d, t));
            for (uint64_t r = 0; r < subsets.size(); ++r) {
                CoordSet c(d, subsets[r]);
                CHECK(rank_subset(c) == r);
                CHECK(unrank_subset(r, d, t) == c);
            }
        }
    }
    CHECK_THROWS_AS(unrank_subset(6, 4, 2), std::invalid_argument);
}

TEST_CASE("rank_sparse_query is a bijection onto [0, binom(d, <= t-1))") {
    CHECK(rank_sparse_query(BitVec::from_string("0000"), 2) == 0);
    CHECK(rank_sparse_query(BitVec::from_string("1000"), 2) == 1);
    {
        BitVec q(4);
        q.set(2);
        q.set(3);
        CHECK(rank_sparse_query(q, 3) == 10);
    }
    BitVec heavy = BitVec::from_string("1100");
    CHECK_THROWS_AS(rank_sparse_query(heavy, 2), std::invalid_argument);

    for (uint32_t d = 1; d <= 12; ++d) {
        for (uint32_t t = 1; t <= d; ++t) {
            uint64_t domain = binom_leq(d, t - 1);
            std::vector<char> seen(domain, 0);
            for (uint64_t mask = 0; mask < (uint64_t{1} << d); ++mask) {
                BitVec q(d);
                for (uint32_t j = 0; j < d; ++j)
                    if ((mask >> j) & 1) q.set(j);
                if (q.popcount() >= t) continue;
                uint64_t r = rank_sparse_query(q, t);
                REQUIRE(r < domain);
                REQUIRE(seen[r] == 0);
                seen[r] = 1;
            }
            CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<int64_t>(domain));
        }
    }
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("1") == Rational(1, 1));
    CHECK_THROWS_AS(Rational::parse("-1/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("half"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("sample_instance degenerate probabilities and golden fixture") {
    OVInstance zeros = sample_instance(1, 8, Rational(1, 1), 123);
    CHECK(zeros.vectors[0] == BitVec(8));
    OVInstance ones = sample_instance(1, 8, Rational(0, 1), 123);
    CHECK(ones.vectors[0] == BitVec::from_string("11111111"));

    // frozen output of the documented generator; a change here breaks every
    // golden file downstream
    OVInstance fixed = sample_instance(3, 4, Rational(1, 2), 7);
    REQUIRE(fixed.n() == 3);
    CHECK(fixed.vectors[0] == BitVec::from_string("0011"));
    CHECK(fixed.vectors[1] == BitVec::from_string("0000"));
    CHECK(fixed.vectors[2] == BitVec::from_string("0001"));
}
