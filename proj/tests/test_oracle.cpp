#include <doctest.h>

#include "oov/instance.hpp"
#include "oov/oracle.hpp"

using namespace oov;

TEST_CASE("linear_scan_query basics") {
    OVInstance x = OVInstance::from_strings({"1100", "0011"});
    CHECK(linear_scan_query(x, BitVec::from_string("0011")));
    CHECK_FALSE(linear_scan_query(OVInstance::from_strings({"1111"}), BitVec::from_string("0001")));
    OVInstance zero = OVInstance::from_strings({"0000"});
    for (uint64_t mask = 0; mask < 16; ++mask) {
        BitVec q(4);
        for (uint32_t j = 0; j < 4; ++j)
            if ((mask >> j) & 1) q.set(j);
        CHECK(linear_scan_query(zero, q));
    }
}

TEST_CASE("full bitmap answers every query like the scan") {
    OVInstance x = OVInstance::from_strings({"10"});
    FullBitmap b = build_full_bitmap(x);
    CHECK(query_full_bitmap(b, BitVec::from_string("00")));
    CHECK(query_full_bitmap(b, BitVec::from_string("01")));
    CHECK_FALSE(query_full_bitmap(b, BitVec::from_string("10")));
    CHECK_FALSE(query_full_bitmap(b, BitVec::from_string("11")));

    FullBitmap zeros = build_full_bitmap(OVInstance::from_strings({"00"}));
    for (uint64_t mask = 0; mask < 4; ++mask) CHECK(zeros.get(mask));

    CHECK_FALSE(query_full_bitmap(build_full_bitmap(OVInstance::from_strings({"11"})),
                                  BitVec::from_string("11")));

    for (uint64_t seed = 0; seed < 8; ++seed) {
        uint32_t d = 1 + static_cast<uint32_t>(seed % 12);
        uint32_t n = 1 + static_cast<uint32_t>(splitmix64_at(seed, 5) % 40);
        OVInstance inst = sample_instance(n, d, Rational(1, 2), seed);
        FullBitmap bm = build_full_bitmap(inst);
        for (uint64_t mask = 0; mask < (uint64_t{1} << d); ++mask) {
            BitVec q(d);
            for (uint32_t j = 0; j < d; ++j)
                if ((mask >> j) & 1) q.set(j);
            CHECK(query_full_bitmap(bm, q) == linear_scan_query(inst, q));
        }
    }
}

TEST_CASE("dense cap refuses oversized bitmaps") {
    OVInstance wide(40, {BitVec(40)});
    CHECK_THROWS_AS(build_full_bitmap(wide), std::invalid_argument);
}
