#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "oov/avgcase.hpp"
#include "oov/instance.hpp"
#include "oov/oracle.hpp"
#include "oov/worstcase.hpp"

using namespace oov;

// Built structures are immutable; concurrent readers with caller-owned stats
// must see identical answers.
TEST_CASE("concurrent queries agree with the scan") {
    OVInstance x = sample_instance(48, 11, Rational(1, 2), 77);
    auto worst = ov_pre(x, 3);
    AvgStructure avg = avg_build(x, 4);

    std::vector<char> expected(1u << 11);
    for (uint64_t mask = 0; mask < expected.size(); ++mask) {
        BitVec q(11);
        for (uint32_t j = 0; j < 11; ++j)
            if ((mask >> j) & 1) q.set(j);
        expected[mask] = linear_scan_query(x, q) ? 1 : 0;
    }

    std::atomic<uint64_t> disagreements{0};
    auto worker = [&](uint64_t offset) {
        QueryStats stats;  // caller-owned, one per thread
        for (uint64_t mask = offset; mask < expected.size(); mask += 4) {
            BitVec q(11);
            for (uint32_t j = 0; j < 11; ++j)
                if ((mask >> j) & 1) q.set(j);
            if (ov_onl(*worst, q, &stats) != static_cast<bool>(expected[mask])) ++disagreements;
            if (avg.query(q, &stats) != static_cast<bool>(expected[mask])) ++disagreements;
        }
    };
    std::vector<std::thread> threads;
    for (uint64_t offset = 0; offset < 4; ++offset) threads.emplace_back(worker, offset);
    for (std::thread& t : threads) t.join();
    CHECK(disagreements.load() == 0);
}
