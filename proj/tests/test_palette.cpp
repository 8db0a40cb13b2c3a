#include <doctest.h>

#include <cmath>
#include <vector>

#include "scf/corpus.hpp" // Rng
#include "scf/palette.hpp"

using namespace scf;

TEST_CASE("palette keeps insertion order and occurrence counts") {
    Palette p;
    CHECK(p.empty());
    p.add(111);
    p.add(222);
    p.add(111);
    CHECK(p.size() == 2);
    CHECK(p.keyAt(0) == 111);
    CHECK(p.keyAt(1) == 222);
    CHECK(p.countAt(0) == 2);
    CHECK(p.find(222) == 1);
    CHECK(p.find(333) == -1);
    CHECK(p.total() == 3);
}

TEST_CASE("palette rescale halves counts round-up") {
    Palette p(16);
    for (int n = 0; n < 10; ++n) p.add(1);
    for (int n = 0; n < 6; ++n) p.add(2);
    CHECK(p.total() == 16);
    p.add(3); // forces the halving first
    CHECK(p.countAt(0) == 5);
    CHECK(p.countAt(1) == 3);
    CHECK(p.countAt(2) == 1);
    CHECK(p.total() == 9);
}

TEST_CASE("escape context index uses A..F bit order") {
    SidePlanes planes(8, 8);
    CHECK(EscapeContextModel::contextIndex(planes, 4, 4) == 0);

    planes.setNewColor(3, 4, true); // A = (-1,0) -> bit 0
    CHECK(EscapeContextModel::contextIndex(planes, 4, 4) == 1);

    planes.setNewColor(4, 2, true); // F = (0,-2) -> bit 5
    CHECK(EscapeContextModel::contextIndex(planes, 4, 4) == 33);

    // off-image positions read as not-new
    CHECK(EscapeContextModel::contextIndex(planes, 0, 0) == 0);
}

TEST_CASE("stage-2 escape probability is Laplace smoothed") {
    BinaryCounter untouched;
    CHECK(untouched.smoothed() == doctest::Approx(0.5));
    BinaryCounter nine{9, 9};
    CHECK(nine.smoothed() == doctest::Approx(10.0 / 11.0));
    BinaryCounter thirty{0, 30};
    CHECK(thirty.smoothed() == doctest::Approx(1.0 / 32.0));
}

TEST_CASE("factored stage-2 coding gives palette colors the remaining mass") {
    // palette {c:5, d:5} with p(ESC)=1/2: each color ends up at ~1/4.
    Palette p;
    for (int n = 0; n < 5; ++n) p.add(100);
    for (int n = 0; n < 5; ++n) p.add(200);

    std::vector<uint8_t> bytes;
    RangeEncoder enc(bytes);
    uint32_t escW = escScaledWeight(BinaryCounter{0, 0});
    double before = enc.costBits();
    encodeScaledBool(enc, escW, false);
    p.encodeIndex(enc, 0);
    double costC = enc.costBits() - before;
    CHECK(costC == doctest::Approx(2.0).epsilon(1e-4)); // -log2(1/4)
    enc.finish();

    RangeDecoder dec(bytes.data(), bytes.size());
    CHECK_FALSE(decodeScaledBool(dec, escW));
    CHECK(p.decodeIndex(dec) == 0);
}

TEST_CASE("palette coding round-trips with and without exclusions") {
    Rng rng(17);
    Palette p;
    for (int n = 0; n < 300; ++n) p.add(rng.below(40));

    std::vector<size_t> excluded = {3, 7};
    std::vector<std::pair<size_t, bool>> schedule; // (index, use exclusion set)
    for (int n = 0; n < 200; ++n) {
        size_t idx = rng.below(uint32_t(p.size()));
        bool withExclusion = rng.below(2) == 0;
        if (withExclusion && (idx == 3 || idx == 7)) continue;
        schedule.emplace_back(idx, withExclusion);
    }

    std::vector<uint8_t> bytes;
    {
        RangeEncoder enc(bytes);
        for (auto [idx, withExclusion] : schedule)
            p.encodeIndex(enc, idx, withExclusion ? std::span<const size_t>(excluded)
                                                  : std::span<const size_t>());
        enc.finish();
    }
    RangeDecoder dec(bytes.data(), bytes.size());
    for (auto [expect, withExclusion] : schedule) {
        size_t got = p.decodeIndex(dec, withExclusion ? std::span<const size_t>(excluded)
                                                      : std::span<const size_t>());
        REQUIRE(got == expect);
    }
}

TEST_CASE("exclusion can exhaust the palette") {
    Palette p;
    p.add(42); // {c:1}
    std::vector<size_t> excluded = {0};
    CHECK(p.effectiveTotal(excluded) == 0); // only the escape remains codable
    CHECK(p.effectiveTotal() == 1);
}

TEST_CASE("escape context model records and rescales per context") {
    EscapeContextModel m(8);
    for (int n = 0; n < 20; ++n) m.record(5, n % 2 == 0);
    CHECK(m.at(5).nTotal <= 8);
    CHECK(m.at(5).nTrue <= m.at(5).nTotal);
    CHECK(m.at(4).nTotal == 0); // untouched context
}
