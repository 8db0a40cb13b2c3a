#ifndef SCF_BENCH_HPP
#define SCF_BENCH_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "scf/codec.hpp"

namespace scf {

// The four feature combinations measured per image. "both" is the reference
// column all percentages are normalized to.
struct BenchCase {
    const char* name;
    bool pruning;
    bool escapeCtx;
};

constexpr std::array<BenchCase, 4> kBenchCases = {{
    {"baseline", false, false},
    {"esc_ctx", false, true},
    {"pruning", true, false},
    {"both", true, true},
}};

constexpr std::array<const char*, 4> kBucketLabels = {"<=3%", "<=7%", "<=17%", ">17%"};

inline int bucketOf(double uniqueFraction) {
    if (uniqueFraction <= 0.03) return 0;
    if (uniqueFraction <= 0.07) return 1;
    if (uniqueFraction <= 0.17) return 2;
    return 3;
}

struct BenchRow {
    std::string name;
    uint32_t width = 0;
    uint32_t height = 0;
    uint64_t pixels = 0;
    uint64_t uniqueColors = 0;
    double uniqueFraction = 0;
    int bucket = 0;
    std::array<uint64_t, 4> bytes{}; // total file size per case
    StageStats both;                  // per-stage stats of the reference case
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::array<std::array<uint64_t, 4>, 4> bucketBytes{}; // [bucket][case]
    std::array<int, 4> bucketImages{};
    std::array<uint64_t, 4> totalBytes{};

    double bucketPercent(int bucket, int caseIdx) const {
        uint64_t ref = bucketBytes[size_t(bucket)][3];
        if (ref == 0) return 0;
        return 100.0 * double(bucketBytes[size_t(bucket)][size_t(caseIdx)]) / double(ref);
    }
};

// Encodes every corpus image under all four cases, verifies each bitstream
// decodes back to the original, and aggregates per bucket. Rows come back in
// file-name order regardless of thread count.
BenchReport runBench(const std::filesystem::path& corpusDir, int threads = 0);

void writeBenchCsv(const BenchReport& report, std::ostream& out);
std::string formatBenchSummary(const BenchReport& report);

} // namespace scf

#endif
