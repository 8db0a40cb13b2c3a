// Acceptance suite: runs every criterion end to end and prints one line per
// criterion. Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "scf/bench.hpp"
#include "scf/codec.hpp"
#include "scf/corpus.hpp"
#include "scf/ppm.hpp"
#include "scf/range_coder.hpp"
#include "scf/residual.hpp"
#include "test_images.hpp"

using namespace scf;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail = "") {
    std::printf("criterion %d (%s): %s%s%s\n", number, name, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds(Clock::time_point from) {
    return std::chrono::duration<double>(Clock::now() - from).count();
}

const CodecConfig kAllConfigs[4] = {
    {false, false}, {false, true}, {true, false}, {true, true}};

std::filesystem::path corpusDir() {
    return std::filesystem::temp_directory_path() / "scf_acceptance_corpus";
}

CorpusSpec acceptanceSpec() {
    CorpusSpec spec;
    spec.imageCount = 24;
    spec.minSize = 64;
    spec.maxSize = 160;
    spec.seed = 20240601;
    return spec;
}

// ---- criterion 1: lossless round trip --------------------------------------

void criterion1(const std::vector<CorpusEntry>& corpus) {
    auto start = Clock::now();
    int checked = 0;
    std::string fail;
    for (int idx = 0; idx < 200 && fail.empty(); ++idx) {
        Image img = testimg::randomImage(idx, 128);
        for (const CodecConfig& cfg : kAllConfigs) {
            std::vector<uint8_t> bytes = encode(img, cfg);
            if (!(decode(bytes) == img)) {
                fail = "; random image " + std::to_string(idx) + " diverged";
                break;
            }
            ++checked;
        }
    }
    for (const CorpusEntry& e : corpus) {
        if (!fail.empty()) break;
        Image img = readPpm(corpusDir() / e.name);
        for (const CodecConfig& cfg : kAllConfigs) {
            std::vector<uint8_t> bytes = encode(img, cfg);
            if (!(decode(bytes) == img)) {
                fail = "; corpus image " + e.name + " diverged";
                break;
            }
            ++checked;
        }
    }
    double t = seconds(start);
    char detail[160];
    std::snprintf(detail, sizeof detail, "%d round trips in %.1fs%s", checked, t,
                  fail.empty() ? "" : fail.c_str());
    report(1, "lossless round-trip", fail.empty() && t < 300.0, detail);
}

// ---- criterion 2: coder near-optimality ------------------------------------

void criterion2() {
    Rng rng(424242);
    double worst = 0;
    bool pass = true;
    for (int trial = 0; trial < 50; ++trial) {
        uint32_t alphabet = 2 + rng.below(400);
        std::vector<uint32_t> counts(alphabet);
        for (auto& c : counts) c = 1 + rng.below(150);
        std::vector<uint32_t> cum(alphabet + 1, 0);
        std::partial_sum(counts.begin(), counts.end(), cum.begin() + 1);
        uint32_t total = cum.back();

        std::vector<uint32_t> seq(100000);
        double ideal = 0;
        for (auto& s : seq) {
            uint32_t target = rng.below(total);
            uint32_t sym = 0;
            while (cum[sym + 1] <= target) ++sym;
            s = sym;
            ideal += -std::log2(double(counts[sym]) / double(total));
        }
        std::vector<uint8_t> bytes;
        RangeEncoder enc(bytes);
        for (uint32_t s : seq) enc.encode(cum[s], counts[s], total);
        enc.finish();
        double excess = double(bytes.size()) * 8 - ideal;
        if (excess > worst) worst = excess;
        if (excess < 0 || excess > 64.0) pass = false;
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "worst excess %.2f bits over 50 distributions",
                  worst);
    report(2, "coder near-optimality", pass, detail);
}

// ---- criterion 3: fold bijectivity ------------------------------------------

void criterion3() {
    constexpr int eMax = 255;
    long violations = 0;
    long checked = 0;
    for (int r = 1; r <= 254; ++r) {
        for (int e = -eMax; e <= eMax; ++e) {
            if (e >= -r && e <= r) continue;
            ++checked;
            int f = foldOutOfRange(e, r);
            if (f < -eMax + r || f > eMax - r - 1 || unfoldOutOfRange(f, r) != e)
                ++violations;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "%ld (r,e) pairs, %ld violations", checked,
                  violations);
    report(3, "fold bijectivity", violations == 0, detail);
}

// ---- criterion 4: escape-context count exactness ----------------------------

void criterion4() {
    bool pass = true;
    std::string detail = "20 images, counters exact";
    for (int idx = 0; idx < 20 && pass; ++idx) {
        Image img = testimg::randomImage(idx * 3 + 1, 32);
        CodecConfig cfg;
        cfg.collectPlanes = true;
        cfg.counterCap = 0xFFFFFFFFu; // rescaling disabled
        cfg.tableCap = 0xFFFFFFFFu;
        StageStats stats;
        encodeWithStats(img, cfg, stats);

        uint32_t nNew[64] = {0}, nTotal[64] = {0};
        auto flagAt = [&](int64_t x, int64_t y) -> bool {
            if (x < 0 || y < 0 || x >= int64_t(img.width()) ||
                y >= int64_t(img.height()))
                return false;
            return stats.newColorPlane[size_t(y) * img.width() + size_t(x)] != 0;
        };
        for (uint32_t j = 0; j < img.height(); ++j)
            for (uint32_t i = 0; i < img.width(); ++i) {
                size_t p = size_t(j) * img.width() + i;
                if (stats.stagePlane[p] == kStage1) continue;
                int ctx = 0;
                if (flagAt(int64_t(i) - 1, j)) ctx |= 1;
                if (flagAt(i, int64_t(j) - 1)) ctx |= 2;
                if (flagAt(int64_t(i) - 1, int64_t(j) - 1)) ctx |= 4;
                if (flagAt(int64_t(i) + 1, int64_t(j) - 1)) ctx |= 8;
                if (flagAt(int64_t(i) - 2, j)) ctx |= 16;
                if (flagAt(i, int64_t(j) - 2)) ctx |= 32;
                ++nTotal[ctx];
                if (stats.newColorPlane[p]) ++nNew[ctx];
            }
        for (int ctx = 0; ctx < 64; ++ctx) {
            if (stats.escapeContexts[size_t(ctx)].nTrue != nNew[ctx] ||
                stats.escapeContexts[size_t(ctx)].nTotal != nTotal[ctx]) {
                pass = false;
                detail = "mismatch on image " + std::to_string(idx) + " ctx " +
                         std::to_string(ctx);
                break;
            }
        }
    }
    report(4, "escape-context count oracle", pass, detail);
}

// ---- criterion 5: stage-1 efficiency ----------------------------------------

void criterion5() {
    Image img = testimg::repeatedRow(256, 256, 31337, 32);
    StageStats stats;
    encodeWithStats(img, CodecConfig{}, stats);
    double bits = 0;
    uint64_t pixels = 0;
    uint64_t stage1Pixels = 0;
    for (uint32_t j = 8; j < img.height(); ++j) {
        bits += stats.rows[j].bits[kStage1];
        stage1Pixels += stats.rows[j].pixels[kStage1];
        pixels += img.width();
    }
    double bpp = bits / double(pixels);
    bool allStage1 = stage1Pixels == pixels;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "mean stage-1 cost %.4f bpp after row 8 (%llu/%llu pixels in stage 1)",
                  bpp, (unsigned long long)stage1Pixels, (unsigned long long)pixels);
    report(5, "stage-1 efficiency", bpp < 0.342 && allStage1, detail);
}

// ---- criterion 6: direction of the bucket trend ------------------------------

void criterion6() {
    BenchReport report6 = runBench(corpusDir(), 2);
    bool allBucketsImprove = true;
    for (int b = 0; b < 4; ++b) {
        if (report6.bucketImages[size_t(b)] == 0) continue;
        if (report6.bucketBytes[size_t(b)][3] > report6.bucketBytes[size_t(b)][0])
            allBucketsImprove = false;
    }
    double saveLow = 0, saveHigh = 0;
    if (report6.bucketBytes[0][0] > 0)
        saveLow = 1.0 - double(report6.bucketBytes[0][3]) / double(report6.bucketBytes[0][0]);
    if (report6.bucketBytes[3][0] > 0)
        saveHigh =
            1.0 - double(report6.bucketBytes[3][3]) / double(report6.bucketBytes[3][0]);
    bool monotone = saveHigh > saveLow;
    bool populated = report6.bucketImages[0] > 0 && report6.bucketImages[3] > 0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "savings vs baseline: <=3%% bucket %.2f%%, >17%% bucket %.2f%%", 100 * saveLow,
                  100 * saveHigh);
    report(6, "bucket trend", allBucketsImprove && monotone && populated, detail);
}

// ---- criterion 7: model lockstep ---------------------------------------------

void criterion7(const std::vector<CorpusEntry>& corpus) {
    bool pass = true;
    std::string detail = "row checksums equal on 20 images";
    int used = 0;
    for (const CorpusEntry& e : corpus) {
        if (used == 20) break;
        ++used;
        Image img = readPpm(corpusDir() / e.name);
        CodecConfig cfg;
        cfg.collectRowChecksums = true;
        StageStats stats;
        std::vector<uint8_t> bytes = encodeWithStats(img, cfg, stats);
        DecodeInfo info;
        info.collectRowChecksums = true;
        Image back = decode(bytes, CodecConfig{}, &info);
        if (!(back == img) || info.rowChecksums != stats.rowChecksums) {
            pass = false;
            detail = "lockstep broke on " + e.name;
            break;
        }
    }
    if (used < 20) detail += " (corpus smaller than 20)";
    report(7, "model lockstep", pass && used == 20, detail);
}

// ---- criterion 8: determinism -------------------------------------------------

void criterion8(const std::vector<CorpusEntry>& corpus) {
    bool pass = true;
    std::string detail = "encode and gen-corpus byte-identical";
    for (int idx : {0, 4, 9}) {
        Image img = testimg::randomImage(idx, 96);
        if (encode(img) != encode(img)) {
            pass = false;
            detail = "encode not deterministic";
        }
    }
    auto dirB = std::filesystem::temp_directory_path() / "scf_acceptance_corpus_b";
    std::filesystem::remove_all(dirB);
    generateCorpus(acceptanceSpec(), dirB);
    for (const CorpusEntry& e : corpus) {
        std::ifstream a(corpusDir() / e.name, std::ios::binary);
        std::ifstream b(dirB / e.name, std::ios::binary);
        std::string da((std::istreambuf_iterator<char>(a)),
                       std::istreambuf_iterator<char>());
        std::string db((std::istreambuf_iterator<char>(b)),
                       std::istreambuf_iterator<char>());
        if (da != db || da.empty()) {
            pass = false;
            detail = "corpus regeneration differs on " + e.name;
            break;
        }
    }
    std::filesystem::remove_all(dirB);
    report(8, "determinism", pass, detail);
}

} // namespace

int main() {
    auto start = Clock::now();
    std::filesystem::remove_all(corpusDir());
    std::vector<CorpusEntry> corpus = generateCorpus(acceptanceSpec(), corpusDir());

    criterion1(corpus);
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7(corpus);
    criterion8(corpus);

    std::printf("acceptance finished in %.1fs: %d of 8 criteria passed\n", seconds(start),
                8 - failures);
    return failures;
}
