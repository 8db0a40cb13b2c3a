#include "scf/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

#include "scf/corpus.hpp"
#include "scf/errors.hpp"
#include "scf/ppm.hpp"

namespace scf {

namespace {

BenchRow benchOne(const std::filesystem::path& path) {
    Image img = readPpm(path);
    BenchRow row;
    row.name = path.filename().string();
    row.width = img.width();
    row.height = img.height();
    row.pixels = img.pixelCount();
    row.uniqueColors = countUniqueColors(img);
    row.uniqueFraction = double(row.uniqueColors) / double(row.pixels);
    row.bucket = bucketOf(row.uniqueFraction);

    for (size_t n = 0; n < kBenchCases.size(); ++n) {
        CodecConfig cfg;
        cfg.enableStage3Pruning = kBenchCases[n].pruning;
        cfg.enableEscapeContextModel = kBenchCases[n].escapeCtx;
        StageStats stats;
        std::vector<uint8_t> bytes = encodeWithStats(img, cfg, stats);
        row.bytes[n] = bytes.size();
        if (!(decode(bytes) == img))
            throw CorruptStreamError("bench round-trip failed for " + row.name);
        double sum = stats.totalBits();
        if (std::abs(sum - double(stats.payloadBytes) * 8) > 1.0)
            throw CorruptStreamError("bench bit accounting off for " + row.name);
        if (n == 3) row.both = std::move(stats);
    }
    return row;
}

} // namespace

BenchReport runBench(const std::filesystem::path& corpusDir, int threads) {
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::is_directory(corpusDir))
        throw IoError("corpus directory not found: " + corpusDir.string());
    for (const auto& entry : std::filesystem::directory_iterator(corpusDir))
        if (entry.path().extension() == ".ppm") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw IoError("no .ppm files in " + corpusDir.string());

    if (threads <= 0) threads = int(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, int(files.size()));

    BenchReport report;
    report.rows.resize(files.size());
    std::atomic<size_t> cursor{0};
    std::vector<std::string> errors(static_cast<size_t>(threads));
    auto worker = [&](size_t tid) {
        for (;;) {
            size_t n = cursor.fetch_add(1);
            if (n >= files.size()) return;
            try {
                report.rows[n] = benchOne(files[n]);
            } catch (const std::exception& e) {
                errors[tid] = e.what();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, size_t(t));
    for (auto& t : pool) t.join();
    for (const std::string& e : errors)
        if (!e.empty()) throw IoError("bench failed: " + e);

    for (const BenchRow& row : report.rows) {
        ++report.bucketImages[size_t(row.bucket)];
        for (size_t n = 0; n < kBenchCases.size(); ++n) {
            report.bucketBytes[size_t(row.bucket)][n] += row.bytes[n];
            report.totalBytes[n] += row.bytes[n];
        }
    }
    return report;
}

void writeBenchCsv(const BenchReport& report, std::ostream& out) {
    out << "image,width,height,pixels,unique_colors,unique_fraction,bucket,"
           "bytes_baseline,bytes_esc_ctx,bytes_pruning,bytes_both,"
           "stage1_pixels,stage2_pixels,stage3_pixels,"
           "stage1_bits,stage2_bits,stage3_bits,coder_overhead_bits\n";
    char line[512];
    for (const BenchRow& r : report.rows) {
        std::snprintf(line, sizeof line,
                      "%s,%u,%u,%llu,%llu,%.6f,%s,%llu,%llu,%llu,%llu,"
                      "%llu,%llu,%llu,%.2f,%.2f,%.2f,%.2f\n",
                      r.name.c_str(), r.width, r.height, (unsigned long long)r.pixels,
                      (unsigned long long)r.uniqueColors, r.uniqueFraction,
                      kBucketLabels[size_t(r.bucket)], (unsigned long long)r.bytes[0],
                      (unsigned long long)r.bytes[1], (unsigned long long)r.bytes[2],
                      (unsigned long long)r.bytes[3],
                      (unsigned long long)r.both.stagePixels[0],
                      (unsigned long long)r.both.stagePixels[1],
                      (unsigned long long)r.both.stagePixels[2], r.both.stageBits[0],
                      r.both.stageBits[1], r.both.stageBits[2],
                      r.both.coderOverheadBits);
        out << line;
    }
    out << "bucket,images,bytes_baseline,bytes_esc_ctx,bytes_pruning,bytes_both,"
           "pct_baseline,pct_esc_ctx,pct_pruning,pct_both\n";
    for (int b = 0; b < 4; ++b) {
        if (report.bucketImages[size_t(b)] == 0) continue;
        std::snprintf(line, sizeof line,
                      "%s,%d,%llu,%llu,%llu,%llu,%.1f,%.1f,%.1f,%.1f\n", kBucketLabels[size_t(b)],
                      report.bucketImages[size_t(b)],
                      (unsigned long long)report.bucketBytes[size_t(b)][0],
                      (unsigned long long)report.bucketBytes[size_t(b)][1],
                      (unsigned long long)report.bucketBytes[size_t(b)][2],
                      (unsigned long long)report.bucketBytes[size_t(b)][3],
                      report.bucketPercent(b, 0), report.bucketPercent(b, 1),
                      report.bucketPercent(b, 2), report.bucketPercent(b, 3));
        out << line;
    }
}

std::string formatBenchSummary(const BenchReport& report) {
    std::ostringstream out;
    char line[256];
    out << "unique colors   images   baseline    esc_ctx    pruning       both\n";
    for (int b = 0; b < 4; ++b) {
        if (report.bucketImages[size_t(b)] == 0) continue;
        std::snprintf(line, sizeof line, "%-15s %6d %9.1f%% %9.1f%% %9.1f%% %9.1f%%\n",
                      kBucketLabels[size_t(b)], report.bucketImages[size_t(b)],
                      report.bucketPercent(b, 0), report.bucketPercent(b, 1),
                      report.bucketPercent(b, 2), report.bucketPercent(b, 3));
        out << line;
    }
    uint64_t ref = report.totalBytes[3];
    if (ref) {
        std::snprintf(line, sizeof line, "%-15s %6zu %9.1f%% %9.1f%% %9.1f%% %9.1f%%\n",
                      "total", report.rows.size(),
                      100.0 * double(report.totalBytes[0]) / double(ref),
                      100.0 * double(report.totalBytes[1]) / double(ref),
                      100.0 * double(report.totalBytes[2]) / double(ref), 100.0);
        out << line;
    }
    return out.str();
}

} // namespace scf
