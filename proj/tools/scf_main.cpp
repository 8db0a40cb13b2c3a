#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scf/bench.hpp"
#include "scf/codec.hpp"
#include "scf/corpus.hpp"
#include "scf/errors.hpp"
#include "scf/ppm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitCorrupt = 3;

std::vector<uint8_t> readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw scf::IoError("cannot open " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                                std::istreambuf_iterator<char>());
}

void writeFile(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw scf::IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!out) throw scf::IoError("write failed: " + path);
}

void writeStatsCsv(const std::string& path, const std::string& imageName, uint32_t width,
                   uint32_t height, const scf::StageStats& s) {
    std::ofstream out(path);
    if (!out) throw scf::IoError("cannot open " + path + " for writing");
    out << "image,width,height,pixels,unique_colors,unique_fraction,"
           "stage1_pixels,stage2_pixels,stage3_pixels,"
           "stage1_bits,stage2_bits,stage3_bits,coder_overhead_bits,"
           "header_bytes,payload_bytes,bpp\n";
    char line[512];
    std::snprintf(line, sizeof line,
                  "%s,%u,%u,%llu,%llu,%.6f,%llu,%llu,%llu,%.2f,%.2f,%.2f,%.2f,%llu,%llu,%.4f\n",
                  imageName.c_str(), width, height, (unsigned long long)s.pixels,
                  (unsigned long long)s.uniqueColors, s.uniqueColorFraction,
                  (unsigned long long)s.stagePixels[0], (unsigned long long)s.stagePixels[1],
                  (unsigned long long)s.stagePixels[2], s.stageBits[0], s.stageBits[1],
                  s.stageBits[2], s.coderOverheadBits, (unsigned long long)s.headerBytes,
                  (unsigned long long)s.payloadBytes, s.bitsPerPixel());
    out << line;
}

void printInspect(const scf::StageStats& s) {
    std::printf("pixels            %llu\n", (unsigned long long)s.pixels);
    std::printf("unique colors     %llu (%.3f%% of pixels)\n",
                (unsigned long long)s.uniqueColors, 100.0 * s.uniqueColorFraction);
    std::printf("compressed size   %llu bytes (%.4f bpp)\n",
                (unsigned long long)(s.headerBytes + s.payloadBytes), s.bitsPerPixel());
    const char* names[3] = {"stage 1 (context)", "stage 2 (palette)", "stage 3 (residual)"};
    for (int n = 0; n < 3; ++n) {
        double share = s.pixels ? 100.0 * double(s.stagePixels[n]) / double(s.pixels) : 0;
        std::printf("%-18s %10llu px (%5.1f%%)  %12.1f bits\n", names[n],
                    (unsigned long long)s.stagePixels[n], share, s.stageBits[n]);
    }
    std::printf("coder overhead    %.1f bits\n", s.coderOverheadBits);
    std::printf("pattern store entries per similarity level (2..6):");
    for (uint64_t v : s.patternLevelSizes) std::printf(" %llu", (unsigned long long)v);
    std::printf("\n");
    std::printf("stage-2 escape contexts (ctx: new/total):\n");
    for (int ctx = 0; ctx < 64; ++ctx) {
        const scf::BinaryCounter& c = s.escapeContexts[size_t(ctx)];
        std::printf(" %2d:%u/%-6u", ctx, c.nTrue, c.nTotal);
        if (ctx % 8 == 7) std::printf("\n");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scf - lossless screen-content codec with per-stage accounting"};
    app.require_subcommand(1);

    std::string inPath, outPath, statsPath;
    bool noPruning = false, noEscCtx = false;
    int tolerance = 0;

    auto addCodecFlags = [&](CLI::App* cmd) {
        cmd->add_flag("--no-stage3-pruning", noPruning,
                      "disable adaptive-range residual coding");
        cmd->add_flag("--no-escape-ctx", noEscCtx,
                      "condition the stage-2 escape on similarity instead of the "
                      "neighborhood contexts");
        cmd->add_option("--tolerance", tolerance, "pattern match tolerance")
            ->check(CLI::Range(0, 0xFFFF));
    };

    CLI::App* cmdEncode = app.add_subcommand("encode", "compress a PPM image");
    cmdEncode->add_option("input", inPath, "input .ppm (P6)")->required();
    cmdEncode->add_option("output", outPath, "output .scf")->required();
    addCodecFlags(cmdEncode);
    cmdEncode->add_option("--stats", statsPath, "write per-stage stats CSV");

    CLI::App* cmdDecode = app.add_subcommand("decode", "decompress to PPM");
    cmdDecode->add_option("input", inPath, "input .scf")->required();
    cmdDecode->add_option("output", outPath, "output .ppm")->required();

    CLI::App* cmdInspect = app.add_subcommand("inspect", "print model statistics for an image");
    cmdInspect->add_option("input", inPath, "input .ppm (P6)")->required();
    addCodecFlags(cmdInspect);

    CLI::App* cmdGen = app.add_subcommand("gen-corpus", "generate the synthetic test corpus");
    std::string corpusDir;
    scf::CorpusSpec spec;
    cmdGen->add_option("dir", corpusDir, "output directory")->required();
    cmdGen->add_option("--count", spec.imageCount, "number of images")
        ->check(CLI::Range(1, 10000));
    cmdGen->add_option("--seed", spec.seed, "corpus seed");
    cmdGen->add_option("--min-size", spec.minSize, "minimum image side")
        ->check(CLI::Range(16, 1024));
    cmdGen->add_option("--max-size", spec.maxSize, "maximum image side")
        ->check(CLI::Range(16, 1024));
    cmdGen->add_option("--weight-flat", spec.weightFlat, "flat fill weight");
    cmdGen->add_option("--weight-text", spec.weightText, "text block weight");
    cmdGen->add_option("--weight-gradient", spec.weightGradient, "gradient weight");
    cmdGen->add_option("--weight-noise", spec.weightNoise, "noise patch weight");

    CLI::App* cmdBench = app.add_subcommand("bench", "A/B benchmark over a corpus directory");
    std::string benchDir;
    int benchThreads = 0;
    cmdBench->add_option("dir", benchDir, "corpus directory")->required();
    cmdBench->add_option("--stats", statsPath, "write the per-image CSV report here");
    cmdBench->add_option("--threads", benchThreads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        scf::CodecConfig cfg;
        cfg.enableStage3Pruning = !noPruning;
        cfg.enableEscapeContextModel = !noEscCtx;
        cfg.similarityTolerance = tolerance;

        if (cmdEncode->parsed()) {
            scf::Image img = scf::readPpm(inPath);
            scf::StageStats stats;
            std::vector<uint8_t> bytes = scf::encodeWithStats(img, cfg, stats);
            writeFile(outPath, bytes);
            if (!statsPath.empty())
                writeStatsCsv(statsPath, inPath, img.width(), img.height(), stats);
            std::fprintf(stderr, "%s: %llu pixels -> %zu bytes (%.4f bpp)\n", inPath.c_str(),
                         (unsigned long long)stats.pixels, bytes.size(),
                         stats.bitsPerPixel());
        } else if (cmdDecode->parsed()) {
            std::vector<uint8_t> bytes = readFile(inPath);
            scf::Image img = scf::decode(bytes);
            scf::writePpm(outPath, img);
        } else if (cmdInspect->parsed()) {
            scf::Image img = scf::readPpm(inPath);
            scf::StageStats stats;
            scf::encodeWithStats(img, cfg, stats);
            printInspect(stats);
        } else if (cmdGen->parsed()) {
            auto entries = scf::generateCorpus(spec, corpusDir);
            std::fprintf(stderr, "wrote %zu images + manifest.txt to %s\n", entries.size(),
                         corpusDir.c_str());
        } else if (cmdBench->parsed()) {
            scf::BenchReport report = scf::runBench(benchDir, benchThreads);
            if (!statsPath.empty()) {
                std::ofstream csv(statsPath);
                if (!csv) throw scf::IoError("cannot open " + statsPath + " for writing");
                scf::writeBenchCsv(report, csv);
            }
            std::cout << scf::formatBenchSummary(report);
        }
    } catch (const scf::CorruptStreamError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCorrupt;
    } catch (const scf::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    return kExitOk;
}
