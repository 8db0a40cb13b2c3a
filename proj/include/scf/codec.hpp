#ifndef SCF_CODEC_HPP
#define SCF_CODEC_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "scf/image.hpp"
#include "scf/palette.hpp"
#include "scf/pattern_store.hpp"
#include "scf/residual.hpp"

namespace scf {

constexpr char kMagic[4] = {'S', 'C', 'F', '1'};
constexpr uint8_t kVersion = 1;
constexpr size_t kHeaderSize = 17;

struct CodecConfig {
    bool enableStage3Pruning = true;     // adaptive-range residual coding
    bool enableEscapeContextModel = true; // 64-context new-color model in Stage 2
    int similarityTolerance = 0;          // 0 = exact pattern matching

    // Model caps. These are instrumentation knobs for tests; they are not
    // serialized, so decoding requires the same values used for encoding.
    // The defaults are the shipped bitstream behavior.
    uint32_t tableCap = kTableCap;
    uint32_t counterCap = kCounterCap;

    bool collectRowChecksums = false;
    bool collectPlanes = false; // per-pixel stage & new-color planes in stats
};

enum Stage : int { kStage1 = 0, kStage2 = 1, kStage3 = 2 };

struct RowStats {
    double bits[3] = {0, 0, 0};
    uint32_t pixels[3] = {0, 0, 0};
};

struct StageStats {
    uint64_t pixels = 0;
    uint64_t stagePixels[3] = {0, 0, 0};
    double stageBits[3] = {0, 0, 0};
    double coderOverheadBits = 0; // payload bits not attributable to any event
    uint64_t headerBytes = 0;
    uint64_t payloadBytes = 0;
    uint64_t uniqueColors = 0;
    double uniqueColorFraction = 0;

    std::vector<RowStats> rows;
    std::vector<uint64_t> rowChecksums; // when requested

    // Final Stage-2 escape-context counters (ctx 0..63), for inspection and
    // count-exactness checks.
    std::vector<BinaryCounter> escapeContexts;
    // Pattern-store entry counts per similarity level 2..6.
    std::vector<uint64_t> patternLevelSizes;
    // Residual histogram increments per component: [k][in, out, case3].
    uint64_t residualIncrements[3][3] = {};

    // When collectPlanes is set: per-pixel coding stage (0/1/2) and
    // new-color flags, raster order.
    std::vector<uint8_t> stagePlane;
    std::vector<uint8_t> newColorPlane;

    double totalBits() const {
        return stageBits[0] + stageBits[1] + stageBits[2] + coderOverheadBits;
    }
    double bitsPerPixel() const {
        return pixels ? double(8 * (headerBytes + payloadBytes)) / double(pixels) : 0.0;
    }
};

struct DecodeInfo {
    bool collectRowChecksums = false;
    std::vector<uint64_t> rowChecksums;
};

// Container: 17-byte header (magic, version, dimensions, depth, flags,
// tolerance; little-endian) followed by the arithmetic payload.
std::vector<uint8_t> encode(const Image& img, const CodecConfig& cfg = {});
std::vector<uint8_t> encodeWithStats(const Image& img, const CodecConfig& cfg,
                                     StageStats& stats);

// Decoding takes flags and tolerance from the header; cfg supplies only the
// non-serialized model caps (defaults match encode's defaults).
Image decode(std::span<const uint8_t> bytes, const CodecConfig& cfg = {},
             DecodeInfo* info = nullptr);

struct BitstreamHeader {
    uint32_t width = 0;
    uint32_t height = 0;
    uint8_t depth = 8;
    bool stage3Pruning = true;
    bool escapeContextModel = true;
    uint16_t tolerance = 0;
};

BitstreamHeader parseHeader(std::span<const uint8_t> bytes);

} // namespace scf

#endif
