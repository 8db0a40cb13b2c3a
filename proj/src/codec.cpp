#include "scf/codec.hpp"

#include <array>

#include "scf/errors.hpp"
#include "scf/range_coder.hpp"

namespace scf {

namespace {

void putU32(std::vector<uint8_t>& v, uint32_t x) {
    v.push_back(uint8_t(x));
    v.push_back(uint8_t(x >> 8));
    v.push_back(uint8_t(x >> 16));
    v.push_back(uint8_t(x >> 24));
}

void putU16(std::vector<uint8_t>& v, uint16_t x) {
    v.push_back(uint8_t(x));
    v.push_back(uint8_t(x >> 8));
}

uint32_t getU32(const uint8_t* p) {
    return uint32_t(p[0]) | (uint32_t(p[1]) << 8) | (uint32_t(p[2]) << 16) |
           (uint32_t(p[3]) << 24);
}

uint16_t getU16(const uint8_t* p) { return uint16_t(p[0] | (p[1] << 8)); }

constexpr uint64_t kFnvOffset = 1469598103934665603ull;
constexpr uint64_t kFnvPrime = 1099511628211ull;

uint64_t fnv64(uint64_t h, uint64_t v) {
    for (int b = 0; b < 8; ++b) {
        h ^= (v >> (8 * b)) & 0xFF;
        h *= kFnvPrime;
    }
    return h;
}

// Everything both codec sides must keep in lockstep, plus a running hash of
// the mutation sequence that the row checksums sample.
struct Models {
    PatternStore store;
    Stage1EscapeModel stage1Esc;
    Palette palette;
    EscapeContextModel ctxEsc;
    std::array<BinaryCounter, 7> simEsc{}; // Stage-2 escape by similarity (baseline)
    ResidualModel residual;
    SidePlanes planes;
    bool useCtxModel;
    uint32_t counterCap;
    uint64_t trace = kFnvOffset;

    Models(uint32_t w, uint32_t h, int depth, bool escapeCtx, int tolerance,
           uint32_t tableCap, uint32_t ctrCap)
        : store(tableCap, tolerance),
          stage1Esc(ctrCap),
          palette(tableCap),
          ctxEsc(ctrCap),
          residual(depth, tableCap, ctrCap),
          planes(w, h),
          useCtxModel(escapeCtx),
          counterCap(ctrCap) {}

    const BinaryCounter& stage2Counter(int ctx, int simLevel) const {
        return useCtxModel ? ctxEsc.at(ctx) : simEsc[size_t(simLevel)];
    }

    void fold(uint64_t v) { trace = fnv64(trace, v); }

    struct PixelOutcome {
        Pattern pat;
        uint64_t key = 0;
        int stage = kStage3;
        bool wasNew = false;
        int simLevel = 0;
        bool stage1Attempted = false;
        int ctx = 0;
    };

    // Identical on encoder and decoder: side planes, escape counters,
    // pattern store and palette, in this order.
    void finishPixel(uint32_t i, uint32_t j, Color c, const PixelOutcome& o,
                     const Image& img) {
        for (int k = 0; k < 3; ++k) {
            int left = img.neighbor(i, j, -1, 0).component(k);
            int top = img.neighbor(i, j, 0, -1).component(k);
            int topLeft = img.neighbor(i, j, -1, -1).component(k);
            int e = c.component(k) - medPredict(left, top, topLeft);
            planes.setMapError(k, i, j, e);
            fold(uint64_t(uint32_t(e)));
        }
        planes.setNewColor(i, j, o.wasNew);
        if (o.stage1Attempted) stage1Esc.record(o.simLevel, o.stage != kStage1);
        if (o.stage != kStage1) {
            if (useCtxModel)
                ctxEsc.record(o.ctx, o.wasNew);
            else
                simEsc[size_t(o.simLevel)].record(o.wasNew, counterCap);
        }
        store.update(o.pat, o.key);
        palette.add(o.key);
        fold(o.key);
        fold(uint64_t(uint32_t(o.stage)) | (uint64_t(o.wasNew) << 8) |
             (uint64_t(uint32_t(o.simLevel)) << 16) | (uint64_t(uint32_t(o.ctx)) << 24));
    }

    uint64_t rowChecksum(uint32_t j) const {
        uint64_t h = fnv64(trace, j);
        h = fnv64(h, palette.size());
        h = fnv64(h, palette.total());
        for (int s = kMinSimilarity; s <= kPatternSize; ++s)
            h = fnv64(h, store.levelSize(s));
        for (int k = 0; k < 3; ++k) {
            h = fnv64(h, residual.inRange(k).total());
            h = fnv64(h, residual.outOfRange(k).total());
            h = fnv64(h, residual.caseThree(k).total());
            h = fnv64(h, (uint64_t(residual.decision(k).nTrue) << 32) |
                             residual.decision(k).nTotal);
        }
        return h;
    }
};

void validateForEncode(const Image& img, const CodecConfig& cfg) {
    contractCheck(cfg.similarityTolerance >= 0 && cfg.similarityTolerance <= 0xFFFF,
                  "similarity tolerance out of range");
    const uint16_t maxVal = img.maxValue();
    for (const Color& c : img.pixels())
        if (c.r > maxVal || c.g > maxVal || c.b > maxVal)
            throw IoError("component value exceeds the image bit depth");
}

void writeHeader(std::vector<uint8_t>& out, const Image& img, const CodecConfig& cfg) {
    out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
    out.push_back(kVersion);
    putU32(out, img.width());
    putU32(out, img.height());
    out.push_back(uint8_t(img.depth()));
    uint8_t flags = 0;
    if (cfg.enableStage3Pruning) flags |= 1;
    if (cfg.enableEscapeContextModel) flags |= 2;
    out.push_back(flags);
    putU16(out, uint16_t(cfg.similarityTolerance));
}

} // namespace

BitstreamHeader parseHeader(std::span<const uint8_t> bytes) {
    if (bytes.size() < kHeaderSize) throw CorruptStreamError("bitstream too short");
    for (size_t n = 0; n < 4; ++n)
        if (bytes[n] != uint8_t(kMagic[n]))
            throw CorruptStreamError("not an SCF bitstream (bad magic)");
    if (bytes[4] != kVersion)
        throw CorruptStreamError("unsupported bitstream version " +
                                 std::to_string(int(bytes[4])));
    BitstreamHeader hdr;
    hdr.width = getU32(bytes.data() + 5);
    hdr.height = getU32(bytes.data() + 9);
    hdr.depth = bytes[13];
    uint8_t flags = bytes[14];
    hdr.stage3Pruning = (flags & 1) != 0;
    hdr.escapeContextModel = (flags & 2) != 0;
    hdr.tolerance = getU16(bytes.data() + 15);
    if (hdr.width == 0 || hdr.height == 0)
        throw CorruptStreamError("zero image dimension in header");
    if (uint64_t(hdr.width) * hdr.height > Image::kMaxPixels)
        throw CorruptStreamError("image dimensions in header too large");
    if (hdr.depth < 1 || hdr.depth > 16)
        throw CorruptStreamError("unsupported bit depth in header");
    return hdr;
}

std::vector<uint8_t> encodeWithStats(const Image& img, const CodecConfig& cfg,
                                     StageStats& stats) {
    validateForEncode(img, cfg);
    std::vector<uint8_t> out;
    out.reserve(size_t(img.pixelCount()) / 2 + 64);
    writeHeader(out, img, cfg);

    Models m(img.width(), img.height(), img.depth(), cfg.enableEscapeContextModel,
             cfg.similarityTolerance, cfg.tableCap, cfg.counterCap);
    RangeEncoder enc(out);

    stats = StageStats{};
    stats.pixels = img.pixelCount();
    stats.headerBytes = kHeaderSize;
    stats.rows.assign(img.height(), RowStats{});
    if (cfg.collectPlanes) {
        stats.stagePlane.reserve(stats.pixels);
        stats.newColorPlane.reserve(stats.pixels);
    }

    Stage1Table scratch;
    for (uint32_t j = 0; j < img.height(); ++j) {
        RowStats& row = stats.rows[j];
        for (uint32_t i = 0; i < img.width(); ++i) {
            const Color c = img.at(i, j);
            Models::PixelOutcome o;
            o.key = colorKey(c);
            o.pat = extractPattern(img, i, j);
            PatternStore::Match match = m.store.findBest(o.pat);
            o.simLevel = match.level;
            o.stage1Attempted = match.dist != nullptr;

            double mark = enc.costBits();
            if (match.dist) {
                buildStage1Table(*match.dist, escScaledWeight(m.stage1Esc.at(match.level)),
                                 scratch);
                int idx = match.dist->find(o.key);
                if (idx >= 0) {
                    encodeStage1Symbol(enc, scratch, uint32_t(idx));
                    o.stage = kStage1;
                } else {
                    encodeStage1Symbol(enc, scratch, scratch.escapeSymbol());
                }
                double bits = enc.costBits() - mark;
                stats.stageBits[kStage1] += bits;
                row.bits[kStage1] += bits;
                mark = enc.costBits();
            }

            if (o.stage != kStage1) {
                int pidx = m.palette.find(o.key);
                o.wasNew = pidx < 0;
                o.ctx = m.useCtxModel
                            ? EscapeContextModel::contextIndex(m.planes, i, j)
                            : match.level;
                if (!m.palette.empty()) {
                    encodeScaledBool(enc, escScaledWeight(m.stage2Counter(o.ctx, o.simLevel)),
                                     o.wasNew);
                    if (!o.wasNew) {
                        m.palette.encodeIndex(enc, size_t(pidx));
                        o.stage = kStage2;
                    }
                    double bits = enc.costBits() - mark;
                    stats.stageBits[kStage2] += bits;
                    row.bits[kStage2] += bits;
                    mark = enc.costBits();
                }
                if (o.wasNew) {
                    encodeResidualPixel(enc, m.residual, img, m.planes, i, j,
                                        cfg.enableStage3Pruning);
                    o.stage = kStage3;
                    double bits = enc.costBits() - mark;
                    stats.stageBits[kStage3] += bits;
                    row.bits[kStage3] += bits;
                }
            }

            m.finishPixel(i, j, c, o, img);
            ++stats.stagePixels[o.stage];
            ++row.pixels[o.stage];
            if (cfg.collectPlanes) {
                stats.stagePlane.push_back(uint8_t(o.stage));
                stats.newColorPlane.push_back(o.wasNew ? 1 : 0);
            }
        }
        if (cfg.collectRowChecksums) stats.rowChecksums.push_back(m.rowChecksum(j));
    }
    enc.finish();

    stats.payloadBytes = out.size() - kHeaderSize;
    stats.coderOverheadBits = double(stats.payloadBytes) * 8 - stats.stageBits[0] -
                              stats.stageBits[1] - stats.stageBits[2];
    stats.uniqueColors = m.palette.size();
    stats.uniqueColorFraction =
        stats.pixels ? double(stats.uniqueColors) / double(stats.pixels) : 0.0;
    stats.escapeContexts.assign(EscapeContextModel::kContexts, BinaryCounter{});
    for (int ctx = 0; ctx < EscapeContextModel::kContexts; ++ctx)
        stats.escapeContexts[size_t(ctx)] = m.ctxEsc.at(ctx);
    for (int s = kMinSimilarity; s <= kPatternSize; ++s)
        stats.patternLevelSizes.push_back(m.store.levelSize(s));
    for (int k = 0; k < 3; ++k) {
        stats.residualIncrements[k][0] = m.residual.inRange(k).increments();
        stats.residualIncrements[k][1] = m.residual.outOfRange(k).increments();
        stats.residualIncrements[k][2] = m.residual.caseThree(k).increments();
    }
    return out;
}

std::vector<uint8_t> encode(const Image& img, const CodecConfig& cfg) {
    StageStats stats;
    return encodeWithStats(img, cfg, stats);
}

Image decode(std::span<const uint8_t> bytes, const CodecConfig& cfg, DecodeInfo* info) {
    BitstreamHeader hdr = parseHeader(bytes);
    Image img(hdr.width, hdr.height, hdr.depth);

    Models m(hdr.width, hdr.height, hdr.depth, hdr.escapeContextModel, hdr.tolerance,
             cfg.tableCap, cfg.counterCap);
    RangeDecoder dec(bytes.data() + kHeaderSize, bytes.size() - kHeaderSize);

    Stage1Table scratch;
    for (uint32_t j = 0; j < hdr.height; ++j) {
        for (uint32_t i = 0; i < hdr.width; ++i) {
            Models::PixelOutcome o;
            o.pat = extractPattern(img, i, j);
            PatternStore::Match match = m.store.findBest(o.pat);
            o.simLevel = match.level;
            o.stage1Attempted = match.dist != nullptr;

            Color c;
            if (match.dist) {
                buildStage1Table(*match.dist, escScaledWeight(m.stage1Esc.at(match.level)),
                                 scratch);
                uint32_t sym = decodeStage1Symbol(dec, scratch);
                if (sym < match.dist->size()) {
                    c = colorFromKey(match.dist->keyAt(sym));
                    o.stage = kStage1;
                }
            }

            if (o.stage != kStage1) {
                o.ctx = m.useCtxModel
                            ? EscapeContextModel::contextIndex(m.planes, i, j)
                            : match.level;
                if (!m.palette.empty()) {
                    o.wasNew = decodeScaledBool(
                        dec, escScaledWeight(m.stage2Counter(o.ctx, o.simLevel)));
                    if (!o.wasNew) {
                        size_t idx = m.palette.decodeIndex(dec);
                        c = colorFromKey(m.palette.keyAt(idx));
                        o.stage = kStage2;
                    }
                } else {
                    o.wasNew = true;
                }
                if (o.wasNew) {
                    c = decodeResidualPixel(dec, m.residual, img, m.planes, i, j,
                                            hdr.stage3Pruning);
                    o.stage = kStage3;
                }
            }

            img.at(i, j) = c;
            o.key = colorKey(c);
            m.finishPixel(i, j, c, o, img);
        }
        if (info && info->collectRowChecksums)
            info->rowChecksums.push_back(m.rowChecksum(j));
    }
    return img;
}

} // namespace scf
