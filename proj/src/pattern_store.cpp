#include "scf/pattern_store.hpp"

namespace scf {

Pattern extractPattern(const Image& img, uint32_t i, uint32_t j) {
    Pattern pat;
    for (int p = 0; p < kPatternSize; ++p) {
        auto [dx, dy] = kTemplateOffsets[size_t(p)];
        pat.keys[size_t(p)] = colorKey(img.neighbor(i, j, dx, dy));
    }
    return pat;
}

void buildStage1Table(const ColorTable& dist, uint32_t escWeight, Stage1Table& out) {
    contractCheck(dist.size() > 0 && dist.total() > 0, "stage-1 table needs a nonempty context");
    const uint64_t mass = kScaledTotal - escWeight;
    const uint64_t n = dist.total();
    out.cum.resize(dist.size() + 2);
    uint32_t acc = 0;
    for (size_t s = 0; s < dist.size(); ++s) {
        out.cum[s] = acc;
        uint32_t w = uint32_t((uint64_t(dist.countAt(s)) * mass + n / 2) / n);
        acc += std::max(w, 1u);
    }
    out.cum[dist.size()] = acc;
    out.cum[dist.size() + 1] = acc + escWeight;
}

void encodeStage1Symbol(RangeEncoder& enc, const Stage1Table& tbl, uint32_t sym) {
    enc.encode(tbl.cum[sym], tbl.cum[sym + 1] - tbl.cum[sym], tbl.total());
}

uint32_t decodeStage1Symbol(RangeDecoder& dec, const Stage1Table& tbl) {
    uint32_t target = dec.decodeTarget(tbl.total());
    uint32_t sym = 0;
    while (tbl.cum[sym + 1] <= target) ++sym;
    dec.consume(tbl.cum[sym], tbl.cum[sym + 1] - tbl.cum[sym], tbl.total());
    return sym;
}

} // namespace scf
