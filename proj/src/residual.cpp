#include "scf/residual.hpp"

namespace scf {

void encodeWindowed(RangeEncoder& enc, const Histogram& h, int lo, int hi, int value,
                    int bias) {
    contractCheck(lo <= value && value <= hi, "symbol outside coding window");
    contractCheck(lo + bias >= 0 && uint32_t(hi + bias) < h.size(),
                  "window outside histogram");
    uint32_t cum = 0;
    for (int v = lo; v < value; ++v) {
        uint32_t c = h.count(uint32_t(v + bias));
        cum += c > 0 ? c : 1;
    }
    uint32_t freqV = h.count(uint32_t(value + bias));
    if (freqV == 0) freqV = 1;
    uint32_t total = cum + freqV;
    for (int v = value + 1; v <= hi; ++v) {
        uint32_t c = h.count(uint32_t(v + bias));
        total += c > 0 ? c : 1;
    }
    enc.encode(cum, freqV, total);
}

int decodeWindowed(RangeDecoder& dec, const Histogram& h, int lo, int hi, int bias) {
    contractCheck(lo <= hi && lo + bias >= 0 && uint32_t(hi + bias) < h.size(),
                  "window outside histogram");
    uint32_t total = 0;
    for (int v = lo; v <= hi; ++v) {
        uint32_t c = h.count(uint32_t(v + bias));
        total += c > 0 ? c : 1;
    }
    uint32_t target = dec.decodeTarget(total);
    uint32_t cum = 0;
    int value = lo;
    for (;; ++value) {
        uint32_t c = h.count(uint32_t(value + bias));
        if (c == 0) c = 1;
        if (target < cum + c) {
            dec.consume(cum, c, total);
            return value;
        }
        cum += c;
    }
}

ResidualModel::ResidualModel(int depth, uint32_t tableCap, uint32_t counterCap)
    : eMax_((1 << depth) - 1),
      threshold_(((1 << depth) - 1) / 36),
      inRange_{Histogram(uint32_t(2 * eMax_ + 1), tableCap),
               Histogram(uint32_t(2 * eMax_ + 1), tableCap),
               Histogram(uint32_t(2 * eMax_ + 1), tableCap)},
      outOfRange_{Histogram(uint32_t(2 * eMax_ + 1), tableCap),
                  Histogram(uint32_t(2 * eMax_ + 1), tableCap),
                  Histogram(uint32_t(2 * eMax_ + 1), tableCap)},
      caseThree_{Histogram(uint32_t(2 * eMax_ + 1), tableCap),
                 Histogram(uint32_t(2 * eMax_ + 1), tableCap),
                 Histogram(uint32_t(2 * eMax_ + 1), tableCap)},
      counterCap_(counterCap) {}

namespace {

struct ComponentNeighbors {
    int left;
    int top;
    int topLeft;
};

ComponentNeighbors neighborsOf(const Image& img, uint32_t i, uint32_t j, int k) {
    return {img.neighbor(i, j, -1, 0).component(k), img.neighbor(i, j, 0, -1).component(k),
            img.neighbor(i, j, -1, -1).component(k)};
}

} // namespace

void encodeResidualPixel(RangeEncoder& enc, ResidualModel& model, const Image& img,
                         const SidePlanes& planes, uint32_t i, uint32_t j,
                         bool pruningEnabled) {
    const int eMax = model.eMax();
    const Color& c = img.at(i, j);
    int prevBest = 0; // predictor that fit the previously coded component
    for (int k = 0; k < 3; ++k) {
        const ComponentNeighbors nb = neighborsOf(img, i, j, k);
        const int x = c.component(k);
        const int predMap = medPredict(nb.left, nb.top, nb.topLeft);
        const int e = x - predMap;
        const int r = adaptiveRange(planes, k, i, j);
        if (pruningEnabled && r <= model.threshold()) {
            const bool inRange = (e >= -r && e <= r);
            encodeBinary(enc, model.decision(k), inRange);
            if (inRange) {
                encodeWindowed(enc, model.inRange(k), -r, r, e, eMax);
                model.inRange(k).add(uint32_t(e + eMax));
            } else {
                const int folded = foldOutOfRange(e, r);
                encodeWindowed(enc, model.outOfRange(k), -eMax + r, eMax - r - 1, folded,
                               eMax);
                model.outOfRange(k).add(uint32_t(folded + eMax));
            }
            model.decision(k).record(inRange, model.counterCap());
        } else {
            const Predictor p = k == 0 ? Predictor::Med : Predictor(prevBest);
            const int predC = applyPredictor(p, nb.left, nb.top, nb.topLeft, eMax);
            const int ec = x - predC;
            encodeWindowed(enc, model.caseThree(k), -eMax, eMax, ec, eMax);
            model.caseThree(k).add(uint32_t(ec + eMax));
        }
        if (k < 2) prevBest = bestPredictorIndex(x, nb.left, nb.top, nb.topLeft, eMax);
    }
}

Color decodeResidualPixel(RangeDecoder& dec, ResidualModel& model, const Image& img,
                          const SidePlanes& planes, uint32_t i, uint32_t j,
                          bool pruningEnabled) {
    const int eMax = model.eMax();
    Color c;
    int prevBest = 0;
    for (int k = 0; k < 3; ++k) {
        const ComponentNeighbors nb = neighborsOf(img, i, j, k);
        const int predMap = medPredict(nb.left, nb.top, nb.topLeft);
        const int r = adaptiveRange(planes, k, i, j);
        int x;
        if (pruningEnabled && r <= model.threshold()) {
            const bool inRange = decodeBinary(dec, model.decision(k));
            if (inRange) {
                const int e = decodeWindowed(dec, model.inRange(k), -r, r, eMax);
                model.inRange(k).add(uint32_t(e + eMax));
                x = predMap + e;
            } else {
                const int folded =
                    decodeWindowed(dec, model.outOfRange(k), -eMax + r, eMax - r - 1, eMax);
                model.outOfRange(k).add(uint32_t(folded + eMax));
                x = predMap + unfoldOutOfRange(folded, r);
            }
            model.decision(k).record(inRange, model.counterCap());
        } else {
            const Predictor p = k == 0 ? Predictor::Med : Predictor(prevBest);
            const int predC = applyPredictor(p, nb.left, nb.top, nb.topLeft, eMax);
            const int ec = decodeWindowed(dec, model.caseThree(k), -eMax, eMax, eMax);
            model.caseThree(k).add(uint32_t(ec + eMax));
            x = predC + ec;
        }
        if (x < 0 || x > eMax)
            throw CorruptStreamError("decoded component value out of range");
        c.setComponent(k, uint16_t(x));
        if (k < 2) prevBest = bestPredictorIndex(x, nb.left, nb.top, nb.topLeft, eMax);
    }
    return c;
}

} // namespace scf
