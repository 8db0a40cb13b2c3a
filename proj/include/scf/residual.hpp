#ifndef SCF_RESIDUAL_HPP
#define SCF_RESIDUAL_HPP

#include <array>
#include <cstdint>

#include "scf/freq.hpp"
#include "scf/image.hpp"

namespace scf {

// Median adaptive predictor (median edge detector).
inline int medPredict(int left, int top, int topLeft) {
    int lo = left < top ? left : top;
    int hi = left < top ? top : left;
    if (topLeft >= hi) return lo;
    if (topLeft <= lo) return hi;
    return left + top - topLeft;
}

// Candidate predictors for the component-wise adaptation, in tie-break order.
enum class Predictor { Med = 0, Left, Top, TopLeft, Planar };
constexpr int kPredictorCount = 5;

// Planar is clamped so every prediction (and thus every stored error) stays
// inside the component range.
inline int applyPredictor(Predictor p, int left, int top, int topLeft, int maxValue) {
    switch (p) {
    case Predictor::Med: return medPredict(left, top, topLeft);
    case Predictor::Left: return left;
    case Predictor::Top: return top;
    case Predictor::TopLeft: return topLeft;
    case Predictor::Planar: {
        int v = left + top - topLeft;
        return v < 0 ? 0 : (v > maxValue ? maxValue : v);
    }
    }
    return 0;
}

// Index of the predictor with the smallest absolute error on the given
// component values; ties go to the lowest index.
inline int bestPredictorIndex(int actual, int left, int top, int topLeft, int maxValue) {
    int best = 0;
    int bestErr = 1 << 30;
    for (int p = 0; p < kPredictorCount; ++p) {
        int e = actual - applyPredictor(Predictor(p), left, top, topLeft, maxValue);
        if (e < 0) e = -e;
        if (e < bestErr) {
            bestErr = e;
            best = p;
        }
    }
    return best;
}

// One more than the largest absolute med-predictor error among the four
// causal neighbors (left, top-left, top, top-right); off-image errors are 0.
inline int adaptiveRange(const SidePlanes& planes, int k, uint32_t i, uint32_t j) {
    int64_t x = i, y = j;
    int m = 0;
    for (auto [dx, dy] : {std::pair{-1, 0}, {-1, -1}, {0, -1}, {1, -1}}) {
        int e = planes.mapError(k, x + dx, y + dy);
        if (e < 0) e = -e;
        if (e > m) m = e;
    }
    return m + 1;
}

// Maps an out-of-range error |e| > r onto the contiguous interval
// [-eMax + r, eMax - r - 1] by removing the +-(r+1) offset.
inline int foldOutOfRange(int e, int r) {
    contractCheck(e < -r || e > r, "foldOutOfRange requires |e| > r");
    return e <= 0 ? e + r : e - r - 1;
}

inline int unfoldOutOfRange(int v, int r) { return v < 0 ? v - r : v + r + 1; }

// Histogram coding restricted to error window [lo, hi]; in-window symbols of
// count zero get floor weight 1 so they stay codable. bias maps error values
// to histogram bins (bin = value + bias).
void encodeWindowed(RangeEncoder& enc, const Histogram& h, int lo, int hi, int value,
                    int bias);
int decodeWindowed(RangeDecoder& dec, const Histogram& h, int lo, int hi, int bias);

// Stage-3 state: per component, the three error histograms of the pruning
// scheme plus the in/out decision counters.
class ResidualModel {
public:
    ResidualModel(int depth, uint32_t tableCap = kTableCap,
                  uint32_t counterCap = kCounterCap);

    int eMax() const { return eMax_; }
    int threshold() const { return threshold_; }

    Histogram& inRange(int k) { return inRange_[size_t(k)]; }
    Histogram& outOfRange(int k) { return outOfRange_[size_t(k)]; }
    Histogram& caseThree(int k) { return caseThree_[size_t(k)]; }
    const Histogram& inRange(int k) const { return inRange_[size_t(k)]; }
    const Histogram& outOfRange(int k) const { return outOfRange_[size_t(k)]; }
    const Histogram& caseThree(int k) const { return caseThree_[size_t(k)]; }
    BinaryCounter& decision(int k) { return decision_[size_t(k)]; }
    const BinaryCounter& decision(int k) const { return decision_[size_t(k)]; }
    uint32_t counterCap() const { return counterCap_; }

private:
    int eMax_;
    int threshold_;
    std::array<Histogram, 3> inRange_;
    std::array<Histogram, 3> outOfRange_;
    std::array<Histogram, 3> caseThree_;
    std::array<BinaryCounter, 3> decision_{};
    uint32_t counterCap_;
};

// Codes all three components of a new-color pixel. With pruning disabled,
// every component takes the case-3 path. The decoder returns the
// reconstructed color and throws CorruptStreamError if a component falls
// outside the valid range.
void encodeResidualPixel(RangeEncoder& enc, ResidualModel& model, const Image& img,
                         const SidePlanes& planes, uint32_t i, uint32_t j,
                         bool pruningEnabled);
Color decodeResidualPixel(RangeDecoder& dec, ResidualModel& model, const Image& img,
                          const SidePlanes& planes, uint32_t i, uint32_t j,
                          bool pruningEnabled);

} // namespace scf

#endif
