#include "scf/palette.hpp"

#include <algorithm>

namespace scf {

namespace {

uint32_t excludedBelow(const Fenwick& counts, std::span<const size_t> excluded,
                       size_t idx) {
    uint32_t sum = 0;
    for (size_t e : excluded)
        if (e < idx) sum += counts.at(e);
    return sum;
}

bool isExcluded(std::span<const size_t> excluded, size_t idx) {
    return std::find(excluded.begin(), excluded.end(), idx) != excluded.end();
}

} // namespace

uint32_t Palette::effectiveTotal(std::span<const size_t> excluded) const {
    uint32_t t = total_;
    for (size_t e : excluded) t -= counts_.at(e);
    return t;
}

void Palette::encodeIndex(RangeEncoder& enc, size_t idx,
                          std::span<const size_t> excluded) const {
    uint32_t t = effectiveTotal(excluded);
    contractCheck(t > 0, "palette distribution is empty");
    contractCheck(!isExcluded(excluded, idx), "cannot encode an excluded palette entry");
    uint32_t freq = counts_.at(idx);
    uint32_t cum = counts_.prefix(idx) - excludedBelow(counts_, excluded, idx);
    enc.encode(cum, freq, t);
}

size_t Palette::decodeIndex(RangeDecoder& dec, std::span<const size_t> excluded) const {
    uint32_t t = effectiveTotal(excluded);
    contractCheck(t > 0, "palette distribution is empty");
    uint32_t target = dec.decodeTarget(t);
    size_t idx;
    if (excluded.empty()) {
        idx = counts_.findPrefix(target);
    } else {
        // Exclusions shift the cumulative axis; scan it directly. Only the
        // excluded-variant tests take this path, with small palettes.
        uint32_t cum = 0;
        idx = order_.size();
        for (size_t n = 0; n < order_.size(); ++n) {
            if (isExcluded(excluded, n)) continue;
            uint32_t c = counts_.at(n);
            if (target < cum + c) {
                idx = n;
                break;
            }
            cum += c;
        }
        contractCheck(idx < order_.size(), "palette decode target out of range");
    }
    uint32_t freq = counts_.at(idx);
    uint32_t cum = counts_.prefix(idx) - excludedBelow(counts_, excluded, idx);
    dec.consume(cum, freq, t);
    return idx;
}

} // namespace scf
