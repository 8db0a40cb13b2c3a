#ifndef SCF_PATTERN_STORE_HPP
#define SCF_PATTERN_STORE_HPP

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "scf/freq.hpp"
#include "scf/image.hpp"

namespace scf {

// Causal context template around the current pixel X, nearest positions
// first. Sub-patterns take the first s entries.
//
//         F
//     C B D
//   E A X
constexpr std::array<std::pair<int, int>, 6> kTemplateOffsets = {{
    {-1, 0},  // A
    {0, -1},  // B
    {-1, -1}, // C
    {1, -1},  // D
    {-2, 0},  // E
    {0, -2},  // F
}};

constexpr int kPatternSize = 6;
constexpr int kMinSimilarity = 2; // sub-patterns shorter than 2 are not indexed

consteval bool allOffsetsCausal() {
    for (auto [dx, dy] : kTemplateOffsets)
        if (dy > 0 || (dy == 0 && dx >= 0)) return false;
    return true;
}
static_assert(allOffsetsCausal(), "template must only reach already-coded pixels");

struct Pattern {
    std::array<uint64_t, 6> keys{}; // packed colors at A..F

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

Pattern extractPattern(const Image& img, uint32_t i, uint32_t j);

struct SubPatternKey {
    std::array<uint64_t, 6> k{}; // positions past the level stay zero

    friend bool operator==(const SubPatternKey&, const SubPatternKey&) = default;
};

struct SubPatternHash {
    size_t operator()(const SubPatternKey& key) const {
        uint64_t h = 0x9E3779B97F4A7C15ull;
        for (uint64_t v : key.k) {
            h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xFF51AFD7ED558CCDull;
        }
        return size_t(h ^ (h >> 33));
    }
};

// Per-level histograms of colors seen after each sub-pattern. A match at
// level s means the first s template colors of the current pattern were seen
// verbatim before (component-quantized when a match tolerance is set).
class PatternStore {
public:
    explicit PatternStore(uint32_t tableCap = kTableCap, int tolerance = 0)
        : cap_(tableCap), quant_(uint32_t(tolerance) + 1) {}

    struct Match {
        int level = 0;                  // 0 = nothing stored matches
        const ColorTable* dist = nullptr;
    };

    // Deepest stored sub-pattern context matching pat.
    Match findBest(const Pattern& pat) const {
        SubPatternKey key = quantizedKey(pat, kPatternSize);
        for (int s = kPatternSize; s >= kMinSimilarity; --s) {
            auto it = maps_[s].find(key);
            if (it != maps_[s].end()) return Match{s, &it->second};
            key.k[size_t(s) - 1] = 0;
        }
        return Match{};
    }

    // Counts the coded color under every sub-pattern of pat.
    void update(const Pattern& pat, uint64_t color) {
        SubPatternKey key = quantizedKey(pat, kPatternSize);
        for (int s = kPatternSize; s >= kMinSimilarity; --s) {
            auto [it, inserted] = maps_[s].try_emplace(key, cap_);
            it->second.add(color);
            key.k[size_t(s) - 1] = 0;
        }
    }

    size_t levelSize(int s) const { return maps_[s].size(); }

private:
    SubPatternKey quantizedKey(const Pattern& pat, int level) const {
        SubPatternKey key;
        for (int p = 0; p < level; ++p) {
            uint64_t v = pat.keys[size_t(p)];
            if (quant_ > 1) {
                Color c = colorFromKey(v);
                v = colorKey(Color{uint16_t(c.r / quant_), uint16_t(c.g / quant_),
                                   uint16_t(c.b / quant_)});
            }
            key.k[size_t(p)] = v;
        }
        return key;
    }

    std::array<std::unordered_map<SubPatternKey, ColorTable, SubPatternHash>, 7> maps_;
    uint32_t cap_;
    uint32_t quant_;
};

// Stage-1 escape outcomes, conditioned on the similarity level of the match.
class Stage1EscapeModel {
public:
    explicit Stage1EscapeModel(uint32_t cap = kCounterCap) : cap_(cap) {}

    const BinaryCounter& at(int s) const { return bySim_[size_t(s)]; }
    void record(int s, bool escaped) { bySim_[size_t(s)].record(escaped, cap_); }

private:
    std::array<BinaryCounter, 7> bySim_{};
    uint32_t cap_;
};

// Composite coding table: the context's colors scaled into the mass left of
// the escape weight, floor 1 each, escape symbol last. Total lands near
// kScaledTotal.
struct Stage1Table {
    std::vector<uint32_t> cum; // size = colors + 2; cum.back() = total
    uint32_t escapeSymbol() const { return uint32_t(cum.size()) - 2; }
    uint32_t total() const { return cum.back(); }
};

void buildStage1Table(const ColorTable& dist, uint32_t escWeight, Stage1Table& out);

void encodeStage1Symbol(RangeEncoder& enc, const Stage1Table& tbl, uint32_t sym);
uint32_t decodeStage1Symbol(RangeDecoder& dec, const Stage1Table& tbl);

} // namespace scf

#endif
