#ifndef SCF_CORPUS_HPP
#define SCF_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "scf/image.hpp"

namespace scf {

// Deterministic synthetic screen-content corpus: flat fills, glyph-tiled
// text blocks, gradients and noisy "pictorial" patches, mixed so the images
// spread across the unique-color-fraction buckets.
struct CorpusSpec {
    int imageCount = 24;
    uint32_t minSize = 64;
    uint32_t maxSize = 160;
    double weightFlat = 1.0;
    double weightText = 1.0;
    double weightGradient = 1.0;
    double weightNoise = 1.0;
    uint64_t seed = 1;
};

struct CorpusEntry {
    std::string name;
    uint32_t width = 0;
    uint32_t height = 0;
    uint64_t uniqueColors = 0;
    double uniqueFraction = 0;
};

// Self-contained deterministic generator (splitmix64); identical output for
// identical spec across platforms and runs.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    uint32_t below(uint32_t n) { return n ? uint32_t(next() % n) : 0; }
    int range(int lo, int hi) { return lo + int(below(uint32_t(hi - lo + 1))); }
    double real() { return double(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

// The image for one corpus slot, independent of the others.
Image generateCorpusImage(const CorpusSpec& spec, int index);

uint64_t countUniqueColors(const Image& img);

// Writes img_NNN.ppm files plus manifest.txt and returns the manifest rows.
std::vector<CorpusEntry> generateCorpus(const CorpusSpec& spec,
                                        const std::filesystem::path& outDir);

} // namespace scf

#endif
