#ifndef SCF_PALETTE_HPP
#define SCF_PALETTE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "scf/freq.hpp"
#include "scf/image.hpp"
#include "scf/pattern_store.hpp"

namespace scf {

// Global color-occurrence model. Symbol numbering is palette insertion
// order; counts live in a Fenwick tree so coding stays O(log n) even for
// many-color images.
class Palette {
public:
    explicit Palette(uint32_t cap = kTableCap) : cap_(cap) {}

    bool empty() const { return order_.empty(); }
    size_t size() const { return order_.size(); }
    uint32_t total() const { return total_; }
    uint64_t keyAt(size_t idx) const { return order_[idx]; }
    uint32_t countAt(size_t idx) const { return counts_.at(idx); }

    int find(uint64_t key) const {
        auto it = index_.find(key);
        return it == index_.end() ? -1 : int(it->second);
    }

    void add(uint64_t key) {
        if (total_ + 1 > std::max(cap_, 2 * uint32_t(order_.size()))) rescale();
        auto it = index_.find(key);
        if (it == index_.end()) {
            index_.emplace(key, uint32_t(order_.size()));
            order_.push_back(key);
            counts_.append(1);
        } else {
            counts_.add(it->second, 1);
        }
        ++total_;
    }

    void rescale() {
        std::vector<uint32_t> halved(order_.size());
        total_ = 0;
        for (size_t n = 0; n < order_.size(); ++n) {
            halved[n] = halveCeil(counts_.at(n));
            total_ += halved[n];
        }
        counts_.assign(halved);
    }

    // Codes a palette index against the occurrence counts, optionally with
    // some indices removed from the distribution. The excluded set is meant
    // to stay small; the default path passes none.
    void encodeIndex(RangeEncoder& enc, size_t idx,
                     std::span<const size_t> excluded = {}) const;
    size_t decodeIndex(RangeDecoder& dec, std::span<const size_t> excluded = {}) const;

    // Distribution total after exclusions; 0 means nothing is codable.
    uint32_t effectiveTotal(std::span<const size_t> excluded = {}) const;

private:
    std::vector<uint64_t> order_;
    std::unordered_map<uint64_t, uint32_t> index_;
    Fenwick counts_;
    uint32_t total_ = 0;
    uint32_t cap_;
};

// New-color occurrence counts under 64 neighborhood contexts: one bit per
// template position, A = bit 0 ... F = bit 5, set iff that neighbor was a
// previously unseen color when it was coded.
class EscapeContextModel {
public:
    static constexpr int kContexts = 64;

    explicit EscapeContextModel(uint32_t cap = kCounterCap) : cap_(cap) {}

    static int contextIndex(const SidePlanes& planes, uint32_t i, uint32_t j) {
        int ctx = 0;
        for (int p = 0; p < kPatternSize; ++p) {
            auto [dx, dy] = kTemplateOffsets[size_t(p)];
            if (planes.newColor(int64_t(i) + dx, int64_t(j) + dy)) ctx |= 1 << p;
        }
        return ctx;
    }

    const BinaryCounter& at(int ctx) const { return ctx_[size_t(ctx)]; }
    void record(int ctx, bool wasNew) { ctx_[size_t(ctx)].record(wasNew, cap_); }

private:
    std::array<BinaryCounter, kContexts> ctx_{};
    uint32_t cap_;
};

} // namespace scf

#endif
