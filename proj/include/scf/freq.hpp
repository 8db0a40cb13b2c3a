#ifndef SCF_FREQ_HPP
#define SCF_FREQ_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "scf/range_coder.hpp"

namespace scf {

// Adaptive table caps. Halving with round-up keeps live symbols at count >= 1.
constexpr uint32_t kTableCap = 1u << 16;   // color / error histograms
constexpr uint32_t kCounterCap = 1u << 10; // binary decision counters
constexpr uint32_t kScaledTotal = 1u << 12; // escape-weight realization total

constexpr uint32_t halveCeil(uint32_t n) { return (n + 1) / 2; }

// Dense adaptive histogram over a fixed alphabet [0, size).
//
// Live symbols keep count >= 1 across rescales, so once the number of live
// symbols outgrows the configured cap the cap cannot be met; the effective
// cap then tracks 2x the live count, which keeps rescaling amortized O(1)
// and changes nothing in the normal regime.
class Histogram {
public:
    explicit Histogram(uint32_t size, uint32_t cap = kTableCap)
        : counts_(size, 0), cap_(cap) {}

    uint32_t size() const { return uint32_t(counts_.size()); }
    uint32_t count(uint32_t i) const { return counts_[i]; }
    uint32_t total() const { return total_; }
    uint64_t increments() const { return increments_; }

    void add(uint32_t i) {
        if (total_ + 1 > std::max(cap_, 2 * live_)) rescale();
        if (counts_[i] == 0) ++live_;
        ++counts_[i];
        ++total_;
        ++increments_;
    }

    void rescale() {
        total_ = 0;
        for (auto& c : counts_) {
            c = halveCeil(c);
            total_ += c;
        }
    }

private:
    std::vector<uint32_t> counts_;
    uint32_t total_ = 0;
    uint32_t live_ = 0;
    uint64_t increments_ = 0;
    uint32_t cap_;
};

// Sparse adaptive histogram keyed by packed colors, in first-seen order.
// Symbol numbering is that insertion order, which both codec sides replay
// identically.
class ColorTable {
public:
    explicit ColorTable(uint32_t cap = kTableCap) : cap_(cap) {}

    int find(uint64_t key) const {
        for (size_t n = 0; n < entries_.size(); ++n)
            if (entries_[n].first == key) return int(n);
        return -1;
    }

    void add(uint64_t key) {
        if (total_ + 1 > std::max(cap_, 2 * uint32_t(entries_.size()))) rescale();
        int idx = find(key);
        if (idx < 0)
            entries_.emplace_back(key, 1);
        else
            ++entries_[size_t(idx)].second;
        ++total_;
    }

    void rescale() {
        total_ = 0;
        for (auto& e : entries_) {
            e.second = halveCeil(e.second);
            total_ += e.second;
        }
    }

    size_t size() const { return entries_.size(); }
    uint64_t keyAt(size_t i) const { return entries_[i].first; }
    uint32_t countAt(size_t i) const { return entries_[i].second; }
    uint32_t total() const { return total_; }

private:
    std::vector<std::pair<uint64_t, uint32_t>> entries_;
    uint32_t total_ = 0;
    uint32_t cap_;
};

// true/false occurrence counts with halving once nTotal reaches the cap.
struct BinaryCounter {
    uint32_t nTrue = 0;
    uint32_t nTotal = 0;

    void record(bool b, uint32_t cap) {
        if (nTotal + 1 > cap) {
            nTrue = halveCeil(nTrue);
            nTotal = halveCeil(nTotal);
        }
        ++nTotal;
        if (b) ++nTrue;
    }

    // Laplace-smoothed estimate (nTrue+1)/(nTotal+2).
    double smoothed() const { return double(nTrue + 1) / double(nTotal + 2); }
};

// Smoothed probability realized as an integer weight out of kScaledTotal,
// clamped so both outcomes stay encodable.
inline uint32_t escScaledWeight(const BinaryCounter& c) {
    uint64_t den = uint64_t(c.nTotal) + 2;
    uint64_t num = uint64_t(kScaledTotal) * (c.nTrue + 1) + den / 2;
    return std::clamp(uint32_t(num / den), 1u, kScaledTotal - 1);
}

// Binary events coded straight from the counter's smoothed probability:
// table {false: nTotal-nTrue+1, true: nTrue+1}.
inline void encodeBinary(RangeEncoder& enc, const BinaryCounter& c, bool b) {
    uint32_t t = c.nTrue + 1;
    uint32_t total = c.nTotal + 2;
    uint32_t f = total - t;
    if (b)
        enc.encode(f, t, total);
    else
        enc.encode(0, f, total);
}

inline bool decodeBinary(RangeDecoder& dec, const BinaryCounter& c) {
    uint32_t t = c.nTrue + 1;
    uint32_t total = c.nTotal + 2;
    uint32_t f = total - t;
    bool b = dec.decodeTarget(total) >= f;
    dec.consume(b ? f : 0, b ? t : f, total);
    return b;
}

// Binary event at a fixed weight wTrue / kScaledTotal.
inline void encodeScaledBool(RangeEncoder& enc, uint32_t wTrue, bool b) {
    uint32_t f = kScaledTotal - wTrue;
    if (b)
        enc.encode(f, wTrue, kScaledTotal);
    else
        enc.encode(0, f, kScaledTotal);
}

inline bool decodeScaledBool(RangeDecoder& dec, uint32_t wTrue) {
    uint32_t f = kScaledTotal - wTrue;
    bool b = dec.decodeTarget(kScaledTotal) >= f;
    dec.consume(b ? f : 0, b ? wTrue : f, kScaledTotal);
    return b;
}

// Fenwick tree over nonnegative counts, with append and prefix search.
class Fenwick {
public:
    size_t size() const { return tree_.size(); }

    void append(uint32_t v) {
        size_t i = tree_.size() + 1;
        size_t low = i & (~i + 1);
        uint32_t below = prefix(i - 1) - prefix(i - low);
        tree_.push_back(below + v);
    }

    void add(size_t idx, uint32_t d) {
        for (size_t i = idx + 1; i <= tree_.size(); i += i & (~i + 1)) tree_[i - 1] += d;
    }

    // Sum of counts [0, n).
    uint32_t prefix(size_t n) const {
        uint32_t s = 0;
        for (size_t i = n; i > 0; i -= i & (~i + 1)) s += tree_[i - 1];
        return s;
    }

    uint32_t at(size_t idx) const { return prefix(idx + 1) - prefix(idx); }

    // Largest idx with prefix(idx) <= target. With all counts positive this
    // is the symbol whose cumulative interval contains target.
    size_t findPrefix(uint32_t target) const {
        size_t idx = 0;
        size_t step = 1;
        while (step * 2 <= tree_.size()) step *= 2;
        uint32_t rem = target;
        for (; step > 0; step >>= 1) {
            size_t next = idx + step;
            if (next <= tree_.size() && tree_[next - 1] <= rem) {
                idx = next;
                rem -= tree_[next - 1];
            }
        }
        return idx;
    }

    void assign(const std::vector<uint32_t>& counts) {
        tree_.clear();
        tree_.reserve(counts.size());
        for (uint32_t v : counts) append(v);
    }

private:
    std::vector<uint32_t> tree_;
};

} // namespace scf

#endif
