#ifndef SCF_RANGE_CODER_HPP
#define SCF_RANGE_CODER_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "scf/errors.hpp"

namespace scf {

// Multi-symbol range coder with a 48-bit register, byte renormalization and
// LZMA-style carry propagation. Renormalizing at 2^40 keeps range/total at
// 2^24 or more for totals up to 2^16, so quantization costs stay below 1e-7
// bit per symbol; total structural overhead of a stream is ~24 bits (one
// leading pad byte, two flush bytes, final-interval slack).
//
// Symbols are intervals on a cumulative count axis: encode(cumLow, freq,
// total) codes the event [cumLow, cumLow+freq) / total. The decoder is the
// exact inverse given an identical sequence of (cumLow, freq, total) calls.
// Integer arithmetic only; the cost accumulator is observation, not state.
class RangeEncoder {
public:
    static constexpr uint64_t kTop = 1ull << 40;
    static constexpr uint64_t kMask = (1ull << 48) - 1;
    // Headroom for tables whose alphabet outgrows the nominal 2^16 cap
    // (degenerate many-color inputs); still 2^14 below the renorm floor.
    static constexpr uint32_t kMaxTotal = 1u << 26;

    explicit RangeEncoder(std::vector<uint8_t>& out) : out_(&out) {}

    void encode(uint32_t cumLow, uint32_t freq, uint32_t total) {
        contractCheck(freq > 0, "cannot encode a zero-count symbol");
        contractCheck(uint64_t(cumLow) + freq <= total && total > 0 && total < kMaxTotal,
                      "bad frequency interval");
        const uint64_t before = range_;
        const uint64_t q = range_ / total;
        low_ += q * cumLow;
        // The top symbol absorbs the division remainder.
        range_ = (cumLow + freq == total) ? range_ - q * cumLow : q * freq;
        costBits_ += std::log2(double(before) / double(range_));
        while (range_ < kTop) {
            shiftLow();
            range_ <<= 8;
        }
    }

    // Seals the stream. Rounds low up to a multiple of 2^40 inside the final
    // interval, so the two emitted bytes plus implicit zero padding pin a
    // value the decoder can reproduce. No encodes may follow.
    void finish() {
        uint64_t rounded = (low_ + (kTop - 1)) & ~(kTop - 1);
        low_ = rounded; // may carry into bit 48; shiftLow resolves it
        shiftLow();
        shiftLow();
    }

    // Exact fractional cost of everything encoded so far; the payload length
    // equals this plus the constant structural overhead.
    double costBits() const { return costBits_; }

private:
    void shiftLow() {
        // Release pending bytes unless a later carry could still reach them.
        if ((low_ >> 48) != 0 || (low_ & kMask) < 0xFF0000000000ull) {
            const uint8_t carry = uint8_t(low_ >> 48);
            uint8_t b = cache_;
            do {
                out_->push_back(uint8_t(b + carry));
                b = 0xFF;
            } while (--pending_ != 0);
            cache_ = uint8_t(low_ >> 40);
        }
        ++pending_;
        low_ = (low_ << 8) & kMask;
    }

    std::vector<uint8_t>* out_;
    uint64_t low_ = 0;
    uint64_t range_ = kMask;
    uint8_t cache_ = 0;
    uint64_t pending_ = 1; // leading pad byte; the decoder discards it
    double costBits_ = 0.0;
};

class RangeDecoder {
public:
    static constexpr uint64_t kTop = RangeEncoder::kTop;
    static constexpr uint64_t kMask = RangeEncoder::kMask;
    // A well-formed stream never reads more than 5 bytes past its end (the
    // flush writes only the top 16 of 48 register bits). Anything beyond
    // that is a truncated or corrupt stream.
    static constexpr uint32_t kMaxPadding = 16;

    RangeDecoder(const uint8_t* data, size_t size) : data_(data), size_(size) {
        nextByte(); // leading pad byte
        for (int i = 0; i < 6; ++i) code_ = (code_ << 8) | nextByte();
    }

    // Cumulative-axis position of the next symbol. Must be followed by a
    // consume() with the located symbol's interval and the same total.
    uint32_t decodeTarget(uint32_t total) {
        contractCheck(total > 0 && total < RangeEncoder::kMaxTotal, "bad table total");
        q_ = range_ / total;
        uint64_t t = code_ / q_;
        return uint32_t(t < total ? t : total - 1);
    }

    void consume(uint32_t cumLow, uint32_t freq, uint32_t total) {
        code_ -= q_ * cumLow;
        range_ = (cumLow + freq == total) ? range_ - q_ * cumLow : q_ * freq;
        while (range_ < kTop) {
            code_ = (code_ << 8) | nextByte();
            range_ <<= 8;
        }
    }

private:
    uint8_t nextByte() {
        if (pos_ < size_) return data_[pos_++];
        if (++padding_ > kMaxPadding)
            throw CorruptStreamError("arithmetic payload exhausted prematurely");
        return 0;
    }

    const uint8_t* data_;
    size_t size_;
    size_t pos_ = 0;
    uint32_t padding_ = 0;
    uint64_t code_ = 0;
    uint64_t range_ = kMask;
    uint64_t q_ = 1;
};

} // namespace scf

#endif
