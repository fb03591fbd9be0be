#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fixfree/word.hpp"

namespace fixfree {

// Packed bits, MSB-first within each byte. The final byte is zero padded and
// payload.size() == ceil(bit_count / 8).
struct BitStream {
    std::uint64_t bit_count = 0;
    std::vector<std::uint8_t> payload;

    unsigned bit(std::uint64_t i) const noexcept {
        return (payload[i >> 3] >> (7 - (i & 7))) & 1u;
    }

    friend bool operator==(const BitStream&, const BitStream&) = default;
};

class BitWriter {
public:
    void put_bit(unsigned b);
    void put(const Word& w);
    std::uint64_t bit_count() const noexcept { return stream_.bit_count; }
    BitStream finish() && { return std::move(stream_); }

private:
    BitStream stream_;
};

// File layout: "FXF1", bit_count as 8-byte big-endian, then the payload.
inline constexpr std::uint8_t kBitStreamMagic[4] = {'F', 'X', 'F', '1'};

std::vector<std::uint8_t> serialize(const BitStream& bits);
// Throws ParseError on a bad magic, a truncated or oversized payload, or
// nonzero padding bits.
BitStream parse_bitstream(std::span<const std::uint8_t> bytes);

}  // namespace fixfree
