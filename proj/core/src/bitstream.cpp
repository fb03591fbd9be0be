#include "fixfree/bitstream.hpp"

#include <algorithm>
#include <string>

#include "fixfree/errors.hpp"

namespace fixfree {

void BitWriter::put_bit(unsigned b) {
    const unsigned shift = 7 - static_cast<unsigned>(stream_.bit_count & 7);
    if (shift == 7) stream_.payload.push_back(0);
    stream_.payload.back() |= static_cast<std::uint8_t>((b & 1u) << shift);
    ++stream_.bit_count;
}

void BitWriter::put(const Word& w) {
    for (unsigned i = 0; i < w.length(); ++i) put_bit(w.bit(i));
}

std::vector<std::uint8_t> serialize(const BitStream& bits) {
    std::vector<std::uint8_t> out(std::begin(kBitStreamMagic), std::end(kBitStreamMagic));
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>(bits.bit_count >> shift));
    }
    out.insert(out.end(), bits.payload.begin(), bits.payload.end());
    return out;
}

BitStream parse_bitstream(std::span<const std::uint8_t> bytes) {
    constexpr std::size_t kHeader = 12;
    if (bytes.size() < kHeader) throw ParseError("bitstream shorter than its 12-byte header");
    if (!std::equal(std::begin(kBitStreamMagic), std::end(kBitStreamMagic), bytes.begin())) {
        throw ParseError("bitstream magic is not FXF1");
    }
    BitStream out;
    for (std::size_t i = 4; i < kHeader; ++i) out.bit_count = (out.bit_count << 8) | bytes[i];

    const std::uint64_t expected = out.bit_count / 8 + (out.bit_count % 8 != 0);
    const std::size_t actual = bytes.size() - kHeader;
    if (actual != expected) {
        throw ParseError("bitstream payload is " + std::to_string(actual) + " bytes, expected " +
                         std::to_string(expected) + " for " + std::to_string(out.bit_count) +
                         " bits");
    }
    out.payload.assign(bytes.begin() + kHeader, bytes.end());
    if (const unsigned used = out.bit_count % 8; used != 0) {
        const std::uint8_t padding = out.payload.back() & static_cast<std::uint8_t>(0xFFu >> used);
        if (padding != 0) throw ParseError("bitstream padding bits are not zero");
    }
    return out;
}

}  // namespace fixfree
