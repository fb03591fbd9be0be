#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fixfree {

// Malformed text or binary input (files, flags, tokens).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A word length beyond the configured maximum.
class LengthCapExceeded : public std::runtime_error {
public:
    LengthCapExceeded(const std::string& what, unsigned length, unsigned cap)
        : std::runtime_error(what), length_(length), cap_(cap) {}

    unsigned length() const noexcept { return length_; }
    unsigned cap() const noexcept { return cap_; }

private:
    unsigned length_;
    unsigned cap_;
};

// An incremental frontier update was handed words that are not addable.
class ConstructionIntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Availability fell below demand during construction. Unreachable for inputs
// accepted by dispatch; seeing it means a bug.
class InternalCountingViolation : public std::logic_error {
public:
    InternalCountingViolation(const std::string& what, unsigned step)
        : std::logic_error(what), step_(step) {}

    unsigned step() const noexcept { return step_; }

private:
    unsigned step_;
};

class UnknownSymbol : public std::runtime_error {
public:
    UnknownSymbol(std::string token, std::size_t position)
        : std::runtime_error("unknown symbol '" + token + "' at position " +
                             std::to_string(position)),
          token_(std::move(token)),
          position_(position) {}

    const std::string& token() const noexcept { return token_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

enum class DecodeErrorKind { DanglingBits, NoMatch };

// Bit offset is measured from the start of the stream for forward decoding
// and from the end of the stream for backward decoding. It points at the
// first bit of the codeword that failed to parse.
class DecodeError : public std::runtime_error {
public:
    DecodeError(DecodeErrorKind kind, std::uint64_t offset, bool backward)
        : std::runtime_error(describe(kind, offset, backward)),
          kind_(kind),
          offset_(offset),
          backward_(backward) {}

    DecodeErrorKind kind() const noexcept { return kind_; }
    std::uint64_t offset() const noexcept { return offset_; }
    bool backward() const noexcept { return backward_; }

private:
    static std::string describe(DecodeErrorKind kind, std::uint64_t offset, bool backward) {
        std::string s = kind == DecodeErrorKind::DanglingBits ? "dangling bits" : "no codeword matches";
        s += " at bit offset " + std::to_string(offset);
        s += backward ? " from stream end" : " from stream start";
        return s;
    }

    DecodeErrorKind kind_;
    std::uint64_t offset_;
    bool backward_;
};

}  // namespace fixfree
