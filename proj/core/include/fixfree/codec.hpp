#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fixfree/bitstream.hpp"
#include "fixfree/code.hpp"
#include "fixfree/word.hpp"

namespace fixfree {

struct CodeTableEntry {
    std::string symbol;
    Word word;

    friend bool operator==(const CodeTableEntry&, const CodeTableEntry&) = default;
};

// A symbol <-> codeword bijection over a fix-free code. Holds one trie over
// the codewords for forward decoding and one over the reversed codewords for
// backward decoding.
class CodeTable {
public:
    // Throws std::invalid_argument if a symbol is empty, contains whitespace
    // or '#', repeats, or if the words are not fix-free.
    explicit CodeTable(std::vector<CodeTableEntry> entries);

    std::span<const CodeTableEntry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::optional<Word> word_of(std::string_view symbol) const;
    Code code() const;

private:
    struct Node {
        std::int32_t child[2] = {-1, -1};
        std::int32_t entry = -1;
    };
    using Trie = std::vector<Node>;

    void insert(Trie& trie, const Word& w, std::int32_t entry, bool reversed);

    friend BitStream encode(const CodeTable&, std::span<const std::string>);
    friend std::vector<std::string> decode_forward(const CodeTable&, const BitStream&);
    friend std::vector<std::string> decode_backward(const CodeTable&, const BitStream&);

    std::vector<CodeTableEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
    Trie forward_;
    Trie backward_;
};

// Concatenates the codewords of msg. Throws UnknownSymbol.
BitStream encode(const CodeTable& table, std::span<const std::string> msg);
// Left-to-right parse. Throws DecodeError.
std::vector<std::string> decode_forward(const CodeTable& table, const BitStream& bits);
// Right-to-left parse; returns symbols in message order. Throws DecodeError
// with offsets counted from the end of the stream.
std::vector<std::string> decode_backward(const CodeTable& table, const BitStream& bits);

}  // namespace fixfree
