#include "fixfree/codec.hpp"

#include <algorithm>
#include <stdexcept>

#include "fixfree/errors.hpp"

namespace fixfree {

namespace {

bool valid_symbol(std::string_view s) {
    if (s.empty()) return false;
    return std::none_of(s.begin(), s.end(), [](char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' || c == '#';
    });
}

}  // namespace

CodeTable::CodeTable(std::vector<CodeTableEntry> entries) : entries_(std::move(entries)) {
    forward_.emplace_back();
    backward_.emplace_back();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const CodeTableEntry& e = entries_[i];
        if (!valid_symbol(e.symbol)) {
            throw std::invalid_argument("invalid symbol '" + e.symbol + "'");
        }
        if (!index_.emplace(e.symbol, i).second) {
            throw std::invalid_argument("duplicate symbol '" + e.symbol + "'");
        }
        insert(forward_, e.word, static_cast<std::int32_t>(i), false);
        insert(backward_, e.word, static_cast<std::int32_t>(i), true);
    }
}

void CodeTable::insert(Trie& trie, const Word& w, std::int32_t entry, bool reversed) {
    const char* relation = reversed ? "suffix" : "prefix";
    std::int32_t node = 0;
    for (unsigned i = 0; i < w.length(); ++i) {
        if (trie[node].entry >= 0) {
            throw std::invalid_argument("codeword " + entries_[trie[node].entry].word.to_string() +
                                        " is a " + relation + " of " + w.to_string());
        }
        const unsigned b = reversed ? w.bit(w.length() - 1 - i) : w.bit(i);
        if (trie[node].child[b] < 0) {
            trie[node].child[b] = static_cast<std::int32_t>(trie.size());
            trie.emplace_back();
        }
        node = trie[node].child[b];
    }
    if (trie[node].entry >= 0) {
        throw std::invalid_argument("duplicate codeword " + w.to_string());
    }
    if (trie[node].child[0] >= 0 || trie[node].child[1] >= 0) {
        throw std::invalid_argument("codeword " + w.to_string() + " is a " + relation +
                                    " of another codeword");
    }
    trie[node].entry = entry;
}

std::optional<Word> CodeTable::word_of(std::string_view symbol) const {
    const auto it = index_.find(std::string(symbol));
    if (it == index_.end()) return std::nullopt;
    return entries_[it->second].word;
}

Code CodeTable::code() const {
    std::vector<Word> words;
    words.reserve(entries_.size());
    for (const auto& e : entries_) words.push_back(e.word);
    return Code(std::move(words));
}

BitStream encode(const CodeTable& table, std::span<const std::string> msg) {
    BitWriter out;
    for (std::size_t i = 0; i < msg.size(); ++i) {
        const auto it = table.index_.find(msg[i]);
        if (it == table.index_.end()) throw UnknownSymbol(msg[i], i);
        out.put(table.entries_[it->second].word);
    }
    return std::move(out).finish();
}

std::vector<std::string> decode_forward(const CodeTable& table, const BitStream& bits) {
    std::vector<std::string> out;
    const auto& trie = table.forward_;
    std::uint64_t pos = 0;
    while (pos < bits.bit_count) {
        const std::uint64_t start = pos;
        std::int32_t node = 0;
        while (trie[node].entry < 0) {
            if (pos == bits.bit_count) throw DecodeError(DecodeErrorKind::DanglingBits, start, false);
            node = trie[node].child[bits.bit(pos++)];
            if (node < 0) throw DecodeError(DecodeErrorKind::NoMatch, start, false);
        }
        out.push_back(table.entries_[trie[node].entry].symbol);
    }
    return out;
}

std::vector<std::string> decode_backward(const CodeTable& table, const BitStream& bits) {
    std::vector<std::string> out;
    const auto& trie = table.backward_;
    std::uint64_t consumed = 0;  // bits taken from the end
    while (consumed < bits.bit_count) {
        const std::uint64_t start = consumed;
        std::int32_t node = 0;
        while (trie[node].entry < 0) {
            if (consumed == bits.bit_count) throw DecodeError(DecodeErrorKind::DanglingBits, start, true);
            node = trie[node].child[bits.bit(bits.bit_count - 1 - consumed++)];
            if (node < 0) throw DecodeError(DecodeErrorKind::NoMatch, start, true);
        }
        out.push_back(table.entries_[trie[node].entry].symbol);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace fixfree
