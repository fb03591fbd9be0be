#include "fixfree/text_format.hpp"

#include <charconv>
#include <cstdlib>
#include <unordered_set>

#include "fixfree/errors.hpp"

namespace fixfree {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        const std::size_t start = i;
        while (i < s.size() && !is_space(s[i])) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

// Calls fn(line_number, tokens) for every line holding something besides
// comments and whitespace.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_ws(line);
        if (!tokens.empty()) fn(line_no, tokens);
    }
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

LengthVector parse_length_vector(std::string_view text) {
    std::vector<std::uint64_t> counts;
    for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
        for (std::string_view tok : tokens) {
            std::uint64_t k = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                fail(line_no, "expected a nonnegative integer, got '" + std::string(tok) + "'");
            }
            counts.push_back(k);
        }
    });
    return LengthVector(std::move(counts));
}

std::vector<CodeTableEntry> parse_code_table(std::string_view text) {
    std::vector<CodeTableEntry> out;
    std::unordered_set<std::string> symbols;
    std::unordered_set<Word, WordHash> words;
    for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
        if (tokens.size() != 2) fail(line_no, "expected 'symbol<TAB>bitstring'");
        Word w = [&] {
            try {
                return Word::parse(tokens[1]);
            } catch (const ParseError& e) {
                fail(line_no, e.what());
            }
        }();
        std::string symbol(tokens[0]);
        if (!symbols.insert(symbol).second) fail(line_no, "duplicate symbol '" + symbol + "'");
        if (!words.insert(w).second) fail(line_no, "duplicate word " + w.to_string());
        out.push_back({std::move(symbol), w});
    });
    return out;
}

std::string format_code_table(std::span<const CodeTableEntry> entries) {
    std::string out;
    for (const auto& e : entries) {
        out += e.symbol;
        out += '\t';
        out += e.word.to_string();
        out += '\n';
    }
    return out;
}

std::vector<std::string> parse_message(std::string_view text) {
    std::vector<std::string> out;
    for_each_line(text, [&](std::size_t, const std::vector<std::string_view>& tokens) {
        for (std::string_view tok : tokens) out.emplace_back(tok);
    });
    return out;
}

std::string format_message(std::span<const std::string> msg) {
    std::string out;
    for (std::size_t i = 0; i < msg.size(); ++i) {
        if (i) out += ' ';
        out += msg[i];
    }
    if (!msg.empty()) out += '\n';
    return out;
}

std::vector<std::pair<std::string, double>> parse_distribution(std::string_view text) {
    std::vector<std::pair<std::string, double>> out;
    std::unordered_set<std::string> symbols;
    for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
        if (tokens.size() != 2) fail(line_no, "expected 'symbol<TAB>probability'");
        const std::string_view tok = tokens[1];
        double p = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            fail(line_no, "expected a decimal probability, got '" + std::string(tok) + "'");
        }
        std::string symbol(tokens[0]);
        if (!symbols.insert(symbol).second) fail(line_no, "duplicate symbol '" + symbol + "'");
        out.emplace_back(std::move(symbol), p);
    });
    return out;
}

}  // namespace fixfree
