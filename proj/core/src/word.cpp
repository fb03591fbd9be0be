#include "fixfree/word.hpp"

#include <stdexcept>

#include "fixfree/errors.hpp"

namespace fixfree {

Word::Word(std::uint64_t value, unsigned length) : value_(value), length_(length) {
    if (length < 1 || length > kMaxStorableLength) {
        throw std::domain_error("word length " + std::to_string(length) + " outside [1, " +
                                std::to_string(kMaxStorableLength) + "]");
    }
    if ((value >> length) != 0) {
        throw std::domain_error("word value has bits above length " + std::to_string(length));
    }
}

Word Word::parse(std::string_view bits) {
    if (bits.empty()) throw ParseError("empty bit string");
    if (bits.size() > kMaxStorableLength) {
        throw ParseError("bit string longer than " + std::to_string(kMaxStorableLength) + " bits");
    }
    std::uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ParseError("invalid character '" + std::string(1, c) + "' in bit string");
        }
        v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return Word(v, static_cast<unsigned>(bits.size()));
}

std::string Word::to_string() const {
    std::string s(length_, '0');
    for (unsigned i = 0; i < length_; ++i) {
        if (bit(i)) s[i] = '1';
    }
    return s;
}

std::string WordForm::to_string() const {
    std::string s;
    s += static_cast<char>('0' + first);
    s += '*';
    s += static_cast<char>('0' + last);
    return s;
}

Word prefix(const Word& w, unsigned p) {
    if (p < 1 || p > w.length()) {
        throw std::domain_error("prefix length " + std::to_string(p) + " outside [1, " +
                                std::to_string(w.length()) + "]");
    }
    return Word(w.value() >> (w.length() - p), p);
}

Word suffix(const Word& w, unsigned p) {
    if (p < 1 || p > w.length()) {
        throw std::domain_error("suffix length " + std::to_string(p) + " outside [1, " +
                                std::to_string(w.length()) + "]");
    }
    return Word(w.value() & low_mask(p), p);
}

WordForm form_of(const Word& w) noexcept {
    return {w.first_bit(), w.last_bit()};
}

bool is_prefix_of(const Word& u, const Word& w) noexcept {
    return u.length() <= w.length() && (w.value() >> (w.length() - u.length())) == u.value();
}

bool is_suffix_of(const Word& u, const Word& w) noexcept {
    return u.length() <= w.length() && (w.value() & low_mask(u.length())) == u.value();
}

}  // namespace fixfree
