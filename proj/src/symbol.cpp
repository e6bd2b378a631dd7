#include "fibgram/symbol.hpp"

namespace fibgram {

std::string to_string(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(to_char(s));
    return out;
}

std::optional<Word> parse_word(std::string_view text) {
    Word out;
    out.reserve(text.size());
    for (char c : text) {
        const auto s = symbol_from_char(c);
        if (!s) return std::nullopt;
        out.push_back(*s);
    }
    return out;
}

}  // namespace fibgram
