#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibgram {

// Binary alphabet shared by the grammars and the automaton input.
enum class Symbol : std::uint8_t { Zero = 0, One = 1 };

using Word = std::vector<Symbol>;

constexpr char to_char(Symbol s) { return s == Symbol::Zero ? '0' : '1'; }

constexpr std::optional<Symbol> symbol_from_char(char c) {
    switch (c) {
    case '0': return Symbol::Zero;
    case '1': return Symbol::One;
    default: return std::nullopt;
    }
}

std::string to_string(const Word& w);

// Fails on any character other than '0'/'1'. The empty string is a valid
// (empty) word.
std::optional<Word> parse_word(std::string_view text);

}  // namespace fibgram
