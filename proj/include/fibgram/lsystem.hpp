#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>

#include "fibgram/symbol.hpp"

namespace fibgram {

// Deterministic context-free rewriting system on the binary alphabet: an
// axiom plus exactly one non-empty rule image per symbol. All symbols of a
// string are rewritten simultaneously per step.
class LSystem {
public:
    LSystem(Word axiom, Word image_of_zero, Word image_of_one);

    const Word& axiom() const { return axiom_; }
    const Word& rule(Symbol s) const { return images_[static_cast<std::size_t>(s)]; }

    // axiom "0", rules 0 -> "1", 1 -> "01"
    static const LSystem& fib();
    // axiom "0", rules 0 -> "1", 1 -> "10"
    static const LSystem& bif();

private:
    Word axiom_;
    std::array<Word, 2> images_;
};

// One rewriting step: the concatenation of rule images over s, in order.
Word derive_step(const LSystem& ls, const Word& s);

// Same result as derive_step, with the input split across OpenMP threads.
// Inputs below derive_parallel_threshold take the serial path.
Word derive_step_parallel(const LSystem& ls, const Word& s);

inline constexpr std::size_t derive_parallel_threshold = std::size_t{1} << 14;

// n rewriting steps applied to the axiom; generate(ls, 0) is the axiom.
// Lengths grow exponentially; callers bound n (n <= 40 is sane desk scale).
Word generate(const LSystem& ls, unsigned n);

// Smallest n with |generate(fib, n)| == len, for len in the generation
// length sequence 1, 1, 2, 3, 5, 8, ...; len 1 maps to 0.
std::optional<unsigned> fibonacci_index_of_length(std::uint64_t len);

// Symbols that are simultaneously (a) the whole rule image of some symbol
// and (b) a proper prefix of some rule image. Such a symbol can either
// close a one-symbol constituent or keep a longer one open, so a
// left-to-right grouping of the string stalls on it.
std::set<Symbol> first_symbol_ambiguity(const LSystem& ls);

struct NgramHit {
    std::size_t position;    // 0-based start of the n-gram in s
    std::string_view ngram;  // "00" or "111"
};

// Leftmost occurrence of "00" or "111"; "00" wins an equal start.
std::optional<NgramHit> find_forbidden_ngram(const Word& s);

}  // namespace fibgram
