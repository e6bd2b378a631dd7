#include "fibgram/lsystem.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fibgram {

LSystem::LSystem(Word axiom, Word image_of_zero, Word image_of_one)
    : axiom_(std::move(axiom)),
      images_{std::move(image_of_zero), std::move(image_of_one)} {
    if (axiom_.empty()) throw std::invalid_argument("LSystem: empty axiom");
    if (images_[0].empty() || images_[1].empty())
        throw std::invalid_argument("LSystem: empty rule image");
}

const LSystem& LSystem::fib() {
    static const LSystem ls({Symbol::Zero}, {Symbol::One}, {Symbol::Zero, Symbol::One});
    return ls;
}

const LSystem& LSystem::bif() {
    static const LSystem ls({Symbol::Zero}, {Symbol::One}, {Symbol::One, Symbol::Zero});
    return ls;
}

Word derive_step(const LSystem& ls, const Word& s) {
    const Word& img0 = ls.rule(Symbol::Zero);
    const Word& img1 = ls.rule(Symbol::One);
    Word out;
    out.reserve(s.size() * std::max(img0.size(), img1.size()));
    for (Symbol sym : s) {
        const Word& img = sym == Symbol::Zero ? img0 : img1;
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Word derive_step_parallel(const LSystem& ls, const Word& s) {
    if (s.size() < derive_parallel_threshold) return derive_step(ls, s);

    const std::size_t len0 = ls.rule(Symbol::Zero).size();
    const std::size_t len1 = ls.rule(Symbol::One).size();

#ifdef _OPENMP
    const int nchunks = std::max(1, omp_get_max_threads());
#else
    const int nchunks = 1;
#endif
    const std::size_t chunk = (s.size() + nchunks - 1) / nchunks;

    // pass 1: output size per chunk, then exclusive scan for chunk offsets
    std::vector<std::size_t> offset(static_cast<std::size_t>(nchunks) + 1, 0);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < nchunks; ++c) {
        const std::size_t lo = std::min(s.size(), static_cast<std::size_t>(c) * chunk);
        const std::size_t hi = std::min(s.size(), lo + chunk);
        std::size_t ones = 0;
        for (std::size_t i = lo; i < hi; ++i) ones += s[i] == Symbol::One;
        offset[static_cast<std::size_t>(c) + 1] = (hi - lo - ones) * len0 + ones * len1;
    }
    for (int c = 0; c < nchunks; ++c)
        offset[static_cast<std::size_t>(c) + 1] += offset[static_cast<std::size_t>(c)];

    // pass 2: each chunk fills its own output slice
    Word out(offset[static_cast<std::size_t>(nchunks)]);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < nchunks; ++c) {
        const std::size_t lo = std::min(s.size(), static_cast<std::size_t>(c) * chunk);
        const std::size_t hi = std::min(s.size(), lo + chunk);
        std::size_t at = offset[static_cast<std::size_t>(c)];
        for (std::size_t i = lo; i < hi; ++i) {
            const Word& img = ls.rule(s[i]);
            for (Symbol sym : img) out[at++] = sym;
        }
    }
    return out;
}

Word generate(const LSystem& ls, unsigned n) {
    Word w = ls.axiom();
    for (unsigned i = 0; i < n; ++i) w = derive_step_parallel(ls, w);
    return w;
}

std::optional<unsigned> fibonacci_index_of_length(std::uint64_t len) {
    // generation lengths 1, 1, 2, 3, 5, ...; the smaller index wins for len 1
    std::uint64_t a = 1;
    std::uint64_t b = 1;
    unsigned n = 0;
    while (a < len) {
        if (b > std::numeric_limits<std::uint64_t>::max() - a) return std::nullopt;
        const std::uint64_t next = a + b;
        a = b;
        b = next;
        ++n;
    }
    if (a == len) return n;
    return std::nullopt;
}

std::set<Symbol> first_symbol_ambiguity(const LSystem& ls) {
    constexpr std::array<Symbol, 2> alphabet{Symbol::Zero, Symbol::One};
    std::set<Symbol> out;
    for (Symbol cand : alphabet) {
        bool whole_image = false;
        bool proper_prefix = false;
        for (Symbol src : alphabet) {
            const Word& img = ls.rule(src);
            if (img.size() == 1 && img[0] == cand) whole_image = true;
            if (img.size() > 1 && img[0] == cand) proper_prefix = true;
        }
        if (whole_image && proper_prefix) out.insert(cand);
    }
    return out;
}

std::optional<NgramHit> find_forbidden_ngram(const Word& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 1 < s.size() && s[i] == Symbol::Zero && s[i + 1] == Symbol::Zero)
            return NgramHit{i, "00"};
        if (i + 2 < s.size() && s[i] == Symbol::One && s[i + 1] == Symbol::One &&
            s[i + 2] == Symbol::One)
            return NgramHit{i, "111"};
    }
    return std::nullopt;
}

}  // namespace fibgram
