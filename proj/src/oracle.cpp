#include "fibgram/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "fibgram/reverser.hpp"

namespace fibgram {

namespace {

bool image_matches_at(const Word& image, const Word& s, std::size_t at) {
    if (at + image.size() > s.size()) return false;
    return std::equal(image.begin(), image.end(), s.begin() + static_cast<std::ptrdiff_t>(at));
}

void backtrack(const LSystem& ls, const Word& s, std::size_t at, Word& partial,
               std::vector<Word>& found) {
    if (at == s.size()) {
        found.push_back(partial);
        return;
    }
    for (Symbol sym : {Symbol::Zero, Symbol::One}) {
        const Word& image = ls.rule(sym);
        if (!image_matches_at(image, s, at)) continue;
        partial.push_back(sym);
        backtrack(ls, s, at + image.size(), partial, found);
        partial.pop_back();
    }
}

Word word_from_bits(unsigned len, std::uint32_t bits) {
    Word w(len);
    for (unsigned i = 0; i < len; ++i)
        w[i] = ((bits >> (len - 1 - i)) & 1u) != 0 ? Symbol::One : Symbol::Zero;
    return w;
}

// All generations no longer than max_len; lengths never shrink, so the
// walk stops at the first overflow.
std::set<Word> generations_up_to(unsigned max_len) {
    std::set<Word> out;
    Word g = LSystem::fib().axiom();
    while (g.size() <= max_len) {
        out.insert(g);
        g = derive_step(LSystem::fib(), g);
    }
    return out;
}

void check_max_len(unsigned max_len) {
    if (max_len > 30) throw std::invalid_argument("exhaustive_membership_check: max_len > 30");
}

}  // namespace

PreimageSet enumerate_preimages(const LSystem& ls, const Word& s) {
    PreimageSet result{s, ls, {}};
    Word partial;
    backtrack(ls, s, 0, partial, result.preimages);
    std::sort(result.preimages.begin(), result.preimages.end(),
              [](const Word& a, const Word& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    // backtracking cannot revisit a candidate, but keep the set contract explicit
    result.preimages.erase(std::unique(result.preimages.begin(), result.preimages.end()),
                           result.preimages.end());
    return result;
}

std::optional<unsigned> oracle_membership(const Word& s, unsigned max_n) {
    Word g = LSystem::fib().axiom();
    for (unsigned n = 0; n <= max_n; ++n) {
        if (g == s) return n;
        if (g.size() > s.size()) return std::nullopt;  // lengths never shrink
        g = derive_step(LSystem::fib(), g);
    }
    return std::nullopt;
}

ExhaustiveReport exhaustive_membership_check_serial(unsigned max_len) {
    check_max_len(max_len);
    ExhaustiveReport report;
    report.max_len = max_len;
    const std::set<Word> truth = generations_up_to(max_len);

    for (unsigned len = 1; len <= max_len; ++len) {
        const std::uint64_t count = std::uint64_t{1} << len;
        for (std::uint64_t bits = 0; bits < count; ++bits) {
            Word w = word_from_bits(len, static_cast<std::uint32_t>(bits));
            const bool machine = decide_membership(w).member;
            const bool oracle = truth.contains(w);
            if (machine) report.accepted.push_back(w);
            if (machine != oracle)
                report.mismatches.push_back({std::move(w), machine, oracle});
            ++report.strings_checked;
        }
    }
    return report;
}

ExhaustiveReport exhaustive_membership_check(unsigned max_len) {
    check_max_len(max_len);
    ExhaustiveReport report;
    report.max_len = max_len;
    const std::set<Word> truth = generations_up_to(max_len);

    // (len, bits) keys keep the merged result deterministic
    using Key = std::pair<unsigned, std::uint64_t>;
    std::vector<Key> accepted_keys;
    std::vector<Key> mismatch_keys;

    for (unsigned len = 1; len <= max_len; ++len) {
        const std::int64_t count = std::int64_t{1} << len;
#pragma omp parallel
        {
            std::vector<Key> local_accepted;
            std::vector<Key> local_mismatch;
#pragma omp for schedule(dynamic, 1024) nowait
            for (std::int64_t bits = 0; bits < count; ++bits) {
                const Word w = word_from_bits(len, static_cast<std::uint32_t>(bits));
                const bool machine = decide_membership(w).member;
                const bool oracle = truth.contains(w);
                if (machine) local_accepted.emplace_back(len, bits);
                if (machine != oracle) local_mismatch.emplace_back(len, bits);
            }
#pragma omp critical(fibgram_exhaustive_merge)
            {
                accepted_keys.insert(accepted_keys.end(), local_accepted.begin(),
                                     local_accepted.end());
                mismatch_keys.insert(mismatch_keys.end(), local_mismatch.begin(),
                                     local_mismatch.end());
            }
        }
        report.strings_checked += static_cast<std::uint64_t>(count);
    }

    std::sort(accepted_keys.begin(), accepted_keys.end());
    std::sort(mismatch_keys.begin(), mismatch_keys.end());
    for (const auto& [len, bits] : accepted_keys)
        report.accepted.push_back(word_from_bits(len, static_cast<std::uint32_t>(bits)));
    for (const auto& [len, bits] : mismatch_keys) {
        Word w = word_from_bits(len, static_cast<std::uint32_t>(bits));
        const bool machine = decide_membership(w).member;
        report.mismatches.push_back({std::move(w), machine, !machine});
    }
    return report;
}

}  // namespace fibgram
