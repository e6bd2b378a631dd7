#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fibgram/lsystem.hpp"
#include "fibgram/symbol.hpp"

namespace fibgram {

// Every t with derive_step(grammar, t) == source. Found by backtracking
// over which rule image matches at each position, independent of the
// automaton; this is the ground truth the machine is checked against.
struct PreimageSet {
    Word source;
    LSystem grammar;
    std::vector<Word> preimages;  // sorted by (length, lexicographic), duplicate-free
};

PreimageSet enumerate_preimages(const LSystem& ls, const Word& s);

// Index of the fib generation equal to s among g_0 ... g_max_n, by direct
// comparison. Callers pick max_n large enough that |g_max_n| >= |s|.
std::optional<unsigned> oracle_membership(const Word& s, unsigned max_n);

struct MembershipMismatch {
    Word word;
    bool machine_member = false;
    bool oracle_member = false;
};

struct ExhaustiveReport {
    unsigned max_len = 0;
    std::uint64_t strings_checked = 0;
    std::vector<Word> accepted;                  // strings decide_membership accepted
    std::vector<MembershipMismatch> mismatches;  // expected empty
};

// Sweeps every binary string of length 1..max_len and compares
// decide_membership against the generation table. The default entry point
// partitions each length across OpenMP threads; the serial variant is the
// reference implementation. Both produce identical reports (accepted and
// mismatch lists ordered by length, then value). max_len is capped at 30.
ExhaustiveReport exhaustive_membership_check(unsigned max_len);
ExhaustiveReport exhaustive_membership_check_serial(unsigned max_len);

}  // namespace fibgram
