#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibgram/automaton.hpp"
#include "fibgram/symbol.hpp"

namespace fibgram {

// The reconstruction machine for the fib grammar. Four states: q_start,
// q_pending while a tentative 0 sits under the tape-2 head waiting for the
// 1 that completes a [01] constituent, and q_one / q_two counting
// consecutive 1s read. q_one and q_two accept. Six rules; (q_pending, 0, ·)
// and (q_two, 1, ·) are deliberately undefined, realizing the "00" and
// "111" rejections.
struct FibMachine {
    TransitionTable table;
    std::string start;
    std::vector<MachineState> states;

    bool accepting(std::string_view name) const;
};

FibMachine build_fib_machine();

// Shared immutable instance used by the pass and membership entry points.
const FibMachine& fib_machine();

enum class RejectReason { ForbiddenNgram, TrailingZero, Empty };

struct Rejection {
    RejectReason reason = RejectReason::Empty;
    // ForbiddenNgram payload: the faulting read, 0-based into the input,
    // and the n-gram that read completes ("00" or "111").
    std::size_t position = 0;
    std::string_view ngram;
};

// Result of one reverse pass: either the reconstructed previous generation
// or a rejection with its cause. The full run, trace included, is kept.
struct PassOutcome {
    std::optional<Word> output;
    std::optional<Rejection> rejection;
    RunResult run;

    bool reconstructed() const { return output.has_value(); }
};

// One full run of the machine over s, reading the previous generation off
// tape 2 on acceptance.
PassOutcome reverse_pass(const Word& s);

struct MembershipReport {
    bool member = false;
    std::optional<unsigned> generation_index;  // equals the pass count when member
    std::vector<PassOutcome> passes;
    bool length_is_fibonacci = false;
};

// Recursive decision: reverse passes feed their output back as input until
// the output tape holds the axiom "0" (member) or a pass rejects
// (non-member). "0" itself is generation 0, decided with zero passes. The
// pass count is bounded by |s| + 2.
MembershipReport decide_membership(const Word& s);

std::optional<unsigned> generation_index(const Word& s);

}  // namespace fibgram
