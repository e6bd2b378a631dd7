#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fibgram/symbol.hpp"

namespace fibgram {

enum class TapeCell : std::uint8_t { Zero, One, Blank, LeftMarker, RightMarker };

constexpr TapeCell cell_of(Symbol s) {
    return s == Symbol::Zero ? TapeCell::Zero : TapeCell::One;
}

// "0", "1", "ε", "▷", "◁"
std::string_view cell_text(TapeCell c);

enum class HeadMove : std::uint8_t { Right, Stay };

// One tape with its head. The first and last cells are the end markers;
// the head only ever moves right and never walks past the right marker.
struct Tape {
    std::vector<TapeCell> cells;
    std::size_t head = 1;

    TapeCell read() const { return cells[head]; }
    std::size_t last() const { return cells.size() - 1; }

    static Tape input_tape(const Word& s);    // ▷ s ◁, head on the first cell
    static Tape blank_tape(std::size_t len);  // ▷ ε...ε ◁ with len blanks

    friend bool operator==(const Tape&, const Tape&) = default;
};

struct MachineState {
    std::string name;
    bool accepting = false;
};

struct TransitionRule {
    std::string from_state;
    TapeCell read1 = TapeCell::Blank;
    TapeCell read2 = TapeCell::Blank;
    std::string to_state;
    TapeCell write1 = TapeCell::Blank;
    TapeCell write2 = TapeCell::Blank;
    HeadMove move1 = HeadMove::Stay;
    HeadMove move2 = HeadMove::Stay;
    std::optional<int> label;  // rule number shown in traces
};

// Partial deterministic mapping (state, cell1, cell2) -> rule. A missing
// key is a rejection event for the run, not an error in the table.
class TransitionTable {
public:
    // Throws std::logic_error on a duplicate key or a rule that would
    // overwrite, erase, or introduce an end marker.
    void add(TransitionRule rule);

    const TransitionRule* find(std::string_view state, TapeCell read1,
                               TapeCell read2) const;

    std::size_t rule_count() const { return rules_.size(); }
    const std::vector<TransitionRule>& rules() const { return rules_; }

private:
    int state_id(std::string_view name) const;
    int intern(const std::string& name);

    std::vector<std::string> state_names_;
    std::vector<TransitionRule> rules_;
    // slots_[state][read1][read2] -> index into rules_, or -1
    std::vector<std::array<std::array<int, 5>, 5>> slots_;
};

// Full machine snapshot: current state name plus both tapes. Head positions
// live inside the Tape values.
struct Configuration {
    std::string state;
    Tape tape1;
    Tape tape2;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct UndefinedTransition {
    std::size_t tape1_index = 0;  // head position on tape 1 at the fault
    std::string state;
    TapeCell read1 = TapeCell::Blank;
    TapeCell read2 = TapeCell::Blank;
};

// Applies the unique matching rule: write both cells, switch state, then
// move each head. Returns the fault detail when no rule matches. Throws
// std::logic_error if a rule would move a head past the right marker (a
// malformed table, distinct from rejection).
std::variant<Configuration, UndefinedTransition> step(const TransitionTable& table,
                                                      const Configuration& c);

// A cell changed by one step: index on the tape, value before and after.
struct CellWrite {
    std::size_t cell = 0;
    TapeCell before = TapeCell::Blank;
    TapeCell after = TapeCell::Blank;
};

// One step of a run. Tape contents are not duplicated per step; the full
// before/after configurations can be rebuilt with materialize_before /
// materialize_after on the owning RunResult.
struct TraceStep {
    std::size_t index = 0;          // 1-based
    std::optional<int> rule_label;  // absent for closing-sweep steps
    std::string state_before;
    std::string state_after;
    std::size_t head1_before = 0;
    std::size_t head2_before = 0;
    std::size_t head1_after = 0;
    std::size_t head2_after = 0;
    std::optional<CellWrite> write1;
    std::optional<CellWrite> write2;
};

enum class Verdict { AcceptedAtEnd, UndefinedTransition, NonAcceptingAtEnd };

struct RunResult {
    Verdict verdict = Verdict::NonAcceptingAtEnd;
    std::optional<UndefinedTransition> fault;  // engaged iff verdict is UndefinedTransition
    std::vector<TraceStep> trace;              // rule steps, then unlabeled sweep steps
    Configuration final;                       // configuration after the last step
    std::size_t rule_steps = 0;                // steps that applied a table rule
};

using AcceptingPredicate = std::function<bool(std::string_view)>;

// Runs the table over tape 1 = ▷input◁ against an initially blank tape 2 of
// the same length, both heads starting on the first interior cell. Stops on
// a missing rule (UndefinedTransition) or when head 1 reaches ◁: if the
// state accepts, head 2 then sweeps right to ◁ (one unlabeled trace step
// per move) and the run is AcceptedAtEnd, otherwise NonAcceptingAtEnd.
RunResult run(const TransitionTable& table, const std::string& start_state,
              const AcceptingPredicate& accepting, const Word& input);

// Rebuild the configuration around trace entry `index` (1-based) by
// replaying the recorded cell writes. O(|input| + index).
Configuration materialize_before(const RunResult& r, std::size_t index);
Configuration materialize_after(const RunResult& r, std::size_t index);

// Greatest |i1 - i2| over every configuration the trace touches, before and
// after each step, sweep included. An empty trace has gap 0.
std::size_t max_head_gap(std::span<const TraceStep> trace);

// Two-line block per step: "T1 ▷[read]unread◁" over "T2 ▷...◁", with
// " (by k)" appended for labeled steps and a blank line between blocks.
std::string render_trace(const RunResult& r);

// Non-blank interior cells of a tape, which must be contiguous from the
// first interior cell.
Word written_cells(const Tape& t);

}  // namespace fibgram
