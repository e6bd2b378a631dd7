#include "fibgram/automaton.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibgram {

namespace {

constexpr std::size_t cell_index(TapeCell c) { return static_cast<std::size_t>(c); }

constexpr bool is_marker(TapeCell c) {
    return c == TapeCell::LeftMarker || c == TapeCell::RightMarker;
}

// A rule may read a marker only if it leaves it in place, and may never
// write one over an ordinary cell.
constexpr bool marker_safe(TapeCell read, TapeCell write) {
    return is_marker(read) ? write == read : !is_marker(write);
}

void move_right(Tape& t, const char* which) {
    if (t.head >= t.last())
        throw std::logic_error(std::string("automaton: head moved past the right marker on ") +
                               which);
    ++t.head;
}

}  // namespace

std::string_view cell_text(TapeCell c) {
    switch (c) {
    case TapeCell::Zero: return "0";
    case TapeCell::One: return "1";
    case TapeCell::Blank: return "ε";
    case TapeCell::LeftMarker: return "▷";
    case TapeCell::RightMarker: return "◁";
    }
    return "?";
}

Tape Tape::input_tape(const Word& s) {
    Tape t;
    t.cells.reserve(s.size() + 2);
    t.cells.push_back(TapeCell::LeftMarker);
    for (Symbol sym : s) t.cells.push_back(cell_of(sym));
    t.cells.push_back(TapeCell::RightMarker);
    t.head = 1;
    return t;
}

Tape Tape::blank_tape(std::size_t len) {
    Tape t;
    t.cells.assign(len + 2, TapeCell::Blank);
    t.cells.front() = TapeCell::LeftMarker;
    t.cells.back() = TapeCell::RightMarker;
    t.head = 1;
    return t;
}

void TransitionTable::add(TransitionRule rule) {
    if (!marker_safe(rule.read1, rule.write1) || !marker_safe(rule.read2, rule.write2))
        throw std::logic_error("TransitionTable: rule tampers with an end marker");

    const int from = intern(rule.from_state);
    intern(rule.to_state);
    int& slot = slots_[static_cast<std::size_t>(from)][cell_index(rule.read1)]
                      [cell_index(rule.read2)];
    if (slot >= 0)
        throw std::logic_error("TransitionTable: duplicate key for state " + rule.from_state);
    slot = static_cast<int>(rules_.size());
    rules_.push_back(std::move(rule));
}

int TransitionTable::intern(const std::string& name) {
    const int id = state_id(name);
    if (id >= 0) return id;
    state_names_.push_back(name);
    slots_.emplace_back();
    for (auto& row : slots_.back()) row.fill(-1);
    return static_cast<int>(state_names_.size() - 1);
}

int TransitionTable::state_id(std::string_view name) const {
    for (std::size_t i = 0; i < state_names_.size(); ++i)
        if (state_names_[i] == name) return static_cast<int>(i);
    return -1;
}

const TransitionRule* TransitionTable::find(std::string_view state, TapeCell read1,
                                            TapeCell read2) const {
    const int id = state_id(state);
    if (id < 0) return nullptr;
    const int slot = slots_[static_cast<std::size_t>(id)][cell_index(read1)][cell_index(read2)];
    return slot < 0 ? nullptr : &rules_[static_cast<std::size_t>(slot)];
}

std::variant<Configuration, UndefinedTransition> step(const TransitionTable& table,
                                                      const Configuration& c) {
    const TapeCell r1 = c.tape1.read();
    const TapeCell r2 = c.tape2.read();
    const TransitionRule* rule = table.find(c.state, r1, r2);
    if (rule == nullptr) return UndefinedTransition{c.tape1.head, c.state, r1, r2};

    Configuration next = c;
    next.state = rule->to_state;
    next.tape1.cells[next.tape1.head] = rule->write1;
    next.tape2.cells[next.tape2.head] = rule->write2;
    if (rule->move1 == HeadMove::Right) move_right(next.tape1, "tape 1");
    if (rule->move2 == HeadMove::Right) move_right(next.tape2, "tape 2");
    return next;
}

RunResult run(const TransitionTable& table, const std::string& start_state,
              const AcceptingPredicate& accepting, const Word& input) {
    RunResult r;
    Tape tape1 = Tape::input_tape(input);
    Tape tape2 = Tape::blank_tape(input.size());
    std::string state = start_state;
    r.trace.reserve(input.size() + 2);

    while (tape1.read() != TapeCell::RightMarker) {
        const TapeCell r1 = tape1.read();
        const TapeCell r2 = tape2.read();
        const TransitionRule* rule = table.find(state, r1, r2);
        if (rule == nullptr) {
            r.verdict = Verdict::UndefinedTransition;
            r.fault = UndefinedTransition{tape1.head, state, r1, r2};
            r.rule_steps = r.trace.size();
            r.final = Configuration{std::move(state), std::move(tape1), std::move(tape2)};
            return r;
        }

        TraceStep ts;
        ts.index = r.trace.size() + 1;
        ts.rule_label = rule->label;
        ts.state_before = state;
        ts.head1_before = tape1.head;
        ts.head2_before = tape2.head;
        if (tape1.cells[tape1.head] != rule->write1) {
            ts.write1 = CellWrite{tape1.head, tape1.cells[tape1.head], rule->write1};
            tape1.cells[tape1.head] = rule->write1;
        }
        if (tape2.cells[tape2.head] != rule->write2) {
            ts.write2 = CellWrite{tape2.head, tape2.cells[tape2.head], rule->write2};
            tape2.cells[tape2.head] = rule->write2;
        }
        if (rule->move1 == HeadMove::Right) move_right(tape1, "tape 1");
        if (rule->move2 == HeadMove::Right) move_right(tape2, "tape 2");
        state = rule->to_state;
        ts.state_after = state;
        ts.head1_after = tape1.head;
        ts.head2_after = tape2.head;
        r.trace.push_back(std::move(ts));
    }

    r.rule_steps = r.trace.size();

    if (!accepting(state)) {
        r.verdict = Verdict::NonAcceptingAtEnd;
        r.final = Configuration{std::move(state), std::move(tape1), std::move(tape2)};
        return r;
    }

    // closing sweep: the tape-2 head walks to its right marker, one
    // unlabeled trace step per move
    while (tape2.read() != TapeCell::RightMarker) {
        TraceStep ts;
        ts.index = r.trace.size() + 1;
        ts.state_before = state;
        ts.state_after = state;
        ts.head1_before = tape1.head;
        ts.head2_before = tape2.head;
        ++tape2.head;
        ts.head1_after = tape1.head;
        ts.head2_after = tape2.head;
        r.trace.push_back(std::move(ts));
    }

    r.verdict = Verdict::AcceptedAtEnd;
    r.final = Configuration{std::move(state), std::move(tape1), std::move(tape2)};
    return r;
}

namespace {

Configuration materialize(const RunResult& r, std::size_t index, bool after) {
    if (index < 1 || index > r.trace.size())
        throw std::out_of_range("materialize: trace index out of range");
    const std::size_t applied = after ? index : index - 1;  // steps whose writes count

    Tape tape1;
    tape1.cells = r.final.tape1.cells;
    // undo tape-1 writes beyond `applied`, newest first (a cell may be
    // rewritten several times)
    for (std::size_t k = r.trace.size(); k > applied; --k) {
        const TraceStep& ts = r.trace[k - 1];
        if (ts.write1) tape1.cells[ts.write1->cell] = ts.write1->before;
    }

    Tape tape2;
    tape2.cells.assign(r.final.tape2.cells.size(), TapeCell::Blank);
    tape2.cells.front() = TapeCell::LeftMarker;
    tape2.cells.back() = TapeCell::RightMarker;
    for (std::size_t k = 1; k <= applied; ++k) {
        const TraceStep& ts = r.trace[k - 1];
        if (ts.write2) tape2.cells[ts.write2->cell] = ts.write2->after;
    }

    const TraceStep& at = r.trace[index - 1];
    tape1.head = after ? at.head1_after : at.head1_before;
    tape2.head = after ? at.head2_after : at.head2_before;
    return Configuration{after ? at.state_after : at.state_before, std::move(tape1),
                         std::move(tape2)};
}

}  // namespace

Configuration materialize_before(const RunResult& r, std::size_t index) {
    return materialize(r, index, false);
}

Configuration materialize_after(const RunResult& r, std::size_t index) {
    return materialize(r, index, true);
}

std::size_t max_head_gap(std::span<const TraceStep> trace) {
    const auto gap = [](std::size_t a, std::size_t b) { return a > b ? a - b : b - a; };
    std::size_t best = 0;
    for (const TraceStep& ts : trace) {
        best = std::max(best, gap(ts.head1_before, ts.head2_before));
        best = std::max(best, gap(ts.head1_after, ts.head2_after));
    }
    return best;
}

std::string render_trace(const RunResult& r) {
    if (r.trace.empty()) return "";

    // start from the initial tape contents and replay writes step by step
    std::vector<TapeCell> t1 = r.final.tape1.cells;
    for (std::size_t k = r.trace.size(); k > 0; --k) {
        const TraceStep& ts = r.trace[k - 1];
        if (ts.write1) t1[ts.write1->cell] = ts.write1->before;
    }
    std::vector<TapeCell> t2(r.final.tape2.cells.size(), TapeCell::Blank);
    t2.front() = TapeCell::LeftMarker;
    t2.back() = TapeCell::RightMarker;

    std::string out;
    for (const TraceStep& ts : r.trace) {
        if (ts.write1) t1[ts.write1->cell] = ts.write1->after;
        if (ts.write2) t2[ts.write2->cell] = ts.write2->after;

        if (!out.empty()) out += "\n";
        out += "T1 ▷[";
        for (std::size_t i = 1; i < ts.head1_after; ++i) out += cell_text(t1[i]);
        out += "]";
        for (std::size_t i = ts.head1_after; i + 1 < t1.size(); ++i) out += cell_text(t1[i]);
        out += "◁\n";
        out += "T2 ▷";
        for (std::size_t i = 1; i + 1 < t2.size(); ++i) out += cell_text(t2[i]);
        out += "◁";
        if (ts.rule_label) {
            out += " (by ";
            out += std::to_string(*ts.rule_label);
            out += ")";
        }
        out += "\n";
    }
    return out;
}

Word written_cells(const Tape& t) {
    Word out;
    bool seen_blank = false;
    for (std::size_t i = 1; i + 1 < t.cells.size(); ++i) {
        switch (t.cells[i]) {
        case TapeCell::Blank:
            seen_blank = true;
            break;
        case TapeCell::Zero:
        case TapeCell::One:
            if (seen_blank)
                throw std::logic_error("written_cells: contents not contiguous from the left");
            out.push_back(t.cells[i] == TapeCell::Zero ? Symbol::Zero : Symbol::One);
            break;
        default:
            throw std::logic_error("written_cells: marker inside the tape");
        }
    }
    return out;
}

}  // namespace fibgram
