#include "fibgram/reverser.hpp"

#include <stdexcept>

#include "fibgram/lsystem.hpp"

namespace fibgram {

namespace {

constexpr std::string_view kStart = "q_start";
constexpr std::string_view kPending = "q_pending";
constexpr std::string_view kOne = "q_one";
constexpr std::string_view kTwo = "q_two";

TransitionRule make_rule(int label, std::string_view from, TapeCell read1, TapeCell read2,
                         std::string_view to, TapeCell write2, HeadMove move1, HeadMove move2) {
    TransitionRule r;
    r.label = label;
    r.from_state = std::string(from);
    r.read1 = read1;
    r.read2 = read2;
    r.to_state = std::string(to);
    r.write1 = read1;  // tape 1 is read-only
    r.write2 = write2;
    r.move1 = move1;
    r.move2 = move2;
    return r;
}

}  // namespace

FibMachine build_fib_machine() {
    FibMachine m;
    m.start = std::string(kStart);
    m.states = {{std::string(kStart), false},
                {std::string(kPending), false},
                {std::string(kOne), true},
                {std::string(kTwo), true}};

    constexpr TapeCell z = TapeCell::Zero;
    constexpr TapeCell o = TapeCell::One;
    constexpr TapeCell e = TapeCell::Blank;
    constexpr HeadMove R = HeadMove::Right;
    constexpr HeadMove S = HeadMove::Stay;

    // (1) a 0 read on tape 1 writes a tentative 0 under the tape-2 head,
    //     which then waits for the 1 that completes the [01] constituent
    m.table.add(make_rule(1, kStart, z, e, kPending, z, R, S));
    m.table.add(make_rule(1, kOne, z, e, kPending, z, R, S));
    m.table.add(make_rule(1, kTwo, z, e, kPending, z, R, S));
    // (2) the completing 1 confirms the constituent: the tentative 0
    //     becomes a 1 and both heads advance
    m.table.add(make_rule(2, kPending, o, z, kOne, o, R, R));
    // (3) a standalone 1 maps to a 0; q_one -> q_two counts the second
    //     consecutive 1
    m.table.add(make_rule(3, kStart, o, e, kOne, z, R, R));
    m.table.add(make_rule(3, kOne, o, e, kTwo, z, R, R));
    // (q_pending, 0, ·) is deliberately undefined: a second consecutive 0.
    // (q_two, 1, ·) is deliberately undefined: a third consecutive 1.
    return m;
}

bool FibMachine::accepting(std::string_view name) const {
    for (const MachineState& s : states)
        if (s.name == name) return s.accepting;
    return false;
}

const FibMachine& fib_machine() {
    static const FibMachine m = build_fib_machine();
    return m;
}

PassOutcome reverse_pass(const Word& s) {
    const FibMachine& m = fib_machine();
    PassOutcome out;
    out.run = run(m.table, m.start, [&m](std::string_view q) { return m.accepting(q); }, s);

    switch (out.run.verdict) {
    case Verdict::AcceptedAtEnd:
        out.output = written_cells(out.run.final.tape2);
        break;
    case Verdict::UndefinedTransition: {
        const UndefinedTransition& f = *out.run.fault;
        Rejection rej;
        rej.reason = RejectReason::ForbiddenNgram;
        rej.position = f.tape1_index - 1;  // 0-based into s
        if (f.state == kPending && f.read1 == TapeCell::Zero)
            rej.ngram = "00";
        else if (f.state == kTwo && f.read1 == TapeCell::One)
            rej.ngram = "111";
        else
            throw std::logic_error("reverse_pass: fault outside the two rejection shapes");
        out.rejection = rej;
        break;
    }
    case Verdict::NonAcceptingAtEnd:
        if (out.run.final.state == kStart)
            out.rejection = Rejection{RejectReason::Empty, 0, {}};
        else if (out.run.final.state == kPending)
            out.rejection = Rejection{RejectReason::TrailingZero, 0, {}};
        else
            throw std::logic_error("reverse_pass: non-accepting end in unexpected state");
        break;
    }
    return out;
}

MembershipReport decide_membership(const Word& s) {
    MembershipReport report;
    report.length_is_fibonacci = fibonacci_index_of_length(s.size()).has_value();

    const Word axiom{Symbol::Zero};
    if (s == axiom) {
        report.member = true;
        report.generation_index = 0;
        return report;
    }

    // Any pass over an input containing a 0 shortens the string, and all-1
    // inputs fault past length 2, so the bound can never actually bind.
    const std::size_t pass_bound = s.size() + 2;
    Word current = s;
    while (report.passes.size() < pass_bound) {
        PassOutcome pass = reverse_pass(current);
        const bool ok = pass.reconstructed();
        Word next = ok ? *pass.output : Word{};
        report.passes.push_back(std::move(pass));
        if (!ok) return report;
        if (next == axiom) {
            report.member = true;
            report.generation_index = static_cast<unsigned>(report.passes.size());
            return report;
        }
        current = std::move(next);
    }
    throw std::logic_error("decide_membership: pass bound exceeded");
}

std::optional<unsigned> generation_index(const Word& s) {
    const MembershipReport report = decide_membership(s);
    return report.member ? report.generation_index : std::nullopt;
}

}  // namespace fibgram
