// Command-line front end: generation, reconstruction, membership, tracing,
// ambiguity analysis, and preimage enumeration for the fib/bif grammars.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fibgram/lsystem.hpp"
#include "fibgram/oracle.hpp"
#include "fibgram/reverser.hpp"
#include "fibgram/symbol.hpp"

namespace {

using namespace fibgram;

// 0 = success / member / valid; 1 = expected negative outcome
// (non-member, rejected, no preimage); 2 = usage or input error.
constexpr int kExitSuccess = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

std::string rejection_reason_text(const Rejection& rej) {
    switch (rej.reason) {
    case RejectReason::ForbiddenNgram: {
        // the fault sits on the last symbol of the n-gram; report its start
        const std::size_t start = rej.position - (rej.ngram.size() - 1);
        return "forbidden n-gram " + std::string(rej.ngram) + " at " + std::to_string(start);
    }
    case RejectReason::TrailingZero:
        return "trailing zero";
    case RejectReason::Empty:
        return "empty input";
    }
    return "unknown";
}

int cmd_generate(unsigned n, const LSystem& ls) {
    const Word g = generate(ls, n);
    std::cout << to_string(g) << " (" << g.size() << " symbols)\n";
    return kExitSuccess;
}

int cmd_reverse(const Word& s) {
    const PassOutcome pass = reverse_pass(s);
    if (pass.reconstructed()) {
        std::cout << to_string(*pass.output) << "\n";
        return kExitSuccess;
    }
    std::cout << "rejected: " << rejection_reason_text(*pass.rejection) << "\n";
    return kExitRejected;
}

int cmd_member(const Word& s, bool show_passes) {
    const MembershipReport report = decide_membership(s);
    if (show_passes) {
        for (std::size_t i = 0; i < report.passes.size(); ++i) {
            const PassOutcome& pass = report.passes[i];
            if (pass.reconstructed())
                std::cout << "pass " << i + 1 << ": " << to_string(*pass.output) << "\n";
            else
                std::cout << "rejected: " << rejection_reason_text(*pass.rejection) << "\n";
        }
    }
    if (report.member)
        std::cout << "member: generation " << *report.generation_index << "\n";
    else
        std::cout << "non-member\n";
    std::cout << "fibonacci length: " << (report.length_is_fibonacci ? "yes" : "no") << "\n";
    return report.member ? kExitSuccess : kExitRejected;
}

int cmd_trace(const Word& s) {
    const PassOutcome pass = reverse_pass(s);
    std::cout << render_trace(pass.run);
    if (!pass.run.trace.empty()) std::cout << "\n";
    if (pass.reconstructed())
        std::cout << "verdict: accepted\n";
    else
        std::cout << "verdict: rejected (" << rejection_reason_text(*pass.rejection) << ")\n";
    std::cout << "max head gap: " << max_head_gap(pass.run.trace) << "\n";
    return pass.reconstructed() ? kExitSuccess : kExitRejected;
}

void print_ambiguity_line(const char* name, const LSystem& ls) {
    const std::set<Symbol> amb = first_symbol_ambiguity(ls);
    if (amb.empty()) {
        std::cout << name
                  << ": unambiguous (no symbol is both a whole rule image and the start of a "
                     "longer one)\n";
        return;
    }
    std::cout << name << ": ambiguous at";
    for (Symbol s : amb) std::cout << ' ' << to_char(s);
    std::cout << " (the symbol is a whole rule image and also starts a longer one)\n";
}

int cmd_ambiguity() {
    print_ambiguity_line("fib", LSystem::fib());
    print_ambiguity_line("bif", LSystem::bif());
    return kExitSuccess;
}

int cmd_preimages(const Word& s, const LSystem& ls) {
    const PreimageSet set = enumerate_preimages(ls, s);
    if (set.preimages.empty()) {
        std::cout << "no preimages\n";
        return kExitRejected;
    }
    for (const Word& t : set.preimages) std::cout << to_string(t) << "\n";
    return kExitSuccess;
}

std::optional<Word> parse_or_complain(const std::string& text) {
    auto w = parse_word(text);
    if (!w) std::cerr << "error: input must be a string of '0' and '1' characters\n";
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fibonacci D0L grammar toolkit: generation, two-tape reverse reconstruction, "
                 "membership decision, trace rendering, and preimage enumeration"};
    app.require_subcommand(1);

    std::string grammar_name = "fib";
    unsigned gen_n = 0;
    std::string input_text;
    bool show_passes = false;

    CLI::App* generate_cmd = app.add_subcommand("generate", "print generation n and its length");
    generate_cmd->add_option("n", gen_n, "generation index")->required();
    generate_cmd->add_option("--grammar", grammar_name, "fib or bif")
        ->check(CLI::IsMember({"fib", "bif"}));

    CLI::App* reverse_cmd =
        app.add_subcommand("reverse", "reconstruct the previous generation of a string");
    reverse_cmd->add_option("s", input_text, "binary string")->required();

    CLI::App* member_cmd =
        app.add_subcommand("member", "decide whether a string is a fib generation");
    member_cmd->add_option("s", input_text, "binary string")->required();
    member_cmd->add_flag("--show-passes", show_passes, "print each intermediate reconstruction");

    CLI::App* trace_cmd = app.add_subcommand("trace", "render the reverse pass step by step");
    trace_cmd->add_option("s", input_text, "binary string")->required();

    app.add_subcommand("ambiguity", "contrast first-symbol ambiguity of fib and bif");

    CLI::App* preimages_cmd =
        app.add_subcommand("preimages", "enumerate every rewriting preimage of a string");
    preimages_cmd->add_option("s", input_text, "binary string")->required();
    preimages_cmd->add_option("--grammar", grammar_name, "fib or bif")
        ->check(CLI::IsMember({"fib", "bif"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const fibgram::LSystem& ls =
        grammar_name == "bif" ? fibgram::LSystem::bif() : fibgram::LSystem::fib();

    if (generate_cmd->parsed()) return cmd_generate(gen_n, ls);
    if (app.get_subcommand("ambiguity")->parsed()) return cmd_ambiguity();

    const auto word = parse_or_complain(input_text);
    if (!word) return kExitUsage;
    if (reverse_cmd->parsed()) return cmd_reverse(*word);
    if (member_cmd->parsed()) return cmd_member(*word, show_passes);
    if (trace_cmd->parsed()) return cmd_trace(*word);
    if (preimages_cmd->parsed()) return cmd_preimages(*word, ls);
    return kExitUsage;
}
