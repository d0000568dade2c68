// Command-line surface over the suffix-reading automata toolkit. Exit codes:
// 0 for success / positive verdicts, 1 for negative verdicts (reject,
// inequivalent, check failures), 2 for usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sra/derivation.hpp"
#include "sra/dfa_ops.hpp"
#include "sra/errors.hpp"
#include "sra/generalized.hpp"
#include "sra/hardness.hpp"
#include "sra/io.hpp"
#include "sra/semantics.hpp"
#include "sra/tracking.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw sra::Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

sra::Automaton load_automaton(const std::string& path) {
    auto automaton = sra::parse_automaton(read_file(path));
    auto violations = std::visit([](const auto& a) { return sra::validate(a); }, automaton);
    if (!violations.empty()) {
        std::string message = path + " is not a valid automaton:";
        for (const auto& v : violations)
            message += "\n  " + v;
        throw sra::Error(message);
    }
    return automaton;
}

sra::Dsa load_dsa(const std::string& path) {
    auto automaton = load_automaton(path);
    if (auto* a = std::get_if<sra::Dsa>(&automaton))
        return std::move(*a);
    throw sra::Error(path + ": expected a dsa file, found " + sra::kind_name(automaton));
}

sra::Dfa load_dfa(const std::string& path) {
    auto automaton = load_automaton(path);
    if (auto* m = std::get_if<sra::Dfa>(&automaton))
        return std::move(*m);
    throw sra::Error(path + ": expected a dfa file, found " + sra::kind_name(automaton));
}

sra::Dga load_dga(const std::string& path) {
    auto automaton = load_automaton(path);
    if (auto* h = std::get_if<sra::Dga>(&automaton))
        return std::move(*h);
    throw sra::Error(path + ": expected a dga file, found " + sra::kind_name(automaton));
}

const sra::Alphabet& alphabet_of(const sra::Automaton& automaton) {
    return std::visit([](const auto& a) -> const sra::Alphabet& { return a.alphabet(); }, automaton);
}

sra::Word parse_cli_word(const sra::Alphabet& alphabet, const std::string& text, bool chars) {
    return chars ? sra::parse_char_word(alphabet, text) : sra::parse_word(alphabet, text);
}

std::set<sra::State> parse_state_set(const sra::Dfa& m, const std::string& csv) {
    std::set<sra::State> states;
    std::stringstream in(csv);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name.empty())
            continue;
        auto q = m.find_state(name);
        if (!q)
            throw sra::Error("unknown state '" + name + "'");
        states.insert(*q);
    }
    if (states.empty())
        throw sra::Error("--set names no states");
    return states;
}

/// DSAs go through the tracking construction; DGA word edges expand into
/// fresh state chains sharing common prefixes, which prefix-freeness keeps
/// deterministic. The expansion is oracle-checked against the DGA run
/// semantics before use.
sra::Dfa dga_to_dfa(const sra::Dga& h, std::size_t oracle_maxlen) {
    sra::Dfa m(h.alphabet_ref());
    for (sra::State q = 0; q < h.num_states(); ++q)
        m.add_state(h.state_name(q));
    sra::State next_fresh = 0;
    for (sra::State q = 0; q < h.num_states(); ++q) {
        for (const auto* e : h.out_edges(q)) {
            sra::State cur = q;
            for (std::size_t i = 0; i + 1 < e->label.size(); ++i) {
                auto mid = m.step(cur, e->label[i]);
                if (!mid) {
                    mid = m.add_state("chain" + std::to_string(next_fresh++));
                    m.add_transition(cur, e->label[i], *mid);
                }
                cur = *mid;
            }
            m.add_transition(cur, e->label.back(), e->dst);
        }
    }
    m.set_initial(h.initial());
    for (sra::State q : h.accepting())
        m.add_accepting(q);

    auto expanded = sra::enumerate_language(m, oracle_maxlen);
    auto direct = sra::enumerate_language(h, oracle_maxlen);
    if (expanded != direct)
        throw sra::Error("internal: dga expansion disagrees with its run semantics");
    return m;
}

sra::Dfa to_comparable_dfa(const sra::Automaton& automaton, std::size_t oracle_maxlen,
                           std::ostream& log, const std::string& path) {
    if (const auto* m = std::get_if<sra::Dfa>(&automaton))
        return *m;
    if (const auto* a = std::get_if<sra::Dsa>(&automaton)) {
        log << "note: " << path << " converted via its tracking DFA\n";
        return sra::tracking_dfa(*a).dfa;
    }
    log << "note: " << path << " expanded to a letter DFA (oracle-checked to length " << oracle_maxlen
        << ")\n";
    return dga_to_dfa(std::get<sra::Dga>(automaton), oracle_maxlen);
}

void print_size(const sra::Automaton& automaton) {
    std::size_t states = 0, transitions = 0, labels = 0;
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            states = a.num_states();
            if constexpr (std::is_same_v<T, sra::Dfa>) {
                transitions = a.num_transitions();
                labels = a.num_transitions();
            } else {
                const auto& edges = std::is_same_v<T, sra::Dsa>
                                        ? static_cast<const sra::Dsa&>(a).transitions()
                                        : a.edges();
                transitions = edges.size();
                for (const auto& e : edges)
                    labels += e.label.size();
            }
        },
        automaton);
    std::cout << "states " << states << "\ntransitions " << transitions << "\nlabel-length " << labels
              << "\ntotal " << (states + transitions + labels) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"suffix-reading automata toolkit"};
    app.require_subcommand(1);

    std::string file, file2, word, set_csv, from_name, to_name;
    bool chars = false, force = false;
    std::size_t oracle_maxlen = 8, max_len = 8, delta = 0, k_prime = 0;

    auto* cmd_accepts = app.add_subcommand("accepts", "run a word, report accept/reject");
    cmd_accepts->add_option("file", file)->required();
    cmd_accepts->add_option("word", word)->required();
    cmd_accepts->add_flag("--chars", chars, "split the word into one-character symbols");

    auto* cmd_run = app.add_subcommand("run", "print the move sequence and residual of a DSA run");
    cmd_run->add_option("file", file)->required();
    cmd_run->add_option("word", word)->required();
    cmd_run->add_flag("--chars", chars);

    auto* cmd_to_dfa = app.add_subcommand("to-dfa", "print the tracking DFA of a DSA");
    cmd_to_dfa->add_option("file", file)->required();

    auto* cmd_minimize = app.add_subcommand("minimize", "print the canonical minimal DFA");
    cmd_minimize->add_option("file", file)->required();

    auto* cmd_complete = app.add_subcommand("complete", "print the completed DFA");
    cmd_complete->add_option("file", file)->required();

    auto* cmd_trim = app.add_subcommand("trim", "drop states off every accepting path");
    cmd_trim->add_option("file", file)->required();

    auto* cmd_equiv = app.add_subcommand("equiv", "compare the languages of two automata");
    cmd_equiv->add_option("file1", file)->required();
    cmd_equiv->add_option("file2", file2)->required();
    cmd_equiv->add_option("--oracle-maxlen", oracle_maxlen, "cross-check enumeration length")
        ->capture_default_str();

    auto* cmd_size = app.add_subcommand("size", "total-size breakdown");
    cmd_size->add_option("file", file)->required();

    auto* cmd_simple = app.add_subcommand("simple-words", "simple words between two DFA states");
    cmd_simple->add_option("file", file)->required();
    cmd_simple->add_option("--from", from_name)->required();
    cmd_simple->add_option("--to", to_name)->required();
    cmd_simple->add_option("--set", set_csv)->required();

    auto* cmd_check = app.add_subcommand("check-set", "diagnose a candidate suffix-tracking set");
    cmd_check->add_option("file", file)->required();
    cmd_check->add_option("--set", set_csv)->required();

    auto* cmd_derive = app.add_subcommand("derive", "derive a DSA from a DFA and a state set");
    cmd_derive->add_option("file", file)->required();
    cmd_derive->add_option("--set", set_csv)->required();
    cmd_derive->add_flag("--force", force, "derive even if the set is not suffix-tracking");

    auto* cmd_derive_min = app.add_subcommand("derive-min",
                                              "smallest DSA derivable from the DFA (by total size)");
    cmd_derive_min->add_option("file", file)->required();

    auto* cmd_suppress = app.add_subcommand("dga-suppress", "suppress DGA states");
    cmd_suppress->add_option("file", file)->required();
    cmd_suppress->add_option("--set", set_csv)->required();

    auto* cmd_gen_vc = app.add_subcommand("gen-vc", "vertex-cover reduction DFA for a graph");
    cmd_gen_vc->add_option("file", file)->required();
    auto* delta_opt = cmd_gen_vc->add_option("--delta", delta, "padding (default (|V|+|E|)^4)");

    auto* cmd_budget = app.add_subcommand("vc-budget", "DSA size budget for a cover size");
    cmd_budget->add_option("file", file)->required();
    cmd_budget->add_option("-k,--cover-size", k_prime)->required();
    auto* budget_delta_opt = cmd_budget->add_option("--delta", delta, "padding (default (|V|+|E|)^4)");

    auto* cmd_enumerate = app.add_subcommand("enumerate", "accepted words up to a length");
    cmd_enumerate->add_option("file", file)->required();
    cmd_enumerate->add_option("--max-len", max_len)->capture_default_str();

    auto* cmd_dot = app.add_subcommand("dot", "DOT rendering of an automaton");
    cmd_dot->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmd_accepts)) {
            auto automaton = load_automaton(file);
            sra::Word w = parse_cli_word(alphabet_of(automaton), word, chars);
            bool verdict = std::visit(
                [&](const auto& a) {
                    using T = std::decay_t<decltype(a)>;
                    if constexpr (std::is_same_v<T, sra::Dsa>)
                        return sra::accepts(a, w);
                    else if constexpr (std::is_same_v<T, sra::Dfa>)
                        return sra::dfa_accepts(a, w);
                    else
                        return sra::dga_accepts(a, w);
                },
                automaton);
            std::cout << (verdict ? "accept" : "reject") << "\n";
            return verdict ? kExitTrue : kExitFalse;
        }

        if (app.got_subcommand(cmd_run)) {
            sra::Dsa a = load_dsa(file);
            sra::Word w = parse_cli_word(a.alphabet(), word, chars);
            sra::Run r = sra::run(a, w);
            for (const auto& move : r.moves)
                std::cout << "move " << a.state_name(move.transition.src) << " -> "
                          << a.state_name(move.transition.dst) << " label "
                          << sra::format_word(a.alphabet(), move.transition.label) << " consumed "
                          << sra::display_word(a.alphabet(), move.consumed) << "\n";
            std::cout << "residual " << sra::display_word(a.alphabet(), r.residual) << "\n";
            std::cout << "state " << a.state_name(r.end_state) << "\n";
            std::cout << (r.accepted ? "accept" : "reject") << "\n";
            return r.accepted ? kExitTrue : kExitFalse;
        }

        if (app.got_subcommand(cmd_to_dfa)) {
            std::cout << sra::serialize(sra::tracking_dfa(load_dsa(file)).dfa);
            return kExitTrue;
        }
        if (app.got_subcommand(cmd_minimize)) {
            std::cout << sra::serialize(sra::minimize(load_dfa(file)));
            return kExitTrue;
        }
        if (app.got_subcommand(cmd_complete)) {
            std::cout << sra::serialize(sra::complete(load_dfa(file)));
            return kExitTrue;
        }
        if (app.got_subcommand(cmd_trim)) {
            std::cout << sra::serialize(sra::trim(load_dfa(file)));
            return kExitTrue;
        }

        if (app.got_subcommand(cmd_equiv)) {
            auto x = load_automaton(file);
            auto y = load_automaton(file2);
            sra::Dfa mx = to_comparable_dfa(x, oracle_maxlen, std::cout, file);
            sra::Dfa my = to_comparable_dfa(y, oracle_maxlen, std::cout, file2);
            auto result = sra::equivalent(mx, my);
            if (result.equivalent) {
                std::cout << "equivalent\n";
                return kExitTrue;
            }
            std::cout << "not equivalent\ncounterexample "
                      << sra::display_word(mx.alphabet(), *result.counterexample) << "\n";
            return kExitFalse;
        }

        if (app.got_subcommand(cmd_size)) {
            print_size(load_automaton(file));
            return kExitTrue;
        }

        if (app.got_subcommand(cmd_simple)) {
            sra::Dfa m = load_dfa(file);
            auto p = m.find_state(from_name);
            auto q = m.find_state(to_name);
            if (!p || !q)
                throw sra::Error("unknown --from/--to state");
            auto words = sra::simple_words(m, *p, *q, parse_state_set(m, set_csv));
            for (const auto& w : words)
                std::cout << sra::format_word(m.alphabet(), w) << "\n";
            return kExitTrue;
        }

        if (app.got_subcommand(cmd_check)) {
            sra::Dfa m = load_dfa(file);
            auto report = sra::check_suffix_tracking(m, parse_state_set(m, set_csv));
            std::cout << report.describe(m) << "\n";
            return report.ok() ? kExitTrue : kExitFalse;
        }

        if (app.got_subcommand(cmd_derive)) {
            sra::Dfa m = load_dfa(file);
            auto states = parse_state_set(m, set_csv);
            sra::Dsa derived = sra::derive_dsa(m, states, force);
            std::cout << sra::serialize(derived);
            if (force) {
                auto verdict = sra::equivalent(m, sra::tracking_dfa(derived).dfa);
                auto lhs = sra::enumerate_language(m, oracle_maxlen);
                auto rhs = sra::enumerate_language(derived, oracle_maxlen);
                if (verdict.equivalent && lhs == rhs) {
                    std::cout << "# oracle: equivalent to the source DFA\n";
                } else {
                    std::cout << "# oracle: NOT equivalent to the source DFA";
                    if (verdict.counterexample)
                        std::cout << ", counterexample "
                                  << sra::display_word(m.alphabet(), *verdict.counterexample);
                    std::cout << "\n";
                }
            }
            return kExitTrue;
        }

        if (app.got_subcommand(cmd_derive_min)) {
            sra::Dfa m = load_dfa(file);
            if (!m.is_complete())
                throw sra::Error("derive-min expects a complete DFA (run 'complete' first)");
            auto choice = sra::best_derived_dsa(m);
            std::cout << "# set:";
            for (sra::State q : choice.states)
                std::cout << " " << m.state_name(q);
            std::cout << "\n# total size " << choice.size << "\n";
            std::cout << "# note: smallest DSA derivable from this DFA; a smaller DSA for the same\n"
                         "# language may still be derivable from a larger equivalent DFA\n";
            std::cout << sra::serialize(choice.dsa);
            return kExitTrue;
        }

        if (app.got_subcommand(cmd_suppress)) {
            sra::Dga h = load_dga(file);
            std::set<sra::State> states;
            std::stringstream in(set_csv);
            std::string name;
            while (std::getline(in, name, ',')) {
                if (name.empty())
                    continue;
                auto q = h.find_state(name);
                if (!q)
                    throw sra::Error("unknown state '" + name + "'");
                states.insert(*q);
            }
            std::cout << sra::serialize(sra::dga_suppress(h, states));
            return kExitTrue;
        }

        if (app.got_subcommand(cmd_gen_vc)) {
            sra::Graph g = sra::parse_graph(read_file(file));
            std::size_t padding = delta_opt->count() ? delta : sra::default_padding(g);
            std::cout << sra::serialize(sra::build_vc_dfa(g, padding));
            return kExitTrue;
        }

        if (app.got_subcommand(cmd_budget)) {
            sra::Graph g = sra::parse_graph(read_file(file));
            std::size_t padding = budget_delta_opt->count() ? delta : sra::default_padding(g);
            std::cout << sra::size_budget(k_prime, padding) << "\n";
            return kExitTrue;
        }

        if (app.got_subcommand(cmd_enumerate)) {
            auto automaton = load_automaton(file);
            auto words = std::visit(
                [&](const auto& a) { return sra::enumerate_language(a, max_len); }, automaton);
            const auto& alphabet = alphabet_of(automaton);
            for (const auto& w : words)
                std::cout << sra::display_word(alphabet, w) << "\n";
            return kExitTrue;
        }

        if (app.got_subcommand(cmd_dot)) {
            std::cout << sra::to_dot(load_automaton(file));
            return kExitTrue;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
