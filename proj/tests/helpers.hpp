#pragma once

#include <optional>
#include <random>
#include <vector>

#include "peb/automaton.hpp"
#include "peb/simulation.hpp"

namespace peb::testing {

// Random machine corpus, reproducible from the seed. Generated machines are
// always validation-clean.
inline Automaton random_machine(std::mt19937& rng, bool pebbled, int max_states,
                                int alpha_size, bool deterministic,
                                bool unary_digit = false) {
    std::uniform_int_distribution<int> nstates(1, max_states);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int n = nstates(rng);

    Automaton a;
    static const char* named[] = {"a", "b", "c"};
    static const char* digits[] = {"1", "b", "c"};
    const char** letters = unary_digit ? digits : named;
    for (int i = 0; i < alpha_size; ++i) a.alphabet.insert(TapeSymbol::plain(letters[i]));
    for (int i = 0; i < n; ++i) a.add_state("q" + std::to_string(i));
    a.initial = "q0";
    for (int i = 0; i < n; ++i)
        if (coin(rng) < 0.3) a.accepting.insert("q" + std::to_string(i));

    std::vector<TapeSymbol> reads(a.alphabet.begin(), a.alphabet.end());
    reads.push_back(TapeSymbol::left_end());
    reads.push_back(TapeSymbol::right_end());

    std::uniform_int_distribution<int> pick_state(0, n - 1);
    for (int i = 0; i < n; ++i) {
        for (const auto& read : reads) {
            for (int peb = 0; peb <= (pebbled ? 1 : 0); ++peb) {
                if (coin(rng) > 0.7) continue;  // partial transition maps
                int fanout = (!deterministic && coin(rng) < 0.3) ? 2 : 1;
                for (int t = 0; t < fanout; ++t) {
                    int lo = read.kind == SymKind::LeftEnd ? 0 : -1;
                    int hi = read.kind == SymKind::RightEnd ? 0 : 1;
                    std::uniform_int_distribution<int> dirs(lo, hi);
                    int dir = dirs(rng);
                    bool carry = pebbled && peb && dir != 0 && coin(rng) < 0.4;
                    a.add_transition(
                        {"q" + std::to_string(i), read, peb != 0},
                        {"q" + std::to_string(pick_state(rng)), {dir, carry}});
                }
            }
        }
    }
    bool det = is_deterministic(a);
    if (pebbled)
        a.kind = (deterministic && det) ? MachineKind::PebbleTwoDfa
                                        : MachineKind::PebbleTwoNfa;
    else
        a.kind = (deterministic && det) ? MachineKind::TwoDfa : MachineKind::TwoNfa;
    a.normalize();
    return a;
}

inline Automaton random_pebble_machine(std::mt19937& rng, int max_states, int alpha_size,
                                       bool deterministic) {
    return random_machine(rng, true, max_states, alpha_size, deterministic);
}

// Unary machines use "1" so they can feed the pumping check directly.
inline Automaton random_unary_2nfa(std::mt19937& rng, int max_states) {
    return random_machine(rng, false, max_states, 1, false, true);
}

// Hand-built deterministic pebble machine that accepts everything by carrying
// the pebble to the right endmarker and back. Exercises the transition shapes
// the witness machines never use: plain right-endmarker reads and leftward
// pebble moves.
inline Automaton shuttle_machine() {
    Automaton a;
    a.kind = MachineKind::PebbleTwoDfa;
    TapeSymbol sa = TapeSymbol::plain("a"), sb = TapeSymbol::plain("b");
    TapeSymbol le = TapeSymbol::left_end(), re = TapeSymbol::right_end();
    a.alphabet = {sa, sb};
    for (int i = 0; i <= 5; ++i) a.add_state("q" + std::to_string(i));
    a.initial = "q0";
    a.accepting = {"q5"};
    a.add_transition({"q0", le, true}, {"q1", {+1, false}});
    a.add_transition({"q1", sa, false}, {"q1", {+1, false}});
    a.add_transition({"q1", sb, false}, {"q1", {+1, false}});
    a.add_transition({"q1", re, false}, {"q2", {-1, false}});
    a.add_transition({"q2", sa, false}, {"q2", {-1, false}});
    a.add_transition({"q2", sb, false}, {"q2", {-1, false}});
    a.add_transition({"q2", le, true}, {"q3", {+1, true}});
    a.add_transition({"q3", sa, true}, {"q3", {+1, true}});
    a.add_transition({"q3", sb, true}, {"q3", {+1, true}});
    a.add_transition({"q3", re, true}, {"q4", {-1, true}});
    a.add_transition({"q4", sa, true}, {"q4", {-1, true}});
    a.add_transition({"q4", sb, true}, {"q4", {-1, true}});
    a.add_transition({"q4", le, true}, {"q5", {0, false}});
    a.normalize();
    return a;
}

// One-state machine accepting every word.
inline Automaton all_accepting(MachineKind kind, std::set<TapeSymbol> alphabet) {
    Automaton a;
    a.kind = kind;
    a.alphabet = std::move(alphabet);
    a.add_state("q0");
    a.initial = "q0";
    a.accepting = {"q0"};
    return a;
}

// Independent equivalence oracle: odometer enumeration, no recursion shared
// with bounded_equiv.
inline std::optional<Word> naive_equiv(const Automaton& left, const Automaton& right,
                                       int max_len, const WordTransform& transform) {
    std::vector<TapeSymbol> alpha(left.alphabet.begin(), left.alphabet.end());
    for (int len = 0; len <= max_len; ++len) {
        if (alpha.empty() && len > 0) break;
        std::vector<size_t> idx(static_cast<size_t>(len), 0);
        while (true) {
            Word w;
            for (size_t i : idx) w.push_back(alpha[i]);
            Word rhs = transform ? transform(w) : w;
            if (accepts(left, w) != accepts(right, rhs)) return w;
            int pos = len - 1;
            while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == alpha.size()) {
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return std::nullopt;
}

}  // namespace peb::testing
