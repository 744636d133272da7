#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace peb {

// Errors raised by parsing / construction. Validation problems are reported
// as data (see validate), not thrown.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tape symbols. Plain/Boxed carry a base letter; the stoppers > < imitate
// endmarkers inside encoded words; LeftEnd/RightEnd frame the tape only and
// never occur inside a word.
enum class SymKind { Plain, Boxed, LeftStopper, RightStopper, LeftEnd, RightEnd };

struct TapeSymbol {
    SymKind kind = SymKind::Plain;
    std::string base;  // only for Plain / Boxed

    static TapeSymbol plain(std::string b) { return {SymKind::Plain, std::move(b)}; }
    static TapeSymbol boxed(std::string b) { return {SymKind::Boxed, std::move(b)}; }
    static TapeSymbol left_stopper() { return {SymKind::LeftStopper, {}}; }
    static TapeSymbol right_stopper() { return {SymKind::RightStopper, {}}; }
    static TapeSymbol left_end() { return {SymKind::LeftEnd, {}}; }
    static TapeSymbol right_end() { return {SymKind::RightEnd, {}}; }

    // Textual form used in files and on the command line:
    //   |-  -|  >  <  a  a*
    std::string token() const;
    static TapeSymbol from_token(const std::string& tok);

    friend auto operator<=>(const TapeSymbol&, const TapeSymbol&) = default;
};

using Word = std::vector<TapeSymbol>;

Word word_from_tokens(const std::vector<std::string>& tokens);
std::string word_to_string(const Word& w);

struct Move {
    int direction = 0;   // -1, 0, +1
    bool carry = false;  // pebble moves with the head; only with direction != 0

    friend auto operator<=>(const Move&, const Move&) = default;
};

struct TransitionKey {
    std::string state;
    TapeSymbol read;          // alphabet symbol or endmarker
    bool pebble_here = false; // pebble under the head; false for classical kinds

    friend auto operator<=>(const TransitionKey&, const TransitionKey&) = default;
};

struct Target {
    std::string state;
    Move move;

    friend auto operator<=>(const Target&, const Target&) = default;
};

enum class MachineKind { TwoNfa, TwoDfa, PebbleTwoNfa, PebbleTwoDfa };

std::string kind_tag(MachineKind k);
MachineKind kind_from_tag(const std::string& tag);
bool is_pebble_kind(MachineKind k);
bool is_deterministic_kind(MachineKind k);

// Immutable after construction; all operations on it are pure.
struct Automaton {
    MachineKind kind = MachineKind::TwoNfa;
    std::set<TapeSymbol> alphabet;  // word symbols; never LeftEnd/RightEnd
    std::vector<std::string> states;
    std::string initial;
    std::set<std::string> accepting;
    std::map<TransitionKey, std::vector<Target>> delta;  // targets sorted, unique

    void add_state(const std::string& id);
    bool has_state(const std::string& id) const;
    void add_transition(const TransitionKey& key, const Target& tgt);
    const std::vector<Target>* targets(const TransitionKey& key) const;

    // Sorts states and target lists so structurally equal machines compare equal.
    void normalize();

    friend bool operator==(const Automaton&, const Automaton&) = default;
};

// Empty report iff the descriptor is well formed; each entry names the offender.
std::vector<std::string> validate(const Automaton& a);

// True iff every transition key has at most one target (ignores the declared kind).
bool is_deterministic(const Automaton& a);

// JSON file format round trip. serialize is canonical: identical descriptors
// produce byte-identical output.
Automaton parse_automaton(const std::string& text);
std::string serialize_automaton(const Automaton& a);

Automaton load_automaton_file(const std::string& path);
void save_automaton_file(const Automaton& a, const std::string& path);

}  // namespace peb
