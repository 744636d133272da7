#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "peb/automaton.hpp"

namespace peb {

// Input word framed by endmarkers; positions 0..k+1.
class Tape {
public:
    explicit Tape(Word word) : word_(std::move(word)) {}

    int length() const { return static_cast<int>(word_.size()); }

    TapeSymbol at(int pos) const {
        if (pos == 0) return TapeSymbol::left_end();
        if (pos == length() + 1) return TapeSymbol::right_end();
        return word_[static_cast<size_t>(pos - 1)];
    }

private:
    Word word_;
};

// Instantaneous description. pebble is 0 for classical kinds.
struct Config {
    int state = 0;  // index into Automaton::states
    int head = 0;
    int pebble = 0;

    friend auto operator<=>(const Config&, const Config&) = default;
};

// One step of the configuration relation.
std::vector<Config> step(const Automaton& a, const Tape& tape, const Config& c);

// Reachability of an accepting-state configuration from the initial one.
bool accepts(const Automaton& a, const Word& word);

// Size of the reachable configuration set; never exceeds |Q|*(k+2) for
// classical kinds and |Q|*(k+2)^2 for pebble kinds.
size_t reachable_configuration_count(const Automaton& a, const Word& word);

struct TraceResult {
    bool deterministic = false;
    // Deterministic kinds: the unique run prefix.
    std::vector<Config> run;
    bool loop_detected = false;
    bool halted = false;
    // Nondeterministic kinds: reachable configurations per step index.
    std::vector<std::vector<Config>> layers;
};

TraceResult trace(const Automaton& a, const Word& word, int max_steps);

using WordTransform = std::function<Word(const Word&)>;

// Length-lexicographically smallest w, |w| <= max_len, on which the two
// machines disagree (the right one run on transform(w)); nullopt if none.
// Enumeration order follows the sorted alphabet of `left`. Throws
// BudgetExceeded if the sweep would visit more than `budget` words.
std::optional<Word> bounded_equiv(const Automaton& left, const Automaton& right,
                                  int max_len, const WordTransform& transform = {},
                                  long long budget = 1'000'000);

}  // namespace peb
