#include "peb/simulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace peb {

namespace {

// Transition tables compiled to integer indices; delta lookups during
// reachability stay off the string-keyed map.
struct SimContext {
    const Automaton& aut;
    bool pebbled;
    std::map<std::string, int> state_index;
    std::map<TapeSymbol, int> sym_index;  // alphabet, then left end, right end
    int nsyms = 0;
    std::vector<bool> accepting;

    struct CompiledTarget {
        int state;
        int direction;
        bool carry;
    };
    // [state * nsyms * 2 + sym * 2 + pebble]
    std::vector<std::vector<CompiledTarget>> table;

    explicit SimContext(const Automaton& a) : aut(a), pebbled(is_pebble_kind(a.kind)) {
        for (size_t i = 0; i < a.states.size(); ++i)
            state_index[a.states[i]] = static_cast<int>(i);
        for (const auto& s : a.alphabet)
            sym_index.emplace(s, static_cast<int>(sym_index.size()));
        sym_index.emplace(TapeSymbol::left_end(), static_cast<int>(sym_index.size()));
        sym_index.emplace(TapeSymbol::right_end(), static_cast<int>(sym_index.size()));
        nsyms = static_cast<int>(sym_index.size());

        accepting.resize(a.states.size(), false);
        for (const auto& q : a.accepting)
            if (auto it = state_index.find(q); it != state_index.end())
                accepting[static_cast<size_t>(it->second)] = true;

        table.resize(a.states.size() * static_cast<size_t>(nsyms) * 2);
        for (const auto& [key, targets] : a.delta) {
            auto qi = state_index.find(key.state);
            auto si = sym_index.find(key.read);
            if (qi == state_index.end() || si == sym_index.end()) continue;
            auto& slot = table[slot_of(qi->second, si->second, key.pebble_here)];
            for (const auto& t : targets)
                slot.push_back({state_index.at(t.state), t.move.direction, t.move.carry});
        }
    }

    size_t slot_of(int state, int sym, bool pebble) const {
        return (static_cast<size_t>(state) * static_cast<size_t>(nsyms) +
                static_cast<size_t>(sym)) *
                   2 +
               (pebble ? 1 : 0);
    }

    Config initial() const {
        auto it = state_index.find(aut.initial);
        if (it == state_index.end()) throw InputError("initial state not declared");
        return Config{it->second, 0, 0};
    }

    // Symbol index per tape position 0..k+1.
    std::vector<int> compile_tape(const Word& word) const {
        std::vector<int> cells;
        cells.reserve(word.size() + 2);
        cells.push_back(sym_index.at(TapeSymbol::left_end()));
        for (const auto& s : word) {
            auto it = sym_index.find(s);
            if (it == sym_index.end())
                throw InputError("symbol '" + s.token() + "' not in alphabet");
            cells.push_back(it->second);
        }
        cells.push_back(sym_index.at(TapeSymbol::right_end()));
        return cells;
    }

    const std::vector<CompiledTarget>& moves(const std::vector<int>& cells,
                                             const Config& c) const {
        bool peb = pebbled && c.head == c.pebble;
        return table[slot_of(c.state, cells[static_cast<size_t>(c.head)], peb)];
    }
};

// Visits every reachable configuration; returns true as soon as an accepting
// state shows up. The visited count is reported through *visited if given.
bool reach_accepting(const SimContext& ctx, const std::vector<int>& cells,
                     size_t* visited) {
    size_t span = cells.size();
    size_t total = ctx.aut.states.size() * span * (ctx.pebbled ? span : 1);
    std::vector<bool> seen(total, false);
    auto pack = [&](const Config& c) {
        size_t v = static_cast<size_t>(c.state) * span + static_cast<size_t>(c.head);
        if (ctx.pebbled) v = v * span + static_cast<size_t>(c.pebble);
        return v;
    };

    bool full_closure = visited != nullptr;
    std::deque<Config> queue;
    Config init = ctx.initial();
    seen[pack(init)] = true;
    size_t count = 1;
    bool found = ctx.accepting[static_cast<size_t>(init.state)];
    if (found && !full_closure) return true;
    queue.push_back(init);

    while (!queue.empty()) {
        Config c = queue.front();
        queue.pop_front();
        for (const auto& t : ctx.moves(cells, c)) {
            Config n{t.state, c.head + t.direction,
                     t.carry ? c.pebble + t.direction : c.pebble};
            size_t id = pack(n);
            if (seen[id]) continue;
            seen[id] = true;
            ++count;
            if (ctx.accepting[static_cast<size_t>(n.state)]) {
                found = true;
                if (!full_closure) return true;
            }
            queue.push_back(n);
        }
    }
    if (visited) *visited = count;
    return found;
}

}  // namespace

std::vector<Config> step(const Automaton& a, const Tape& tape, const Config& c) {
    SimContext ctx(a);
    Word word;
    for (int i = 1; i <= tape.length(); ++i) word.push_back(tape.at(i));
    auto cells = ctx.compile_tape(word);
    std::vector<Config> out;
    for (const auto& t : ctx.moves(cells, c))
        out.push_back({t.state, c.head + t.direction,
                       t.carry ? c.pebble + t.direction : c.pebble});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool accepts(const Automaton& a, const Word& word) {
    SimContext ctx(a);
    return reach_accepting(ctx, ctx.compile_tape(word), nullptr);
}

size_t reachable_configuration_count(const Automaton& a, const Word& word) {
    SimContext ctx(a);
    size_t visited = 0;
    reach_accepting(ctx, ctx.compile_tape(word), &visited);
    return visited;
}

TraceResult trace(const Automaton& a, const Word& word, int max_steps) {
    SimContext ctx(a);
    auto cells = ctx.compile_tape(word);
    TraceResult res;
    res.deterministic = is_deterministic(a);

    auto successors = [&](const Config& c, std::vector<Config>& out) {
        out.clear();
        for (const auto& t : ctx.moves(cells, c))
            out.push_back({t.state, c.head + t.direction,
                           t.carry ? c.pebble + t.direction : c.pebble});
    };

    if (res.deterministic) {
        std::set<Config> visited;
        Config c = ctx.initial();
        res.run.push_back(c);
        visited.insert(c);
        std::vector<Config> succ;
        for (int i = 0; i < max_steps; ++i) {
            successors(c, succ);
            if (succ.empty()) {
                res.halted = true;
                break;
            }
            c = succ.front();
            res.run.push_back(c);
            if (!visited.insert(c).second) {
                res.loop_detected = true;
                break;
            }
        }
        return res;
    }

    std::set<Config> layer{ctx.initial()};
    res.layers.push_back({layer.begin(), layer.end()});
    std::vector<Config> succ;
    for (int i = 0; i < max_steps && !layer.empty(); ++i) {
        std::set<Config> next;
        for (const auto& c : layer) {
            successors(c, succ);
            next.insert(succ.begin(), succ.end());
        }
        if (next.empty()) {
            res.halted = true;
            break;
        }
        res.layers.push_back({next.begin(), next.end()});
        layer = std::move(next);
    }
    return res;
}

std::optional<Word> bounded_equiv(const Automaton& left, const Automaton& right,
                                  int max_len, const WordTransform& transform,
                                  long long budget) {
    std::vector<TapeSymbol> alpha(left.alphabet.begin(), left.alphabet.end());

    long long count = 0, per_len = 1;
    long long base = std::max<long long>(1, static_cast<long long>(alpha.size()));
    for (int len = 0; len <= max_len; ++len) {
        count += per_len;
        if (count > budget)
            throw BudgetExceeded("bounded_equiv word budget exceeded at length " +
                                 std::to_string(len));
        if (per_len > budget / base)
            per_len = budget + 1;  // saturate instead of overflowing
        else
            per_len *= base;
    }

    SimContext lctx(left), rctx(right);
    auto disagree = [&](const Word& w) {
        Word rhs = transform ? transform(w) : w;
        bool la = reach_accepting(lctx, lctx.compile_tape(w), nullptr);
        bool ra = reach_accepting(rctx, rctx.compile_tape(rhs), nullptr);
        return la != ra;
    };

    Word w;
    std::function<std::optional<Word>(int)> sweep = [&](int remaining) -> std::optional<Word> {
        if (remaining == 0) {
            if (disagree(w)) return w;
            return std::nullopt;
        }
        for (const auto& s : alpha) {
            w.push_back(s);
            if (auto r = sweep(remaining - 1)) return r;
            w.pop_back();
        }
        return std::nullopt;
    };

    for (int len = 0; len <= max_len; ++len) {
        if (alpha.empty() && len > 0) break;
        if (auto r = sweep(len)) return r;
    }
    return std::nullopt;
}

}  // namespace peb
