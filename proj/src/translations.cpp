#include "peb/translations.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "peb/simulation.hpp"

namespace peb {

namespace {

void require_valid(const Automaton& a, const char* who) {
    auto report = validate(a);
    if (!report.empty())
        throw InputError(std::string(who) + ": invalid input descriptor: " + report.front());
}

bool enabled(const RuleSet& disabled, const std::string& family) {
    return !disabled.count(family);
}

std::string copy_name(const std::string& q, const char* suffix) { return q + suffix; }

}  // namespace

std::string TranslationReport::to_json() const {
    nlohmann::ordered_json j;
    j["input_states"] = input_states;
    j["output_states"] = output_states;
    j["bound"] = bound;
    j["bound_satisfied"] = bound_satisfied;
    j["deterministic_in"] = deterministic_in;
    j["deterministic_out"] = deterministic_out;
    j["rule_audit"] = rule_audit;
    j["notes"] = notes;
    return j.dump(2) + "\n";
}

std::pair<Automaton, TranslationReport> pebble_to_classical(const Automaton& m,
                                                            const RuleSet& disabled) {
    require_valid(m, "pebble_to_classical");
    if (!is_pebble_kind(m.kind))
        throw InputError("pebble_to_classical: input must be a pebble machine");

    Automaton out;
    out.alphabet = m.alphabet;
    for (const auto& s : m.alphabet) {
        out.alphabet.insert(TapeSymbol::boxed(s.base));
    }
    out.alphabet.insert(TapeSymbol::left_stopper());
    out.alphabet.insert(TapeSymbol::right_stopper());
    out.states = m.states;
    out.initial = m.initial;
    out.accepting = m.accepting;

    TranslationReport rep;
    rep.input_states = static_cast<int>(m.states.size());
    rep.deterministic_in = is_deterministic(m);
    auto audit = [&](const char* family) { ++rep.rule_audit[family]; };

    // Passing-through copies, created lazily on the first pebble move that
    // needs them. The copy sweeps over plain letters and stoppers and resumes
    // the simulation with a stationary move on the next pseudo pebble.
    auto ensure_copy = [&](const std::string& q, int dir) -> std::string {
        std::string id = copy_name(q, dir > 0 ? "@+1" : "@-1");
        if (out.has_state(id)) return id;
        out.add_state(id);
        for (const auto& s : m.alphabet)
            out.add_transition({id, s, false}, {id, {dir, false}});
        out.add_transition({id, TapeSymbol::left_stopper(), false}, {id, {dir, false}});
        out.add_transition({id, TapeSymbol::right_stopper(), false}, {id, {dir, false}});
        for (const auto& s : m.alphabet)
            out.add_transition({id, TapeSymbol::boxed(s.base), false}, {q, {0, false}});
        TapeSymbol resume_end =
            dir > 0 ? TapeSymbol::right_end() : TapeSymbol::left_end();
        out.add_transition({id, resume_end, false}, {q, {0, false}});
        return id;
    };

    for (const auto& [key, targets] : m.delta) {
        for (const auto& t : targets) {
            if (!key.pebble_here) {
                switch (key.read.kind) {
                    case SymKind::Plain:
                        if (enabled(disabled, "r1")) {
                            out.add_transition({key.state, key.read, false}, t);
                            audit("r1");
                        }
                        break;
                    case SymKind::LeftEnd:
                        if (enabled(disabled, "r2")) {
                            out.add_transition(
                                {key.state, TapeSymbol::left_stopper(), false}, t);
                            audit("r2");
                        }
                        break;
                    case SymKind::RightEnd:
                        if (enabled(disabled, "r3")) {
                            out.add_transition(
                                {key.state, TapeSymbol::right_stopper(), false}, t);
                            audit("r3");
                        }
                        break;
                    default:
                        break;
                }
                continue;
            }
            if (!t.move.carry) {
                switch (key.read.kind) {
                    case SymKind::Plain:
                        if (enabled(disabled, "r4")) {
                            out.add_transition(
                                {key.state, TapeSymbol::boxed(key.read.base), false}, t);
                            audit("r4");
                        }
                        break;
                    case SymKind::LeftEnd:
                        if (enabled(disabled, "r5")) {
                            out.add_transition({key.state, TapeSymbol::left_end(), false},
                                               t);
                            audit("r5");
                        }
                        break;
                    case SymKind::RightEnd:
                        if (enabled(disabled, "r6")) {
                            out.add_transition({key.state, TapeSymbol::right_end(), false},
                                               t);
                            audit("r6");
                        }
                        break;
                    default:
                        break;
                }
                continue;
            }
            // Pebble moves: enter a passing-through copy of the target state.
            int dir = t.move.direction;
            const char* family = nullptr;
            TapeSymbol read;
            if (key.read.kind == SymKind::Plain) {
                family = dir > 0 ? "r7" : "r7l";
                read = TapeSymbol::boxed(key.read.base);
            } else if (key.read.kind == SymKind::LeftEnd && dir > 0) {
                family = "r8";
                read = TapeSymbol::left_end();
            } else if (key.read.kind == SymKind::RightEnd && dir < 0) {
                family = "r8l";
                read = TapeSymbol::right_end();
            }
            if (family && enabled(disabled, family)) {
                std::string copy = ensure_copy(t.state, dir);
                out.add_transition({key.state, read, false},
                                   {copy, {dir, false}});
                audit(family);
            }
        }
    }

    out.kind = (is_deterministic_kind(m.kind) && is_deterministic(out))
                   ? MachineKind::TwoDfa
                   : MachineKind::TwoNfa;
    out.normalize();

    rep.output_states = static_cast<int>(out.states.size());
    rep.bound = 3.0 * rep.input_states;
    rep.bound_satisfied = rep.output_states <= rep.bound;
    rep.deterministic_out = is_deterministic(out);
    return {std::move(out), std::move(rep)};
}

namespace {

// The encoded alphabet must be of the shape S ∪ {>,<} ∪ S-boxed.
std::set<TapeSymbol> plain_part_of_encoded(const Automaton& n) {
    std::set<std::string> plain, boxed;
    bool left = false, right = false;
    for (const auto& s : n.alphabet) {
        switch (s.kind) {
            case SymKind::Plain: plain.insert(s.base); break;
            case SymKind::Boxed: boxed.insert(s.base); break;
            case SymKind::LeftStopper: left = true; break;
            case SymKind::RightStopper: right = true; break;
            default: break;
        }
    }
    if (!left || !right || plain != boxed)
        throw InputError("classical_to_pebble: alphabet is not of encoded shape");
    std::set<TapeSymbol> out;
    for (const auto& b : plain) out.insert(TapeSymbol::plain(b));
    return out;
}

}  // namespace

std::pair<Automaton, TranslationReport> classical_to_pebble(const Automaton& n,
                                                            const RuleSet& disabled) {
    require_valid(n, "classical_to_pebble");
    if (is_pebble_kind(n.kind))
        throw InputError("classical_to_pebble: input must be a classical machine");

    Automaton out;
    out.alphabet = plain_part_of_encoded(n);
    out.states = n.states;
    out.initial = n.initial;
    out.accepting = n.accepting;

    TranslationReport rep;
    rep.input_states = static_cast<int>(n.states.size());
    rep.deterministic_in = is_deterministic(n);
    auto audit = [&](const char* family) { ++rep.rule_audit[family]; };

    // Pebble-relocation routine: first copy hunts for the pebble, drags it one
    // cell, second copy returns the head to the far endmarker and resumes.
    // dir is the direction of the hunt (-1 when the pebble moves right).
    auto ensure_copies = [&](const std::string& q, int dir) -> std::string {
        std::string hunt = copy_name(q, dir < 0 ? "@-1" : "@+1");
        std::string back = copy_name(q, dir < 0 ? "@-2" : "@+2");
        if (out.has_state(hunt)) return hunt;
        out.add_state(hunt);
        out.add_state(back);
        TapeSymbol near_end = dir < 0 ? TapeSymbol::right_end() : TapeSymbol::left_end();
        TapeSymbol far_end = dir < 0 ? TapeSymbol::left_end() : TapeSymbol::right_end();
        for (const auto& s : out.alphabet)
            out.add_transition({hunt, s, false}, {hunt, {dir, false}});
        for (const auto& s : out.alphabet)
            out.add_transition({hunt, s, true}, {back, {-dir, true}});
        out.add_transition({hunt, far_end, true}, {back, {-dir, true}});
        for (const auto& s : out.alphabet) {
            out.add_transition({back, s, true}, {back, {dir, false}});
            out.add_transition({back, s, false}, {back, {dir, false}});
        }
        out.add_transition({back, near_end, true}, {back, {dir, false}});
        out.add_transition({back, far_end, false}, {q, {0, false}});
        return hunt;
    };

    for (const auto& [key, targets] : n.delta) {
        for (const auto& t : targets) {
            switch (key.read.kind) {
                case SymKind::Plain:
                    if (enabled(disabled, "r1")) {
                        out.add_transition({key.state, key.read, false}, t);
                        audit("r1");
                    }
                    break;
                case SymKind::LeftStopper:
                    if (t.move.direction >= 0) {
                        if (enabled(disabled, "r2")) {
                            out.add_transition({key.state, TapeSymbol::left_end(), false},
                                               t);
                            audit("r2");
                        }
                    } else if (enabled(disabled, "r7l")) {
                        // Crossing into the previous segment: the pebble must
                        // move one cell to the left.
                        std::string hunt = ensure_copies(t.state, +1);
                        out.add_transition({key.state, TapeSymbol::left_end(), false},
                                           {hunt, {+1, false}});
                        audit("r7l");
                    }
                    break;
                case SymKind::RightStopper:
                    if (t.move.direction <= 0) {
                        if (enabled(disabled, "r3")) {
                            out.add_transition({key.state, TapeSymbol::right_end(), false},
                                               t);
                            audit("r3");
                        }
                    } else if (enabled(disabled, "r7")) {
                        // Crossing into the next segment: the pebble must move
                        // one cell to the right.
                        std::string hunt = ensure_copies(t.state, -1);
                        out.add_transition({key.state, TapeSymbol::right_end(), false},
                                           {hunt, {-1, false}});
                        audit("r7");
                    }
                    break;
                case SymKind::Boxed:
                    if (enabled(disabled, "r4")) {
                        out.add_transition(
                            {key.state, TapeSymbol::plain(key.read.base), true}, t);
                        audit("r4");
                    }
                    break;
                case SymKind::LeftEnd:
                    if (enabled(disabled, "r5")) {
                        out.add_transition({key.state, TapeSymbol::left_end(), true}, t);
                        audit("r5");
                    }
                    break;
                case SymKind::RightEnd:
                    if (enabled(disabled, "r6")) {
                        out.add_transition({key.state, TapeSymbol::right_end(), true}, t);
                        audit("r6");
                    }
                    break;
            }
        }
    }

    out.kind = (is_deterministic_kind(n.kind) && is_deterministic(out))
                   ? MachineKind::PebbleTwoDfa
                   : MachineKind::PebbleTwoNfa;
    out.normalize();

    rep.output_states = static_cast<int>(out.states.size());
    rep.bound = 5.0 * rep.input_states;
    rep.bound_satisfied = rep.output_states <= rep.bound;
    rep.deterministic_out = is_deterministic(out);
    return {std::move(out), std::move(rep)};
}

namespace {

std::pair<Automaton, TranslationReport> lift_pipeline(const Automaton& m,
                                                      const TwoWayTransformer& f,
                                                      bool require_det_result,
                                                      const char* who) {
    require_valid(m, who);
    if (!is_pebble_kind(m.kind))
        throw InputError(std::string(who) + ": input must be a pebble machine");
    int m_states = static_cast<int>(m.states.size());

    auto [classical, rep_up] = pebble_to_classical(m);
    Automaton transformed = f.apply(classical);
    if (require_det_result && !is_deterministic(transformed))
        throw ConstructionError(std::string(who) + ": transformer '" + f.name +
                                "' produced a nondeterministic machine");
    auto [result, rep_down] = classical_to_pebble(transformed);

    TranslationReport rep;
    rep.input_states = m_states;
    rep.output_states = static_cast<int>(result.states.size());
    rep.bound = 5.0 * f.state_bound(3.0 * m_states);
    rep.bound_satisfied = rep.output_states <= rep.bound;
    rep.deterministic_in = is_deterministic(m);
    rep.deterministic_out = is_deterministic(result);
    rep.rule_audit = rep_down.rule_audit;
    rep.notes["transformer"] = f.name;
    rep.notes["classical_states"] = std::to_string(classical.states.size());
    rep.notes["transformed_states"] = std::to_string(transformed.states.size());
    return {std::move(result), std::move(rep)};
}

}  // namespace

std::pair<Automaton, TranslationReport> lift_determinization(const Automaton& m,
                                                             const TwoWayTransformer& f) {
    return lift_pipeline(m, f, /*require_det_result=*/true, "lift_determinization");
}

std::pair<Automaton, TranslationReport> lift_complement(const Automaton& m,
                                                        const TwoWayTransformer& f) {
    return lift_pipeline(m, f, /*require_det_result=*/false, "lift_complement");
}

std::pair<Automaton, TranslationReport> complement_pebble_dfa(
    const Automaton& m, const TwoWayTransformer& comp2dfa) {
    require_valid(m, "complement_pebble_dfa");
    if (!is_deterministic(m))
        throw InputError("complement_pebble_dfa: input must be deterministic");
    auto [result, rep] =
        lift_pipeline(m, comp2dfa, /*require_det_result=*/true, "complement_pebble_dfa");
    int m_states = rep.input_states;
    rep.bound = 60.0 * m_states;
    rep.bound_satisfied = rep.output_states <= rep.bound;
    // Attainable exactly when the declared f keeps 5*f(3m) within 60m,
    // i.e. f(n) <= 4n.
    bool attainable = 5.0 * comp2dfa.state_bound(3.0 * m_states) <= 60.0 * m_states;
    rep.notes["target_bound"] = std::to_string(60 * m_states);
    rep.notes["target_attainable_with_declared_f"] = attainable ? "true" : "false";
    return {std::move(result), std::move(rep)};
}

// ---------------------------------------------------------------------------
// Crossing-table baseline.

namespace {

struct CrossingTable {
    std::set<int> exits;                    // exit states after the prefix, moving right
    std::set<std::pair<int, int>> reenter;  // re-enter in q  =>  exit right in q'
    std::set<int> accept_in;                // re-enter in q  =>  accepting state reachable
    bool accept_any = false;                // accepting state reachable from the start

    friend auto operator<=>(const CrossingTable&, const CrossingTable&) = default;
};

struct TableBuilder {
    const Automaton& a;
    std::map<std::string, int> index;
    std::vector<bool> accepting;

    explicit TableBuilder(const Automaton& aut) : a(aut) {
        for (size_t i = 0; i < a.states.size(); ++i)
            index[a.states[i]] = static_cast<int>(i);
        accepting.resize(a.states.size(), false);
        for (const auto& q : a.accepting) accepting[index.at(q)] = true;
    }

    struct CellResult {
        std::set<int> exits;
        bool accept_hit = false;
    };

    // Fixpoint of the states reachable inside one cell, given the states
    // entering it and the crossing behavior of the prefix to its left.
    CellResult close_cell(const std::set<int>& entry, const TapeSymbol& sym,
                          const CrossingTable& prefix) const {
        CellResult res;
        std::set<int> in_cell = entry;
        std::deque<int> work(entry.begin(), entry.end());
        auto visit = [&](int q) {
            if (in_cell.insert(q).second) work.push_back(q);
        };
        while (!work.empty()) {
            int q = work.front();
            work.pop_front();
            if (accepting[static_cast<size_t>(q)]) res.accept_hit = true;
            const auto* targets = a.targets({a.states[static_cast<size_t>(q)], sym, false});
            if (!targets) continue;
            for (const auto& t : *targets) {
                int q2 = index.at(t.state);
                switch (t.move.direction) {
                    case 0:
                        visit(q2);
                        break;
                    case +1:
                        res.exits.insert(q2);
                        break;
                    case -1:
                        // Excursion into the prefix.
                        if (prefix.accept_in.count(q2)) res.accept_hit = true;
                        for (const auto& [from, to] : prefix.reenter)
                            if (from == q2) visit(to);
                        break;
                }
            }
        }
        return res;
    }

    CrossingTable extend(const CrossingTable& prefix, const TapeSymbol& sym) const {
        CrossingTable next;
        CellResult main = close_cell(prefix.exits, sym, prefix);
        next.exits = main.exits;
        next.accept_any = prefix.accept_any || main.accept_hit;
        for (int q = 0; q < static_cast<int>(a.states.size()); ++q) {
            CellResult r = close_cell({q}, sym, prefix);
            for (int q2 : r.exits) next.reenter.insert({q, q2});
            if (r.accept_hit) next.accept_in.insert(q);
        }
        return next;
    }

    CrossingTable initial() const {
        CrossingTable pre;  // empty prefix
        pre.exits = {index.at(a.initial)};
        return extend_left_end(pre);
    }

    CrossingTable extend_left_end(const CrossingTable& pre) const {
        return extend(pre, TapeSymbol::left_end());
    }
};

Automaton crossing_table_machine(const Automaton& a, long long state_cap,
                                 bool complemented) {
    require_valid(a, "shepherdson_to_one_way");
    if (is_pebble_kind(a.kind))
        throw InputError("shepherdson_to_one_way: input must be a classical machine");

    TableBuilder builder(a);

    Automaton out;
    out.kind = MachineKind::TwoDfa;
    out.alphabet = a.alphabet;
    out.add_state("start");
    out.add_state("ACCEPT");
    out.add_state("REJECT");
    out.initial = "start";
    out.accepting = {complemented ? "REJECT" : "ACCEPT"};

    std::map<CrossingTable, std::string> names;
    std::deque<CrossingTable> queue;
    auto intern = [&](const CrossingTable& t) -> std::string {
        auto it = names.find(t);
        if (it != names.end()) return it->second;
        if (static_cast<long long>(names.size()) >= state_cap)
            throw BudgetExceeded("shepherdson_to_one_way: table-state cap exceeded");
        std::string id = "t" + std::to_string(names.size());
        names.emplace(t, id);
        out.add_state(id);
        queue.push_back(t);
        return id;
    };

    CrossingTable init = builder.initial();
    out.add_transition({"start", TapeSymbol::left_end(), false},
                       {intern(init), {+1, false}});

    while (!queue.empty()) {
        CrossingTable t = queue.front();
        queue.pop_front();
        std::string id = names.at(t);
        for (const auto& sym : a.alphabet) {
            CrossingTable next = builder.extend(t, sym);
            out.add_transition({id, sym, false}, {intern(next), {+1, false}});
        }
        CrossingTable fin = builder.extend(t, TapeSymbol::right_end());
        out.add_transition({id, TapeSymbol::right_end(), false},
                           {fin.accept_any ? "ACCEPT" : "REJECT", {0, false}});
    }

    out.normalize();
    return out;
}

}  // namespace

Automaton shepherdson_to_one_way(const Automaton& a, long long state_cap) {
    return crossing_table_machine(a, state_cap, false);
}

Automaton complement_2dfa_baseline(const Automaton& a, long long state_cap) {
    if (!is_deterministic(a))
        throw InputError("complement_2dfa_baseline: input must be deterministic");
    return crossing_table_machine(a, state_cap, true);
}

TwoWayTransformer baseline_determinizer(long long state_cap) {
    return TwoWayTransformer{
        "shepherdson",
        [state_cap](const Automaton& a) { return shepherdson_to_one_way(a, state_cap); },
        [](double n) { return std::exp2(n * n + 2.0 * n + 1.0) + 2.0; }};
}

TwoWayTransformer baseline_complementer(long long state_cap) {
    // Accepts nondeterministic input too: the table construction determinizes
    // before the accepting set is flipped.
    return TwoWayTransformer{
        "shepherdson-complement",
        [state_cap](const Automaton& a) { return crossing_table_machine(a, state_cap, true); },
        [](double n) { return std::exp2(n * n + 2.0 * n + 1.0) + 2.0; }};
}

TwoWayTransformer identity_determinizer() {
    return TwoWayTransformer{"identity-on-deterministic",
                             [](const Automaton& a) {
                                 if (!is_deterministic(a))
                                     throw InputError(
                                         "identity determinizer given a "
                                         "nondeterministic machine");
                                 return a;
                             },
                             [](double n) { return n; }};
}

}  // namespace peb
