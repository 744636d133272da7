#include "peb/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace peb {

namespace {

const std::string kLeftEndTok = "|-";
const std::string kRightEndTok = "-|";
const std::string kLeftStopTok = ">";
const std::string kRightStopTok = "<";

bool valid_base_token(const std::string& t) {
    if (t.empty()) return false;
    if (t == kLeftEndTok || t == kRightEndTok || t == kLeftStopTok || t == kRightStopTok)
        return false;
    if (t.back() == '*') return false;
    for (unsigned char c : t)
        if (std::isspace(c) || !std::isprint(c)) return false;
    return true;
}

}  // namespace

std::string TapeSymbol::token() const {
    switch (kind) {
        case SymKind::Plain: return base;
        case SymKind::Boxed: return base + "*";
        case SymKind::LeftStopper: return kLeftStopTok;
        case SymKind::RightStopper: return kRightStopTok;
        case SymKind::LeftEnd: return kLeftEndTok;
        case SymKind::RightEnd: return kRightEndTok;
    }
    return {};
}

TapeSymbol TapeSymbol::from_token(const std::string& tok) {
    if (tok == kLeftEndTok) return left_end();
    if (tok == kRightEndTok) return right_end();
    if (tok == kLeftStopTok) return left_stopper();
    if (tok == kRightStopTok) return right_stopper();
    if (tok.size() >= 2 && tok.back() == '*') return boxed(tok.substr(0, tok.size() - 1));
    if (!valid_base_token(tok)) throw ParseError("bad symbol token: '" + tok + "'");
    return plain(tok);
}

Word word_from_tokens(const std::vector<std::string>& tokens) {
    Word w;
    w.reserve(tokens.size());
    for (const auto& t : tokens) w.push_back(TapeSymbol::from_token(t));
    return w;
}

std::string word_to_string(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].token();
    }
    return out;
}

std::string kind_tag(MachineKind k) {
    switch (k) {
        case MachineKind::TwoNfa: return "2nfa";
        case MachineKind::TwoDfa: return "2dfa";
        case MachineKind::PebbleTwoNfa: return "pebble-2nfa";
        case MachineKind::PebbleTwoDfa: return "pebble-2dfa";
    }
    return {};
}

MachineKind kind_from_tag(const std::string& tag) {
    if (tag == "2nfa") return MachineKind::TwoNfa;
    if (tag == "2dfa") return MachineKind::TwoDfa;
    if (tag == "pebble-2nfa") return MachineKind::PebbleTwoNfa;
    if (tag == "pebble-2dfa") return MachineKind::PebbleTwoDfa;
    throw ParseError("unknown machine kind: '" + tag + "'");
}

bool is_pebble_kind(MachineKind k) {
    return k == MachineKind::PebbleTwoNfa || k == MachineKind::PebbleTwoDfa;
}

bool is_deterministic_kind(MachineKind k) {
    return k == MachineKind::TwoDfa || k == MachineKind::PebbleTwoDfa;
}

void Automaton::add_state(const std::string& id) {
    if (!has_state(id)) states.push_back(id);
}

bool Automaton::has_state(const std::string& id) const {
    return std::find(states.begin(), states.end(), id) != states.end();
}

void Automaton::add_transition(const TransitionKey& key, const Target& tgt) {
    auto& v = delta[key];
    auto it = std::lower_bound(v.begin(), v.end(), tgt);
    if (it == v.end() || *it != tgt) v.insert(it, tgt);
}

const std::vector<Target>* Automaton::targets(const TransitionKey& key) const {
    auto it = delta.find(key);
    return it == delta.end() ? nullptr : &it->second;
}

void Automaton::normalize() {
    std::sort(states.begin(), states.end());
    for (auto& [k, v] : delta) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
}

std::vector<std::string> validate(const Automaton& a) {
    std::vector<std::string> out;
    auto bad = [&](const std::string& msg) { out.push_back(msg); };

    std::set<std::string> state_set(a.states.begin(), a.states.end());
    if (state_set.size() != a.states.size()) bad("duplicate state ids");
    if (!state_set.count(a.initial)) bad("initial state '" + a.initial + "' not declared");
    for (const auto& q : a.accepting)
        if (!state_set.count(q)) bad("accepting state '" + q + "' not declared");

    bool encoded_alphabet = false;
    for (const auto& s : a.alphabet) {
        switch (s.kind) {
            case SymKind::Plain:
                if (!valid_base_token(s.base)) bad("bad alphabet token '" + s.base + "'");
                break;
            case SymKind::Boxed:
                if (!valid_base_token(s.base)) bad("bad boxed alphabet token '" + s.base + "'");
                encoded_alphabet = true;
                break;
            case SymKind::LeftStopper:
            case SymKind::RightStopper:
                encoded_alphabet = true;
                break;
            case SymKind::LeftEnd:
            case SymKind::RightEnd:
                bad("endmarker listed in alphabet");
                break;
        }
    }
    (void)encoded_alphabet;

    bool pebbled = is_pebble_kind(a.kind);
    for (const auto& [key, targets] : a.delta) {
        std::ostringstream loc;
        loc << "transition (" << key.state << ", " << key.read.token()
            << (key.pebble_here ? "•" : "") << ")";
        if (!state_set.count(key.state)) bad(loc.str() + ": undeclared source state");
        bool read_end =
            key.read.kind == SymKind::LeftEnd || key.read.kind == SymKind::RightEnd;
        if (!read_end && !a.alphabet.count(key.read))
            bad(loc.str() + ": read symbol not in alphabet");
        if (!pebbled && key.pebble_here)
            bad(loc.str() + ": pebble-marked reading in a classical machine");
        for (const auto& t : targets) {
            if (!state_set.count(t.state)) bad(loc.str() + ": undeclared target state");
            if (t.move.direction < -1 || t.move.direction > 1)
                bad(loc.str() + ": bad direction");
            if (key.read.kind == SymKind::RightEnd && t.move.direction == +1)
                bad(loc.str() + ": right move on right endmarker");
            if (key.read.kind == SymKind::LeftEnd && t.move.direction == -1)
                bad(loc.str() + ": left move on left endmarker");
            if (t.move.carry) {
                if (!pebbled) bad(loc.str() + ": pebble move in a classical machine");
                if (!key.pebble_here) bad(loc.str() + ": pebble move without pebble under head");
                if (t.move.direction == 0) bad(loc.str() + ": stationary pebble move");
            }
        }
    }
    if (is_deterministic_kind(a.kind) && !is_deterministic(a))
        bad("declared deterministic but some key has multiple targets");
    return out;
}

bool is_deterministic(const Automaton& a) {
    for (const auto& [key, targets] : a.delta)
        if (targets.size() > 1) return false;
    return true;
}

namespace {

using json = nlohmann::ordered_json;

}  // namespace

Automaton parse_automaton(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    auto need = [&](const char* field) -> const json& {
        if (!j.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
        return j.at(field);
    };
    Automaton a;
    try {
        a.kind = kind_from_tag(need("kind").get<std::string>());
        for (const auto& tok : need("alphabet"))
            a.alphabet.insert(TapeSymbol::from_token(tok.get<std::string>()));
        for (const auto& s : need("states")) a.states.push_back(s.get<std::string>());
        a.initial = need("initial").get<std::string>();
        for (const auto& s : need("accepting")) a.accepting.insert(s.get<std::string>());
        for (const auto& t : need("transitions")) {
            TransitionKey key{t.at("from").get<std::string>(),
                              TapeSymbol::from_token(t.at("read").get<std::string>()),
                              t.at("pebble").get<bool>()};
            Target tgt{t.at("to").get<std::string>(),
                       Move{t.at("move").get<int>(), t.at("carry").get<bool>()}};
            a.add_transition(key, tgt);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed descriptor: ") + e.what());
    }
    a.normalize();
    return a;
}

std::string serialize_automaton(const Automaton& a) {
    json j;
    j["kind"] = kind_tag(a.kind);
    std::vector<std::string> alpha;
    for (const auto& s : a.alphabet) alpha.push_back(s.token());
    std::sort(alpha.begin(), alpha.end());
    j["alphabet"] = alpha;
    std::vector<std::string> states = a.states;
    std::sort(states.begin(), states.end());
    j["states"] = states;
    j["initial"] = a.initial;
    std::vector<std::string> acc(a.accepting.begin(), a.accepting.end());
    j["accepting"] = acc;
    json trans = json::array();
    for (const auto& [key, targets] : a.delta) {
        for (const auto& t : targets) {
            json e;
            e["from"] = key.state;
            e["read"] = key.read.token();
            e["pebble"] = key.pebble_here;
            e["to"] = t.state;
            e["move"] = t.move.direction;
            e["carry"] = t.move.carry;
            trans.push_back(e);
        }
    }
    j["transitions"] = trans;
    return j.dump(2) + "\n";
}

Automaton load_automaton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_automaton(ss.str());
}

void save_automaton_file(const Automaton& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << serialize_automaton(a);
}

}  // namespace peb
