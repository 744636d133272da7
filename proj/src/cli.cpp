#include "peb/cli.hpp"

#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "peb/encoding.hpp"
#include "peb/simulation.hpp"
#include "peb/translations.hpp"
#include "peb/witness.hpp"

namespace peb {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

TwoWayTransformer pick_plugin(const std::string& name, bool complementer) {
    if (name == "baseline")
        return complementer ? baseline_complementer() : baseline_determinizer();
    if (name == "identity" && !complementer) return identity_determinizer();
    throw InputError("unknown plugin '" + name + "'");
}

std::string config_line(const Automaton& a, const Config& c) {
    std::string s = "(" + a.states[static_cast<size_t>(c.state)] + ", " +
                    std::to_string(c.head);
    if (is_pebble_kind(a.kind)) s += ", pebble " + std::to_string(c.pebble);
    return s + ")";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pebble / classical two-way automata toolkit"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a machine on an input word");
    std::string sim_file;
    std::vector<std::string> sim_input;
    bool sim_trace = false;
    int sim_max_steps = 1000;
    sim->add_option("file", sim_file)->required();
    sim->add_option("input", sim_input);
    sim->add_flag("--trace", sim_trace);
    sim->add_option("--max-steps", sim_max_steps);

    // encode
    auto* enc = app.add_subcommand("encode", "print the pebble-position image of a word");
    std::vector<std::string> enc_input;
    enc->add_option("input", enc_input);

    // translate
    auto* tr = app.add_subcommand("translate", "apply one of the constructions");
    std::string tr_mode, tr_in, tr_out, tr_plugin = "baseline", tr_report;
    tr->add_option("mode", tr_mode)
        ->required()
        ->check(CLI::IsMember({"p2c", "c2p", "det-lift", "comp-lift", "comp-pdfa"}));
    tr->add_option("input", tr_in)->required();
    tr->add_option("-o,--output", tr_out)->required();
    tr->add_option("--plugin", tr_plugin);
    tr->add_option("--report", tr_report);

    // witness
    auto* wit = app.add_subcommand("witness", "emit a prime-product witness machine");
    int wit_m = 1;
    std::string wit_out;
    wit->add_option("--m", wit_m)->required();
    wit->add_option("-o,--output", wit_out)->required();

    // equiv
    auto* eq = app.add_subcommand("equiv", "bounded equivalence sweep");
    std::string eq_left, eq_right;
    int eq_max_len = 6;
    bool eq_encode_right = false;
    long long eq_budget = 1'000'000;
    eq->add_option("left", eq_left)->required();
    eq->add_option("right", eq_right)->required();
    eq->add_option("--max-len", eq_max_len)->required();
    eq->add_flag("--encode-right", eq_encode_right);
    eq->add_option("--budget", eq_budget);

    // pump
    auto* pu = app.add_subcommand("pump", "unary pumping agreement check");
    std::string pu_file;
    int pu_len = 0;
    long long pu_budget = 10'000;
    pu->add_option("--automaton", pu_file)->required();
    pu->add_option("--length", pu_len)->required();
    pu->add_option("--budget", pu_budget);

    // stats
    auto* st = app.add_subcommand("stats", "descriptor summary");
    std::string st_file;
    st->add_option("file", st_file)->required();

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (sim->parsed()) {
            Automaton a = load_automaton_file(sim_file);
            Word w = word_from_tokens(sim_input);
            if (sim_trace) {
                TraceResult t = trace(a, w, sim_max_steps);
                if (t.deterministic) {
                    for (const auto& c : t.run) out << config_line(a, c) << "\n";
                    if (t.loop_detected) out << "loop detected\n";
                    if (t.halted) out << "halted\n";
                } else {
                    for (size_t i = 0; i < t.layers.size(); ++i) {
                        out << "step " << i << ":";
                        for (const auto& c : t.layers[i]) out << " " << config_line(a, c);
                        out << "\n";
                    }
                }
            }
            out << (accepts(a, w) ? "accept" : "reject") << "\n";
            return kOk;
        }

        if (enc->parsed()) {
            out << word_to_string(encode_word(word_from_tokens(enc_input))) << "\n";
            return kOk;
        }

        if (tr->parsed()) {
            Automaton in = load_automaton_file(tr_in);
            Automaton result;
            TranslationReport rep;
            if (tr_mode == "p2c") {
                std::tie(result, rep) = pebble_to_classical(in);
            } else if (tr_mode == "c2p") {
                std::tie(result, rep) = classical_to_pebble(in);
            } else if (tr_mode == "det-lift") {
                std::tie(result, rep) = lift_determinization(in, pick_plugin(tr_plugin, false));
            } else if (tr_mode == "comp-lift") {
                std::tie(result, rep) = lift_complement(in, pick_plugin(tr_plugin, true));
            } else {
                std::tie(result, rep) = complement_pebble_dfa(in, pick_plugin(tr_plugin, true));
            }
            save_automaton_file(result, tr_out);
            if (!tr_report.empty()) {
                std::ofstream rf(tr_report);
                if (!rf) throw InputError("cannot write '" + tr_report + "'");
                rf << rep.to_json();
            }
            out << rep.to_json();
            return kOk;
        }

        if (wit->parsed()) {
            save_automaton_file(witness_pebble_dfa(wit_m), wit_out);
            return kOk;
        }

        if (eq->parsed()) {
            Automaton left = load_automaton_file(eq_left);
            Automaton right = load_automaton_file(eq_right);
            WordTransform transform;
            if (eq_encode_right) transform = encode_word;
            auto cex = bounded_equiv(left, right, eq_max_len, transform, eq_budget);
            if (!cex) {
                out << "equivalent up to length " << eq_max_len << "\n";
                return kOk;
            }
            out << "counterexample: '" << word_to_string(*cex) << "'\n";
            return kViolation;
        }

        if (pu->parsed()) {
            Automaton a = load_automaton_file(pu_file);
            bool ok = pump_check(a, pu_len, pu_budget);
            out << (ok ? "pumping holds" : "pumping violated") << "\n";
            return ok ? kOk : kViolation;
        }

        if (st->parsed()) {
            Automaton a = load_automaton_file(st_file);
            nlohmann::ordered_json j;
            j["states"] = a.states.size();
            j["kind"] = kind_tag(a.kind);
            j["deterministic"] = is_deterministic(a);
            j["violations"] = validate(a);
            out << j.dump(2) << "\n";
            return kOk;
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace peb
