#include "peb/witness.hpp"

#include "peb/simulation.hpp"

namespace peb {

std::vector<long long> primes(int m) {
    if (m < 1) throw InputError("primes: m must be >= 1");
    std::vector<long long> out;
    for (long long cand = 2; static_cast<int>(out.size()) < m; ++cand) {
        bool prime = true;
        for (long long d = 2; d * d <= cand; ++d)
            if (cand % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(cand);
    }
    return out;
}

WitnessSpec WitnessSpec::make(int m) {
    WitnessSpec spec;
    spec.m = m;
    spec.prime_list = primes(m);
    spec.modulus = 1;
    spec.target_states = 2;
    for (long long p : spec.prime_list) {
        spec.modulus *= p;
        spec.target_states += static_cast<int>(p);
    }
    return spec;
}

bool witness_membership(long long length, int m) {
    return length < WitnessSpec::make(m).modulus;
}

Automaton witness_pebble_dfa(int m) {
    auto spec = WitnessSpec::make(m);
    const auto& p = spec.prime_list;

    Automaton a;
    a.kind = MachineKind::PebbleTwoDfa;
    TapeSymbol one = TapeSymbol::plain("1");
    a.alphabet = {one};

    auto counter = [&](int i, long long j) {  // i is 1-based
        return "c" + std::to_string(i) + "_" + std::to_string(j);
    };
    a.add_state("qI");
    a.add_state("qF");
    for (int i = 1; i <= m; ++i)
        for (long long j = 0; j < p[static_cast<size_t>(i - 1)]; ++j)
            a.add_state(counter(i, j));
    a.initial = "qI";
    a.accepting = {"qF"};

    TapeSymbol lend = TapeSymbol::left_end();
    TapeSymbol rend = TapeSymbol::right_end();

    // qI hunts for the pebble to the right and pushes it one cell further,
    // which starts the divisibility checks for the next candidate x.
    a.add_transition({"qI", lend, true}, {counter(1, 0), {+1, true}});
    a.add_transition({"qI", lend, false}, {"qI", {+1, false}});
    a.add_transition({"qI", one, false}, {"qI", {+1, false}});
    a.add_transition({"qI", one, true}, {counter(1, 0), {+1, true}});

    // The pebble landing on the right endmarker means every x <= |input| had
    // some non-dividing prime.
    a.add_transition({counter(1, 0), rend, true}, {"qF", {0, false}});

    for (int i = 1; i <= m; ++i) {
        long long pi = p[static_cast<size_t>(i - 1)];
        bool leftward = (i % 2 == 1);  // odd primes counted pebble -> left end
        bool last = (i == m);
        long long next_p = last ? 0 : p[static_cast<size_t>(i)];

        for (long long j = 0; j < pi; ++j) {
            std::string cj = counter(i, j);
            std::string cnext = counter(i, (j + 1) % pi);
            if (leftward) {
                a.add_transition({cj, one, false}, {cnext, {-1, false}});
                if (j == 0) {
                    if (!last)  // p_i divides x: start the rightward check
                        a.add_transition({cj, lend, false},
                                         {counter(i + 1, 1 % next_p), {+1, false}});
                    // last prime: halt on the left endmarker, rejecting
                } else {
                    a.add_transition({cj, lend, false}, {"qI", {+1, false}});
                }
            } else {
                a.add_transition({cj, one, false}, {cnext, {+1, false}});
                if (j == 0) {
                    if (!last)  // p_i divides x: start the leftward check
                        a.add_transition({cj, one, true},
                                         {counter(i + 1, 1 % next_p), {-1, false}});
                } else {
                    a.add_transition({cj, one, true}, {counter(1, 0), {+1, true}});
                }
            }
        }
    }
    // Check 1 starts right at the freshly moved pebble.
    a.add_transition({counter(1, 0), one, true},
                     {counter(1, 1 % p[0]), {-1, false}});

    a.normalize();
    return a;
}

bool pump_check(const Automaton& a, int length, long long cell_budget) {
    if (is_pebble_kind(a.kind))
        throw InputError("pump_check: input must be a classical machine");
    if (length < 0) throw InputError("pump_check: negative length");

    long long factorial = 1;
    for (int i = 2; i <= length; ++i) {
        if (factorial > cell_budget / i)
            throw BudgetExceeded("pump_check: L + L! exceeds the cell budget");
        factorial *= i;
    }
    long long extended = length + factorial;
    if (extended > cell_budget)
        throw BudgetExceeded("pump_check: L + L! exceeds the cell budget");

    TapeSymbol one = TapeSymbol::plain("1");
    if (!a.alphabet.count(one))
        throw InputError("pump_check: alphabet does not contain '1'");

    Word base(static_cast<size_t>(length), one);
    if (!accepts(a, base)) return true;  // implication holds vacuously
    Word pumped(static_cast<size_t>(extended), one);
    return accepts(a, pumped);
}

}  // namespace peb
