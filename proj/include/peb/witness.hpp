#pragma once

#include "peb/automaton.hpp"

namespace peb {

// First m primes, by trial division.
std::vector<long long> primes(int m);

struct WitnessSpec {
    int m = 0;
    std::vector<long long> prime_list;
    long long modulus = 1;  // product of the primes
    int target_states = 2;  // 2 + sum of the primes

    static WitnessSpec make(int m);
};

// Membership in the unary witness language: 1^len is in iff len < product.
bool witness_membership(long long length, int m);

// Deterministic one-pebble machine over {1} for the witness language. The
// pebble's distance from the left endmarker is the candidate x; for each
// prime the machine shuttles between pebble and left endmarker counting
// modulo that prime, alternating traversal direction with the prime's index.
// A prime that fails to divide x sends the machine back to relocate the
// pebble; the pebble reaching the right endmarker accepts. Uses exactly
// 2 + p_1 + ... + p_m states.
Automaton witness_pebble_dfa(int m);

// Unary pumping agreement: accepting 1^L forces accepting 1^(L+L!) for any
// classical machine with at most L states. Throws BudgetExceeded when
// L + L! exceeds cell_budget.
bool pump_check(const Automaton& a, int length, long long cell_budget = 10'000);

}  // namespace peb
