#pragma once

#include "peb/automaton.hpp"

namespace peb {

// The image P(w): k+2 replicas of the input word, one per possible pebble
// position, separated by the stoppers > and <. Segment p (1 <= p <= k)
// carries a box on its p-th letter; segments 0 and k+1 stand for the pebble
// resting on the left and right endmarker and carry no box.
struct EncodedWord {
    Word tokens;
    std::vector<int> segment;  // segment number per token position
    int source_length = 0;

    friend bool operator==(const EncodedWord&, const EncodedWord&) = default;
};

// Token count is k^2 + 4k + 2 for a source word of length k.
EncodedWord encode(const Word& plain);

// Plain-word transform suitable for bounded_equiv.
Word encode_word(const Word& plain);

// Segment containing the token: > belongs to the segment it opens, < to the
// one it closes. Throws InputError on an out-of-range position.
int segment_of(const EncodedWord& e, size_t position);

// True iff tokens = encode(w).tokens for some plain word w.
bool is_valid_image(const Word& tokens);

}  // namespace peb
