#include "peb/encoding.hpp"

namespace peb {

EncodedWord encode(const Word& plain) {
    for (const auto& s : plain)
        if (s.kind != SymKind::Plain)
            throw InputError("encode expects a word over a plain alphabet");

    int k = static_cast<int>(plain.size());
    EncodedWord e;
    e.source_length = k;

    auto put = [&](TapeSymbol s, int seg) {
        e.tokens.push_back(std::move(s));
        e.segment.push_back(seg);
    };

    // Segment 0: a_1 .. a_k <   (the left endmarker plays the opening stopper)
    for (const auto& s : plain) put(s, 0);
    put(TapeSymbol::right_stopper(), 0);

    // Segments 1..k: > a_1 .. a_p-boxed .. a_k <
    for (int p = 1; p <= k; ++p) {
        put(TapeSymbol::left_stopper(), p);
        for (int i = 1; i <= k; ++i) {
            const auto& a = plain[static_cast<size_t>(i - 1)];
            put(i == p ? TapeSymbol::boxed(a.base) : a, p);
        }
        put(TapeSymbol::right_stopper(), p);
    }

    // Segment k+1: > a_1 .. a_k   (the right endmarker closes it)
    put(TapeSymbol::left_stopper(), k + 1);
    for (const auto& s : plain) put(s, k + 1);

    return e;
}

Word encode_word(const Word& plain) { return encode(plain).tokens; }

int segment_of(const EncodedWord& e, size_t position) {
    if (position >= e.segment.size())
        throw InputError("segment_of: position " + std::to_string(position) +
                         " out of range");
    return e.segment[position];
}

bool is_valid_image(const Word& tokens) {
    // Segment 0 is the prefix of plain letters before the first <; rebuild the
    // source word from it and compare against its image.
    Word source;
    for (const auto& s : tokens) {
        if (s.kind == SymKind::Plain) {
            source.push_back(s);
        } else if (s.kind == SymKind::RightStopper) {
            break;
        } else {
            return false;  // boxed or > before the end of segment 0
        }
    }
    return encode(source).tokens == tokens;
}

}  // namespace peb
