#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "peb/encoding.hpp"

using namespace peb;

namespace {

Word plain_word(const std::string& letters) {
    Word w;
    for (char c : letters) w.push_back(TapeSymbol::plain(std::string(1, c)));
    return w;
}

// Independent token-count oracle: sums per-segment lengths without building
// the sequence.
long long expected_token_count(long long k) {
    long long total = k + 1;            // segment 0: k letters and a closing <
    total += k * (k + 2);               // segments 1..k: > k letters <
    total += k + 1;                     // segment k+1: > and k letters
    return total;
}

}  // namespace

TEST_CASE("encode reproduces the three-letter example") {
    auto e = encode(plain_word("abc"));
    CHECK(word_to_string(e.tokens) ==
          "a b c < > a* b c < > a b* c < > a b c* < > a b c");
}

TEST_CASE("encode of the empty word") {
    auto e = encode(plain_word(""));
    CHECK(word_to_string(e.tokens) == "< >");
    CHECK(e.tokens.size() == 2);
}

TEST_CASE("token count formula k^2+4k+2") {
    for (int k = 0; k <= 10; ++k) {
        Word w;
        for (int i = 0; i < k; ++i) w.push_back(TapeSymbol::plain("a"));
        auto e = encode(w);
        CHECK(static_cast<long long>(e.tokens.size()) == expected_token_count(k));
        CHECK(static_cast<long long>(e.tokens.size()) ==
              static_cast<long long>(k) * k + 4 * k + 2);
    }
    CHECK(expected_token_count(5) == 47);
}

TEST_CASE("encode rejects non-plain input") {
    Word w{TapeSymbol::boxed("a")};
    CHECK_THROWS_AS(encode(w), InputError);
}

TEST_CASE("segment_of") {
    auto e = encode(plain_word("abc"));
    CHECK(segment_of(e, 0) == 0);
    CHECK(e.tokens[5] == TapeSymbol::boxed("a"));
    CHECK(segment_of(e, 5) == 1);
    CHECK(segment_of(e, e.tokens.size() - 1) == 4);
    CHECK_THROWS_AS(segment_of(e, e.tokens.size()), InputError);

    auto eps = encode(plain_word(""));
    CHECK(eps.tokens[1] == TapeSymbol::left_stopper());
    CHECK(segment_of(eps, 1) == 1);  // > opens segment k+1 = 1
}

TEST_CASE("segment_of is total and monotone; stoppers owned as specified") {
    for (const auto& letters : {"", "a", "ab", "abc", "abcd"}) {
        auto e = encode(plain_word(letters));
        int prev = 0;
        for (size_t i = 0; i < e.tokens.size(); ++i) {
            int s = segment_of(e, i);
            CHECK(s >= prev);
            CHECK(s - prev <= 1);
            prev = s;
            if (e.tokens[i].kind == SymKind::LeftStopper && i > 0)
                CHECK(s == segment_of(e, i - 1) + 1);  // > opens a new segment
            if (e.tokens[i].kind == SymKind::RightStopper && i > 0)
                CHECK(s == segment_of(e, i - 1));  // < closes its own segment
        }
        CHECK(prev == static_cast<int>(e.source_length) + 1);
    }
}

TEST_CASE("box placement: segment p boxes exactly its p-th letter") {
    auto e = encode(plain_word("abcd"));
    int k = e.source_length;
    for (int p = 1; p <= k; ++p) {
        int boxes = 0, letter_offset = 0, box_at = -1;
        for (size_t i = 0; i < e.tokens.size(); ++i) {
            if (segment_of(e, i) != p) continue;
            if (e.tokens[i].kind == SymKind::Boxed) {
                ++boxes;
                box_at = letter_offset + 1;
            }
            if (e.tokens[i].kind == SymKind::Boxed || e.tokens[i].kind == SymKind::Plain)
                ++letter_offset;
        }
        CHECK(boxes == 1);
        CHECK(box_at == p);
    }
    // No boxes in the outer segments.
    for (size_t i = 0; i < e.tokens.size(); ++i)
        if (segment_of(e, i) == 0 || segment_of(e, i) == k + 1)
            CHECK(e.tokens[i].kind != SymKind::Boxed);
}

TEST_CASE("is_valid_image accepts exactly the images") {
    for (const auto& letters : {"", "a", "ab", "ba", "abc"})
        CHECK(is_valid_image(encode(plain_word(letters)).tokens));

    CHECK(!is_valid_image({}));
    CHECK(!is_valid_image(plain_word("ab")));

    // Move segment 1's box onto the wrong letter: still one box per segment,
    // but misplaced.
    auto e = encode(plain_word("ab"));
    Word t = e.tokens;
    size_t first = t.size();
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i].kind == SymKind::Boxed) {
            first = i;
            break;
        }
    REQUIRE(first + 1 < t.size());
    t[first] = TapeSymbol::plain(t[first].base);
    t[first + 1] = TapeSymbol::boxed(t[first + 1].base);
    CHECK(!is_valid_image(t));
}

TEST_CASE("encode is injective over small words") {
    std::vector<std::string> corpus;
    std::vector<std::string> alphabet = {"a", "b"};
    std::vector<std::string> frontier = {""};
    for (int len = 0; len <= 4; ++len) {
        corpus.insert(corpus.end(), frontier.begin(), frontier.end());
        std::vector<std::string> next;
        for (const auto& w : frontier)
            for (const auto& c : alphabet) next.push_back(w + c);
        frontier = next;
    }
    std::set<std::string> images;
    for (const auto& w : corpus) {
        auto e = encode(plain_word(w));
        CHECK(is_valid_image(e.tokens));
        CHECK(images.insert(word_to_string(e.tokens)).second);
        CHECK(static_cast<int>(e.segment.size()) == static_cast<int>(e.tokens.size()));
    }
}
