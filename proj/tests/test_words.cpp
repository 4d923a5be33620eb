#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "scs/errors.hpp"
#include "scs/io.hpp"
#include "scs/word.hpp"

using namespace scs;

namespace {

// Independent embedding oracle: recursive existence check, no greedy shortcut.
bool embeds_recursive(std::string_view sub, std::string_view sup) {
    if (sub.empty()) return true;
    if (sup.empty()) return false;
    if (sub.front() == sup.front() && embeds_recursive(sub.substr(1), sup.substr(1))) return true;
    return embeds_recursive(sub, sup.substr(1));
}

// All embeddings of sub into sup, as 1-based target vectors.
void all_embeddings(const std::string& sub, const std::string& sup, std::size_t si,
                    std::size_t pi, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (si == sub.size()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t p = pi; p < sup.size(); ++p) {
        if (sup[p] == sub[si]) {
            cur.push_back(p + 1);
            all_embeddings(sub, sup, si + 1, p + 1, cur, out);
            cur.pop_back();
        }
    }
}

std::string random_word(std::mt19937_64& rng, std::size_t max_len, int alphabet = 3) {
    std::string w;
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) w += kAlphabet[rng() % alphabet];
    return w;
}

}  // namespace

TEST_CASE("word validation") {
    CHECK(Word("0102").size() == 4);
    CHECK(Word("").empty());
    CHECK(Word("012") == Word::parse("012"));
    CHECK_THROWS_AS(Word("013"), ParseError);
    CHECK_THROWS_AS(Word("01 2"), ParseError);
    CHECK_THROWS_AS(Word("abc"), ParseError);
}

TEST_CASE("supersequence relation agrees with a recursive oracle") {
    std::mt19937_64 rng(12021);
    for (int rep = 0; rep < 3000; ++rep) {
        const std::string sub = random_word(rng, 8);
        const std::string sup = random_word(rng, 10);
        CHECK(is_supersequence(Word(sub), Word(sup)) == embeds_recursive(sub, sup));
    }
    CHECK(is_supersequence(Word(""), Word("")));
    CHECK(is_supersequence(Word(""), Word("012")));
    CHECK_FALSE(is_supersequence(Word("0"), Word("")));
    CHECK(is_supersequence(Word("00111"), Word("0011100")));
    CHECK(is_supersequence(Word("11100"), Word("0011100")));
}

TEST_CASE("embedding validity") {
    const Word sub("011");
    const Word target("0010111");
    CHECK(check_embedding(sub, target, Embedding{{2, 3, 5}}));
    CHECK(check_embedding(sub, target, Embedding{{1, 5, 7}}));
    CHECK_FALSE(check_embedding(sub, target, Embedding{{2, 5, 5}}));   // not increasing
    CHECK_FALSE(check_embedding(sub, target, Embedding{{2, 3, 4}}));   // wrong letter
    CHECK_FALSE(check_embedding(sub, target, Embedding{{2, 3, 9}}));   // out of range
    CHECK_FALSE(check_embedding(sub, target, Embedding{{2, 3}}));      // wrong arity
    CHECK(check_embedding(Word(""), Word(""), Embedding{{}}));
}

TEST_CASE("leftmost embedding is valid and pointwise minimal") {
    std::mt19937_64 rng(40210);
    for (int rep = 0; rep < 400; ++rep) {
        const std::string sub = random_word(rng, 5);
        const std::string sup = random_word(rng, 8);
        const auto lm = leftmost_embedding(Word(sub), Word(sup));
        std::vector<std::vector<std::size_t>> all;
        std::vector<std::size_t> cur;
        all_embeddings(sub, sup, 0, 0, cur, all);
        if (all.empty()) {
            CHECK_FALSE(lm.has_value());
            continue;
        }
        REQUIRE(lm.has_value());
        CHECK(check_embedding(Word(sub), Word(sup), *lm));
        for (const auto& other : all) {
            for (std::size_t i = 0; i < sub.size(); ++i) {
                CHECK(lm->targets[i] <= other[i]);
            }
        }
    }
}

TEST_CASE("morphism encode and decode") {
    CHECK(phi_encode(Word("0")).str() == "0202");
    CHECK(phi_encode(Word("1")).str() == "1");
    CHECK(phi_encode(Word("01")).str() == "02021");
    CHECK(phi_encode(Word("")).str() == "");
    CHECK_THROWS_AS(phi_encode(Word("02")), PreconditionError);

    std::mt19937_64 rng(777);
    for (int rep = 0; rep < 500; ++rep) {
        const Word w(random_word(rng, 8, 2));
        const Word img = phi_encode(w);
        CHECK(is_in_phi_image(img));
        CHECK(phi_decode(img) == w);
    }
    CHECK_THROWS_AS(phi_decode(Word("02")), PreconditionError);
    CHECK_THROWS_AS(phi_decode(Word("012")), PreconditionError);
}

TEST_CASE("image membership and segmentation") {
    CHECK(is_in_phi_image(Word("")));
    CHECK(is_in_phi_image(Word("1")));
    CHECK(is_in_phi_image(Word("0202")));
    CHECK(is_in_phi_image(Word("102021020210202102021")));
    CHECK_FALSE(is_in_phi_image(Word("02")));      // odd run
    CHECK_FALSE(is_in_phi_image(Word("1021")));    // odd middle run
    CHECK_FALSE(is_in_phi_image(Word("21")));      // stray 2
    CHECK_FALSE(is_in_phi_image(Word("010")));     // 1 inside a block

    const PhiSegmentation seg = segment(Word("0202102"));
    CHECK(seg.runs == std::vector<std::uint64_t>{2, 1});
    CHECK(seg.ones() == 1);
    CHECK(seg.total_02_blocks() == 3);
    CHECK_FALSE(seg.all_even());
    CHECK(seg.reconstruct() == Word("0202102"));

    CHECK(segment(Word("")).runs == std::vector<std::uint64_t>{0});
    CHECK(segment(Word("11")).runs == std::vector<std::uint64_t>{0, 0, 0});

    CHECK_THROWS_WITH_AS(segment(Word("010")), doctest::Contains("position 2"), ParseError);
    CHECK_THROWS_WITH_AS(segment(Word("2")), doctest::Contains("position 1"), ParseError);

    CHECK(count_ones(Word("102021")) == 2);
    CHECK(count_0202_blocks(Word("02020202")) == 2);
    CHECK_THROWS_AS(count_0202_blocks(Word("02")), PreconditionError);
}

TEST_CASE("segmentation round trip on random image words") {
    std::mt19937_64 rng(90125);
    for (int rep = 0; rep < 300; ++rep) {
        // Random (02|1)* word straight from run counts.
        PhiSegmentation ref;
        ref.runs.clear();
        const std::size_t ones = rng() % 4;
        for (std::size_t t = 0; t <= ones; ++t) ref.runs.push_back(rng() % 5);
        const Word w = ref.reconstruct();
        CHECK(segment(w).runs == ref.runs);
    }
}

TEST_CASE("mscs input validation") {
    CHECK(validate_mscs_input({Word("010"), Word("120")}, '2'));
    CHECK_FALSE(validate_mscs_input({Word("00")}, '2'));         // repeated letter
    CHECK_FALSE(validate_mscs_input({Word("20")}, '2'));         // forbidden first letter
    CHECK_FALSE(validate_mscs_input({Word("212")}, '2'));        // forbidden first letter
    CHECK(validate_mscs_input({}, '2'));
}

TEST_CASE("words files: parsing, comments, errors") {
    std::istringstream in(
        "# header comment\n"
        "00111\n"
        "\n"
        "  11100  \r\n"
        "# done\n");
    const auto words = read_words(in, "test.words");
    REQUIRE(words.size() == 2);
    CHECK(words[0].str() == "00111");
    CHECK(words[1].str() == "11100");

    std::istringstream bad("0011\n012x\n");
    CHECK_THROWS_WITH_AS(read_words(bad, "bad.words"), doctest::Contains("bad.words:2"),
                         ParseError);

    std::ostringstream out;
    write_words(out, words);
    CHECK(out.str() == "00111\n11100\n");
}

TEST_CASE("file digest is stable and content-sensitive") {
    write_words_file("digest_a.words", {Word("0")});
    write_words_file("digest_b.words", {Word("1")});
    CHECK(file_digest("digest_a.words") == file_digest("digest_a.words"));
    CHECK(file_digest("digest_a.words") != file_digest("digest_b.words"));
    CHECK_THROWS_AS(file_digest("no_such_file.words"), ParseError);
    CHECK_THROWS_AS(read_words_file("no_such_file.words"), ParseError);
}
