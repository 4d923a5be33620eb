#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "scs/errors.hpp"
#include "scs/reduction.hpp"
#include "scs/word.hpp"

using namespace scs;

namespace {

const Graph kK2{2, {{1, 2}}};
const Graph kP3{3, {{1, 2}, {2, 3}}};
const Graph kTriangle{3, {{1, 2}, {1, 3}, {2, 3}}};

}  // namespace

TEST_CASE("graph validation") {
    CHECK_NOTHROW(validate_graph(kK2));
    CHECK_NOTHROW(validate_graph(Graph{0, {}}));
    CHECK_THROWS_AS(validate_graph(Graph{2, {{1, 3}}}), PreconditionError);
    CHECK_THROWS_AS(validate_graph(Graph{2, {{2, 1}}}), PreconditionError);
    CHECK_THROWS_AS(validate_graph(Graph{2, {{1, 1}}}), PreconditionError);
    CHECK_THROWS_AS(validate_graph(Graph{2, {{1, 2}, {1, 2}}}), PreconditionError);
}

TEST_CASE("graph files") {
    std::istringstream good(
        "# a path\n"
        "3 2\n"
        "1 2\n"
        "\n"
        "2 3\n");
    const Graph g = read_graph(good, "p3.graph");
    CHECK(g.n == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

    std::istringstream no_header("# nothing\n");
    CHECK_THROWS_WITH_AS(read_graph(no_header, "x"), doctest::Contains("missing header"),
                         ParseError);

    std::istringstream short_list("2 2\n1 2\n");
    CHECK_THROWS_WITH_AS(read_graph(short_list, "x"), doctest::Contains("declared 2"), ParseError);

    std::istringstream dup("2 2\n1 2\n1 2\n");
    CHECK_THROWS_WITH_AS(read_graph(dup, "x"), doctest::Contains("x:3"), ParseError);

    std::istringstream backwards("2 1\n2 1\n");
    CHECK_THROWS_AS(read_graph(backwards, "x"), ParseError);

    std::istringstream junk("2 1\n1 2 9\n");
    CHECK_THROWS_AS(read_graph(junk, "x"), ParseError);

    CHECK_THROWS_AS(read_graph_file("no_such.graph"), ParseError);
}

TEST_CASE("vertex cover predicate") {
    CHECK(is_vertex_cover(kK2, VertexCover{{1}}));
    CHECK(is_vertex_cover(kK2, VertexCover{{2}}));
    CHECK(is_vertex_cover(kK2, VertexCover{{1, 2}}));
    CHECK_FALSE(is_vertex_cover(kK2, VertexCover{{}}));
    CHECK(is_vertex_cover(kP3, VertexCover{{2}}));
    CHECK_FALSE(is_vertex_cover(kP3, VertexCover{{1}}));
    CHECK_FALSE(is_vertex_cover(kTriangle, VertexCover{{1}}));
    CHECK(is_vertex_cover(kTriangle, VertexCover{{1, 2}}));
    CHECK_FALSE(is_vertex_cover(kK2, VertexCover{{3}}));  // out of range
    CHECK(is_vertex_cover(Graph{3, {}}, VertexCover{{}}));
}

TEST_CASE("hard family shape") {
    const auto family = hard_family(2);
    REQUIRE(family.size() == 5);
    for (const Word& w : family) {
        CHECK(w.size() == 17);
        CHECK(is_in_phi_image(w));
        CHECK(count_ones(w) == 1);
    }
    CHECK(family[0].str().substr(0, 5) == "10202");
    CHECK(family[4].str().substr(12) == "02021");

    CHECK_THROWS_AS(hard_family(0), PreconditionError);
    CHECK_THROWS_AS(hard_family(3), PreconditionError);
    CHECK_THROWS_AS(hard_family_smin(1), PreconditionError);
}

TEST_CASE("closed-form optimum covers its family") {
    const Word smin2 = hard_family_smin(2);
    CHECK(smin2.str() == "102021020210202102021");
    for (const Word& w : hard_family(2)) CHECK(is_supersequence(w, smin2));

    const Word smin4 = hard_family_smin(4);
    CHECK(smin4.size() == 4 * 16 + 16 - 3);
    CHECK(is_in_phi_image(smin4));
    for (const Word& w : hard_family(4)) CHECK(is_supersequence(w, smin4));
}

TEST_CASE("counting bounds hold at and reject around the optimum") {
    const Word smin2 = hard_family_smin(2);
    CHECK(hard_family_ones_to_blocks_bound(smin2, 2));
    CHECK(hard_family_blocks_to_ones_bound(smin2, 2));
    // Concatenating the whole family is a sloppy supersequence; the bounds
    // still hold for it.
    std::string cat;
    for (const Word& w : hard_family(2)) cat += w.str();
    CHECK(hard_family_ones_to_blocks_bound(Word(cat), 2));
    CHECK(hard_family_blocks_to_ones_bound(Word(cat), 2));
    // Preconditions: not an image word, or not a supersequence.
    CHECK_THROWS_AS(hard_family_ones_to_blocks_bound(Word("02"), 2), PreconditionError);
    CHECK_THROWS_AS(hard_family_blocks_to_ones_bound(hard_family_smin(2), 4),
                    PreconditionError);
}

TEST_CASE("threshold values") {
    CHECK(threshold(1, 0) == 202);
    CHECK(threshold(1, 1) == 203);
    CHECK(threshold(2, 1) == 744);
    CHECK_THROWS_AS(threshold(0, 0), PreconditionError);
    CHECK_THROWS_AS(threshold(1, -1), PreconditionError);
}

TEST_CASE("instance gadget structure") {
    const ReductionInstance inst = build_gadgets(kK2);
    CHECK(inst.word_count() == 291);
    CHECK(inst.threshold_base() == 743);

    // First word: i = 1, j = 0.
    const Word x10 = inst.word_at(0);
    CHECK(x10.size() == 698);
    CHECK(count_ones(x10) == 2);
    CHECK(count_0202_blocks(x10) == 174);
    CHECK(x10.str().substr(0, 25) == "0202020202020202020202021");

    // Last X word: i = 2, j = 144.
    const Word x2 = inst.word_at(289);
    CHECK(x2.size() == 698);
    CHECK(x2.str().back() == '1');

    // The edge word.
    const Word t = inst.word_at(290);
    CHECK(t.size() == 694);
    CHECK(count_ones(t) == 2);
    CHECK(t.str().substr(0, 1) == "1");  // edge (1,2): first group is empty

    CHECK_THROWS_AS(inst.word_at(291), PreconditionError);

    std::size_t seen = 0;
    inst.for_each_word([&](std::size_t idx, const Word& w) {
        CHECK(idx == seen);
        ++seen;
        CHECK((w.size() == 698 || w.size() == 694));
    });
    CHECK(seen == 291);

    CHECK_THROWS_AS(build_gadgets(Graph{0, {}}), PreconditionError);
}

TEST_CASE("witnesses have the promised length and cover the instance") {
    const Word w1 = witness_from_cover(kK2, VertexCover{{1}});
    CHECK(w1.size() == threshold(2, 1));
    CHECK(is_in_phi_image(w1));

    const Word w12 = witness_from_cover(kK2, VertexCover{{1, 2}});
    CHECK(w12.size() == threshold(2, 2));

    const Word p3 = witness_from_cover(kP3, VertexCover{{2}});
    CHECK(p3.size() == threshold(3, 1));

    CHECK_THROWS_AS(witness_from_cover(kK2, VertexCover{{}}), PreconditionError);
    CHECK_THROWS_AS(witness_from_cover(kK2, VertexCover{{2, 1}}), PreconditionError);
    CHECK_THROWS_AS(witness_from_cover(kK2, VertexCover{{1, 1}}), PreconditionError);
    CHECK_THROWS_AS(witness_from_cover(kK2, VertexCover{{5}}), PreconditionError);
}

TEST_CASE("extraction round trips and tolerates slack") {
    for (const auto& cover : {VertexCover{{1}}, VertexCover{{2}}, VertexCover{{1, 2}}}) {
        const Word w = witness_from_cover(kK2, cover);
        const VertexCover back = extract_cover(w, kK2, static_cast<int>(cover.size()));
        CHECK(back == cover);
    }

    const Word w2 = witness_from_cover(kP3, VertexCover{{2}});
    CHECK(extract_cover(w2, kP3, 1) == VertexCover{{2}});
    // A larger bound changes nothing.
    CHECK(extract_cover(w2, kP3, 3) == VertexCover{{2}});

    // An extra one at the very front lands in vertex 1's zone; the result is
    // then {1, 2}, still a cover within the relaxed bound.
    const Word padded(std::string("1") + w2.str());
    CHECK(padded.size() <= threshold(3, 2));
    CHECK(extract_cover(padded, kP3, 2) == VertexCover{{1, 2}});

    // Too long for the bound.
    CHECK_THROWS_AS(extract_cover(padded, kP3, 0), PreconditionError);
    // Not a supersequence of the instance at all.
    CHECK_THROWS_AS(extract_cover(Word("0202"), kK2, 1), PreconditionError);
}

TEST_CASE("exhaustive cover search") {
    auto c = vertex_cover_brute_force(kP3, 3);
    REQUIRE(c.has_value());
    CHECK(*c == VertexCover{{2}});

    c = vertex_cover_brute_force(kK2, 2);
    REQUIRE(c.has_value());
    CHECK(*c == VertexCover{{1}});  // lexicographically first of {1}, {2}

    c = vertex_cover_brute_force(kTriangle, 3);
    REQUIRE(c.has_value());
    CHECK(*c == VertexCover{{1, 2}});

    CHECK_FALSE(vertex_cover_brute_force(kK2, 0).has_value());
    CHECK(vertex_cover_brute_force(Graph{3, {}}, 0) == VertexCover{{}});
    CHECK_THROWS_AS(vertex_cover_brute_force(Graph{21, {}}, 1), PreconditionError);
}

TEST_CASE("structural ones in witness prefixes") {
    // n = 1, empty graph, empty cover: the prefix is the whole unit part.
    const Graph k1{1, {}};
    const Word w = witness_from_cover(k1, VertexCover{{}});
    const Word prefix(w.str().substr(0, 24 + 13));
    CHECK(check_structural_ones(prefix, 1));

    // A block-only word of the right size has no ones anywhere.
    std::string blocks;
    for (int i = 0; i < 9; ++i) blocks += "0202";
    CHECK_FALSE(check_structural_ones(Word(blocks), 1));

    CHECK_THROWS_AS(check_structural_ones(Word("02"), 1), PreconditionError);
    CHECK_THROWS_AS(check_structural_ones(Word("0202"), 1), PreconditionError);
}
