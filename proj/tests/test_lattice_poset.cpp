#include <doctest.h>

#include "kmarkov/ideal_count.hpp"
#include "kmarkov/lattice_poset.hpp"

using namespace kmarkov;

TEST_CASE("relation word of (3,2) at k=1 matches the worked example") {
    RelationWord w = relation_word(LatticePoint(3, 2), 1);
    CHECK(word_to_string(w) == "DDUUUUUDDDDUU");
    CHECK(w.element_count == 14);
    CHECK(word_to_shape(w) == Shape{{3, 5, 4, 2}});
}

TEST_CASE("relation word of (4,2) at k=1: composite with one detour block") {
    RelationWord w = relation_word(LatticePoint(4, 2), 1);
    CHECK(word_to_string(w) == "DDUUUUDDDDDUDDUUU");
    CHECK(word_to_shape(w) == Shape{{3, 4, 5, 1, 2, 3}});

    // crossing list: 3 primitive, 3 detour, 3 primitive
    std::vector<Crossing> cs = curve_crossings(LatticePoint(4, 2));
    REQUIRE(cs.size() == 9);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool detour = i >= 3 && i < 6;
        CHECK((cs[i].detour_rank > 0) == detour);
        if (detour) CHECK(cs[i].chain == ChainDir::Descending);
    }
    // order keys strictly ordered along the curve
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
        bool ordered = cs[i].order_key < cs[i + 1].order_key ||
                       (cs[i].order_key == cs[i + 1].order_key && cs[i].detour_rank < cs[i + 1].detour_rank);
        CHECK(ordered);
    }
}

TEST_CASE("lattice directions cross nothing on the primitive segment") {
    for (long k = 0; k <= 2; ++k) {
        CHECK(relation_word(LatticePoint(1, 0), k).empty());
        CHECK(relation_word(LatticePoint(0, -1), k).empty());
        CHECK(relation_word(LatticePoint(-1, 1), k).empty());
    }
}

TEST_CASE("the diagonal unit step is a single left-biased midpoint crossing") {
    for (unsigned k = 0; k <= 3; ++k) {
        RelationWord w = relation_word(LatticePoint(1, 1), k);
        CHECK(w.element_count == k + 1);
        CHECK(word_to_string(w) == std::string(k, 'U'));
        CHECK(count_ideals_dp(w) == k + 2);
    }
}

TEST_CASE("relation word rejects the zero vector") {
    CHECK_THROWS_AS(relation_word(LatticePoint(0, 0), 1), invalid_input);
}

TEST_CASE("word to shape handles the degenerate posets") {
    CHECK(word_to_shape(RelationWord{}) == Shape{});
    CHECK(word_to_shape(make_word({})) == Shape{{1}});
    CHECK(word_to_shape(word_from_string("DDUUUUUDDDDUU")) == Shape{{3, 5, 4, 2}});
    CHECK(word_to_shape(word_from_string("DDUUUUDDDDDUDDUUU")) == Shape{{3, 4, 5, 1, 2, 3}});
}

TEST_CASE("point symmetry: the reversed segment has the same count") {
    for (long x = -8; x <= 8; ++x)
        for (long y = -8; y <= 8; ++y) {
            if (x == 0 && y == 0) continue;
            for (unsigned k = 0; k <= 2; ++k) {
                BigInt a = count_ideals_dp(relation_word(LatticePoint(x, y), k));
                BigInt b = count_ideals_dp(relation_word(LatticePoint(-x, -y), k));
                CAPTURE(x);
                CAPTURE(y);
                CAPTURE(k);
                CHECK(a == b);
            }
        }
}

TEST_CASE("right bias gives the same counts as left bias") {
    for (long x = -6; x <= 6; ++x)
        for (long y = -6; y <= 6; ++y) {
            if (x == 0 && y == 0) continue;
            for (unsigned k = 0; k <= 2; ++k) {
                BigInt left = count_ideals_dp(relation_word(LatticePoint(x, y), k, Bias::Left));
                BigInt right = count_ideals_dp(relation_word(LatticePoint(x, y), k, Bias::Right));
                CAPTURE(x);
                CAPTURE(y);
                CAPTURE(k);
                CHECK(left == right);
            }
        }
}

TEST_CASE("multiples decompose into copies joined by detour blocks") {
    for (auto [p, q] : {std::pair<long, long>{2, 1}, {3, 2}, {3, 1}, {5, 3}}) {
        for (unsigned k = 0; k <= 2; ++k) {
            RelationWord unit = relation_word(LatticePoint(p, q), k);
            for (long n = 2; n <= 4; ++n) {
                RelationWord whole = relation_word(LatticePoint(n * p, n * q), k);
                std::vector<Dir> expect;
                for (long copy = 0; copy < n; ++copy) {
                    if (copy) {
                        expect.push_back(Dir::Up);
                        for (unsigned i = 0; i < 3 * k + 2; ++i) expect.push_back(Dir::Down);
                        expect.push_back(Dir::Up);
                    }
                    expect.insert(expect.end(), unit.directions.begin(), unit.directions.end());
                }
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(whole == make_word(expect));
            }
        }
    }
}

TEST_CASE("circular word layout and sizes") {
    CircularPoset c = circular_word(3, 2, 1);
    CHECK(c.word.element_count == 20);
    CHECK(word_to_string(c.word) == "DDDDDU" + word_to_string(relation_word(LatticePoint(3, 2), 1)));
    CHECK_THROWS_AS(circular_word(4, 2, 0), invalid_input);
    CHECK_THROWS_AS(circular_word(0, 0, 0), invalid_input);
}

TEST_CASE("type 1 resolution on the smallest fences") {
    // P1 = single Down cover, P2 = one element
    Resolution r = type1_resolution(word_from_string("D"), make_word({}), 1);
    CHECK(word_to_string(r.p3) == "U");
    CHECK(r.p4.element_count == 0);
    CHECK(word_to_string(r.p5) == "U");
    CHECK(r.p6.element_count == 0);

    BigInt lhs = brute_force_count(explicit_poset(word_from_string("D"))) *
                 brute_force_count(explicit_poset(make_word({})));
    BigInt rhs = brute_force_count(explicit_poset(r.p3)) * brute_force_count(explicit_poset(r.p4)) +
                 brute_force_count(explicit_poset(r.p5)) * brute_force_count(explicit_poset(r.p6));
    CHECK(lhs == BigInt(6));
    CHECK(lhs == rhs);
}

TEST_CASE("type 1 resolution identity for a hand-picked pair") {
    RelationWord w1 = word_from_string("DU");
    RelationWord w2 = word_from_string("D");
    Resolution r = type1_resolution(w1, w2, 1);
    BigInt lhs = brute_force_count(explicit_poset(w1)) * brute_force_count(explicit_poset(w2));
    BigInt rhs = brute_force_count(explicit_poset(r.p3)) * brute_force_count(explicit_poset(r.p4)) +
                 brute_force_count(explicit_poset(r.p5)) * brute_force_count(explicit_poset(r.p6));
    CHECK(lhs == rhs);
}

TEST_CASE("type 1 resolution rejects bad indices") {
    RelationWord w1 = word_from_string("UD");
    CHECK_THROWS_AS(type1_resolution(w1, w1, 1), invalid_input);   // Up cover at j
    CHECK_THROWS_AS(type1_resolution(w1, w1, 0), invalid_input);   // out of range
    CHECK_THROWS_AS(type1_resolution(w1, w1, 3), invalid_input);
}

TEST_CASE("explicit posets for words and cycles") {
    FencePosetExplicit p = explicit_poset(word_from_string("D"));
    CHECK(p.element_count == 2);
    REQUIRE(p.covers.size() == 1);
    CHECK(p.covers[0] == std::pair<std::uint32_t, std::uint32_t>{0, 1});

    FencePosetExplicit zigzag = explicit_poset(word_from_string("DUD"));
    CHECK(zigzag.element_count == 4);
    CHECK(zigzag.covers.size() == 3);

    CircularPoset c = circular_word(1, 1, 0);
    FencePosetExplicit cp = explicit_poset(c);
    CHECK(cp.element_count == 4);
    CHECK(cp.covers.size() == 4);
}

TEST_CASE("reversal reads the same poset from the other end") {
    RelationWord w = word_from_string("DDUUUDU");
    RelationWord r = reversed_flipped(w);
    CHECK(word_to_string(r) == "DUDDDUU");
    CHECK(reversed_flipped(r) == w);
    CHECK(count_ideals_dp(w) == count_ideals_dp(r));
}
