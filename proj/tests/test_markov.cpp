#include <doctest.h>

#include <cmath>

#include "kmarkov/markov.hpp"
#include "kmarkov/verify.hpp"

using namespace kmarkov;

TEST_CASE("distances and the zero convention") {
    CHECK(distance(LatticePoint(0, 0), LatticePoint(3, 2), 1) == 217);
    CHECK(distance(LatticePoint(5, -3), LatticePoint(5, -3), 2) == 0);
    CHECK(distance(LatticePoint(1, 1), LatticePoint(5, 3), 1) == 1001);
    CHECK(distance(LatticePoint(2, 1), LatticePoint(0, 0), 0) == 5);
}

TEST_CASE("classical values at their fraction labels") {
    // the nine middles of the first tree levels: label q/p -> point (p,q)
    struct Gold {
        long p, q;
        long value;
    };
    const Gold gold[] = {{1, 0, 1}, {1, 1, 2},  {2, 1, 5},   {3, 1, 13},  {3, 2, 29},
                         {4, 1, 34}, {5, 2, 194}, {4, 3, 169}, {5, 3, 433}};
    for (const Gold& g : gold) {
        CAPTURE(g.p);
        CAPTURE(g.q);
        CHECK(markov_number(g.p, g.q, 0) == g.value);
    }
}

TEST_CASE("large published values, exactly") {
    CHECK(markov_number(25, 11, 0) == BigInt("48795987025021"));
    CHECK(markov_number(29, 6, 0) == BigInt("46127828641049"));
    CHECK(markov_number(25, 11, 1) == BigInt("9998020960587781820161"));
    CHECK(markov_number(29, 6, 1) == BigInt("11854846326279367099921"));
    CHECK(markov_number(8, 7, 0) == 195025);
    CHECK(markov_number(13, 1, 0) == 196418);
    CHECK(markov_number(13, 1, 3) == BigInt("1108609632005"));
}

TEST_CASE("markov number input validation") {
    CHECK_THROWS_AS(markov_number(0, 0, 1), invalid_input);
    CHECK(markov_number(0, 3, 0) == markov_number(3, 0, 0));
    CHECK(markov_number(-3, -2, 1) == 217);
}

TEST_CASE("vieta tree levels and labels") {
    std::vector<MarkovTriple> t = vieta_tree(0, 3);
    REQUIRE(t.size() == 5);
    CHECK(t[0].y == 1);
    CHECK(t[1].y == 2);
    CHECK(t[2].y == 5);
    CHECK(t[3].y == 13);
    CHECK(t[4].y == 29);
    CHECK(t[4].x == 5);
    CHECK(t[4].z == 2);
    CHECK(t[4].label.mid == FareyFraction{2, 3});

    std::vector<MarkovTriple> full = vieta_tree(0, 4);
    REQUIRE(full.size() == 9);
    for (const MarkovTriple& tr : full) CHECK(satisfies_markov_equation(tr, 0));

    // k = 1 stem: (1,1,1), (1,3,1), (1,13,3)
    std::vector<MarkovTriple> t1 = vieta_tree(1, 2);
    REQUIRE(t1.size() == 3);
    CHECK(t1[1].y == 3);
    CHECK(t1[2].y == 13);
}

TEST_CASE("tree descent matches the published samples") {
    CHECK(markov_via_tree(2, 3, 1) == 217);
    CHECK(markov_via_tree(1, 13, 0) == 196418);
    CHECK(markov_via_tree(6, 29, 1) == BigInt("11854846326279367099921"));
    CHECK_THROWS_AS(markov_via_tree(2, 4, 0), invalid_input);
}

TEST_CASE("named sequences") {
    for (unsigned k = 0; k <= 3; ++k) {
        CHECK(named_sequence(SequenceKind::Fib, k, 0) == 1);
        CHECK(named_sequence(SequenceKind::Fib, k, 1) == k + 2);
        CHECK(named_sequence(SequenceKind::Pell, k, 1) == 2 * k * k + 6 * k + 5);
        CHECK(named_sequence(SequenceKind::Edge1, k, 1) == k + 2);
    }
    CHECK(named_sequence(SequenceKind::Edge0, 0, 3) == 8);
    CHECK(named_sequence(SequenceKind::Pell, 0, 2) == 29);
    CHECK(named_sequence(SequenceKind::Fib, 0, 13) == 196418);
    CHECK(named_sequence(SequenceKind::Pell, 0, 7) == 195025);
    CHECK(named_sequence(SequenceKind::Fib, 3, 13) == BigInt("1108609632005"));
}

TEST_CASE("multiple recurrence against the geometric route") {
    CHECK(multiple_recurrence(2, 1, 1, 2) == 1001);
    CHECK(multiple_recurrence(1, 1, 0, 2) == 12);
    CHECK(multiple_recurrence(3, 2, 2, 0) == 0);
    CHECK(multiple_recurrence(2, 1, 1, 1) == 13);
    CHECK_THROWS_AS(multiple_recurrence(4, 2, 0, 1), invalid_input);
}

TEST_CASE("float closed form tracks the recurrence") {
    CHECK(std::fabs(multiple_closed_form(2, 1, 1, 2) - 1001.0) < 1e-6 * 1001.0);
    CHECK(multiple_closed_form(2, 1, 1, 0) == 0.0);
    double m = markov_number(5, 2, 0).get_d();
    CHECK(std::fabs(multiple_closed_form(5, 2, 0, 1) - m) < 1e-9 * m);
}

TEST_CASE("recurrence suite is clean") {
    auto res = verify::recurrence_suite(1, 0);
    for (const auto& f : res.failures) MESSAGE(f);
    CHECK(res.failures.empty());
}

TEST_CASE("tree suite is clean") {
    auto res = verify::tree_suite(1, 0);
    for (const auto& f : res.failures) MESSAGE(f);
    CHECK(res.failures.empty());
}

TEST_CASE("m3 7/8: all three routes agree on the corrected value") {
    // the figure 1188752792899 circulating for this entry fails the defining
    // recurrence; geometric count, tree descent and the recurrence agree
    BigInt want("1394214913321");
    CHECK(markov_number(8, 7, 3) == want);
    CHECK(markov_via_tree(7, 8, 3) == want);
    CHECK(named_sequence(SequenceKind::Pell, 3, 7) == want);
}

TEST_CASE("lattice symmetry observed, not assumed") {
    // not stated in the source material; checked empirically on a small grid
    for (long n = 1; n <= 6; ++n)
        for (unsigned k = 0; k <= 2; ++k) CHECK(markov_number(n, -n, k) == markov_number(n, 0, k));
}
