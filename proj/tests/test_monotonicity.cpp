#include <doctest.h>

#include <cmath>
#include <numeric>

#include "kmarkov/markov.hpp"
#include "kmarkov/monotonicity.hpp"
#include "kmarkov/verify.hpp"

using namespace kmarkov;

namespace {

LineSpec make_line(long sn, long sd, long bn, long bd) {
    LineSpec l;
    l.slope = BigRat(sn, sd);
    l.slope.canonicalize();
    l.intercept = BigRat(bn, bd);
    l.intercept.canonicalize();
    return l;
}

}  // namespace

TEST_CASE("threshold table") {
    struct Row {
        unsigned k;
        double u, l, tol;
    };
    const Row rows[] = {
        {0, -1.14320, -1.24167, 2e-5},   {1, -1.14623, -1.30922, 2e-5},
        {2, -1.14320, -1.24167, 2e-5},   {3, -1.13485, -1.20123, 2e-5},
        {100, -1.05725, -1.05827, 2e-5}, {1000, -1.03933, -1.03940, 2e-5},
        {10000, -1.029917, -1.029923, 2e-6},
    };
    for (const Row& r : rows) {
        ThresholdSet t = thresholds(r.k);
        CAPTURE(r.k);
        CHECK(std::fabs(t.upper - r.u) <= r.tol);
        CHECK(std::fabs(t.lower - r.l) <= r.tol);
        CHECK(t.lower <= t.upper);
        CHECK(t.upper < 0);
    }
    CHECK(std::fabs(thresholds(0).upper - thresholds(2).upper) < 1e-9);
    CHECK(std::fabs(thresholds(0).lower - thresholds(2).lower) < 1e-9);
}

TEST_CASE("limit constants") {
    CHECK(std::fabs(s_minus(1, 1, 0) - 1.206012) <= 1e-5 * 1.206012);
    CHECK_THROWS_AS(s_minus(2, 4, 0), invalid_input);
    CHECK_THROWS_AS(s_plus(0, 1, 0), invalid_input);
}

TEST_CASE("line enumeration") {
    // the slope -5/4 line through (25,11) and (29,6)
    std::vector<LatticePoint> pts = enumerate_line(make_line(-5, 4, 169, 4));
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == LatticePoint(21, 16));
    CHECK(pts[1] == LatticePoint(25, 11));
    CHECK(pts[2] == LatticePoint(29, 6));
    CHECK(pts[3] == LatticePoint(33, 1));

    // the parallel line a unit lower picks up the q = 0 boundary point
    std::vector<LatticePoint> low = enumerate_line(make_line(-5, 4, 165, 4));
    REQUIRE(low.size() == 4);
    CHECK(low[0] == LatticePoint(21, 15));
    CHECK(low[3] == LatticePoint(33, 0));
    CHECK(enumerate_line(make_line(-5, 4, 165, 4), LineRegion::Interior).size() == 3);

    std::vector<LatticePoint> two = enumerate_line(make_line(-6, 5, 83, 5));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == LatticePoint(8, 7));
    CHECK(two[1] == LatticePoint(13, 1));

    std::vector<LatticePoint> one = enumerate_line(make_line(-1, 1, 1, 1));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == LatticePoint(1, 0));

    CHECK_THROWS_AS(enumerate_line(make_line(1, 2, 0, 1)), invalid_input);
    std::vector<LatticePoint> ranged =
        enumerate_line(make_line(1, 2, 0, 1), LineRegion::Closed, std::make_pair(BigInt(0), BigInt(10)));
    CHECK(ranged.size() == 6);  // even x from 0 to 10
}

TEST_CASE("classification of the spec lines") {
    for (unsigned k = 0; k <= 3; ++k) {
        MonotonicityReport inc = classify_line(make_line(-1, 1, 17, 1), k);
        CHECK(inc.predicted == PredictedClass::Increasing);
        CHECK(inc.empirical == EmpiricalClass::Increasing);
        CHECK_FALSE(inc.anomaly);

        MonotonicityReport dec = classify_line(make_line(-2, 1, 20, 1), k);
        CHECK(dec.predicted == PredictedClass::Decreasing);
        CHECK(dec.empirical == EmpiricalClass::Decreasing);
    }

    MonotonicityReport valley = classify_line(make_line(-5, 4, 165, 4), 1);
    CHECK(valley.predicted == PredictedClass::Gray);
    CHECK(valley.empirical == EmpiricalClass::Valley);

    MonotonicityReport famous = classify_line(make_line(-5, 4, 169, 4), 1);
    CHECK(famous.empirical == EmpiricalClass::Valley);
    REQUIRE(famous.values.size() == 4);
    CHECK(famous.values[1] == BigInt("9998020960587781820161"));
    CHECK(famous.values[2] == BigInt("11854846326279367099921"));
    CHECK(famous.values[1] < famous.values[2]);

    MonotonicityReport flat = classify_line(make_line(0, 1, 3, 1), 0, LineRegion::Closed,
                                            std::make_pair(BigInt(3), BigInt(9)));
    CHECK(flat.predicted == PredictedClass::PositiveSlope);
    CHECK(flat.empirical == EmpiricalClass::Increasing);

    MonotonicityReport one_point = classify_line(make_line(-1, 1, 1, 1), 0);
    CHECK(one_point.empirical == EmpiricalClass::TooShort);
}

TEST_CASE("ptolemy conditions and the exact inequality") {
    PtolemyReport quad = ptolemy_check(LatticePoint(0, 0), LatticePoint(2, 1), LatticePoint(3, 1),
                                       LatticePoint(1, 0), 0);
    CHECK(quad.condition == PtolemyCondition::ConvexQuad);
    CHECK(quad.lhs == 26);
    CHECK(quad.rhs == 26);
    CHECK(quad.holds);
    CHECK(quad.equality);

    PtolemyReport col = ptolemy_check(LatticePoint(0, 0), LatticePoint(1, 1), LatticePoint(2, 2),
                                      LatticePoint(3, 3), 0);
    CHECK(col.condition == PtolemyCondition::Collinear);
    CHECK(col.lhs == 144);
    CHECK(col.equality);

    PtolemyReport side = ptolemy_check(LatticePoint(5, 5), LatticePoint(0, 0), LatticePoint(2, 1),
                                       LatticePoint(4, 2), 1);
    CHECK(side.condition == PtolemyCondition::PointOnSide);
    CHECK(side.holds);

    PtolemyReport none = ptolemy_check(LatticePoint(0, 0), LatticePoint(5, 0), LatticePoint(1, 1),
                                       LatticePoint(2, 5), 0);
    CHECK(none.condition == PtolemyCondition::NotApplicable);

    CHECK_THROWS_AS(
        ptolemy_check(LatticePoint(0, 0), LatticePoint(0, 0), LatticePoint(1, 1), LatticePoint(2, 2), 0),
        invalid_input);
}

TEST_CASE("ratio probes converge to the limit constants") {
    struct Probe {
        unsigned a1, a2;
    };
    for (const Probe& pr : {Probe{1, 1}, Probe{1, 2}, Probe{2, 1}}) {
        for (unsigned k = 0; k <= 1; ++k) {
            CAPTURE(pr.a1);
            CAPTURE(pr.a2);
            CAPTURE(k);
            // rightward shifts: last ratio climbs to S-
            LineSpec horiz = make_line(-(long)pr.a1, pr.a2, 0, 1);
            horiz.intercept = BigRat(1) + BigRat(pr.a1, pr.a2) * BigRat(1 + pr.a1 + pr.a2);
            horiz.intercept.canonicalize();
            std::vector<BigRat> last = ratio_shift_sequence(horiz, ShiftMode::Horizontal, 40, k);
            REQUIRE(last.size() == 41);
            for (std::size_t i = 0; i + 1 < last.size(); ++i) CHECK(last[i] < last[i + 1]);
            CHECK(std::fabs(last.back().get_d() - s_minus(pr.a1, pr.a2, k)) <= 1e-4);

            // diagonal shifts: first ratio falls to S+
            LineSpec diag = make_line(-(long)pr.a1, pr.a2, 0, 1);
            diag.intercept = BigRat(pr.a1) + BigRat(pr.a1, pr.a2) * BigRat(pr.a1 + 1);
            diag.intercept.canonicalize();
            std::vector<BigRat> first = ratio_shift_sequence(diag, ShiftMode::Diagonal, 40, k);
            REQUIRE(first.size() == 41);
            for (std::size_t i = 0; i + 1 < first.size(); ++i) CHECK(first[i] > first[i + 1]);
            CHECK(std::fabs(first.back().get_d() - s_plus(pr.a1, pr.a2, k)) <= 1e-4);

            // the float projection matches the exact sequence
            std::vector<double> floats = ratio_convergence_probe(horiz, ShiftMode::Horizontal, 5, k);
            REQUIRE(floats.size() == 6);
            CHECK(floats[0] == doctest::Approx(last[0].get_d()));
        }
    }
}

TEST_CASE("probe edge cases") {
    // n_max = 0: single entry, the base line's own last ratio
    LineSpec l = make_line(-1, 1, 4, 1);
    std::vector<BigRat> seq = ratio_shift_sequence(l, ShiftMode::Horizontal, 0, 0);
    REQUIRE(seq.size() == 1);
    CHECK(seq[0] == BigRat(13, 12));  // m(3,1)/m(2,2)

    // a line missing the scan region entirely gives an empty sequence
    LineSpec off = make_line(-1, 1, -5, 1);
    CHECK(ratio_shift_sequence(off, ShiftMode::Horizontal, 10, 0).empty());

    CHECK_THROWS_AS(ratio_shift_sequence(make_line(1, 1, 0, 1), ShiftMode::Horizontal, 5, 0),
                    invalid_input);
}

TEST_CASE("wedge counting against a direct scan") {
    auto scan = [](long p, long q, double lo, double hi, bool coprime) {
        BigRat rlo(lo), rhi(hi);
        std::uint64_t n = 0;
        for (long pp = 0; pp <= 200; ++pp) {
            for (long qq = 0; qq <= pp; ++qq) {
                if (pp == p && qq == q) continue;
                if (pp == p) continue;  // vertical line: slope undefined
                BigRat s(qq - q, pp - p);
                s.canonicalize();
                if (s > rlo && s < rhi && (!coprime || std::gcd(pp, qq) == 1)) ++n;
            }
        }
        return n;
    };

    for (bool coprime : {false, true}) {
        WedgeOptions opts;
        opts.coprime_only = coprime;
        CHECK(wedge_count(5, 2, -1.25, -8.0 / 7.0, opts).count == scan(5, 2, -1.25, -8.0 / 7.0, coprime));
        CHECK(wedge_count(20, 9, -1.6, -1.05, opts).count == scan(20, 9, -1.6, -1.05, coprime));
        CHECK(wedge_count(37, 11, -2.5, -1.2, opts).count == scan(37, 11, -2.5, -1.2, coprime));
    }

    // the hand-checked wedge at (5,2) is empty
    CHECK(wedge_count(5, 2, -1.25, -8.0 / 7.0).count == 0);
    // near-degenerate interval
    CHECK(wedge_count(9, 4, -1.2000000000001, -1.2, {}).count == 0);
    CHECK_THROWS_AS(wedge_count(5, 2, -1.0, -1.2, {}), invalid_input);

    WedgeOptions listing;
    listing.collect_points = true;
    WedgeResult r = wedge_count(20, 9, -1.6, -1.05, listing);
    CHECK(r.points.size() == r.count);
}

TEST_CASE("order comparisons reproduce the published flips") {
    std::vector<OrderComparison> flip1 =
        compare_orders(LatticePoint(25, 11), LatticePoint(29, 6), {0, 1});
    REQUIRE(flip1.size() == 2);
    CHECK(flip1[0].cmp > 0);
    CHECK(flip1[1].cmp < 0);

    std::vector<OrderComparison> flip2 =
        compare_orders(LatticePoint(8, 7), LatticePoint(13, 1), {0, 1, 2, 3});
    REQUIRE(flip2.size() == 4);
    CHECK(flip2[0].cmp < 0);
    CHECK(flip2[1].cmp < 0);
    CHECK(flip2[2].cmp < 0);
    CHECK(flip2[3].cmp > 0);

    for (const OrderComparison& oc : compare_orders(LatticePoint(4, 3), LatticePoint(4, 3), {0, 1, 2}))
        CHECK(oc.cmp == 0);
}

TEST_CASE("gray-zone lines need not dip: the fixed witness and its shift") {
    // slope -7/6 sits inside the k=0 gray zone with a wide margin, yet this
    // close-in line increases over all three of its interior points
    MonotonicityReport witness = classify_line(make_line(-7, 6, 131, 3), 0, LineRegion::Interior);
    CHECK(witness.predicted == PredictedClass::Gray);
    REQUIRE(witness.points.size() == 3);
    CHECK(witness.points[0] == LatticePoint(22, 18));
    CHECK(witness.points[2] == LatticePoint(34, 4));
    CHECK(witness.empirical == EmpiricalClass::Increasing);

    // shifted far enough to the right the dip appears, as the ratio limits
    // dictate
    MonotonicityReport shifted = classify_line(make_line(-7, 6, 215, 3), 0, LineRegion::Interior);
    CHECK(shifted.predicted == PredictedClass::Gray);
    CHECK(shifted.empirical == EmpiricalClass::Valley);
}

TEST_CASE("monotone suite is clean") {
    auto res = verify::monotone_suite(3, 80);
    for (const auto& f : res.failures) MESSAGE(f);
    CHECK(res.failures.empty());
}

TEST_CASE("ptolemy suite is clean") {
    auto res = verify::ptolemy_suite(11, 200);
    for (const auto& f : res.failures) MESSAGE(f);
    CHECK(res.failures.empty());
}
