#include "kmarkov/monotonicity.hpp"

#include <cmath>
#include <numeric>

#include "kmarkov/markov.hpp"

namespace kmarkov {

ThresholdSet thresholds(unsigned k) {
    ThresholdSet t;
    t.k = k;
    const double kd = k;
    t.alpha = 4 * kd * kd + 12 * kd + 5;
    t.beta = 3 * kd * kd + 8 * kd + 6;
    t.delta = 3 * kd * kd * kd * kd + 17 * kd * kd * kd + 34 * kd * kd + 28 * kd + 8;
    const double sqrt_alpha = std::sqrt(t.alpha);
    const double beta_disc = std::sqrt(t.beta * t.beta - 4);
    t.big_a = (2 * kd * kd + 3 * kd + 1 + (1 + kd) * sqrt_alpha) / (2 * (1 + 2 * kd) * sqrt_alpha);
    t.big_b = ((kd + 1) * (kd + 2) * (t.beta * t.beta - 4) + t.delta * beta_disc) /
              ((t.beta - 2) * (t.beta * t.beta - 4));
    const double growth = 3 + 3 * kd;
    t.upper = -std::log(growth * t.big_b) / std::log((t.beta + beta_disc) / (2 * growth * t.big_b));
    t.lower = -std::log((3 + 2 * kd + sqrt_alpha) / 2) / std::log(growth * t.big_a);
    return t;
}

namespace {

void require_coprime_pair(unsigned a1, unsigned a2) {
    if (a1 == 0 || a2 == 0 || std::gcd(a1, a2) != 1)
        throw invalid_input("slope components must be coprime positive integers");
}

}  // namespace

double s_minus(unsigned a1, unsigned a2, unsigned k) {
    require_coprime_pair(a1, a2);
    ThresholdSet t = thresholds(k);
    return std::pow((3 + 3.0 * k) * t.big_a, -(double)a1) *
           std::pow((3 + 2.0 * k + std::sqrt(t.alpha)) / 2, (double)a2);
}

double s_plus(unsigned a1, unsigned a2, unsigned k) {
    require_coprime_pair(a1, a2);
    ThresholdSet t = thresholds(k);
    return std::pow((3 + 3.0 * k) * t.big_b, (double)(a1 + a2)) *
           std::pow((t.beta + std::sqrt(t.beta * t.beta - 4)) / 2, -(double)a1);
}

namespace {

BigInt rat_floor(const BigRat& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

BigInt rat_ceil(const BigRat& r) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Points of the line with q >= q_min and p >= q (or p > q when strict),
// sorted by x. Integrality of y is periodic in x with the slope denominator.
std::vector<LatticePoint> enumerate_impl(const LineSpec& line, long q_min, bool strict_pq,
                                         const std::optional<std::pair<BigInt, BigInt>>& x_range) {
    const BigRat& a = line.slope;
    const BigRat& b = line.intercept;
    std::vector<LatticePoint> pts;

    BigInt x_lo, x_hi;
    if (sgn(a) < 0) {
        // q >= q_min: x <= (q_min - b)/a ; p - q >= eps: x >= (b + eps)/(1 - a)
        x_hi = rat_floor((BigRat(q_min) - b) / a);
        x_lo = rat_ceil((b + BigRat(strict_pq ? 1 : 0)) / (BigRat(1) - a));
        if (x_lo < q_min) x_lo = q_min;  // p >= q >= q_min
        if (x_range) {
            if (x_range->first > x_lo) x_lo = x_range->first;
            if (x_range->second < x_hi) x_hi = x_range->second;
        }
    } else {
        if (!x_range) throw invalid_input("nonnegative slope needs an explicit x range");
        x_lo = x_range->first;
        x_hi = x_range->second;
    }

    const BigInt period(line.slope.get_den());
    BigInt x = x_lo;
    // find the first x with integral y, if any in the period window
    bool found = false;
    for (BigInt i = 0; i < period && x <= x_hi; ++i, ++x) {
        BigRat y = a * BigRat(x) + b;
        if (y.get_den() == 1) {
            found = true;
            break;
        }
    }
    if (!found) return pts;
    for (; x <= x_hi; x += period) {
        BigRat y = a * BigRat(x) + b;
        if (y.get_den() != 1) throw internal_error("integrality must be periodic in the slope denominator");
        BigInt yi(y.get_num());
        if (yi < q_min) continue;
        if (strict_pq ? (x <= yi) : (x < yi)) continue;
        pts.emplace_back(x, yi);
    }
    return pts;
}

}  // namespace

std::vector<LatticePoint> enumerate_line(const LineSpec& line, LineRegion region,
                                         std::optional<std::pair<BigInt, BigInt>> x_range) {
    return region == LineRegion::Closed ? enumerate_impl(line, 0, false, x_range)
                                        : enumerate_impl(line, 1, true, x_range);
}

const char* to_string(EmpiricalClass c) {
    switch (c) {
        case EmpiricalClass::Increasing: return "increasing";
        case EmpiricalClass::Decreasing: return "decreasing";
        case EmpiricalClass::Valley: return "valley";
        case EmpiricalClass::TooShort: return "too_short";
    }
    return "?";
}

const char* to_string(PredictedClass c) {
    switch (c) {
        case PredictedClass::Increasing: return "increasing";
        case PredictedClass::Decreasing: return "decreasing";
        case PredictedClass::Gray: return "gray";
        case PredictedClass::PositiveSlope: return "positive_slope";
        case PredictedClass::AtBoundary: return "at_boundary";
    }
    return "?";
}

MonotonicityReport classify_line(const LineSpec& line, unsigned k, LineRegion region,
                                 std::optional<std::pair<BigInt, BigInt>> x_range) {
    MonotonicityReport rep;

    if (sgn(line.slope) >= 0) {
        rep.predicted = PredictedClass::PositiveSlope;
    } else {
        ThresholdSet t = thresholds(k);
        double af = line.slope.get_d();
        if (std::fabs(af - t.upper) <= kSlopeGuardBand || std::fabs(af - t.lower) <= kSlopeGuardBand)
            rep.predicted = PredictedClass::AtBoundary;
        else if (af > t.upper)
            rep.predicted = PredictedClass::Increasing;
        else if (af < t.lower)
            rep.predicted = PredictedClass::Decreasing;
        else
            rep.predicted = PredictedClass::Gray;
    }

    rep.points = enumerate_line(line, region, std::move(x_range));
    rep.values.reserve(rep.points.size());
    // distance from the origin rather than markov_number: a line through the
    // origin then carries the conventional value 0 instead of an error
    for (const auto& pt : rep.points) rep.values.push_back(distance(LatticePoint(0, 0), pt, k));
    if (rep.points.size() < 2) {
        rep.empirical = EmpiricalClass::TooShort;
        return rep;
    }

    bool seen_dec = false, seen_inc = false;
    for (std::size_t i = 0; i + 1 < rep.values.size(); ++i) {
        int s = cmp(rep.values[i + 1], rep.values[i]);
        rep.steps.push_back(s);
        if (s == 0) {
            rep.anomaly = true;  // impossible on negative-slope lines
            seen_inc = true;
        } else if (s < 0) {
            if (seen_inc) rep.anomaly = true;  // a peak cannot occur either
            seen_dec = true;
        } else {
            seen_inc = true;
        }
    }
    if (seen_dec && seen_inc)
        rep.empirical = EmpiricalClass::Valley;
    else if (seen_dec)
        rep.empirical = EmpiricalClass::Decreasing;
    else
        rep.empirical = EmpiricalClass::Increasing;
    return rep;
}

const char* to_string(PtolemyCondition c) {
    switch (c) {
        case PtolemyCondition::ConvexQuad: return "convex_quadrilateral";
        case PtolemyCondition::PointOnSide: return "point_on_side";
        case PtolemyCondition::Collinear: return "collinear";
        case PtolemyCondition::NotApplicable: return "not_applicable";
    }
    return "?";
}

namespace {

int orient(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r) {
    return sgn(cross(q - p, r - p));
}

// strictly inside the segment pq (assumes collinearity was established)
bool strictly_between(const LatticePoint& p, const LatticePoint& x, const LatticePoint& q) {
    LatticePoint u = x - p;
    LatticePoint v = q - x;
    return sgn(u.x * v.x + u.y * v.y) > 0;
}

}  // namespace

PtolemyReport ptolemy_check(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                            const LatticePoint& d, unsigned k) {
    const LatticePoint* pts[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*pts[i] == *pts[j]) throw invalid_input("ptolemy check needs four distinct points");

    PtolemyReport rep;
    int o1 = orient(a, b, c), o2 = orient(b, c, d), o3 = orient(c, d, a), o4 = orient(d, a, b);
    if (o1 != 0 && o1 == o2 && o2 == o3 && o3 == o4) {
        rep.condition = PtolemyCondition::ConvexQuad;
    } else if (orient(a, b, c) == 0 && orient(a, b, d) == 0 && strictly_between(a, b, c) &&
               strictly_between(b, c, d)) {
        rep.condition = PtolemyCondition::Collinear;
    } else if (orient(a, b, d) != 0 && orient(b, c, d) == 0 && strictly_between(b, c, d)) {
        rep.condition = PtolemyCondition::PointOnSide;
    } else {
        rep.condition = PtolemyCondition::NotApplicable;
        return rep;
    }

    rep.lhs = distance(a, c, k) * distance(b, d, k);
    rep.rhs = distance(a, b, k) * distance(c, d, k) + distance(a, d, k) * distance(b, c, k);
    rep.holds = rep.lhs >= rep.rhs;
    rep.equality = rep.lhs == rep.rhs;
    return rep;
}

std::vector<BigRat> ratio_shift_sequence(const LineSpec& line, ShiftMode mode, unsigned n_max, unsigned k) {
    if (sgn(line.slope) >= 0) throw invalid_input("ratio probes need a negative slope");
    std::vector<BigRat> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        LineSpec shifted = line;
        if (mode == ShiftMode::Horizontal) {
            // y = a(x - n) + b
            shifted.intercept = line.intercept - line.slope * BigRat((long)n);
        } else {
            // y - n = a(x - n) + b
            shifted.intercept = line.intercept + BigRat((long)n) * (BigRat(1) - line.slope);
        }
        std::vector<LatticePoint> pts = mode == ShiftMode::Horizontal
                                            ? enumerate_impl(shifted, 1, false, std::nullopt)
                                            : enumerate_impl(shifted, 0, true, std::nullopt);
        if (pts.size() < 2) break;
        const LatticePoint& hi = mode == ShiftMode::Horizontal ? pts[pts.size() - 1] : pts[1];
        const LatticePoint& lo = mode == ShiftMode::Horizontal ? pts[pts.size() - 2] : pts[0];
        BigRat r(markov_number(hi.x, hi.y, k), markov_number(lo.x, lo.y, k));
        r.canonicalize();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<double> ratio_convergence_probe(const LineSpec& line, ShiftMode mode, unsigned n_max,
                                            unsigned k) {
    std::vector<double> out;
    for (const BigRat& r : ratio_shift_sequence(line, mode, n_max, k)) out.push_back(r.get_d());
    return out;
}

WedgeResult wedge_count(const BigInt& p, const BigInt& q, double slope_low, double slope_high,
                        const WedgeOptions& opts) {
    if (!(slope_low < slope_high) || !(slope_high < 0))
        throw invalid_input("wedge needs slope_low < slope_high < 0");
    BigRat lo(slope_low);   // doubles are dyadic rationals, so this is exact
    BigRat hi(slope_high);
    WedgeResult res;

    auto emit_range = [&](const BigInt& pp, const BigRat& low, const BigRat& high) {
        BigInt y_lo = rat_floor(low) + 1;  // strictly above low
        BigInt y_hi = rat_ceil(high) - 1;  // strictly below high
        if (y_lo < 0) y_lo = 0;
        if (y_hi > pp) y_hi = pp;
        if (y_lo > y_hi) return;
        if (!opts.coprime_only && !opts.collect_points) {
            res.count += mpz_get_ui(BigInt(y_hi - y_lo + 1).get_mpz_t());
            return;
        }
        BigInt g;
        for (BigInt y = y_lo; y <= y_hi; ++y) {
            if (opts.coprime_only) {
                mpz_gcd(g.get_mpz_t(), pp.get_mpz_t(), y.get_mpz_t());
                if (g != 1) continue;
            }
            ++res.count;
            if (opts.collect_points) res.points.emplace_back(pp, y);
        }
    };

    // right arm: columns p+1, p+2, ... until the wedge dips below q' = 0
    for (BigInt dp = 1;; ++dp) {
        BigRat high = BigRat(q) + hi * BigRat(dp);
        if (high < 0) break;
        BigRat low = BigRat(q) + lo * BigRat(dp);
        emit_range(p + dp, low, high);
    }
    // left arm: columns p-1, ..., until the wedge climbs past q' = p'
    for (BigInt dp = -1; p + dp >= 0; --dp) {
        BigRat low = BigRat(q) + hi * BigRat(dp);
        BigRat high = BigRat(q) + lo * BigRat(dp);
        if (low > BigRat(p + dp)) break;
        emit_range(p + dp, low, high);
    }
    return res;
}

std::vector<OrderComparison> compare_orders(const LatticePoint& a, const LatticePoint& b,
                                            const std::vector<unsigned>& ks) {
    std::vector<OrderComparison> out;
    out.reserve(ks.size());
    for (unsigned k : ks) {
        OrderComparison oc;
        oc.k = k;
        oc.value_a = markov_number(a.x, a.y, k);
        oc.value_b = markov_number(b.x, b.y, k);
        oc.cmp = cmp(oc.value_a, oc.value_b);
        out.push_back(std::move(oc));
    }
    return out;
}

}  // namespace kmarkov
