#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kmarkov/lattice_poset.hpp"

namespace kmarkov {

// Slope thresholds and the constants they are built from. upper/lower are
// U(k) and L(k); lines with slope above U(k) grow, below L(k) shrink, and the
// interval (L,U) is the gray zone.
struct ThresholdSet {
    unsigned k = 0;
    double alpha = 0, beta = 0, delta = 0;
    double big_a = 0, big_b = 0;
    double upper = 0, lower = 0;
};

ThresholdSet thresholds(unsigned k);

/// Limit of the last ratio along rightward shifts of a slope -a1/a2 line:
/// ((3+3k)A)^{-a1} ((3+2k+sqrt(alpha))/2)^{a2}.
double s_minus(unsigned a1, unsigned a2, unsigned k);

/// Limit of the first ratio along diagonal shifts:
/// ((3+3k)B)^{a1+a2} ((beta+sqrt(beta^2-4))/2)^{-a1}.
double s_plus(unsigned a1, unsigned a2, unsigned k);

// Line y = slope*x + intercept with exact rational coefficients.
struct LineSpec {
    BigRat slope;
    BigRat intercept;
};

// Closed is the full wedge p >= q >= 0. Interior drops both boundary rows
// (q = 0 and p = q); the increase/decrease guarantees of the slope thresholds
// are boundary-sensitive, so the verification suites scan interior points.
enum class LineRegion : unsigned char { Closed, Interior };

/// Integral points of the line inside the region, ordered by x. Finite for
/// negative slopes; nonnegative slopes require an explicit x range.
std::vector<LatticePoint> enumerate_line(const LineSpec& line, LineRegion region = LineRegion::Closed,
                                         std::optional<std::pair<BigInt, BigInt>> x_range = std::nullopt);

enum class EmpiricalClass : unsigned char { Increasing, Decreasing, Valley, TooShort };
enum class PredictedClass : unsigned char { Increasing, Decreasing, Gray, PositiveSlope, AtBoundary };

const char* to_string(EmpiricalClass c);
const char* to_string(PredictedClass c);

struct MonotonicityReport {
    std::vector<LatticePoint> points;
    std::vector<BigInt> values;
    std::vector<int> steps;  // sign of value[i+1] - value[i], exact
    EmpiricalClass empirical = EmpiricalClass::TooShort;
    PredictedClass predicted = PredictedClass::Gray;
    // set if consecutive equal values or an increase-then-decrease pattern
    // shows up; neither can occur on a negative-slope line
    bool anomaly = false;
};

// Guard band around U(k)/L(k) inside which no theorem-side prediction is
// claimed; the thresholds are transcendental and the slope is rational.
inline constexpr double kSlopeGuardBand = 1e-9;

MonotonicityReport classify_line(const LineSpec& line, unsigned k, LineRegion region = LineRegion::Closed,
                                 std::optional<std::pair<BigInt, BigInt>> x_range = std::nullopt);

enum class PtolemyCondition : unsigned char { ConvexQuad, PointOnSide, Collinear, NotApplicable };

const char* to_string(PtolemyCondition c);

struct PtolemyReport {
    PtolemyCondition condition = PtolemyCondition::NotApplicable;
    BigInt lhs;  // |AC| |BD|
    BigInt rhs;  // |AB| |CD| + |AD| |BC|
    bool holds = false;
    bool equality = false;
};

/// Detects which admissibility condition the (ordered) quadruple satisfies
/// and evaluates |AC||BD| >= |AB||CD| + |AD||BC| exactly.
PtolemyReport ptolemy_check(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                            const LatticePoint& d, unsigned k);

enum class ShiftMode : unsigned char { Horizontal, Diagonal };

/// Ratio_last of the line shifted right by n = 0..n_max (Horizontal), or
/// Ratio_first of the line shifted up-right along the diagonal (Diagonal).
/// Horizontal shifts scan rows q >= 1, diagonal shifts columns p > q: the
/// boundary row each mode excludes is the one on which its limit fails.
/// The sequence is truncated if a shifted line has fewer than two points,
/// and empty if the base line already has fewer than two.
std::vector<BigRat> ratio_shift_sequence(const LineSpec& line, ShiftMode mode, unsigned n_max, unsigned k);

/// Same sequence as doubles, for convergence inspection.
std::vector<double> ratio_convergence_probe(const LineSpec& line, ShiftMode mode, unsigned n_max, unsigned k);

struct WedgeOptions {
    bool coprime_only = false;
    bool collect_points = false;
};

struct WedgeResult {
    std::uint64_t count = 0;
    std::vector<LatticePoint> points;  // filled only when collect_points
};

/// Lattice points of the region (other than (p,q) itself) whose connecting
/// slope to (p,q) lies strictly inside (slope_low, slope_high). Requires
/// slope_low < slope_high < 0; both arms of the wedge leave the region, so
/// the set is finite.
WedgeResult wedge_count(const BigInt& p, const BigInt& q, double slope_low, double slope_high,
                        const WedgeOptions& opts = {});

struct OrderComparison {
    unsigned k = 0;
    int cmp = 0;  // sign of m_A - m_B
    BigInt value_a;
    BigInt value_b;
};

/// Exact trichotomy between the values of two points for each requested k.
std::vector<OrderComparison> compare_orders(const LatticePoint& a, const LatticePoint& b,
                                            const std::vector<unsigned>& ks);

}  // namespace kmarkov
