#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kmarkov {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Fires only on internal-consistency violations (exact divisions, adjacency
// assumptions). If one of these escapes, the construction itself is wrong.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct LatticePoint {
    BigInt x;
    BigInt y;

    LatticePoint() : x(0), y(0) {}
    LatticePoint(BigInt px, BigInt py) : x(std::move(px)), y(std::move(py)) {}
    LatticePoint(long px, long py) : x(px), y(py) {}

    bool operator==(const LatticePoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);

/// d.x * e.y - d.y * e.x
BigInt cross(const LatticePoint& d, const LatticePoint& e);

enum class SegmentFamily : unsigned char { Horizontal, Vertical, Diagonal };

// Unit segment of the lattice of lines of slope 0, infinity and -1 through
// integral points. Endpoints are anchor and anchor+(1,0) / +(0,1) / +(1,-1).
struct UnitSegment {
    SegmentFamily family = SegmentFamily::Horizontal;
    LatticePoint anchor;

    LatticePoint first() const { return anchor; }
    LatticePoint second() const;
    bool operator==(const UnitSegment& o) const { return family == o.family && anchor == o.anchor; }
};

enum class ChainDir : unsigned char { Descending, Ascending };

// Which way the straight segment is perturbed around midpoints and lattice
// points. Left is the canonical choice; Right exists to check that the count
// does not depend on it.
enum class Bias : unsigned char { Left, Right };

// One crossing of the (perturbed) curve with a unit segment. order_key is the
// exact curve parameter in (0,1); detour crossings share the parameter of the
// lattice point they circle and are ranked by detour_rank = 1,2,...
struct Crossing {
    UnitSegment segment;
    BigRat order_key;
    int detour_rank = 0;
    ChainDir chain = ChainDir::Descending;
};

enum class Dir : unsigned char { Up, Down };

// Fence poset encoded as the sequence of Hasse-path cover directions, read
// along the curve. Down means the left element covers the right one. A poset
// with one element has an empty word but element_count 1; the empty poset has
// element_count 0.
struct RelationWord {
    std::vector<Dir> directions;
    std::uint64_t element_count = 0;

    bool empty() const { return element_count == 0; }
    bool operator==(const RelationWord& o) const {
        return element_count == o.element_count && directions == o.directions;
    }
};

RelationWord make_word(std::vector<Dir> dirs);
RelationWord word_from_string(const char* s);  // e.g. "DDUUU"
std::string word_to_string(const RelationWord& w);

/// Same poset read from the other end of the Hasse path.
RelationWord reversed_flipped(const RelationWord& w);

// Run-length profile (c_1,...,c_n); first run counted one longer than the
// letter run. Empty for the empty poset.
struct Shape {
    std::vector<std::uint64_t> runs;
    bool operator==(const Shape& o) const { return runs == o.runs; }
};

std::string shape_to_string(const Shape& s);

// Fence word plus the closing cover "last element precedes first", making the
// Hasse diagram a cycle.
struct CircularPoset {
    RelationWord word;
};

// Materialized poset for the subset-enumeration oracle. covers hold
// (upper, lower) element indices, 0-based.
struct FencePosetExplicit {
    std::uint64_t element_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
};

/// All crossings of the left- (or right-) perturbed segment from the origin to
/// delta, in curve order.
std::vector<Crossing> curve_crossings(const LatticePoint& delta, Bias bias = Bias::Left);

/// Fence word of the perturbed segment from the origin to delta, with k+1
/// chain elements per crossing.
RelationWord relation_word(const LatticePoint& delta, unsigned k, Bias bias = Bias::Left);

Shape word_to_shape(const RelationWord& w);

/// Closed-up poset: descending chain of 3k+3 elements, one Up junction, the
/// fence of (p,q), and the closing relation. Requires gcd(|p|,|q|) = 1.
CircularPoset circular_word(const BigInt& p, const BigInt& q, unsigned k);

struct Resolution {
    RelationWord p3, p4, p5, p6;
};

/// Skein-style decomposition of two fences at cover j of word1 (1-based,
/// which must be Down). Callers with an Up cover reverse the word first.
Resolution type1_resolution(const RelationWord& word1, const RelationWord& word2, std::uint64_t j);

FencePosetExplicit explicit_poset(const RelationWord& w);
FencePosetExplicit explicit_poset(const CircularPoset& c);

}  // namespace kmarkov
