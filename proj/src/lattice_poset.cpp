#include "kmarkov/lattice_poset.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace kmarkov {

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    return {a.x + b.x, a.y + b.y};
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    return {a.x - b.x, a.y - b.y};
}

BigInt cross(const LatticePoint& d, const LatticePoint& e) {
    return d.x * e.y - d.y * e.x;
}

LatticePoint UnitSegment::second() const {
    switch (family) {
        case SegmentFamily::Horizontal: return {anchor.x + 1, anchor.y};
        case SegmentFamily::Vertical: return {anchor.x, anchor.y + 1};
        case SegmentFamily::Diagonal: return {anchor.x + 1, anchor.y - 1};
    }
    throw internal_error("bad segment family");
}

RelationWord make_word(std::vector<Dir> dirs) {
    RelationWord w;
    w.element_count = dirs.size() + 1;
    w.directions = std::move(dirs);
    return w;
}

RelationWord word_from_string(const char* s) {
    std::vector<Dir> dirs;
    for (const char* p = s; *p; ++p) {
        if (*p == 'D')
            dirs.push_back(Dir::Down);
        else if (*p == 'U')
            dirs.push_back(Dir::Up);
        else
            throw invalid_input("word letters must be U or D");
    }
    return make_word(std::move(dirs));
}

std::string word_to_string(const RelationWord& w) {
    std::string s;
    s.reserve(w.directions.size());
    for (Dir d : w.directions) s.push_back(d == Dir::Down ? 'D' : 'U');
    return s;
}

RelationWord reversed_flipped(const RelationWord& w) {
    RelationWord out;
    out.element_count = w.element_count;
    out.directions.reserve(w.directions.size());
    for (auto it = w.directions.rbegin(); it != w.directions.rend(); ++it)
        out.directions.push_back(*it == Dir::Down ? Dir::Up : Dir::Down);
    return out;
}

std::string shape_to_string(const Shape& s) {
    std::string out;
    for (std::size_t i = 0; i < s.runs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.runs[i]);
    }
    return out;
}

namespace {

enum class Side : unsigned char { Left, Right };

// Sign of the cross product of the primitive direction with the endpoint
// (the carrier line passes through the origin). Points exactly on the
// carrier are classified with the side opposite the perturbation, i.e.
// Right under the leftward bias.
Side side_of(const LatticePoint& dir, const LatticePoint& e, Bias bias) {
    int s = sgn(cross(dir, e));
    if (s > 0) return Side::Left;
    if (s < 0) return Side::Right;
    return bias == Bias::Left ? Side::Right : Side::Left;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

struct RawCrossing {
    UnitSegment segment;
    BigRat t;      // parameter along the primitive segment, in (0,1)
    BigRat along;  // position inside the unit segment, first() -> second(), in (0,1)
};

// Crossings of the open primitive segment t in (0,1) with the three line
// families, each identified with the unit segment containing the hit.
// Primitivity keeps every hit away from lattice points, so `along` can never
// be 0 or 1 and no two hits share a parameter.
std::vector<RawCrossing> primitive_crossings(const LatticePoint& d) {
    std::vector<RawCrossing> out;
    const BigInt& dx = d.x;
    const BigInt& dy = d.y;

    auto scan = [&out](const BigInt& span, auto&& make) {
        if (span == 0) return;  // family parallel to the direction
        BigInt lo = span > 0 ? BigInt(1) : BigInt(span + 1);
        BigInt hi = span > 0 ? BigInt(span - 1) : BigInt(-1);
        for (BigInt i = lo; i <= hi; ++i) make(i);
    };

    // vertical lines x = i, hit at (i, i*dy/dx)
    scan(dx, [&](const BigInt& i) {
        RawCrossing c;
        c.t = BigRat(i, dx);
        c.t.canonicalize();
        BigInt num = i * dy;
        BigInt fl = floor_div(num, dx);
        c.segment = {SegmentFamily::Vertical, LatticePoint(i, fl)};
        c.along = BigRat(num - fl * dx, dx);  // frac(num/dx), in (0,1)
        c.along.canonicalize();
        out.push_back(std::move(c));
    });
    // horizontal lines y = j, hit at (j*dx/dy, j)
    scan(dy, [&](const BigInt& j) {
        RawCrossing c;
        c.t = BigRat(j, dy);
        c.t.canonicalize();
        BigInt num = j * dx;
        BigInt fl = floor_div(num, dy);
        c.segment = {SegmentFamily::Horizontal, LatticePoint(fl, j)};
        c.along = BigRat(num - fl * dy, dy);
        c.along.canonicalize();
        out.push_back(std::move(c));
    });
    // diagonal lines x + y = m, hit at x = m*dx/(dx+dy); the unit segment on
    // that line runs from (a, m-a) down-right to (a+1, m-a-1)
    BigInt s = dx + dy;
    scan(s, [&](const BigInt& m) {
        RawCrossing c;
        c.t = BigRat(m, s);
        c.t.canonicalize();
        BigInt num = m * dx;
        BigInt fl = floor_div(num, s);
        c.segment = {SegmentFamily::Diagonal, LatticePoint(fl, m - fl)};
        c.along = BigRat(num - fl * s, s);
        c.along.canonicalize();
        out.push_back(std::move(c));
    });

    std::sort(out.begin(), out.end(), [](const RawCrossing& a, const RawCrossing& b) { return a.t < b.t; });
    return out;
}

const std::array<LatticePoint, 6> kUnitDirs = {
    LatticePoint(1, 0), LatticePoint(-1, 0), LatticePoint(0, 1),
    LatticePoint(0, -1), LatticePoint(1, -1), LatticePoint(-1, 1),
};

// Unit directions the detour semicircle sweeps, ordered as it crosses them:
// under the left bias these are the strict left half-plane in decreasing
// counterclockwise angle from the travel direction.
std::vector<LatticePoint> detour_directions(const LatticePoint& d, Bias bias) {
    std::vector<LatticePoint> dirs;
    for (const auto& v : kUnitDirs) {
        int s = sgn(cross(d, v));
        if ((bias == Bias::Left && s > 0) || (bias == Bias::Right && s < 0)) dirs.push_back(v);
    }
    std::sort(dirs.begin(), dirs.end(), [bias](const LatticePoint& a, const LatticePoint& b) {
        return bias == Bias::Left ? cross(b, a) > 0 : cross(a, b) > 0;
    });
    return dirs;
}

UnitSegment segment_from(const LatticePoint& center, const LatticePoint& v) {
    if (v.x == 1 && v.y == 0) return {SegmentFamily::Horizontal, center};
    if (v.x == -1 && v.y == 0) return {SegmentFamily::Horizontal, center + LatticePoint(-1, 0)};
    if (v.x == 0 && v.y == 1) return {SegmentFamily::Vertical, center};
    if (v.x == 0 && v.y == -1) return {SegmentFamily::Vertical, center + LatticePoint(0, -1)};
    if (v.x == 1 && v.y == -1) return {SegmentFamily::Diagonal, center};
    if (v.x == -1 && v.y == 1) return {SegmentFamily::Diagonal, center + LatticePoint(-1, 1)};
    throw internal_error("not a unit direction");
}

ChainDir chain_from_near_endpoint(const LatticePoint& d, const LatticePoint& nearer, Bias bias) {
    return side_of(d, nearer, bias) == Side::Right ? ChainDir::Descending : ChainDir::Ascending;
}

}  // namespace

std::vector<Crossing> curve_crossings(const LatticePoint& delta, Bias bias) {
    if (delta.x == 0 && delta.y == 0) throw invalid_input("relation word of the zero vector");

    BigInt g;
    mpz_gcd(g.get_mpz_t(), delta.x.get_mpz_t(), delta.y.get_mpz_t());
    LatticePoint d(delta.x / g, delta.y / g);

    // cheap size bound before any scanning, so absurd inputs fail cleanly
    BigInt bound = abs(delta.x) + abs(delta.y) + abs(delta.x + delta.y) + 3 * g;
    if (!g.fits_ulong_p() || bound > 100000000)
        throw invalid_input("crossing list would exceed 1e8 segments");
    unsigned long copies = mpz_get_ui(g.get_mpz_t());

    std::vector<RawCrossing> prim = primitive_crossings(d);
    std::vector<LatticePoint> detour = detour_directions(d, bias);

    const BigRat half(1, 2);
    std::vector<Crossing> out;
    out.reserve(copies * prim.size() + (copies - 1) * detour.size());

    for (unsigned long copy = 0; copy < copies; ++copy) {
        LatticePoint base(d.x * (long)copy, d.y * (long)copy);
        for (const RawCrossing& rc : prim) {
            Crossing c;
            c.segment = {rc.segment.family, rc.segment.anchor + base};
            c.order_key = (rc.t + (long)copy) / BigRat((long)copies);
            c.order_key.canonicalize();
            c.detour_rank = 0;
            if (rc.along == half) {
                // midpoint hit: the bias decides which intersection it imitates
                c.chain = bias == Bias::Left ? ChainDir::Ascending : ChainDir::Descending;
            } else {
                LatticePoint nearer = rc.along < half ? c.segment.first() : c.segment.second();
                c.chain = chain_from_near_endpoint(d, nearer, bias);
            }
            out.push_back(std::move(c));
        }
        if (copy + 1 < copies) {
            LatticePoint center(d.x * (long)(copy + 1), d.y * (long)(copy + 1));
            int rank = 1;
            for (const LatticePoint& v : detour) {
                Crossing c;
                c.segment = segment_from(center, v);
                c.order_key = BigRat((long)(copy + 1), (long)copies);
                c.order_key.canonicalize();
                c.detour_rank = rank++;
                // the hit hugs the circled point, which sits on the carrier
                c.chain = chain_from_near_endpoint(d, center, bias);
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

RelationWord relation_word(const LatticePoint& delta, unsigned k, Bias bias) {
    std::vector<Crossing> crossings = curve_crossings(delta, bias);
    if (crossings.empty()) return RelationWord{};

    BigInt g;
    mpz_gcd(g.get_mpz_t(), delta.x.get_mpz_t(), delta.y.get_mpz_t());
    LatticePoint d(delta.x / g, delta.y / g);

    RelationWord w;
    w.element_count = crossings.size() * (std::uint64_t)(k + 1);
    w.directions.reserve(w.element_count - 1);

    auto endpoints = [](const UnitSegment& s) {
        return std::array<LatticePoint, 2>{s.first(), s.second()};
    };

    for (std::size_t i = 0; i < crossings.size(); ++i) {
        Dir chain_letter = crossings[i].chain == ChainDir::Descending ? Dir::Down : Dir::Up;
        for (unsigned j = 0; j < k; ++j) w.directions.push_back(chain_letter);
        if (i + 1 == crossings.size()) break;

        auto ea = endpoints(crossings[i].segment);
        auto eb = endpoints(crossings[i + 1].segment);
        const LatticePoint* shared = nullptr;
        int hits = 0;
        for (const auto& p : ea)
            for (const auto& q : eb)
                if (p == q) {
                    shared = &p;
                    ++hits;
                }
        if (hits != 1) throw internal_error("consecutive crossings must share one endpoint");
        w.directions.push_back(side_of(d, *shared, bias) == Side::Right ? Dir::Down : Dir::Up);
    }
    return w;
}

Shape word_to_shape(const RelationWord& w) {
    Shape s;
    if (w.element_count == 0) return s;
    if (w.directions.empty()) {
        s.runs.push_back(1);
        return s;
    }
    Dir cur = w.directions.front();
    std::uint64_t run = 1;
    for (std::size_t i = 1; i < w.directions.size(); ++i) {
        if (w.directions[i] == cur) {
            ++run;
        } else {
            s.runs.push_back(run);
            cur = w.directions[i];
            run = 1;
        }
    }
    s.runs.push_back(run);
    s.runs.front() += 1;
    return s;
}

CircularPoset circular_word(const BigInt& p, const BigInt& q, unsigned k) {
    if (p == 0 && q == 0) throw invalid_input("circular word of the zero vector");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw invalid_input("circular word requires coprime coordinates");

    RelationWord fence = relation_word(LatticePoint(p, q), k);
    CircularPoset c;
    c.word.element_count = (3 * (std::uint64_t)k + 3) + fence.element_count;
    c.word.directions.reserve(c.word.element_count - 1);
    for (unsigned i = 0; i < 3 * k + 2; ++i) c.word.directions.push_back(Dir::Down);
    if (fence.element_count > 0) {
        // lattice directions have an empty fence; the cycle is then just the
        // detour chain and there is no junction to emit
        c.word.directions.push_back(Dir::Up);
        c.word.directions.insert(c.word.directions.end(), fence.directions.begin(), fence.directions.end());
    }
    return c;
}

Resolution type1_resolution(const RelationWord& word1, const RelationWord& word2, std::uint64_t j) {
    if (word1.element_count == 0 || j < 1 || j > word1.element_count - 1)
        throw invalid_input("resolution index out of range");
    if (word1.directions[j - 1] != Dir::Down)
        throw invalid_input("resolution normal form requires a Down cover at j");

    const auto& w1 = word1.directions;
    const std::uint64_t h1 = word1.element_count;
    const std::uint64_t h2 = word2.element_count;
    Resolution r;

    // P3: elements 1..j of P1, then P1(j) < P2(1), then P2
    {
        std::vector<Dir> dirs(w1.begin(), w1.begin() + (j - 1));
        if (h2 > 0) {
            dirs.push_back(Dir::Up);
            dirs.insert(dirs.end(), word2.directions.begin(), word2.directions.end());
        }
        r.p3 = make_word(std::move(dirs));
    }
    // P4: drop everything P1(j+1) dominates, i.e. the maximal Down run of
    // letters starting at j+1
    {
        std::uint64_t u = j + 2;
        std::uint64_t idx = j;  // 0-based letter index of letter j+1
        while (idx < w1.size() && w1[idx] == Dir::Down) {
            ++idx;
            ++u;
        }
        if (u > h1) {
            r.p4 = RelationWord{};
        } else {
            r.p4 = make_word(std::vector<Dir>(w1.begin() + (u - 1), w1.end()));
        }
    }
    // P5: P2 read backwards, joined by P1(j+1) > P2(1), then the tail of P1
    {
        std::vector<Dir> dirs;
        if (h2 > 0) {
            RelationWord rev = reversed_flipped(word2);
            dirs = std::move(rev.directions);
            dirs.push_back(Dir::Up);  // left P2(1) < right P1(j+1), read from the P2 side
        }
        dirs.insert(dirs.end(), w1.begin() + j, w1.end());
        r.p5 = make_word(std::move(dirs));
    }
    // P6: drop everything dominating P1(j): the maximal Down run of letters
    // ending at j
    {
        std::uint64_t s = j;
        while (s > 1 && w1[s - 2] == Dir::Down) --s;
        std::uint64_t v = s - 1;
        if (v == 0) {
            r.p6 = RelationWord{};
        } else {
            r.p6 = make_word(std::vector<Dir>(w1.begin(), w1.begin() + (v - 1)));
        }
    }
    return r;
}

FencePosetExplicit explicit_poset(const RelationWord& w) {
    FencePosetExplicit p;
    p.element_count = w.element_count;
    p.covers.reserve(w.directions.size());
    for (std::size_t i = 0; i < w.directions.size(); ++i) {
        if (w.directions[i] == Dir::Down)
            p.covers.emplace_back((std::uint32_t)i, (std::uint32_t)(i + 1));
        else
            p.covers.emplace_back((std::uint32_t)(i + 1), (std::uint32_t)i);
    }
    return p;
}

FencePosetExplicit explicit_poset(const CircularPoset& c) {
    FencePosetExplicit p = explicit_poset(c.word);
    if (p.element_count >= 2)
        p.covers.emplace_back((std::uint32_t)0, (std::uint32_t)(p.element_count - 1));
    return p;
}

}  // namespace kmarkov
