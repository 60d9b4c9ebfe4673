#pragma once

#include <cstdint>
#include <vector>

#include "kmarkov/lattice_poset.hpp"

namespace kmarkov {

// Fraction q/p used to label tree nodes; den 0 encodes the 1/0 boundary of
// the root triple.
struct FareyFraction {
    BigInt num;
    BigInt den;
    bool operator==(const FareyFraction& o) const { return num == o.num && den == o.den; }
};

struct FareyTriple {
    FareyFraction left, mid, right;
};

// x^2 + y^2 + z^2 + k(xy + xz + yz) = (3+3k)xyz, with the matching label
// triple. y is the newest entry.
struct MarkovTriple {
    BigInt x, y, z;
    FareyTriple label;
};

/// Distance between two lattice points: ideal count of the fence of B - A.
/// distance(A, A) = 0 by convention (not 1), so the multiple recurrence can
/// start at 0.
BigInt distance(const LatticePoint& a, const LatticePoint& b, unsigned k);

/// m^(k) of a lattice point; any nonzero (p,q) is accepted.
BigInt markov_number(const BigInt& p, const BigInt& q, unsigned k);

bool satisfies_markov_equation(const MarkovTriple& t, unsigned k);

/// Breadth-first levels 0..depth of the Vieta tree rooted at (1,1,1), pruned
/// to nodes whose mediant label stays in [0,1]. Level 3 ends with
/// (1,13,5),(5,29,2) for k = 0; level 4 completes the familiar nine triples.
std::vector<MarkovTriple> vieta_tree(unsigned k, unsigned depth);

/// Value at label q/p (0 <= q <= p, coprime) obtained by descending the tree
/// with exact Vieta jumps; never materializes more than the descent path.
BigInt markov_via_tree(const BigInt& q, const BigInt& p, unsigned k);

enum class SequenceKind : unsigned char {
    Fib,    // m_{1/n}
    Pell,   // m_{n/(n+1)}
    Edge0,  // m_{(n,0)}
    Edge1,  // m_{(n,n)}
};

BigInt named_sequence(SequenceKind kind, unsigned k, unsigned n);

/// n-th multiple along the ray through coprime (p,q):
/// m_0 = 0, m_1 = m^(k)_{q/p}, m_{j+2} = eta m_{j+1} - m_j with
/// eta = (3+3k) m^(k)_{q/p} - k.
BigInt multiple_recurrence(const BigInt& p, const BigInt& q, unsigned k, unsigned n);

/// Floating-point closed form of the same sequence; diagnostic only.
/// Overflowing to infinity for large n is acceptable.
double multiple_closed_form(const BigInt& p, const BigInt& q, unsigned k, unsigned n);

}  // namespace kmarkov
