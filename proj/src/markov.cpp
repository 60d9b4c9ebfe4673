#include "kmarkov/markov.hpp"

#include <cmath>

#include "kmarkov/ideal_count.hpp"

namespace kmarkov {

BigInt distance(const LatticePoint& a, const LatticePoint& b, unsigned k) {
    if (a == b) return 0;
    return count_ideals_dp(relation_word(b - a, k));
}

BigInt markov_number(const BigInt& p, const BigInt& q, unsigned k) {
    if (p == 0 && q == 0) throw invalid_input("markov number of the zero point");
    return distance(LatticePoint(0, 0), LatticePoint(p, q), k);
}

bool satisfies_markov_equation(const MarkovTriple& t, unsigned k) {
    BigInt lhs = t.x * t.x + t.y * t.y + t.z * t.z +
                 BigInt(k) * (t.x * t.y + t.x * t.z + t.y * t.z);
    BigInt rhs = BigInt(3 + 3 * (unsigned long)k) * t.x * t.y * t.z;
    return lhs == rhs;
}

namespace {

FareyFraction mediant(const FareyFraction& a, const FareyFraction& b) {
    return {a.num + b.num, a.den + b.den};
}

bool in_unit_interval(const FareyFraction& f) {
    if (f.den == 0) return false;
    return f.num >= 0 && f.num <= f.den;
}

// sign of q/p - f, with f possibly the 1/0 boundary
int compare_to(const BigInt& q, const BigInt& p, const FareyFraction& f) {
    if (f.den == 0) return -1;
    return sgn(q * f.den - f.num * p);
}

BigInt vieta_middle(const BigInt& a, const BigInt& b, const BigInt& opposite, unsigned k) {
    BigInt num = a * a + BigInt(k) * a * b + b * b;
    BigInt quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), opposite.get_mpz_t());
    if (rem != 0) throw internal_error("non-exact Vieta division");
    return quot;
}

MarkovTriple root_triple() {
    MarkovTriple t;
    t.x = t.y = t.z = 1;
    t.label = {{-1, 1}, {0, 1}, {1, 0}};
    return t;
}

}  // namespace

std::vector<MarkovTriple> vieta_tree(unsigned k, unsigned depth) {
    std::vector<MarkovTriple> out;
    std::vector<MarkovTriple> level{root_triple()};
    out.push_back(level.front());
    for (unsigned d = 0; d < depth; ++d) {
        std::vector<MarkovTriple> next;
        for (const MarkovTriple& t : level) {
            FareyFraction left_mid = mediant(t.label.left, t.label.mid);
            if (in_unit_interval(left_mid)) {
                MarkovTriple c;
                c.x = t.x;
                c.y = vieta_middle(t.x, t.y, t.z, k);
                c.z = t.y;
                c.label = {t.label.left, left_mid, t.label.mid};
                next.push_back(std::move(c));
            }
            FareyFraction right_mid = mediant(t.label.mid, t.label.right);
            if (in_unit_interval(right_mid)) {
                MarkovTriple c;
                c.x = t.y;
                c.y = vieta_middle(t.y, t.z, t.x, k);
                c.z = t.z;
                c.label = {t.label.mid, right_mid, t.label.right};
                next.push_back(std::move(c));
            }
        }
        for (const MarkovTriple& t : next) {
            if (!satisfies_markov_equation(t, k)) throw internal_error("tree triple violates the equation");
            out.push_back(t);
        }
        level = std::move(next);
    }
    return out;
}

BigInt markov_via_tree(const BigInt& q, const BigInt& p, unsigned k) {
    if (q < 0 || p < 0 || (p == 0 && q == 0)) throw invalid_input("tree labels live in [0,1]");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw invalid_input("tree labels must be coprime");
    if (p == 0) return 1;  // the 1/0 boundary of the root triple
    if (q > p) throw invalid_input("tree labels live in [0,1]");

    MarkovTriple t = root_triple();
    for (;;) {
        int c = compare_to(q, p, t.label.mid);
        if (c == 0) return t.y;
        if (c < 0) {
            BigInt mid = vieta_middle(t.x, t.y, t.z, k);
            t.z = t.y;
            t.y = std::move(mid);
            t.label.right = t.label.mid;
            t.label.mid = mediant(t.label.left, t.label.mid);
        } else {
            BigInt mid = vieta_middle(t.y, t.z, t.x, k);
            t.x = t.y;
            t.y = std::move(mid);
            t.label.left = t.label.mid;
            t.label.mid = mediant(t.label.mid, t.label.right);
        }
    }
}

BigInt named_sequence(SequenceKind kind, unsigned k, unsigned n) {
    const BigInt kk(k);
    BigInt a, b, factor, constant;
    switch (kind) {
        case SequenceKind::Fib:
            a = 1;
            b = kk + 2;
            factor = 2 * kk + 3;
            constant = kk;
            break;
        case SequenceKind::Pell:
            a = 1;
            b = 2 * kk * kk + 6 * kk + 5;
            factor = 3 * kk * kk + 8 * kk + 6;
            constant = kk * (kk + 2);
            break;
        case SequenceKind::Edge0:
            a = 0;
            b = 1;
            factor = 2 * kk + 3;
            constant = 0;
            break;
        case SequenceKind::Edge1:
            a = 0;
            b = kk + 2;
            factor = 3 * kk * kk + 8 * kk + 6;
            constant = 0;
            break;
    }
    if (n == 0) return a;
    for (unsigned i = 1; i < n; ++i) {
        BigInt next = factor * b - a - constant;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

BigInt multiple_recurrence(const BigInt& p, const BigInt& q, unsigned k, unsigned n) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw invalid_input("multiple recurrence needs a coprime base point");
    BigInt m = markov_number(p, q, k);
    BigInt eta = BigInt(3 + 3 * (unsigned long)k) * m - k;
    BigInt a = 0, b = m;
    if (n == 0) return a;
    for (unsigned i = 1; i < n; ++i) {
        BigInt next = eta * b - a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

double multiple_closed_form(const BigInt& p, const BigInt& q, unsigned k, unsigned n) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw invalid_input("multiple recurrence needs a coprime base point");
    if (n == 0) return 0.0;
    double m = markov_number(p, q, k).get_d();
    double eta = (3.0 + 3.0 * k) * m - k;
    double root = std::sqrt(eta * eta - 4.0);
    double plus = (eta + root) / 2.0;
    double minus = (eta - root) / 2.0;
    return m / root * (std::pow(plus, n) - std::pow(minus, n));
}

}  // namespace kmarkov
