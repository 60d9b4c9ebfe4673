#include "kmarkov/ideal_count.hpp"

#include <cstdlib>
#include <string>

namespace kmarkov {

unsigned oracle_cap() {
    // re-read on every call so the override can change within a process
    unsigned cap = 25;
    if (const char* env = std::getenv("KMARKOV_ORACLE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) cap = (unsigned)v;
    }
    return cap < 30u ? cap : 30u;
}

BigInt cf_numerator(const std::vector<std::uint64_t>& terms) {
    if (terms.empty()) throw invalid_input("continued fraction needs at least one term");
    // h_{-1} = 1, h_0 = a_1, h_i = a_i h_{i-1} + h_{i-2}
    if (terms[0] == 0) throw invalid_input("continued fraction terms must be positive");
    BigInt hm1 = 1;
    BigInt h((unsigned long)terms[0]);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i] == 0) throw invalid_input("continued fraction terms must be positive");
        BigInt next = BigInt((unsigned long)terms[i]) * h + hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

BigInt count_ideals(const Shape& shape) {
    if (shape.runs.empty()) return 1;
    std::vector<std::uint64_t> terms = shape.runs;
    terms.back() += 1;
    return cf_numerator(terms);
}

BigInt count_ideals_dp(const RelationWord& w) {
    if (w.element_count == 0) return 1;
    BigInt excluded = 1, included = 1;
    for (Dir d : w.directions) {
        if (d == Dir::Down) {
            // left covers right: excluding the right element forces the left
            // one out too
            included += excluded;
        } else {
            excluded += included;
        }
    }
    return excluded + included;
}

BigInt brute_force_count(const FencePosetExplicit& poset) {
    if (poset.element_count > oracle_cap())
        throw oracle_capacity_error("poset with " + std::to_string(poset.element_count) +
                                    " elements exceeds the oracle cap of " + std::to_string(oracle_cap()));
    const unsigned n = (unsigned)poset.element_count;
    const std::uint32_t limit = n >= 32 ? 0 : (std::uint32_t)(1u << n);
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0;; ++mask) {
        bool ok = true;
        for (const auto& [upper, lower] : poset.covers) {
            if ((mask >> upper & 1u) && !(mask >> lower & 1u)) {
                ok = false;
                break;
            }
        }
        count += ok;
        if (mask + 1 == limit || mask == 0xffffffffu) break;
    }
    return BigInt((unsigned long)count);
}

BigInt count_ideals_circular(const CircularPoset& c) {
    if (c.word.element_count == 0) return 1;
    if (c.word.element_count == 1) return 2;
    // closing cover: last element precedes first, so "first in, last out" is
    // the one forbidden combination
    auto dp = [&](bool first_in) {
        BigInt excluded = first_in ? 0 : 1;
        BigInt included = first_in ? 1 : 0;
        for (Dir d : c.word.directions) {
            if (d == Dir::Down)
                included += excluded;
            else
                excluded += included;
        }
        return std::pair<BigInt, BigInt>(excluded, included);
    };
    auto [e0, e1] = dp(false);
    auto [f0, f1] = dp(true);
    (void)f0;
    return e0 + e1 + f1;
}

}  // namespace kmarkov
