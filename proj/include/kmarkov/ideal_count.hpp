#pragma once

#include <cstdint>
#include <vector>

#include "kmarkov/lattice_poset.hpp"

namespace kmarkov {

struct oracle_capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brute-force subset enumeration limit, in elements. Defaults to 25;
/// overridable through the KMARKOV_ORACLE_CAP environment variable
/// (clamped to 30, the mask width the oracle uses).
unsigned oracle_cap();

/// Numerator of the continued fraction [a_1,...,a_n]: h_{-1} = 1, h_0 = a_1,
/// h_i = a_i h_{i-1} + h_{i-2}. Terms must be positive.
BigInt cf_numerator(const std::vector<std::uint64_t>& terms);

/// Ideal count of a fence poset of the given shape: N[c_1,...,c_n + 1].
/// The empty shape counts 1 (only the empty ideal).
BigInt count_ideals(const Shape& shape);

/// Linear pass over the word keeping (excluded, included) counts for the
/// current element; Down forces the right element into any ideal containing
/// the left one, Up the other way around.
BigInt count_ideals_dp(const RelationWord& w);

/// Ground-truth oracle: enumerate all subsets and keep the downward-closed
/// ones. Capped by oracle_cap().
BigInt brute_force_count(const FencePosetExplicit& poset);

/// Ideal count of the circular poset, conditioning the fence DP on the
/// membership of the first and last elements and discarding the state the
/// closing cover forbids.
BigInt count_ideals_circular(const CircularPoset& c);

}  // namespace kmarkov
