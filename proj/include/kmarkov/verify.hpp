#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kmarkov::verify {

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::vector<std::string> failures;  // one reproduction line each

    bool ok() const { return failures.empty(); }
};

// Each suite is deterministic given (seed, cases). Grid-driven checks ignore
// the seed but keep it in the result for uniform reporting.

/// CF numerator = word DP = subset enumeration on the |x|,|y| <= 6, k <= 2
/// grid (oracle where it fits under the cap), plus seeded reversal-invariance
/// and strict-growth word properties.
SuiteResult oracle_suite(std::uint64_t seed, std::uint64_t cases);

/// |J(P1)||J(P2)| = |J(P3)||J(P4)| + |J(P5)||J(P6)| for seeded random fences
/// and resolution indices, all six counts by subset enumeration.
SuiteResult skein_suite(std::uint64_t seed, std::uint64_t cases);

/// Circular count = (3+3k) m - k on the coprime grid q < p <= 6, k <= 2,
/// cross-checked by enumeration under the cap.
SuiteResult circular_suite(std::uint64_t seed, std::uint64_t cases);

/// Multiple recurrence vs geometric counts, the boundary sequences and their
/// intertwining, the squared relation, and the closed-form diagnostics.
SuiteResult recurrence_suite(std::uint64_t seed, std::uint64_t cases);

/// Ratio inequalities: h/v > 1, chain bounds, the product inequality, strict
/// ratio growth along seeded negative-slope lines, threshold-table facts and
/// the S+/S- sign laws.
SuiteResult monotone_suite(std::uint64_t seed, std::uint64_t cases);

/// Generalized Ptolemy inequality on seeded admissible quadruples; equality
/// on the collinear ones.
SuiteResult ptolemy_suite(std::uint64_t seed, std::uint64_t cases);

/// Tree route = geometric route on the coprime grid p <= 20, k <= 3; every
/// emitted triple satisfies the defining equation.
SuiteResult tree_suite(std::uint64_t seed, std::uint64_t cases);

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::uint64_t cases);

std::vector<std::string> suite_names();

}  // namespace kmarkov::verify
