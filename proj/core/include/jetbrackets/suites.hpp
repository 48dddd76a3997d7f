#pragma once

#include <cstdint>
#include <string>

namespace jetbrackets {

/// Outcome of one identity suite. `text` is a deterministic human-readable
/// report: same seed and case count give byte-identical text (no timings,
/// no addresses). `failures` counts violated checks; a suite passes when it
/// is zero.
struct SuiteReport {
  std::string name;
  int cases_run = 0;
  int failures = 0;
  std::string text;

  bool passed() const { return failures == 0; }
};

/// Differential calculus laws on random forms over a rotating pool of
/// small contexts: both differentials square to zero, they anticommute,
/// and each is an anti-derivation over the wedge.
SuiteReport run_differentials_suite(std::uint64_t seed, int cases);

/// Graded-commutator calculus on random homogeneous operators: the Jacobi
/// law, the composition Leibniz law (degree 0), and the same two laws for
/// the bracket derived from the vertical differential (degree 1).
SuiteReport run_brackets_suite(std::uint64_t seed, int cases);

/// Vertical multivector bracket: operator oracle, graded symmetry, the
/// gradient cases, the pairwise expansion on decomposables, and the degree
/// law.
SuiteReport run_schouten_suite(std::uint64_t seed, int cases);

/// Poisson layer: attestation of random constant-coefficient structures,
/// rejection of a non-Poisson candidate, and the pinned first-order
/// bracket values.
SuiteReport run_poisson_suite(std::uint64_t seed, int cases);

/// Wedge-compatibility survey for the evolution operator. Verifies the
/// second-slot Leibniz law and the two-sided product rule, then tests the
/// constant-sign hypothesis (a single sign epsilon(deg phi) making the
/// one-sided product rule close); no constant assignment exists, so this
/// suite reports its findings and fails by design. docs/conventions.md
/// carries the analysis.
SuiteReport run_closure_suite(std::uint64_t seed, int cases);

} // namespace jetbrackets
