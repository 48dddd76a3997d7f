#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jetbrackets {

/// Command-line driver, callable in-process so tests can exercise the
/// full surface without spawning a subprocess. `args` holds the
/// arguments after the program name.
///
/// Subcommands:
///   derive --config FILE [--format F] [--out FILE]
///       Load a problem configuration, derive the field equations, and
///       render them in the chosen format (text, latex, or json). The
///       format defaults to the config's "format" entry; --out writes
///       the rendered system to a file instead of the output stream.
///   bracket --lhs S --rhs S --config FILE [--format F]
///       Parse both operands as vertical-form expressions over the
///       configured context and print their Poisson bracket.
///   check --suite NAME [--seed N] [--cases K]
///       Run an identity suite and print its report. NAME is one of
///       differentials, brackets, schouten, poisson, closure, or all
///       (all runs every suite in that order). Defaults: seed 0,
///       cases 50. The closure suite fails by design (the surveyed
///       constant-sign hypothesis has no solution), so "all" and
///       "closure" exit nonzero even though every lawful identity
///       holds; see docs/conventions.md.
///   preset NAME [--emit-config] [--format F]
///       Run a built-in example (oscillator or maxwell) and print its
///       field equations; --emit-config instead prints the equivalent
///       configuration document for the derive subcommand.
///
/// Exit codes:
///   0  success
///   1  an identity suite reported failures
///   2  input error (bad flags, malformed source text or config,
///      out-of-range indices, degree or context mismatches, rejected
///      Poisson data, non-horizontal emission)
///   3  a jet order exceeded the context cap
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jetbrackets
