#pragma once

#include <vector>

#include "jetbrackets/config.hpp"
#include "jetbrackets/hamiltonian.hpp"

namespace jetbrackets {

/// n = m = 1 problem: chi = u^2/2, phi = u_(1), first-order Poisson
/// multivector with unit field coefficient, identity metric. Deriving it
/// gives the single equation u_11 + u = 0.
HamiltonianProblem oscillator_problem();

/// n = m = 4 source problem: field coefficient matrix and base metric both
/// diag(1,1,1,-1), identity fiber metric, first-order Poisson multivector,
/// opaque sources j1..j4,
///   chi = -(1/3) eta_{mu nu} u^mu j^nu = -(u^1 j1 + u^2 j2 + u^3 j3 - u^4 j4) / 3,
///   phi = (1/2) eps^mu_{nu rho sigma} u^nu_{(e_mu)} dx^rho ^ dx^sigma,
/// with eps_{1234} = +1 totally antisymmetric and the first index raised by
/// the base metric. Deriving it gives the four second-order equations
///   eta^{nu rho} u^mu_{nu rho} - eta^{mu nu} u^rho_{nu rho} - j^mu = 0.
HamiltonianProblem maxwell_problem();

/// Configuration documents that rebuild the presets through the full
/// parse-and-build path: build_problem(oscillator_config()) derives the
/// same equations as oscillator_problem(), and likewise for maxwell.
ProblemConfig oscillator_config();
ProblemConfig maxwell_config();

/// Signature of a permutation given as distinct 1-based indices covering
/// 1..k; returns 0 when an index repeats.
int permutation_sign(const std::vector<int>& perm);

} // namespace jetbrackets
