#pragma once

#include "jetbrackets/endo.hpp"

namespace jetbrackets {

/// Graded bracket of multivectors extending the Leibniz action of vector
/// fields on coefficients, computed by structural recursion:
///   - two functions bracket to 0;
///   - function in a slot contracts the other side with the vertical
///     gradient: [[X, g]] = co_insert(dV g, X) and
///     [[f, Y]] = (-1)^{deg Y} co_insert(dV f, Y);
///   - two degree-1 fields obey the Leibniz rule, with only fiber
///     directions differentiating: [[aV, bW]] = a (dV b / V) W - b (dV a / W) V;
///   - higher degrees split off the leading factor of the canonical
///     monomial and recurse.
/// Bilinear; degree |X|+|Y|-1 on homogeneous inputs. The operator oracle
/// below is the ground truth the recursion signs are calibrated against.
Multivector vsn_bracket(const Multivector& X, const Multivector& Y);

struct OracleReport {
  bool match;
  std::string detail;
};

/// Cross-checks the recursion against the operator route: the insertion of
/// vsn_bracket(X, Y) must equal the derived-bracket operator
/// [[insert_X, dV], insert_Y] on the whole probe family. Inputs need a
/// defined graded parity (DegreeError otherwise). Mismatch is reported,
/// not thrown.
OracleReport vsn_oracle_check(const Multivector& X, const Multivector& Y,
                              const ProbePolicy& policy = {});

/// Pairwise expansion for decomposables with degree-1 factors:
///   sigma(p,q) * sum_{k,l} (-1)^{k+l} [[X_k, Y_l]] ^ X_{rest} ^ Y_{rest}
/// with the bracket factor leading and the untouched factors following in
/// their original order. Agrees with vsn_bracket on such inputs; the
/// global sign sigma depends only on (p, q). Factors must each be
/// homogeneous of degree 1 and p, q >= 1.
Multivector vsn_pairwise(const std::vector<Multivector>& xs,
                         const std::vector<Multivector>& ys);

/// The global pairwise-expansion sign sigma(p,q).
int vsn_pairwise_sign(int p, int q);

} // namespace jetbrackets
