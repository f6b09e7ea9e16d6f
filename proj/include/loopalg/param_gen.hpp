#ifndef LOOPALG_PARAM_GEN_HPP
#define LOOPALG_PARAM_GEN_HPP

#include "loopalg/current.hpp"
#include "loopalg/param_set.hpp"

namespace loopalg {

/// Generator with parameters: sum_{k=0}^{m} (-1)^k e_k(A) gen_{m-k}
/// with m = |A|.  In Borel mode a Lower expansion whose x_0^-
/// coefficient would be nonzero throws BorelViolation; adjoining 0 to A
/// kills that coefficient.
Current expand_param_gen(Mode mode, Kind kind, const ParamSet& a);

/// rho_j: the generator with parameters A minus its j-th entry
/// (1-based position in the caller's ordering), with one 0 adjoined
/// first when extended is true.
Current rho(Mode mode, Kind kind, const ParamSet& a, int j, bool extended);

/// Checks [x^+(A), x^-(B)] = h(A u B) and [h(A), x^pm(B)] =
/// pm 2 x^pm(A u B) coefficient-wise through the free bracket.
bool check_param_bracket(Mode mode, const ParamSet& a, const ParamSet& b);

/// Checks sum_{j=1}^{n} rho_j^pm(alpha^(1)) / prod_{k<=n, k!=j}
/// (alpha_j - alpha_k) = x^pm({alpha_{n+1}, ..., alpha_m} u {0}) for
/// distinct alpha in the caller's ordering.  Throws
/// DegenerateParameters when a denominator vanishes.
bool check_sum_identity(const ParamSet& alpha, int n, Kind kind);

}  // namespace loopalg

#endif
