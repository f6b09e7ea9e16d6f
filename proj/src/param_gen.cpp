#include "loopalg/param_gen.hpp"

#include <stdexcept>

#include "loopalg/errors.hpp"

namespace loopalg {

Current expand_param_gen(Mode mode, Kind kind, const ParamSet& a) {
  int m = a.size();
  std::map<int, Rational> terms;
  for (int k = 0; k <= m; ++k) {
    Rational c = elementary_symmetric(a, k);
    if (k % 2 == 1) c = -c;
    if (c.is_zero()) continue;
    int degree = m - k;
    if (!degree_legal(mode, kind, degree))
      throw BorelViolation("expansion of " + kind_token(kind) + "_" + std::to_string(m) + "(" +
                           a.str() + ") needs " + kind_token(kind) + "_" +
                           std::to_string(degree));
    terms[degree] = c;
  }
  return Current(kind, std::move(terms));
}

Current rho(Mode mode, Kind kind, const ParamSet& a, int j, bool extended) {
  if (j < 1 || j > a.size()) throw std::out_of_range("rho: index j out of range");
  ParamSet rest = a.without(j - 1);
  if (extended) rest = extended_set(rest, 1);
  return expand_param_gen(mode, kind, rest);
}

bool check_param_bracket(Mode mode, const ParamSet& a, const ParamSet& b) {
  ParamSet ab = a.unite(b);
  Current xp_a = expand_param_gen(mode, Kind::Raise, a);
  Current xm_b = expand_param_gen(mode, Kind::Lower, b);
  Current h_a = expand_param_gen(mode, Kind::Cartan, a);
  Current xp_b = expand_param_gen(mode, Kind::Raise, b);

  if (!(bracket(xp_a, xm_b) == expand_param_gen(mode, Kind::Cartan, ab))) return false;
  if (!(bracket(h_a, xp_b) == expand_param_gen(mode, Kind::Raise, ab) * Rational(2)))
    return false;
  if (!(bracket(h_a, xm_b) == expand_param_gen(mode, Kind::Lower, ab) * Rational(-2)))
    return false;
  return true;
}

bool check_sum_identity(const ParamSet& alpha, int n, Kind kind) {
  int m = alpha.size();
  if (n < 1 || n > m) throw std::invalid_argument("check_sum_identity: n out of range");
  if (!alpha.all_distinct())
    throw DegenerateParameters("check_sum_identity needs pairwise distinct parameters " +
                               alpha.str());
  // denominators range over the summed indices only: prod_{k<=n, k!=j}
  // (alpha_j - alpha_k), the Lagrange-interpolation weights
  Current lhs = Current::zero(kind);
  for (int j = 1; j <= n; ++j) {
    Rational denom(1);
    for (int k = 1; k <= n; ++k) {
      if (k == j) continue;
      denom *= alpha.at(j - 1) - alpha.at(k - 1);
    }
    lhs = lhs + rho(Mode::Borel, kind, alpha, j, /*extended=*/true) * (Rational(1) / denom);
  }
  std::vector<Rational> tail(alpha.entries().begin() + n, alpha.entries().end());
  Current rhs = expand_param_gen(Mode::Borel, kind, extended_set(ParamSet(std::move(tail)), 1));
  return lhs == rhs;
}

}  // namespace loopalg
