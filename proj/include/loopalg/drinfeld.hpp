#ifndef LOOPALG_DRINFELD_HPP
#define LOOPALG_DRINFELD_HPP

#include <string>
#include <vector>

#include "loopalg/polynomial.hpp"
#include "loopalg/structure.hpp"

namespace loopalg {

/// Eigenvalue of (x_0^+)^{(k)} (x_1^-)^{(k)} on psi.  Throws
/// NotEigenvector when the image is not proportional to psi.
Rational lambda_direct(const Module& m, const Vec& psi, int k);

struct DrinfeldData {
  std::vector<Rational> lambdas;  // lambda_0 .. lambda_r
  Polynomial polynomial;          // P(u) = sum lambda_k (-u)^k
  struct Param {
    Rational a;
    int multiplicity;
  };
  std::vector<Param> params;        // evaluation parameters, ascending
  std::vector<Rational> hat_params; // a_j repeated multiplicity times
  int r = 0;
  int s() const { return static_cast<int>(params.size()); }
  ParamSet param_set() const;      // the s distinct parameters
  ParamSet hat_param_set() const;  // with multiplicities
  std::string factored_str() const;  // e.g. "(1 - 2u)(1 - 3u)"
};

/// Full Drinfeld data: direct lambdas cross-checked against the Newton
/// recursion on d_1..d_r (mismatch throws NewtonMismatch), polynomial
/// assembly and rational factorization (NonSplitting propagates).
DrinfeldData drinfeld_data(const Module& m, const HighestWeight& hw, int r);

/// x_{r+1+p}^- psi - sum_{j=1}^{r} (-1)^{r-j} lambda_{r+1-j} x_{j+p}^- psi;
/// zero by the reduction relation (the shift by p moves only the
/// generator indices, not the eigenvalue indices).
Vec reduction_residual(const Module& m, const HighestWeight& hw, const DrinfeldData& dd, int p);

/// The C(s, n) vectors rho_{j_1}^- ... rho_{j_n}^- psi for
/// j_1 < ... < j_n, which form a basis of sector n when the evaluation
/// parameters are distinct.  Asserts exact independence and agreement
/// with the cyclic-span sector.
std::vector<Vec> rho_basis(const Module& m, const HighestWeight& hw, const DrinfeldData& dd,
                           const SectorDecomposition& dec, int n);

/// Brute-force irreducibility of V_B = U(B) psi: full pairing rank
/// between raising monomials and each sector basis.
bool pairing_rank_oracle(const Module& m, const SectorDecomposition& dec, const Vec& psi);

/// Whole-module reducibility check: irreducible iff the cyclic span
/// fills the space and the pairing ranks are full.
bool module_irreducible(const Module& m);

struct IrreducibilityVerdict {
  bool applicable = false;
  std::string inapplicable_reason;
  Vec criterion_residual;
  bool criterion_holds = false;
  bool oracle_irreducible = false;
  long predicted_degeneracy = 1;  // prod (m_j + 1)
};

/// Theorem criterion x_{s+1}^-(a u {0}) psi = 0 against the pairing
/// oracle.  Inapplicable when P does not split over the rationals or
/// there are no nonzero evaluation parameters.  Disagreement between
/// criterion and oracle throws TheoremViolation.
IrreducibilityVerdict irreducibility(const Module& m, const HighestWeight& hw,
                                     const SectorDecomposition& dec);

}  // namespace loopalg

#endif
