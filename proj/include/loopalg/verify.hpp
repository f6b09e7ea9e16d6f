#ifndef LOOPALG_VERIFY_HPP
#define LOOPALG_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "loopalg/drinfeld.hpp"

namespace loopalg {

/// Outcome of one identity instance evaluated on a concrete module.
/// Identities stated mod U(B)B_+ are applied to psi, where the dropped
/// terms vanish because B_+ psi = 0.
struct CheckResult {
  std::string check_id;
  std::string instance;
  bool applicable = true;  // false: hypotheses not met, nothing asserted
  bool residual_zero = false;
  std::optional<Rational> constant;  // proportionality constant when relevant
  std::string note;

  bool passed() const { return !applicable || residual_zero; }
};

/// Lemma eq:null-rel with the stated indices; negative divided powers
/// are read as zero operators.
CheckResult check_null_rel(const Module& mod, const HighestWeight& hw, int ell, int n, int m,
                           int t, const std::vector<int>& k_list);

/// Collapse onto the top sector: (x_1^-)^{m-p} x_{k_1}^- ... x_{k_p}^- psi
/// is A (x_1^-)^m psi for m >= r; returns A (zero when m > r).
CheckResult check_collapse(const Module& mod, const HighestWeight& hw, int r, int m, int p,
                           const std::vector<int>& k_list);

struct AbcResult {
  CheckResult a, b, c;
};

/// The three recursive formulas A_n, B_n, C_n applied to psi.
AbcResult check_ABC(const Module& mod, const HighestWeight& hw, int n);

/// (rho_j^-(a^(1)))^2 psi = 0 for distinct evaluation parameters.
CheckResult check_square_zero(const Module& mod, const HighestWeight& hw, const DrinfeldData& dd,
                              int j);

/// If x^-(A) psi = 0 then x^-(A u B) psi = 0; inconclusive when the
/// hypothesis fails.
CheckResult check_vanish_lemma(const Module& mod, const HighestWeight& hw, const ParamSet& a,
                               const ParamSet& b);

enum class Suite { Relations, Lemmas, Drinfeld, All };
Suite parse_suite(const std::string& name);

struct SuiteReport {
  std::vector<std::string> lines;  // check-id \t instance \t status \t summary
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  bool ok() const { return failed == 0; }
  /// Tab-separated lines followed by a summary block.
  std::string str() const;
};

/// Deterministic instance grid over the selected checks.
SuiteReport run_suite(const Module& mod, Suite suite, int max_degree = 4);

}  // namespace loopalg

#endif
