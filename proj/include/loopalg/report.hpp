#ifndef LOOPALG_REPORT_HPP
#define LOOPALG_REPORT_HPP

#include <string>

#include "loopalg/drinfeld.hpp"

namespace loopalg {

/// Everything the analyze pipeline produces for one module.
struct AnalysisReport {
  std::string module_summary;
  Eigen::Index dimension = 0;
  std::vector<Rational> d;            // d_0 .. d_K
  int r = 0;
  std::vector<int> sector_dims;
  int span_dim = 0;
  DrinfeldData drinfeld;
  bool drinfeld_ok = false;           // false: P does not split
  std::string drinfeld_error;
  IrreducibilityVerdict verdict;

  std::string human() const;
  /// Versioned machine-readable JSON mirror of the same fields.
  std::string machine() const;
};

/// load -> highest weight -> cyclic span -> Drinfeld data ->
/// irreducibility.
AnalysisReport analyze(const Module& m);

}  // namespace loopalg

#endif
