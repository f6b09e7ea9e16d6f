#ifndef LOOPALG_MODULE_HPP
#define LOOPALG_MODULE_HPP

#include <Eigen/SparseCore>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "loopalg/current.hpp"
#include "loopalg/param_set.hpp"
#include "loopalg/rational.hpp"

namespace loopalg {

using SpMat = Eigen::SparseMatrix<Rational>;

/// The (d+1)-dimensional sl2 irrep evaluated at a point: x_k^pm acts as
/// a^k e (resp. f), h_k as a^k h, with 0^0 = 1.
struct EvaluationFactor {
  int spin2;       // d: twice the spin, dimension d + 1
  Rational point;  // a
};

/// One-dimensional Borel module: h_0 acts as c, everything else as 0.
struct ShiftFactor {
  Rational c;
};

/// A finite-dimensional module with exact generator matrices: either a
/// tensor product of evaluation factors (with an optional shift) or
/// explicitly supplied sparse matrices up to a degree cap.
class Module {
public:
  static Module tensor(Mode mode, std::vector<EvaluationFactor> factors,
                       std::optional<ShiftFactor> shift = std::nullopt);
  static Module explicit_module(Mode mode, Eigen::Index dim, int degree_cap,
                                std::map<std::pair<Kind, int>, SpMat> matrices, Vec psi);

  Mode mode() const { return mode_; }
  Eigen::Index dim() const { return dim_; }
  bool is_explicit() const { return is_explicit_; }
  /// Largest legal |degree| for an explicit module; tensor modules are
  /// unbounded.
  int degree_cap() const { return degree_cap_; }
  const std::vector<EvaluationFactor>& factors() const { return factors_; }
  const std::optional<ShiftFactor>& shift() const { return shift_; }

  /// Tensor product of sl2-highest vectors, or the supplied vector.
  const Vec& psi() const { return psi_; }

  /// Generator matrix, memoized per module.
  const SpMat& generator(Kind kind, int degree) const;

  Vec apply(const GenSymbol& g, const Vec& v) const;
  Vec apply(const Current& c, const Vec& v) const;
  /// Right-to-left application with divided powers X^n/n!; a negative
  /// exponent is the zero operator.
  Vec apply(const OperatorWord& w, const Vec& v) const;

  Mat act(const GenSymbol& g) const;
  Mat act(const Current& c) const;
  Mat act(const OperatorWord& w) const;

  /// e.g. "V_1(2) (x) V_1(3)" or "explicit dim=4 K=4".
  std::string describe() const;

private:
  Module() = default;
  SpMat build_generator(Kind kind, int degree) const;
  void check_degree(Kind kind, int degree) const;

  Mode mode_ = Mode::Borel;
  Eigen::Index dim_ = 0;
  bool is_explicit_ = false;
  int degree_cap_ = 0;
  std::vector<EvaluationFactor> factors_;
  std::optional<ShiftFactor> shift_;
  std::map<std::pair<Kind, int>, SpMat> explicit_mats_;
  Vec psi_;

  // shared so Module stays copyable; idempotent fill under a lock
  struct Cache {
    std::mutex mu;
    std::map<std::pair<Kind, int>, SpMat> memo;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// y += m v without forming dense products.
Vec sparse_apply(const SpMat& m, const Vec& v);

}  // namespace loopalg

#endif
