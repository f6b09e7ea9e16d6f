#ifndef LOOPALG_LINALG_HPP
#define LOOPALG_LINALG_HPP

#include <vector>

#include "loopalg/rational.hpp"

namespace loopalg {

/// Incremental exact row basis in reduced echelon form.  Pivots are
/// leftmost nonzero columns, normalized to 1 and eliminated from every
/// other row, so the stored basis of a subspace is canonical whatever
/// the insertion order.
class RowBasis {
public:
  /// Fully reduces v against the basis and returns the residual.
  Vec reduce(const Vec& v) const;
  /// Reduces v and inserts the residual if nonzero; returns true on growth.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  /// Rows ordered by pivot column.
  const std::vector<Vec>& rows() const { return rows_; }

private:
  std::vector<Vec> rows_;
  std::vector<Eigen::Index> pivots_;  // parallel to rows_, strictly increasing
};

bool is_zero_vec(const Vec& v);
Eigen::Index first_nonzero(const Vec& v);  // -1 when zero

int rank_of(const Mat& m);

/// For w known to be proportional to psi (psi nonzero): the exact
/// factor c with w = c psi.  Throws NotProportional otherwise.
Rational proportionality(const Vec& w, const Vec& psi);

}  // namespace loopalg

#endif
