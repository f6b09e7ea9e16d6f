#include "loopalg/linalg.hpp"

#include <algorithm>

#include "loopalg/errors.hpp"

namespace loopalg {

bool is_zero_vec(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

Eigen::Index first_nonzero(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return -1;
}

Vec RowBasis::reduce(const Vec& v) const {
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational c = r[pivots_[i]];  // copy: r mutates below
    if (!c.is_zero()) r -= rows_[i] * c;
  }
  return r;
}

bool RowBasis::insert(const Vec& v) {
  Vec r = reduce(v);
  Eigen::Index p = first_nonzero(r);
  if (p < 0) return false;
  Rational piv = r[p];
  r /= piv;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational c = rows_[i][p];
    if (!c.is_zero()) rows_[i] -= r * c;
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool RowBasis::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

int rank_of(const Mat& m) {
  RowBasis b;
  for (Eigen::Index i = 0; i < m.rows(); ++i) b.insert(m.row(i).transpose());
  return b.rank();
}

Rational proportionality(const Vec& w, const Vec& psi) {
  Eigen::Index p = first_nonzero(psi);
  if (p < 0) throw std::invalid_argument("proportionality: psi is zero");
  Rational c = w[p] / psi[p];
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] != c * psi[i])
      throw NotProportional("vector is not proportional to the reference vector");
  return c;
}

}  // namespace loopalg
