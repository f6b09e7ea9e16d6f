#include "loopalg/param_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace loopalg {

ParamSet ParamSet::unite(const ParamSet& o) const {
  std::vector<Rational> v(entries_);
  v.insert(v.end(), o.entries_.begin(), o.entries_.end());
  return ParamSet(std::move(v));
}

ParamSet ParamSet::without(int pos) const {
  if (pos < 0 || pos >= size()) throw std::out_of_range("ParamSet::without: bad position");
  std::vector<Rational> v(entries_);
  v.erase(v.begin() + pos);
  return ParamSet(std::move(v));
}

bool ParamSet::all_distinct() const {
  std::vector<Rational> v(entries_);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool ParamSet::same_multiset(const ParamSet& o) const {
  if (size() != o.size()) return false;
  std::vector<Rational> a(entries_), b(o.entries_);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string ParamSet::str() const {
  std::vector<Rational> v(entries_);
  std::sort(v.begin(), v.end());
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "}";
  return os.str();
}

Rational elementary_symmetric(const ParamSet& a, int k) {
  if (k < 0) throw std::invalid_argument("elementary_symmetric: k < 0");
  if (k > a.size()) return Rational(0);
  // e[j] after processing i entries = e_j of the first i entries
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = Rational(1);
  for (const Rational& x : a.entries())
    for (int j = k; j >= 1; --j) e[j] += x * e[j - 1];
  return e[k];
}

ParamSet extended_set(const ParamSet& a, int n) {
  std::vector<Rational> v(a.entries());
  v.insert(v.end(), n, Rational(0));
  return ParamSet(std::move(v));
}

Polynomial linear_factor_product(const ParamSet& a) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (const Rational& x : a.entries()) p = p * Polynomial({Rational(1), -x});
  return p;
}

std::vector<Rational> newton_elementary(const std::vector<Rational>& powersums) {
  if (powersums.empty()) throw std::invalid_argument("newton_elementary: empty input");
  std::vector<Rational> e{Rational(1)};  // e_0
  int n = static_cast<int>(powersums.size());
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int j = 1; j <= m; ++j) {
      Rational term = powersums[j - 1] * e[m - j];
      acc += (j % 2 == 1) ? term : -term;
    }
    e.push_back(acc / Rational(m));
  }
  return std::vector<Rational>(e.begin() + 1, e.end());
}

}  // namespace loopalg
