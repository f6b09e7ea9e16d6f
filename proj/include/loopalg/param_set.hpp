#ifndef LOOPALG_PARAM_SET_HPP
#define LOOPALG_PARAM_SET_HPP

#include <string>
#include <vector>

#include "loopalg/polynomial.hpp"
#include "loopalg/rational.hpp"

namespace loopalg {

/// Multiset of rational parameters.  Entries keep their insertion order
/// so callers can address positions, but equality and all symmetric
/// functions are order-independent.
class ParamSet {
public:
  ParamSet() = default;
  ParamSet(std::initializer_list<Rational> xs) : entries_(xs) {}
  explicit ParamSet(std::vector<Rational> xs) : entries_(std::move(xs)) {}

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& at(int pos) const { return entries_.at(pos); }

  /// Multiplicity-additive union.
  ParamSet unite(const ParamSet& o) const;
  /// Removes the single entry at 0-based position `pos`.
  ParamSet without(int pos) const;
  bool all_distinct() const;
  /// Multiset equality.
  bool same_multiset(const ParamSet& o) const;

  /// Entries sorted ascending, e.g. "{0, 2, 3}".
  std::string str() const;

private:
  std::vector<Rational> entries_;
};

/// Elementary symmetric polynomial e_k of the multiset; e_0 = 1 and
/// e_k = 0 for k > |A|.
Rational elementary_symmetric(const ParamSet& a, int k);

/// A with n zeros adjoined.
ParamSet extended_set(const ParamSet& a, int n);

/// prod_{a in A} (1 - a u) expanded.
Polynomial linear_factor_product(const ParamSet& a);

/// Solves n e_n = sum_{j=1}^{n} (-1)^{j-1} p_j e_{n-j} for e_1..e_n
/// given power sums p_1..p_n.
std::vector<Rational> newton_elementary(const std::vector<Rational>& powersums);

}  // namespace loopalg

#endif
