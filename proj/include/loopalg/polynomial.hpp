#ifndef LOOPALG_POLYNOMIAL_HPP
#define LOOPALG_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "loopalg/rational.hpp"

namespace loopalg {

/// Dense univariate polynomial over Rational.  Coefficient i is the
/// coefficient of u^i; the leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational eval(const Rational& u) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  /// e.g. "1 - 5 u + 6 u^2"; the zero polynomial prints "0".
  std::string str() const;

private:
  std::vector<Rational> coeffs_;
  void trim();
};

/// Monic gcd via the Euclidean algorithm.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// All rational roots with multiplicities, for P with P(0) = 1.
/// Multiplicities sum to degree(P) or NonSplitting is thrown with the
/// unfactorable residual.  Roots are returned sorted ascending.
std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p);

}  // namespace loopalg

#endif
