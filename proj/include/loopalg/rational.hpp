#ifndef LOOPALG_RATIONAL_HPP
#define LOOPALG_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>

namespace loopalg {

/// Exact arbitrary-precision rational, always in canonical form
/// (positive denominator, gcd(|num|, den) = 1).  The only scalar type
/// in the library.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses the canonical string form "p/q" or "p".
  static Rational parse(const std::string& s);

  std::string str() const;

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace loopalg

namespace Eigen {
template <>
struct NumTraits<loopalg::Rational> : GenericNumTraits<loopalg::Rational> {
  typedef loopalg::Rational Real;
  typedef loopalg::Rational NonInteger;
  typedef loopalg::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
};
}  // namespace Eigen

#endif
