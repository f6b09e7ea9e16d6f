#include "loopalg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace loopalg {

Rational::Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.raw(); }

}  // namespace loopalg
