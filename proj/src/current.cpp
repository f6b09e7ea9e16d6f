#include "loopalg/current.hpp"

#include <sstream>
#include <stdexcept>

#include "loopalg/errors.hpp"

namespace loopalg {

std::string kind_token(Kind k) {
  switch (k) {
    case Kind::Raise: return "xp";
    case Kind::Lower: return "xm";
    case Kind::Cartan: return "h";
  }
  return "?";
}

bool degree_legal(Mode mode, Kind kind, int degree) {
  if (mode == Mode::FullLoop) return true;
  return kind == Kind::Lower ? degree >= 1 : degree >= 0;
}

void require_degree_legal(Mode mode, Kind kind, int degree) {
  if (!degree_legal(mode, kind, degree))
    throw BorelViolation(kind_token(kind) + " with degree " + std::to_string(degree) +
                         " is outside the Borel subalgebra");
}

Current::Current(Kind kind, std::map<int, Rational> terms) : kind_(kind), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

Rational Current::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Current::min_degree() const {
  if (terms_.empty()) throw std::logic_error("Current::min_degree on zero current");
  return terms_.begin()->first;
}

Current Current::operator+(const Current& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (kind_ != o.kind_) throw std::logic_error("Current: adding currents of different kinds");
  std::map<int, Rational> t(terms_);
  for (const auto& [d, c] : o.terms_) t[d] += c;
  return Current(kind_, std::move(t));
}

Current Current::operator-(const Current& o) const { return *this + o * Rational(-1); }

Current Current::operator*(const Rational& c) const {
  std::map<int, Rational> t;
  if (!c.is_zero())
    for (const auto& [d, x] : terms_) t[d] = x * c;
  return Current(kind_, std::move(t));
}

bool Current::operator==(const Current& o) const {
  if (is_zero() && o.is_zero()) return true;
  return kind_ == o.kind_ && terms_ == o.terms_;
}

void Current::require_legal(Mode mode) const {
  for (const auto& [d, c] : terms_) require_degree_legal(mode, kind_, d);
}

std::string Current::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [d, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (a != Rational(1)) os << a.str() << " ";
    switch (kind_) {
      case Kind::Raise: os << "x" << d << "+"; break;
      case Kind::Lower: os << "x" << d << "-"; break;
      case Kind::Cartan: os << "h" << d; break;
    }
  }
  return os.str();
}

Current bracket(const Current& x, const Current& y) {
  Kind kx = x.kind(), ky = y.kind();
  // closed table: [h,h] = 0, [x^pm, x^pm] = 0
  if (kx == ky) return Current::zero(kx == Kind::Cartan ? Kind::Cartan : kx);
  Kind result;
  int sign = 1;  // overall sign of the table entry as written left-to-right
  Rational scale(1);
  if (kx == Kind::Cartan) {  // [h_j, x_k^pm] = pm 2 x_{j+k}^pm
    result = ky;
    scale = Rational(ky == Kind::Raise ? 2 : -2);
  } else if (ky == Kind::Cartan) {  // [x^pm, h] = -[h, x^pm]
    result = kx;
    scale = Rational(kx == Kind::Raise ? -2 : 2);
  } else {  // [x_j^+, x_k^-] = h_{j+k}
    result = Kind::Cartan;
    sign = (kx == Kind::Raise) ? 1 : -1;
  }
  std::map<int, Rational> t;
  for (const auto& [dx, cx] : x.terms())
    for (const auto& [dy, cy] : y.terms()) t[dx + dy] += cx * cy * scale * Rational(sign);
  return Current(result, std::move(t));
}

OperatorWord OperatorWord::then_apply(Current c, int exponent) const {
  std::vector<WordFactor> f;
  f.push_back({std::move(c), exponent});
  f.insert(f.end(), factors_.begin(), factors_.end());
  return OperatorWord(std::move(f));
}

}  // namespace loopalg
