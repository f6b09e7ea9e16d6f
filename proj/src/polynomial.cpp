#include "loopalg/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "loopalg/errors.hpp"

namespace loopalg {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) {
  if (c.is_zero()) return Polynomial();
  return Polynomial({c});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::eval(const Rational& u) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o * Rational(-1);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  std::vector<Rational> r(coeffs_);
  for (auto& x : r) x *= c;
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero polynomial");
  std::vector<Rational> rem(coeffs_);
  int dd = d.degree();
  int qd = degree() - dd;
  if (qd < 0) return {Polynomial(), *this};
  std::vector<Rational> quot(qd + 1, Rational(0));
  for (int i = degree(); i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    Rational f = rem[i] / d.leading();
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.coeff(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational a = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (a == Rational(1));
    if (i == 0 || !unit) os << a.str();
    if (i >= 1) {
      if (!unit) os << " ";
      os << "u";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// positive divisors by trial division; inputs stay small at desk scale
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> lo, hi;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d * d != n) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

// clears denominators and divides by content, preserving roots
std::vector<mpz_class> integerize(const Polynomial& p) {
  mpz_class l(1);
  for (const auto& c : p.coeffs()) l = lcm(l, c.raw().get_den());
  std::vector<mpz_class> z;
  mpz_class g(0);
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.raw().get_num() * (l / c.raw().get_den());
    g = gcd(g, v);
    z.push_back(v);
  }
  if (g != 0)
    for (auto& v : z) v /= g;
  return z;
}

// distinct rational roots of a square-free polynomial; deflates as it goes,
// returns the undivided residual
std::pair<std::vector<Rational>, Polynomial> roots_squarefree(Polynomial f) {
  std::vector<Rational> roots;
  auto z = integerize(f);
  if (z.empty()) return {roots, f};
  std::vector<mpz_class> ps = divisors(z.front());
  std::vector<mpz_class> qs = divisors(z.back());
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      for (int s : {1, -1}) {
        if (f.degree() <= 0) return {roots, f};
        mpq_class cand(s * p, q);
        cand.canonicalize();
        Rational r(cand);
        if (f.eval(r).is_zero()) {
          roots.push_back(r);
          f = f.divmod(Polynomial({-r, Rational(1)})).first;
        }
      }
    }
  }
  return {roots, f};
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p) {
  if (p.eval(Rational(0)) != Rational(1))
    throw std::invalid_argument("rational_roots: polynomial must satisfy P(0) = 1");
  std::vector<std::pair<Rational, int>> out;
  if (p.degree() == 0) return out;

  // Yun square-free decomposition: w runs over products of factors of
  // multiplicity >= i, g over the repeated part.
  Polynomial g = poly_gcd(p, p.derivative());
  Polynomial w = p.divmod(g).first.monic();
  Polynomial residual = Polynomial::constant(Rational(1));
  int mult = 1;
  while (w.degree() > 0) {
    Polynomial y = poly_gcd(w, g);
    Polynomial factor = w.divmod(y).first.monic();  // multiplicity exactly `mult`
    if (factor.degree() > 0) {
      auto [roots, left] = roots_squarefree(factor);
      for (const auto& r : roots) out.emplace_back(r, mult);
      for (int i = 0; i < mult; ++i) residual = residual * left;
    }
    w = y;
    if (!g.is_zero()) g = g.divmod(y).first;
    ++mult;
  }
  if (residual.degree() > 0)
    throw NonSplitting("polynomial does not split over the rationals", residual.monic().str());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace loopalg
