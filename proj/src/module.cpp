#include "loopalg/module.hpp"

#include <sstream>

#include "loopalg/errors.hpp"

namespace loopalg {

namespace {

Rational int_pow(const Rational& a, int k) {
  if (k == 0) return Rational(1);  // includes 0^0 = 1
  if (k < 0) {
    if (a.is_zero())
      throw DegreeOutOfRange("negative degree at evaluation point 0");
    return Rational(1) / int_pow(a, -k);
  }
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= a;
  return r;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

// local sl2 action on the (d+1)-dim irrep, basis v_0 (highest) .. v_d:
//   h v_i = (d - 2i) v_i,  f v_i = v_{i+1},  e v_i = i (d + 1 - i) v_{i-1}
Rational local_entry(Kind kind, int d, int row, int col) {
  switch (kind) {
    case Kind::Cartan: return row == col ? Rational(d - 2 * row) : Rational(0);
    case Kind::Lower: return row == col + 1 ? Rational(1) : Rational(0);
    case Kind::Raise:
      return row == col - 1 ? Rational(static_cast<long>(col) * (d + 1 - col)) : Rational(0);
  }
  return Rational(0);
}

}  // namespace

Vec sparse_apply(const SpMat& m, const Vec& v) {
  Vec y = Vec::Constant(m.rows(), Rational(0));
  for (Eigen::Index j = 0; j < m.outerSize(); ++j) {
    if (v[j].is_zero()) continue;
    for (SpMat::InnerIterator it(m, j); it; ++it) y[it.row()] += it.value() * v[j];
  }
  return y;
}

Module Module::tensor(Mode mode, std::vector<EvaluationFactor> factors,
                      std::optional<ShiftFactor> shift) {
  if (mode == Mode::FullLoop && shift.has_value())
    throw Error("full-loop mode does not admit a shift factor");
  for (const auto& f : factors)
    if (f.spin2 < 0) throw Error("evaluation factor needs spin2 >= 0");
  Module m;
  m.mode_ = mode;
  m.is_explicit_ = false;
  m.degree_cap_ = -1;  // unbounded
  m.factors_ = std::move(factors);
  m.shift_ = std::move(shift);
  Eigen::Index dim = 1;
  for (const auto& f : m.factors_) dim *= f.spin2 + 1;
  m.dim_ = dim;
  m.psi_ = Vec::Constant(dim, Rational(0));
  m.psi_[0] = Rational(1);
  return m;
}

Module Module::explicit_module(Mode mode, Eigen::Index dim, int degree_cap,
                               std::map<std::pair<Kind, int>, SpMat> matrices, Vec psi) {
  if (dim <= 0) throw Error("explicit module needs positive dimension");
  if (degree_cap < 1) throw Error("explicit module needs degree cap K >= 1");
  if (psi.size() != dim) throw Error("explicit module psi has wrong length");
  for (const auto& [key, mat] : matrices) {
    require_degree_legal(mode, key.first, key.second);
    if (key.second > degree_cap)
      throw DegreeOutOfRange("explicit matrix for degree " + std::to_string(key.second) +
                             " beyond K=" + std::to_string(degree_cap));
    if (mat.rows() != dim || mat.cols() != dim)
      throw Error("explicit matrix has wrong dimensions");
  }
  Module m;
  m.mode_ = mode;
  m.dim_ = dim;
  m.is_explicit_ = true;
  m.degree_cap_ = degree_cap;
  m.explicit_mats_ = std::move(matrices);
  m.psi_ = std::move(psi);
  return m;
}

void Module::check_degree(Kind kind, int degree) const {
  require_degree_legal(mode_, kind, degree);
  if (is_explicit_ && (degree > degree_cap_ || degree < -degree_cap_))
    throw DegreeOutOfRange("degree " + std::to_string(degree) + " beyond explicit cap K=" +
                           std::to_string(degree_cap_));
}

SpMat Module::build_generator(Kind kind, int degree) const {
  if (is_explicit_) {
    auto it = explicit_mats_.find({kind, degree});
    if (it != explicit_mats_.end()) return it->second;
    SpMat z(dim_, dim_);
    return z;  // unspecified matrices are zero
  }
  std::vector<Eigen::Triplet<Rational>> trips;
  Eigen::Index stride = dim_;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    Eigen::Index span = f.spin2 + 1;
    stride /= span;
    Rational scale = int_pow(f.point, degree);
    if (scale.is_zero()) continue;
    // entries of 1 (x) ... (x) g_i (x) ... (x) 1
    Eigen::Index blocks = dim_ / (span * stride);
    for (Eigen::Index b = 0; b < blocks; ++b)
      for (int row = 0; row < span; ++row)
        for (int col = 0; col < span; ++col) {
          Rational e = local_entry(kind, f.spin2, row, col);
          if (e.is_zero()) continue;
          for (Eigen::Index s = 0; s < stride; ++s)
            trips.emplace_back(b * span * stride + row * stride + s,
                               b * span * stride + col * stride + s, e * scale);
        }
  }
  if (shift_ && kind == Kind::Cartan && degree == 0 && !shift_->c.is_zero())
    for (Eigen::Index i = 0; i < dim_; ++i) trips.emplace_back(i, i, shift_->c);
  SpMat m(dim_, dim_);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

const SpMat& Module::generator(Kind kind, int degree) const {
  check_degree(kind, degree);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto key = std::make_pair(kind, degree);
  auto it = cache_->memo.find(key);
  if (it == cache_->memo.end()) it = cache_->memo.emplace(key, build_generator(kind, degree)).first;
  return it->second;
}

Vec Module::apply(const GenSymbol& g, const Vec& v) const {
  return sparse_apply(generator(g.kind, g.degree), v);
}

Vec Module::apply(const Current& c, const Vec& v) const {
  Vec y = Vec::Constant(dim_, Rational(0));
  for (const auto& [d, coeff] : c.terms())
    y += sparse_apply(generator(c.kind(), d), v) * coeff;
  return y;
}

Vec Module::apply(const OperatorWord& w, const Vec& v) const {
  Vec y = v;
  for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it) {
    if (it->exponent < 0) return Vec::Constant(dim_, Rational(0));
    for (int i = 0; i < it->exponent; ++i) y = apply(it->current, y);
    if (it->exponent >= 2) y /= factorial(it->exponent);
  }
  return y;
}

Mat Module::act(const GenSymbol& g) const { return Mat(generator(g.kind, g.degree)); }

Mat Module::act(const Current& c) const {
  Mat m = Mat::Constant(dim_, dim_, Rational(0));
  for (const auto& [d, coeff] : c.terms()) m += Mat(generator(c.kind(), d)) * coeff;
  return m;
}

Mat Module::act(const OperatorWord& w) const {
  Mat m = Mat::Constant(dim_, dim_, Rational(0));
  Vec e = Vec::Constant(dim_, Rational(0));
  for (Eigen::Index j = 0; j < dim_; ++j) {
    e[j] = Rational(1);
    m.col(j) = apply(w, e);
    e[j] = Rational(0);
  }
  return m;
}

std::string Module::describe() const {
  std::ostringstream os;
  if (is_explicit_) {
    os << "explicit dim=" << dim_ << " K=" << degree_cap_;
  } else {
    bool first = true;
    for (const auto& f : factors_) {
      if (!first) os << " (x) ";
      os << "V_" << f.spin2 << "(" << f.point << ")";
      first = false;
    }
    if (shift_) {
      if (!first) os << " (x) ";
      os << "Shift(" << shift_->c << ")";
      first = false;
    }
    if (first) os << "V_0(0)";
  }
  os << (mode_ == Mode::Borel ? " [borel]" : " [loop]");
  return os.str();
}

}  // namespace loopalg
