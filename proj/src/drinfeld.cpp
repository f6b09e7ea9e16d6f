#include "loopalg/drinfeld.hpp"

#include <functional>
#include <sstream>

#include "loopalg/errors.hpp"
#include "loopalg/param_gen.hpp"

namespace loopalg {

Rational lambda_direct(const Module& m, const Vec& psi, int k) {
  if (k < 0) throw std::invalid_argument("lambda_direct: k < 0");
  if (k == 0) return Rational(1);
  OperatorWord w({{Current(GenSymbol{Kind::Raise, 0}), k}, {Current(GenSymbol{Kind::Lower, 1}), k}});
  Vec image = m.apply(w, psi);
  try {
    return proportionality(image, psi);
  } catch (const NotProportional&) {
    throw NotEigenvector("(x_0^+)^(" + std::to_string(k) + ")(x_1^-)^(" + std::to_string(k) +
                         ") psi is not proportional to psi");
  }
}

ParamSet DrinfeldData::param_set() const {
  std::vector<Rational> v;
  for (const auto& p : params) v.push_back(p.a);
  return ParamSet(std::move(v));
}

ParamSet DrinfeldData::hat_param_set() const { return ParamSet(hat_params); }

std::string DrinfeldData::factored_str() const {
  if (params.empty()) return "1";
  std::ostringstream os;
  for (const auto& p : params) {
    os << "(1";
    if (p.a.sign() >= 0)
      os << " - " << (p.a == Rational(1) ? "" : p.a.str() + " ") << "u)";
    else
      os << " + " << ((-p.a) == Rational(1) ? "" : (-p.a).str() + " ") << "u)";
    if (p.multiplicity > 1) os << "^" << p.multiplicity;
  }
  return os.str();
}

DrinfeldData drinfeld_data(const Module& m, const HighestWeight& hw, int r) {
  DrinfeldData dd;
  dd.r = r;
  for (int k = 0; k <= r; ++k) dd.lambdas.push_back(lambda_direct(m, hw.psi, k));

  if (r > 0) {
    std::vector<Rational> powersums(hw.d.begin() + 1, hw.d.begin() + 1 + r);
    std::vector<Rational> newton = newton_elementary(powersums);
    for (int k = 1; k <= r; ++k)
      if (newton[k - 1] != dd.lambdas[k])
        throw NewtonMismatch("lambda_" + std::to_string(k) + ": direct " + dd.lambdas[k].str() +
                             " vs Newton " + newton[k - 1].str());
  }

  std::vector<Rational> coeffs;
  for (int k = 0; k <= r; ++k)
    coeffs.push_back(k % 2 == 0 ? dd.lambdas[k] : -dd.lambdas[k]);
  dd.polynomial = Polynomial(std::move(coeffs));

  for (const auto& [root, mult] : rational_roots(dd.polynomial))
    dd.params.push_back({Rational(1) / root, mult});
  std::sort(dd.params.begin(), dd.params.end(),
            [](const auto& x, const auto& y) { return x.a < y.a; });
  for (const auto& p : dd.params)
    for (int i = 0; i < p.multiplicity; ++i) dd.hat_params.push_back(p.a);
  return dd;
}

Vec reduction_residual(const Module& m, const HighestWeight& hw, const DrinfeldData& dd, int p) {
  if (p < 0) throw std::invalid_argument("reduction_residual: p < 0");
  int r = dd.r;
  Vec res = m.apply(GenSymbol{Kind::Lower, r + 1 + p}, hw.psi);
  for (int j = 1; j <= r; ++j) {
    Rational c = dd.lambdas[r + 1 - j];
    if ((r - j) % 2 == 1) c = -c;
    res -= m.apply(GenSymbol{Kind::Lower, j + p}, hw.psi) * c;
  }
  return res;
}

std::vector<Vec> rho_basis(const Module& m, const HighestWeight& hw, const DrinfeldData& dd,
                           const SectorDecomposition& dec, int n) {
  int s = dd.s();
  for (const auto& p : dd.params)
    if (p.multiplicity > 1)
      throw DegenerateParameters("rho basis needs distinct evaluation parameters; " + p.a.str() +
                                 " has multiplicity " + std::to_string(p.multiplicity));
  if (n < 0 || n > dd.r) throw std::out_of_range("rho_basis: sector out of range");
  ParamSet a = dd.param_set();

  std::vector<Vec> out;
  RowBasis independent;
  std::vector<int> idx(n);
  // n-subsets j_1 < ... < j_n of {1..s} in lexicographic order
  auto emit = [&](const std::vector<int>& js) {
    Vec v = hw.psi;
    for (auto it = js.rbegin(); it != js.rend(); ++it)
      v = m.apply(rho(m.mode(), Kind::Lower, a, *it, /*extended=*/true), v);
    if (!independent.insert(v))
      throw BasisDefect("rho-product vectors are linearly dependent in sector " +
                        std::to_string(n));
    out.push_back(std::move(v));
  };
  std::vector<int> js;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(js.size()) == n) {
      emit(js);
      return;
    }
    for (int j = start; j <= s; ++j) {
      js.push_back(j);
      rec(j + 1);
      js.pop_back();
    }
  };
  rec(1);

  if (independent.rank() != dec.sector_dim(n))
    throw BasisDefect("rho basis rank " + std::to_string(independent.rank()) +
                      " != sector dimension " + std::to_string(dec.sector_dim(n)));
  for (const Vec& b : dec.sectors[n].rows())
    if (!independent.contains(b))
      throw BasisDefect("rho basis does not span sector " + std::to_string(n));
  return out;
}

namespace {

// coefficient of psi in w, where w lies in the span of psi
Rational psi_coefficient(const Vec& w, const Vec& psi) {
  if (is_zero_vec(w)) return Rational(0);
  return proportionality(w, psi);
}

bool pairing_ranks_full(const Module& m, const SectorDecomposition& dec, const Vec& psi,
                        int degree_bound) {
  for (int n = 1; n <= dec.r; ++n) {
    const auto& basis = dec.sectors[n].rows();
    int cols = static_cast<int>(basis.size());
    RowBasis rows;
    // raising monomials x_{k_1}^+ ... x_{k_n}^+ with 0 <= k_1 <= ... <= k_n
    std::vector<int> ks;
    bool full = false;
    std::function<void(int)> rec = [&](int start) {
      if (full) return;
      if (static_cast<int>(ks.size()) == n) {
        Vec row = Vec::Constant(cols, Rational(0));
        for (int b = 0; b < cols; ++b) {
          Vec v = basis[b];
          for (auto it = ks.rbegin(); it != ks.rend(); ++it)
            v = m.apply(GenSymbol{Kind::Raise, *it}, v);
          row[b] = psi_coefficient(v, psi);
        }
        rows.insert(row);
        if (rows.rank() == cols) full = true;
        return;
      }
      for (int k = start; k <= degree_bound && !full; ++k) {
        ks.push_back(k);
        rec(k);
        ks.pop_back();
      }
    };
    rec(0);
    if (!full) return false;
  }
  return true;
}

}  // namespace

bool pairing_rank_oracle(const Module& m, const SectorDecomposition& dec, const Vec& psi) {
  int bound = std::max(dec.r, 1);
  if (pairing_ranks_full(m, dec, psi, bound)) return true;
  // guard against a too-small word pool before concluding reducibility
  return pairing_ranks_full(m, dec, psi, 2 * bound);
}

bool module_irreducible(const Module& m) {
  HighestWeight hw = highest_weight_vector(m);
  SectorDecomposition dec = cyclic_span(m, hw.psi);
  if (dec.total_dim() < m.dim()) return false;
  return pairing_rank_oracle(m, dec, hw.psi);
}

IrreducibilityVerdict irreducibility(const Module& m, const HighestWeight& hw,
                                     const SectorDecomposition& dec) {
  IrreducibilityVerdict v;
  DrinfeldData dd;
  try {
    dd = drinfeld_data(m, hw, dec.r);
  } catch (const NonSplitting& e) {
    v.inapplicable_reason = std::string("NonSplitting: residual ") + e.residual;
    return v;
  }
  if (dd.s() == 0) {
    v.inapplicable_reason = "ZeroParameter: no nonzero evaluation parameters";
    return v;
  }
  v.applicable = true;
  Current criterion =
      expand_param_gen(m.mode(), Kind::Lower, extended_set(dd.param_set(), 1));
  v.criterion_residual = m.apply(criterion, hw.psi);
  v.criterion_holds = is_zero_vec(v.criterion_residual);
  v.oracle_irreducible = pairing_rank_oracle(m, dec, hw.psi);
  if (v.criterion_holds != v.oracle_irreducible)
    throw TheoremViolation("criterion and pairing oracle disagree on " + m.describe());
  v.predicted_degeneracy = 1;
  for (const auto& p : dd.params) v.predicted_degeneracy *= p.multiplicity + 1;
  if (v.criterion_holds && v.predicted_degeneracy != dec.total_dim())
    throw TheoremViolation("degeneracy prod(m_j+1) = " + std::to_string(v.predicted_degeneracy) +
                           " != dim U(B)psi = " + std::to_string(dec.total_dim()) + " on " +
                           m.describe());
  return v;
}

}  // namespace loopalg
