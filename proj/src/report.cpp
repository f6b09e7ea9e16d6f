#include "loopalg/report.hpp"

#include <json.hpp>
#include <sstream>

#include "loopalg/errors.hpp"

namespace loopalg {

AnalysisReport analyze(const Module& m) {
  AnalysisReport rep;
  rep.module_summary = m.describe();
  rep.dimension = m.dim();
  HighestWeight hw = highest_weight_vector(m);
  rep.d = hw.d;
  SectorDecomposition dec = cyclic_span(m, hw.psi);
  rep.r = dec.r;
  int r_direct = nilpotency_degree(m, hw.psi);
  if (r_direct != dec.r)
    throw BasisDefect("nilpotency degree " + std::to_string(r_direct) +
                      " disagrees with the sector decomposition r=" + std::to_string(dec.r));
  for (const auto& s : dec.sectors) rep.sector_dims.push_back(s.rank());
  rep.span_dim = dec.total_dim();
  try {
    rep.drinfeld = drinfeld_data(m, hw, dec.r);
    rep.drinfeld_ok = true;
  } catch (const NonSplitting& e) {
    rep.drinfeld_error = e.what();
  }
  rep.verdict = irreducibility(m, hw, dec);
  return rep;
}

std::string AnalysisReport::human() const {
  std::ostringstream os;
  os << "module    " << module_summary << "\n";
  os << "dimension " << dimension << " (cyclic span " << span_dim << ")\n";
  os << "weights   ";
  for (std::size_t k = 0; k < d.size() && k <= static_cast<std::size_t>(r) + 2; ++k)
    os << "d" << k << "=" << d[k] << " ";
  os << "\n";
  os << "r         " << r << "\n";
  os << "sectors   ";
  for (std::size_t i = 0; i < sector_dims.size(); ++i) os << (i ? " " : "") << sector_dims[i];
  os << "\n";
  if (drinfeld_ok) {
    os << "lambda    ";
    for (std::size_t i = 0; i < drinfeld.lambdas.size(); ++i)
      os << (i ? " " : "") << drinfeld.lambdas[i];
    os << "\n";
    os << "P(u)      " << drinfeld.polynomial.str() << "\n";
    os << "factored  " << drinfeld.factored_str() << "\n";
    os << "params    ";
    if (drinfeld.params.empty()) os << "(none)";
    for (const auto& p : drinfeld.params) os << "(" << p.a << ":" << p.multiplicity << ")";
    os << "\n";
  } else {
    os << "P(u)      does not split over the rationals: " << drinfeld_error << "\n";
  }
  if (verdict.applicable) {
    os << "criterion " << (verdict.criterion_holds ? "residual=0" : "residual!=0") << "\n";
    os << "oracle    " << (verdict.oracle_irreducible ? "irreducible" : "reducible") << "\n";
    os << "verdict   " << (verdict.criterion_holds ? "irreducible" : "reducible")
       << ", degeneracy " << verdict.predicted_degeneracy << "\n";
  } else {
    os << "verdict   Inapplicable (" << verdict.inapplicable_reason << ")\n";
  }
  return os.str();
}

std::string AnalysisReport::machine() const {
  nlohmann::ordered_json j;
  j["schema"] = "loopalg-analysis/1";
  j["module"] = module_summary;
  j["dimension"] = dimension;
  j["span_dimension"] = span_dim;
  j["r"] = r;
  j["sector_dims"] = sector_dims;
  std::vector<std::string> dstr;
  for (const auto& x : d) dstr.push_back(x.str());
  j["d"] = dstr;
  if (drinfeld_ok) {
    std::vector<std::string> ls, cs;
    for (const auto& x : drinfeld.lambdas) ls.push_back(x.str());
    for (const auto& c : drinfeld.polynomial.coeffs()) cs.push_back(c.str());
    j["lambda"] = ls;
    j["polynomial_coeffs"] = cs;
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    for (const auto& p : drinfeld.params)
      params.push_back({{"a", p.a.str()}, {"multiplicity", p.multiplicity}});
    j["evaluation_parameters"] = params;
  } else {
    j["drinfeld_error"] = drinfeld_error;
  }
  if (verdict.applicable) {
    j["criterion_holds"] = verdict.criterion_holds;
    j["oracle_irreducible"] = verdict.oracle_irreducible;
    j["irreducible"] = verdict.criterion_holds;
    j["predicted_degeneracy"] = verdict.predicted_degeneracy;
  } else {
    j["verdict"] = "inapplicable";
    j["inapplicable_reason"] = verdict.inapplicable_reason;
  }
  return j.dump(2) + "\n";
}

}  // namespace loopalg
