#include "loopalg/structure.hpp"

#include <deque>
#include <sstream>

#include "loopalg/errors.hpp"

namespace loopalg {

HighestWeight highest_weight_vector(const Module& m, int k_check) {
  if (k_check < 0) {
    k_check = static_cast<int>(m.dim()) + 2;
    if (m.is_explicit()) k_check = std::min(k_check, m.degree_cap());
  }
  const Vec& psi = m.psi();
  if (is_zero_vec(psi)) throw NotHighestWeight("psi is the zero vector", 0);
  HighestWeight hw;
  hw.psi = psi;
  for (int k = 0; k <= k_check; ++k) {
    Vec raised = m.apply(GenSymbol{Kind::Raise, k}, psi);
    if (!is_zero_vec(raised))
      throw NotHighestWeight("x_" + std::to_string(k) + "^+ psi != 0", k);
    Vec hv = m.apply(GenSymbol{Kind::Cartan, k}, psi);
    Rational d;
    try {
      d = proportionality(hv, psi);
    } catch (const NotProportional&) {
      throw NotHighestWeight("h_" + std::to_string(k) + " psi is not proportional to psi", k);
    }
    hw.d.push_back(d);
  }
  return hw;
}

int SectorDecomposition::total_dim() const {
  int t = 0;
  for (const auto& s : sectors) t += s.rank();
  return t;
}

int SectorDecomposition::sector_dim(int n) const {
  if (n < 0 || n >= static_cast<int>(sectors.size())) return 0;
  return sectors[n].rank();
}

SectorDecomposition cyclic_span(const Module& m, const Vec& psi, int degree_bound) {
  int bound = degree_bound > 0 ? degree_bound : static_cast<int>(m.dim());
  if (m.is_explicit()) bound = std::min(bound, m.degree_cap());
  if (bound < 1) throw ClosureBoundExceeded("lowering degree bound below 1");

  SectorDecomposition dec;
  dec.sectors.emplace_back();
  dec.sectors[0].insert(psi);
  RowBasis all;
  all.insert(psi);

  std::deque<std::pair<Vec, int>> queue;
  queue.emplace_back(psi, 0);
  while (!queue.empty()) {
    auto [v, n] = queue.front();
    queue.pop_front();
    if (n + 1 > static_cast<int>(m.dim()))
      throw ClosureBoundExceeded("closure did not stabilize within the ambient dimension");
    for (int k = 1; k <= bound; ++k) {
      Vec w = m.apply(GenSymbol{Kind::Lower, k}, v);
      if (!all.insert(w)) continue;
      while (static_cast<int>(dec.sectors.size()) <= n + 1) dec.sectors.emplace_back();
      if (!dec.sectors[n + 1].insert(w))
        throw BasisDefect("sector grading broken: new vector dependent inside its sector");
      queue.emplace_back(std::move(w), n + 1);
    }
  }
  while (!dec.sectors.empty() && dec.sectors.back().rank() == 0) dec.sectors.pop_back();
  dec.r = static_cast<int>(dec.sectors.size()) - 1;
  if (dec.sectors[dec.r].rank() != 1)
    throw BasisDefect("top sector has dimension " + std::to_string(dec.sectors[dec.r].rank()));
  return dec;
}

int nilpotency_degree(const Module& m, const Vec& psi) {
  Vec v = psi;
  int r = 0;
  while (true) {
    v = m.apply(GenSymbol{Kind::Lower, 1}, v);
    if (is_zero_vec(v)) return r;
    ++r;
    if (r > m.dim()) throw Error("nilpotency search exceeded the ambient dimension");
  }
}

namespace {

// one commutator instance [g1, g2] = rhs, checked column by column
bool relation_holds(const Module& m, GenSymbol g1, GenSymbol g2, const Current& rhs) {
  Eigen::Index n = m.dim();
  Vec e = Vec::Constant(n, Rational(0));
  for (Eigen::Index i = 0; i < n; ++i) {
    e[i] = Rational(1);
    Vec lhs = m.apply(g1, m.apply(g2, e)) - m.apply(g2, m.apply(g1, e));
    if (!rhs.is_zero()) lhs -= m.apply(rhs, e);
    e[i] = Rational(0);
    if (!is_zero_vec(lhs)) return false;
  }
  return true;
}

std::string gen_name(GenSymbol g) {
  switch (g.kind) {
    case Kind::Raise: return "x" + std::to_string(g.degree) + "+";
    case Kind::Lower: return "x" + std::to_string(g.degree) + "-";
    case Kind::Cartan: return "h" + std::to_string(g.degree);
  }
  return "?";
}

}  // namespace

RelationReport check_defining_relations(const Module& m, int degree_cap) {
  RelationReport rep;
  int lo = m.mode() == Mode::FullLoop ? -degree_cap : 0;
  auto legal = [&](Kind kind, int d) {
    if (!degree_legal(m.mode(), kind, d)) return false;
    if (m.is_explicit() && (d > m.degree_cap() || d < -m.degree_cap())) return false;
    return true;
  };
  auto record = [&](GenSymbol a, GenSymbol b, const Current& rhs) {
    bool ok = relation_holds(m, a, b, rhs);
    std::string desc = "[" + gen_name(a) + ", " + gen_name(b) + "] = " +
                       (rhs.is_zero() ? "0" : rhs.str());
    rep.items.push_back({desc, ok});
    if (!ok) rep.all_ok = false;
  };
  for (int j = lo; j <= degree_cap; ++j) {
    for (int k = lo; k <= degree_cap; ++k) {
      // [h_j, x_k^pm] = pm 2 x_{j+k}^pm
      for (Kind kx : {Kind::Raise, Kind::Lower}) {
        if (!legal(Kind::Cartan, j) || !legal(kx, k) || !legal(kx, j + k)) continue;
        Current rhs = Current(GenSymbol{kx, j + k}) * Rational(kx == Kind::Raise ? 2 : -2);
        record(GenSymbol{Kind::Cartan, j}, GenSymbol{kx, k}, rhs);
      }
      // [x_j^+, x_k^-] = h_{j+k}
      if (legal(Kind::Raise, j) && legal(Kind::Lower, k) && legal(Kind::Cartan, j + k))
        record(GenSymbol{Kind::Raise, j}, GenSymbol{Kind::Lower, k},
               Current(GenSymbol{Kind::Cartan, j + k}));
      if (j < k) {  // antisymmetric families once per unordered pair
        if (legal(Kind::Cartan, j) && legal(Kind::Cartan, k))
          record(GenSymbol{Kind::Cartan, j}, GenSymbol{Kind::Cartan, k},
                 Current::zero(Kind::Cartan));
        for (Kind kx : {Kind::Raise, Kind::Lower})
          if (legal(kx, j) && legal(kx, k))
            record(GenSymbol{kx, j}, GenSymbol{kx, k}, Current::zero(kx));
      }
    }
  }
  return rep;
}

void require_defining_relations(const Module& m, int degree_cap) {
  RelationReport rep = check_defining_relations(m, degree_cap);
  for (const auto& item : rep.items)
    if (!item.ok) throw RelationViolation(item.instance + " fails on " + m.describe());
}

}  // namespace loopalg
