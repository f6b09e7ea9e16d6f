#ifndef LOOPALG_STRUCTURE_HPP
#define LOOPALG_STRUCTURE_HPP

#include <string>
#include <vector>

#include "loopalg/linalg.hpp"
#include "loopalg/module.hpp"

namespace loopalg {

/// Highest weight vector with its eigenvalue sequence d_k, k = 0..K.
struct HighestWeight {
  Vec psi;
  std::vector<Rational> d;
  Rational d_at(int k) const { return d.at(k); }
};

/// Verifies x_k^+ psi = 0 and h_k psi = d_k psi for k = 0..k_check and
/// returns the weights.  k_check defaults to dim + 2 (capped at K for
/// explicit modules).  Throws NotHighestWeight with the offending k.
HighestWeight highest_weight_vector(const Module& m, int k_check = -1);

/// h_0-eigenspace bases of the cyclic span U(B) psi, graded by the
/// number of lowering operators applied.
struct SectorDecomposition {
  std::vector<RowBasis> sectors;  // index n: eigenvalue d_0 - 2n
  int r = 0;                      // last nonempty sector = nilpotency degree
  int total_dim() const;
  int sector_dim(int n) const;
};

/// Deterministic closure of psi under x_k^- for k = 1..degree_bound
/// (default: ambient dimension), with exact reduced-echelon reduction.
SectorDecomposition cyclic_span(const Module& m, const Vec& psi, int degree_bound = -1);

/// Smallest r with (x_1^-)^{r+1} psi = 0 and (x_1^-)^r psi != 0.
int nilpotency_degree(const Module& m, const Vec& psi);

struct RelationReport {
  struct Item {
    std::string instance;
    bool ok;
  };
  std::vector<Item> items;
  bool all_ok = true;
};

/// Verifies every defining-relation instance with |degrees| <= cap as
/// an exact matrix identity.
RelationReport check_defining_relations(const Module& m, int degree_cap);

/// As above but throws RelationViolation on the first failure.
void require_defining_relations(const Module& m, int degree_cap);

}  // namespace loopalg

#endif
