#pragma once

#include "qk3/named.hpp"

namespace qk3 {

// Singular type (n, c) = (node count, cusp count) of a stable quartic.
struct SingularType {
  int n = 0, c = 0;
  bool operator==(const SingularType&) const = default;
};

struct NikulinInvariants {
  int rank = 0, ell = 0, delta = 1;
};

// 8 + 2n + 4c; errors when the result would exceed 20 (no such K3).
int picard_rank(SingularType t);

// Generic-stratum formulas (rank, ell, delta) = (8+2n+4c, 8-2c, 1). The ell
// formula is derived for irreducible quartics (n + c <= 3); outside that
// range it is a formal extrapolation and the tabulated lattices take
// precedence.
NikulinInvariants nikulin_invariants(SingularType t);

// The tabulated Picard lattice for the ten types with 0 <= n,c <= 3 plus
// (6,0). Errors with "not tabulated" otherwise.
LatticeExpr picard_lattice(SingularType t);

// A1^{2n} + D4^{c}.
LatticeExpr anti_invariant_part(SingularType t);

struct StratumReport {
  SingularType type;
  int picard_rank = 0;
  int ell = 0;
  int delta = 1;
  std::optional<LatticeExpr> picard_expr;  // absent for untabulated types
  LatticeExpr anti_invariant_expr;
  int transcendental_rank = 0;
  bool tabulated = false;
  std::string note;
};

// The eleven verified rows. Every row's rank, signature, ell and delta are
// recomputed from the Gram matrix of its expression; a mismatch aborts.
std::vector<StratumReport> full_table();

// Report for an arbitrary stable type: tabulated row when available, else
// the formula values with picard_expr absent.
StratumReport stratum_report(SingularType t);

}  // namespace qk3
