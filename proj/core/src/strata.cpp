#include "qk3/strata.hpp"

#include <array>

namespace qk3 {

namespace {

void check_type(SingularType t) {
  if (t.n < 0 || t.c < 0) throw InputError("singular type requires n, c >= 0");
}

struct TableRow {
  int n, c;
  const char* expr;
};

// Tabulated Picard lattices; stored as expression strings and re-derived at
// verification time so transcription drift is caught by the Gram recompute.
constexpr std::array<TableRow, 11> kTable = {{
    {0, 0, "<2> + A1^7"},
    {1, 0, "U + A1^8"},
    {2, 0, "U + A1^6 + D4"},
    {3, 0, "U + A1^6 + D6"},
    {1, 1, "U + A1^2 + D4 + D6"},
    {1, 2, "U + A1^2 + D6 + E8"},
    {2, 1, "U + A1^2 + D4 + D8"},
    {0, 1, "U + A1^4 + D6"},
    {0, 2, "U + A1^2 + D4 + E8"},
    {0, 3, "U + A1^2 + E8^2"},
    {6, 0, "U + A1^2 + E8^2"},
}};

const TableRow* find_row(SingularType t) {
  for (const TableRow& r : kTable)
    if (r.n == t.n && r.c == t.c) return &r;
  return nullptr;
}

}  // namespace

int picard_rank(SingularType t) {
  check_type(t);
  int rho = 8 + 2 * t.n + 4 * t.c;
  if (rho > 20) throw InputError("type not realized by a K3 (Picard rank would exceed 20)");
  return rho;
}

NikulinInvariants nikulin_invariants(SingularType t) {
  check_type(t);
  if (t.c > 4) throw InputError("ell formula is negative for c > 4");
  return {picard_rank(t), 8 - 2 * t.c, 1};
}

LatticeExpr picard_lattice(SingularType t) {
  check_type(t);
  const TableRow* row = find_row(t);
  if (!row) throw InputError("singular type (" + std::to_string(t.n) + "," + std::to_string(t.c) +
                             ") is not tabulated");
  LatticeExpr expr = parse_lattice_expr(row->expr);
  // Cross-check the stored expression against the expected invariants; the
  // table is data, not truth.
  Lattice l = make_lattice(expr);
  NikulinInvariants want =
      (t.n == 6 && t.c == 0) ? nikulin_invariants({0, 3}) : nikulin_invariants(t);
  DiscriminantData d = discriminant_data(l);
  if (l.rank() != want.rank || d.ell != want.ell || !d.delta || *d.delta != want.delta)
    throw std::logic_error("tabulated lattice fails its invariant recomputation");
  return expr;
}

LatticeExpr anti_invariant_part(SingularType t) {
  check_type(t);
  LatticeExpr expr;
  if (t.n > 0) expr.terms.push_back({{LatticeAtom::Kind::A, 1}, 2 * t.n});
  if (t.c > 0) expr.terms.push_back({{LatticeAtom::Kind::D, 4}, t.c});
  return expr;
}

StratumReport stratum_report(SingularType t) {
  StratumReport rep;
  rep.type = t;
  rep.picard_rank = picard_rank(t);
  rep.anti_invariant_expr = anti_invariant_part(t);
  rep.transcendental_rank = 22 - rep.picard_rank;
  const TableRow* row = find_row(t);
  if (row) {
    rep.tabulated = true;
    rep.picard_expr = picard_lattice(t);
    Lattice l = make_lattice(*rep.picard_expr);
    DiscriminantData d = discriminant_data(l);
    rep.ell = d.ell;
    rep.delta = d.delta.value_or(-1);
    if (t.n == 6) rep.note = "invariants from the tabulated lattice (isomorphic to type (0,3))";
  } else {
    NikulinInvariants inv = nikulin_invariants(t);
    rep.ell = inv.ell;
    rep.delta = inv.delta;
    if (t.n + t.c > 3)
      rep.note = "generic-stratum formulas; ell/delta derived only for n + c <= 3";
    else
      rep.note = "formula values; lattice not tabulated";
  }
  return rep;
}

std::vector<StratumReport> full_table() {
  std::vector<StratumReport> rows;
  for (const TableRow& row : kTable) {
    SingularType t{row.n, row.c};
    StratumReport rep = stratum_report(t);
    // Full verification: rank, signature, ell, delta recomputed from the Gram.
    Lattice l = make_lattice(*rep.picard_expr);
    if (l.rank() != rep.picard_rank)
      throw std::logic_error("table row rank mismatch at (" + std::to_string(t.n) + "," +
                             std::to_string(t.c) + ")");
    Signature sig = signature(l);
    if (sig != Signature{1, l.rank() - 1, 0})
      throw std::logic_error("table row is not hyperbolic at (" + std::to_string(t.n) + "," +
                             std::to_string(t.c) + ")");
    NikulinInvariants want =
        (t.n == 6) ? nikulin_invariants({0, 3}) : nikulin_invariants(t);
    DiscriminantData d = discriminant_data(l);
    if (d.ell != want.ell || !d.delta || *d.delta != want.delta)
      throw std::logic_error("table row discriminant mismatch at (" + std::to_string(t.n) + "," +
                             std::to_string(t.c) + ")");
    if (rep.picard_rank + rep.transcendental_rank != 22)
      throw std::logic_error("rank bookkeeping broken");
    rows.push_back(std::move(rep));
  }
  return rows;
}

}  // namespace qk3
