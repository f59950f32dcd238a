#pragma once

#include "qk3/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qk3 {

// One atom of a lattice expression: U, U(2), An, Dn, E6/E7/E8, or <n>.
struct LatticeAtom {
  enum class Kind { U, U2, A, D, E, Diag } kind;
  int param = 0;  // family index for A/D/E, the diagonal entry for <n>
  bool operator==(const LatticeAtom&) const = default;
  std::string to_string() const;
};

// Formal sum of atoms with positive multiplicities, e.g. "U + A1^8".
struct LatticeExpr {
  std::vector<std::pair<LatticeAtom, int>> terms;
  std::string to_string() const;
  int rank() const;
  bool empty() const { return terms.empty(); }
};

// Grammar: atoms `U`, `U(2)`, `A1`..., `D4`, `E8`, `<2>`, combined with `+`
// and `^k`. Errors carry the offending position.
LatticeExpr parse_lattice_expr(const std::string& text);

// Canonical Gram matrix for one atom. ADE lattices are negative definite
// (diagonal -2) in their standard simple-root bases; positive-definite
// variants are obtained with rescale(-1).
Lattice make_atom(const LatticeAtom& atom);
Lattice make_lattice(const LatticeExpr& expr);
inline Lattice make_lattice(const std::string& expr) {
  return make_lattice(parse_lattice_expr(expr));
}

// The rank-14 lattice <2>^2 + D4^3 together with its canonical order-four
// isometry J (J^2 = -I, trivial fixed sublattice). J rotates the <2>^2
// block and acts on each D4 block by two quarter turns in the basis
// (f1, Jf1, f2, Jf2) with f1 = e1-e2, f2 = e1-e3.
struct OrderFourAction {
  Lattice host;
  IntMat matrix;
  std::vector<Int> apply(const std::vector<Int>& v) const { return matrix.apply(v); }
};
const OrderFourAction& transcendental_rotation();

// The two root classes of the rank-14 lattice: complements isometric to
// U^2 + A1^8 ("node" mirror) or U(2)^2 + D8 ("hyperelliptic" mirror).
enum class RootClass { node_class, hyperelliptic_class };
RootClass classify_root(const std::vector<Int>& r);

// Exhaustive box search for a primitive x with x^2 = 0 and (x, Jx) = 0.
std::optional<std::vector<Int>> isotropic_rho_vector_search(int bound);

}  // namespace qk3
