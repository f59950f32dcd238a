#pragma once

#include "qk3/intmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qk3 {

struct Signature {
  int positive = 0, negative = 0, zero = 0;
  int rank() const { return positive + negative + zero; }
  bool operator==(const Signature&) const = default;
};

// Even integer lattice presented by a Gram matrix. Values are immutable
// after construction; every operation below is a pure function.
class Lattice {
 public:
  // Validates symmetry and even diagonal. Degenerate Gram matrices are
  // representable but must be requested explicitly.
  static Lattice from_gram(IntMat gram, std::optional<std::string> label = {},
                           bool allow_degenerate = false);

  const IntMat& gram() const { return gram_; }
  const std::optional<std::string>& label() const { return label_; }
  int rank() const { return gram_.rows(); }
  const Int& det() const { return det_; }
  bool degenerate() const { return det_ == 0; }

  Int inner(const std::vector<Int>& a, const std::vector<Int>& b) const;
  Int norm(const std::vector<Int>& v) const { return inner(v, v); }

 private:
  IntMat gram_;
  std::optional<std::string> label_;
  Int det_;
};

struct DiscriminantData {
  std::vector<Int> invariant_factors;      // d1 | d2 | ..., each > 1
  int ell = 0;                             // number of factors
  std::vector<std::vector<Rat>> generators;  // dual-lattice coordinates
  std::vector<Rat> form_values;            // q(g) mod 2Z, in [0,2)
  bool two_elementary = false;
  std::optional<int> delta;                // defined when two_elementary
};

struct IsometryCheck {
  bool isometry = false;
  std::optional<int> order;  // absent when > 64 ("infinite/unknown")
};

struct InvariantsComparison {
  bool equal = false;
  bool isometry_certified = false;  // Nikulin: 2-elementary even indefinite
  std::string note;
};

struct SaturationResult {
  IntMat basis;  // rows form a basis of the saturation
  Int index;     // [saturation : input sublattice]
};

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& a, const Int& n);
Signature signature(const Lattice& a);
DiscriminantData discriminant_data(const Lattice& a);

// Orthogonal complement of the span of `sub` (row vectors in host
// coordinates). The result is a primitive sublattice; it may be degenerate.
Lattice orthogonal_complement(const Lattice& host, const std::vector<std::vector<Int>>& sub);
// Also exposes the complement basis (rows, in host coordinates).
Lattice orthogonal_complement(const Lattice& host, const std::vector<std::vector<Int>>& sub,
                              IntMat* basis_out);

SaturationResult saturate(const Lattice& host, const std::vector<std::vector<Int>>& sub);

// All v with (v, v) = -2 in a definite lattice of rank <= 24 and
// |det| <= 2^30. Positive-definite input is rescaled internally. Output is
// sorted lexicographically and closed under negation.
std::vector<std::vector<Int>> roots(const Lattice& a);

IsometryCheck is_isometry(const Lattice& a, const IntMat& j);
InvariantsComparison invariants_equal(const Lattice& a, const Lattice& b);

// Sublattice fixed pointwise by j, as kernel of (j - 1).
IntMat fixed_sublattice(const IntMat& j);

// Gram matrix of the sublattice spanned by `basis` rows.
IntMat restrict_gram(const IntMat& gram, const IntMat& basis);

}  // namespace qk3
