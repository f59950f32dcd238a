#pragma once

#include "qk3/numeric.hpp"

#include <initializer_list>
#include <vector>

namespace qk3 {

// Dense matrix of arbitrary-precision integers.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  IntMat(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const IntMat& o) const = default;

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-() const;
  IntMat scaled(const Int& k) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  std::vector<Int> apply(const std::vector<Int>& v) const;  // M v
  IntMat column(int j) const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Fraction-free determinant (Bareiss). Requires square input.
Int determinant(const IntMat& m);

// Smith normal form u*m*v = d with u, v unimodular and d diagonal,
// d1 | d2 | ..., all diagonal entries nonnegative. Pivot choice: entry of
// smallest nonzero magnitude, ties broken row-major, so the transforms are
// reproducible across runs.
struct SmithResult {
  IntMat u, d, v;
  std::vector<Int> invariant_factors() const;  // diagonal entries > 1
  std::vector<Int> diagonal() const;
};
SmithResult smith_normal_form(const IntMat& m);

// Saturated basis of {x in Z^cols : m x = 0}, as matrix columns.
IntMat integer_kernel(const IntMat& m);

// Rational Gaussian elimination helpers.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  explicit RatMat(const IntMat& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  RatMat operator*(const RatMat& o) const;
  RatMat transpose() const;

  int rank() const;
  // Basis of the right null space, as columns.
  RatMat kernel() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Solves m x = b exactly; returns false if inconsistent. m may be any shape.
bool rat_solve(const RatMat& m, const std::vector<Rat>& b, std::vector<Rat>* x);

// Inverse of a square nonsingular rational matrix.
RatMat rat_inverse(const RatMat& m);

}  // namespace qk3
