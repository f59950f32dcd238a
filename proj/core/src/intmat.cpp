#include "qk3/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace qk3 {

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  a_.resize(size_t(rows_) * cols_);
  int i = 0;
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw std::invalid_argument("ragged IntMat initializer");
    int j = 0;
    for (const auto& x : r) at(i, j++) = x;
    ++i;
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat product shape mismatch");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat sum shape mismatch");
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMat IntMat::operator-() const {
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

IntMat IntMat::scaled(const Int& k) const {
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * k;
  return r;
}

bool IntMat::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("IntMat apply shape mismatch");
  std::vector<Int> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMat IntMat::column(int j) const {
  IntMat c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "\n[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]";
  }
  return os.str();
}

Int determinant(const IntMat& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = t / prev;  // exact by Bareiss
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> out;
  int n = std::min(d.rows(), d.cols());
  for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

std::vector<Int> SmithResult::invariant_factors() const {
  std::vector<Int> out;
  for (const Int& x : diagonal())
    if (x > 1) out.push_back(x);
  return out;
}

namespace {

void swap_rows(IntMat& m, int i, int j) {
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(IntMat& m, int i, int j) {
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}
void add_row(IntMat& m, int dst, int src, const Int& q) {  // row_dst += q * row_src
  if (q == 0) return;
  for (int c = 0; c < m.cols(); ++c) m.at(dst, c) += q * m.at(src, c);
}
void add_col(IntMat& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows(); ++r) m.at(r, dst) += q * m.at(r, src);
}
void negate_row(IntMat& m, int i) {
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
  SmithResult res{IntMat::identity(m.rows()), m, IntMat::identity(m.cols())};
  IntMat& a = res.d;
  IntMat& u = res.u;
  IntMat& v = res.v;
  int n = std::min(a.rows(), a.cols());
  for (int k = 0; k < n; ++k) {
    // Pivot: smallest nonzero magnitude in the trailing block, row-major ties.
    auto find_pivot = [&](int* pi, int* pj) {
      Int best = 0;
      *pi = -1;
      for (int i = k; i < a.rows(); ++i)
        for (int j = k; j < a.cols(); ++j) {
          const Int& x = a.at(i, j);
          if (x == 0) continue;
          Int ax = abs(x);
          if (*pi < 0 || ax < best) { best = ax; *pi = i; *pj = j; }
        }
      return *pi >= 0;
    };
    int pi, pj;
    if (!find_pivot(&pi, &pj)) break;
    if (pi != k) { swap_rows(a, k, pi); swap_rows(u, k, pi); }
    if (pj != k) { swap_cols(a, k, pj); swap_cols(v, k, pj); }

    for (;;) {
      bool clean = true;
      for (int i = k + 1; i < a.rows(); ++i) {
        if (a.at(i, k) == 0) continue;
        Int q = a.at(i, k) / a.at(k, k);
        add_row(a, i, k, -q);
        add_row(u, i, k, -q);
        if (a.at(i, k) != 0) {
          // Remainder strictly smaller: promote it to the pivot slot.
          swap_rows(a, k, i);
          swap_rows(u, k, i);
          clean = false;
        }
      }
      for (int j = k + 1; j < a.cols(); ++j) {
        if (a.at(k, j) == 0) continue;
        Int q = a.at(k, j) / a.at(k, k);
        add_col(a, j, k, -q);
        add_col(v, j, k, -q);
        if (a.at(k, j) != 0) {
          swap_cols(a, k, j);
          swap_cols(v, k, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: pivot must divide every entry of the trailing block.
      bool fixed = false;
      for (int i = k + 1; i < a.rows() && !fixed; ++i)
        for (int j = k + 1; j < a.cols() && !fixed; ++j)
          if (a.at(i, j) % a.at(k, k) != 0) {
            add_row(a, k, i, 1);
            add_row(u, k, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (a.at(k, k) < 0) { negate_row(a, k); negate_row(u, k); }
  }
  return res;
}

IntMat integer_kernel(const IntMat& m) {
  SmithResult s = smith_normal_form(m);
  int rank = 0;
  int n = std::min(m.rows(), m.cols());
  for (int i = 0; i < n; ++i)
    if (s.d.at(i, i) != 0) ++rank;
  IntMat ker(m.cols(), m.cols() - rank);
  for (int j = rank; j < m.cols(); ++j)
    for (int i = 0; i < m.cols(); ++i) ker.at(i, j - rank) = s.v.at(i, j);
  return ker;
}

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()), a_(size_t(rows_) * cols_) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMat product shape mismatch");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

// Row echelon; returns pivot columns. Operates in place.
std::vector<int> echelon(RatMat& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(p, j));
    Rat inv = a.at(r, c);
    for (int j = c; j < a.cols(); ++j) a.at(r, j) /= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int RatMat::rank() const {
  RatMat a = *this;
  return int(echelon(a).size());
}

RatMat RatMat::kernel() const {
  RatMat a = *this;
  std::vector<int> pivots = echelon(a);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  int nk = cols_ - int(pivots.size());
  RatMat ker(cols_, nk);
  int kcol = 0;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    ker.at(c, kcol) = 1;
    for (int r = 0; r < int(pivots.size()); ++r) ker.at(pivots[r], kcol) = -a.at(r, c);
    ++kcol;
  }
  return ker;
}

bool rat_solve(const RatMat& m, const std::vector<Rat>& b, std::vector<Rat>* x) {
  if (int(b.size()) != m.rows()) throw std::invalid_argument("rat_solve shape mismatch");
  RatMat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = echelon(aug);
  for (int c : pivots)
    if (c == m.cols()) return false;  // inconsistent
  x->assign(m.cols(), Rat(0));
  for (int r = 0; r < int(pivots.size()); ++r) (*x)[pivots[r]] = aug.at(r, m.cols());
  return true;
}

RatMat rat_inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("rat_inverse of non-square matrix");
  int n = m.rows();
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots = echelon(aug);
  if (int(pivots.size()) != n || pivots.back() != n - 1)
    throw std::invalid_argument("rat_inverse of singular matrix");
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace qk3
