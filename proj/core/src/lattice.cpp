#include "qk3/lattice.hpp"

#include <algorithm>

namespace qk3 {

Lattice Lattice::from_gram(IntMat gram, std::optional<std::string> label, bool allow_degenerate) {
  if (!gram.is_square()) throw InputError("Gram matrix must be square");
  if (!gram.is_symmetric()) throw InputError("Gram matrix must be symmetric");
  for (int i = 0; i < gram.rows(); ++i)
    if (gram.at(i, i) % 2 != 0) throw InputError("lattice is not even: odd diagonal entry");
  Lattice l;
  l.det_ = determinant(gram);
  if (l.det_ == 0 && !allow_degenerate) throw InputError("degenerate Gram matrix");
  l.gram_ = std::move(gram);
  l.label_ = std::move(label);
  return l;
}

Int Lattice::inner(const std::vector<Int>& a, const std::vector<Int>& b) const {
  if (int(a.size()) != rank() || int(b.size()) != rank())
    throw InputError("vector length does not match lattice rank");
  Int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += a[i] * gram_.at(i, j) * b[j];
  }
  return s;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  int n = a.rank(), m = b.rank();
  IntMat g(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = a.gram().at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.at(n + i, n + j) = b.gram().at(i, j);
  return Lattice::from_gram(std::move(g), {}, /*allow_degenerate=*/true);
}

Lattice rescale(const Lattice& a, const Int& n) {
  if (n == 0) throw InputError("rescale by zero");
  return Lattice::from_gram(a.gram().scaled(n), {}, /*allow_degenerate=*/true);
}

Signature signature(const Lattice& a) {
  // Exact congruence diagonalization over Q. A zero pivot with a nonzero
  // off-diagonal partner is resolved by the congruence x -> x + y first.
  RatMat m(a.gram());
  int n = m.rows();
  Signature sig;
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, i) != 0) { sw = i; break; }
      if (sw >= 0) {
        for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(sw, j));
        for (int j = 0; j < n; ++j) std::swap(m.at(j, k), m.at(j, sw));
      } else {
        int off = -1;
        for (int i = k + 1; i < n; ++i)
          if (m.at(i, k) != 0) { off = i; break; }
        if (off < 0) { ++sig.zero; continue; }
        for (int j = 0; j < n; ++j) m.at(k, j) += m.at(off, j);
        for (int j = 0; j < n; ++j) m.at(j, k) += m.at(j, off);
      }
    }
    const Rat piv = m.at(k, k);
    if (piv > 0) ++sig.positive; else ++sig.negative;
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      Rat f = m.at(i, k) / piv;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
      for (int j = k; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
    }
  }
  return sig;
}

DiscriminantData discriminant_data(const Lattice& a) {
  if (a.degenerate()) throw InputError("discriminant data of a degenerate lattice");
  int n = a.rank();
  SmithResult s = smith_normal_form(a.gram());
  DiscriminantData out;
  out.invariant_factors = s.invariant_factors();
  out.ell = int(out.invariant_factors.size());
  out.two_elementary =
      std::all_of(out.invariant_factors.begin(), out.invariant_factors.end(),
                  [](const Int& d) { return d == 2; });

  // Generators of Z^n / G Z^n are the images of u^{-1} e_i for d_i > 1;
  // lift to the dual lattice via G^{-1}.
  RatMat ginv = rat_inverse(RatMat(a.gram()));
  RatMat uinv = rat_inverse(RatMat(s.u));
  std::vector<Int> diag = s.diagonal();
  std::vector<int> gen_idx;
  for (int i = 0; i < int(diag.size()); ++i)
    if (diag[i] > 1) gen_idx.push_back(i);
  for (int idx : gen_idx) {
    std::vector<Rat> col(n);
    for (int i = 0; i < n; ++i) col[i] = uinv.at(i, idx);
    std::vector<Rat> dual(n);
    for (int i = 0; i < n; ++i) {
      Rat acc = 0;
      for (int j = 0; j < n; ++j) acc += ginv.at(i, j) * col[j];
      dual[i] = acc;
    }
    out.generators.push_back(dual);
  }
  auto qval = [&](const std::vector<Rat>& v) {
    Rat acc = 0;
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      for (int j = 0; j < n; ++j) acc += v[i] * Rat(a.gram().at(i, j)) * v[j];
    }
    return mod_two(acc);
  };
  for (const auto& g : out.generators) out.form_values.push_back(qval(g));

  if (out.two_elementary) {
    // delta = 0 iff q is integral on the whole discriminant group.
    Int card = 1;
    for (const Int& d : out.invariant_factors) card *= d;
    if (card > (Int(1) << 16)) {
      out.delta.reset();  // group too large; not needed for any lattice here
    } else {
      int delta = 0;
      int k = out.ell;
      std::vector<int> coef(k, 0);
      std::vector<Rat> x(n, Rat(0));
      for (;;) {
        if (!is_integral(qval(x))) { delta = 1; break; }
        int pos = 0;
        while (pos < k) {
          ++coef[pos];
          for (int i = 0; i < n; ++i) x[i] += out.generators[pos][i];
          if (coef[pos] < out.invariant_factors[pos]) break;
          for (int i = 0; i < n; ++i) x[i] -= Rat(coef[pos]) * out.generators[pos][i];
          coef[pos] = 0;
          ++pos;
        }
        if (pos == k) break;
      }
      out.delta = delta;
    }
  }
  return out;
}

IntMat restrict_gram(const IntMat& gram, const IntMat& basis) {
  return basis * gram * basis.transpose();
}

Lattice orthogonal_complement(const Lattice& host, const std::vector<std::vector<Int>>& sub,
                              IntMat* basis_out) {
  int n = host.rank();
  IntMat pairing(int(sub.size()), n);
  for (int i = 0; i < int(sub.size()); ++i) {
    if (int(sub[i].size()) != n) throw InputError("sublattice vector length mismatch");
    for (int j = 0; j < n; ++j) {
      Int acc = 0;
      for (int k = 0; k < n; ++k) acc += sub[i][k] * host.gram().at(k, j);
      pairing.at(i, j) = acc;
    }
  }
  IntMat ker = integer_kernel(pairing);  // columns
  IntMat basis = ker.transpose();        // rows
  if (basis_out) *basis_out = basis;
  IntMat g = restrict_gram(host.gram(), basis);
  return Lattice::from_gram(std::move(g), {}, /*allow_degenerate=*/true);
}

Lattice orthogonal_complement(const Lattice& host, const std::vector<std::vector<Int>>& sub) {
  return orthogonal_complement(host, sub, nullptr);
}

SaturationResult saturate(const Lattice& host, const std::vector<std::vector<Int>>& sub) {
  int n = host.rank();
  IntMat b(int(sub.size()), n);
  for (int i = 0; i < int(sub.size()); ++i) {
    if (int(sub[i].size()) != n) throw InputError("sublattice vector length mismatch");
    for (int j = 0; j < n; ++j) b.at(i, j) = sub[i][j];
  }
  // Saturation = integer kernel of the transpose of the rational kernel of b.
  IntMat nullsp = integer_kernel(b);           // columns: b x = 0
  IntMat sat_cols = integer_kernel(nullsp.transpose());
  SaturationResult res;
  res.basis = sat_cols.transpose();

  // Index: express the rows of b in the saturation basis; the index is the
  // product of invariant factors of that coefficient matrix.
  int r = res.basis.rows();
  RatMat satT = RatMat(res.basis).transpose();
  IntMat coeff(int(sub.size()), r);
  for (int i = 0; i < int(sub.size()); ++i) {
    std::vector<Rat> rhs(n);
    for (int j = 0; j < n; ++j) rhs[j] = Rat(b.at(i, j));
    std::vector<Rat> x;
    if (!rat_solve(satT, rhs, &x)) throw std::logic_error("saturation does not contain input");
    for (int j = 0; j < r; ++j) {
      if (!is_integral(x[j])) throw std::logic_error("non-integral saturation coordinates");
      coeff.at(i, j) = rat_num(x[j]);
    }
  }
  SmithResult s = smith_normal_form(coeff);
  Int idx = 1;
  for (const Int& d : s.diagonal()) idx *= (d == 0 ? Int(1) : d);
  res.index = idx;
  return res;
}

namespace {

// Branch-and-bound enumeration of vectors of a given positive-definite norm,
// via exact rational LDL^T.
struct ShortVectorEnum {
  int n;
  RatMat l;            // unit lower triangular
  std::vector<Rat> d;  // positive diagonal
  std::vector<std::vector<Int>> found;
  std::vector<Int> cur;

  void run(const RatMat& q, const Rat& target) {
    n = q.rows();
    l = RatMat(n, n);
    d.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) l.at(i, i) = 1;
    RatMat a = q;
    for (int k = 0; k < n; ++k) {
      d[k] = a.at(k, k);
      if (d[k] <= 0) throw InputError("form is not positive definite");
      for (int i = k + 1; i < n; ++i) {
        Rat f = a.at(i, k) / d[k];
        l.at(i, k) = f;
        for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        for (int j = k; j < n; ++j) a.at(j, i) -= f * a.at(j, k);
      }
    }
    cur.assign(n, Int(0));
    descend(n - 1, target);
  }

  // Levels n-1 .. 0; at level i the residual budget and the center
  // c_i = sum_{j>i} l[j][i] v_j determine the coordinate range.
  void descend(int i, const Rat& budget) {
    if (i < 0) {
      if (budget == 0) {
        bool all_zero = std::all_of(cur.begin(), cur.end(), [](const Int& x) { return x == 0; });
        if (!all_zero) found.push_back(cur);
      }
      return;
    }
    Rat c = 0;
    for (int j = i + 1; j < n; ++j)
      if (cur[j] != 0) c += l.at(j, i) * Rat(cur[j]);
    Rat radius2 = budget / d[i];
    Int lo_n = rat_num(-c), lo_d = rat_den(-c);
    Int r = floor_sqrt_rat(radius2);
    // |v + c| <= sqrt(radius2); conservative integer window, exact check below.
    Int lo = lo_n / lo_d - r - 2;
    Int hi = lo_n / lo_d + r + 2;
    for (Int v = lo; v <= hi; ++v) {
      Rat w = Rat(v) + c;
      Rat used = d[i] * w * w;
      if (used > budget) continue;
      cur[i] = v;
      descend(i - 1, budget - used);
    }
    cur[i] = 0;
  }
};

}  // namespace

std::vector<std::vector<Int>> roots(const Lattice& a) {
  if (a.degenerate()) throw InputError("roots of a degenerate lattice");
  if (a.rank() > 24) throw InputError("root enumeration capped at rank 24");
  Int ad = abs(a.det());
  if (ad > (Int(1) << 30)) throw InputError("root enumeration capped at |det| <= 2^30");
  Signature sig = signature(a);
  IntMat g = a.gram();
  if (sig.negative == a.rank()) {
    g = (-g);
  } else if (sig.positive != a.rank()) {
    throw InputError("root enumeration requires a definite lattice");
  }
  ShortVectorEnum e;
  e.run(RatMat(g), Rat(2));
  std::sort(e.found.begin(), e.found.end());
  return e.found;
}

IsometryCheck is_isometry(const Lattice& a, const IntMat& j) {
  if (!j.is_square() || j.rows() != a.rank()) throw InputError("isometry size mismatch");
  IsometryCheck res;
  res.isometry = (j.transpose() * a.gram() * j) == a.gram();
  if (!res.isometry) return res;
  IntMat p = j;
  IntMat id = IntMat::identity(a.rank());
  for (int k = 1; k <= 64; ++k) {
    if (p == id) { res.order = k; return res; }
    p = p * j;
  }
  return res;  // order unknown (cap 64)
}

IntMat fixed_sublattice(const IntMat& j) {
  IntMat m = j + (-IntMat::identity(j.rows()));
  return integer_kernel(m).transpose();
}

InvariantsComparison invariants_equal(const Lattice& a, const Lattice& b) {
  if (a.degenerate() || b.degenerate()) throw InputError("invariants of degenerate lattice");
  InvariantsComparison out;
  if (a.rank() != b.rank()) { out.note = "ranks differ"; return out; }
  if (signature(a) != signature(b)) { out.note = "signatures differ"; return out; }
  DiscriminantData da = discriminant_data(a), db = discriminant_data(b);
  if (da.invariant_factors != db.invariant_factors) {
    out.note = "invariant factors differ";
    return out;
  }
  if (da.two_elementary && db.two_elementary) {
    if (da.delta != db.delta) { out.note = "delta differs"; return out; }
    Signature s = signature(a);
    bool indefinite = s.positive > 0 && s.negative > 0;
    out.equal = true;
    if (indefinite) {
      out.isometry_certified = true;
      out.note = "isometric (2-elementary even indefinite class)";
    } else {
      out.note = "invariants agree (isometry not certified)";
    }
    return out;
  }
  out.equal = true;
  out.note = "invariants agree (isometry not certified)";
  return out;
}

}  // namespace qk3
