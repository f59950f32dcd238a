#include "qk3/named.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qk3 {

std::string LatticeAtom::to_string() const {
  switch (kind) {
    case Kind::U: return "U";
    case Kind::U2: return "U(2)";
    case Kind::A: return "A" + std::to_string(param);
    case Kind::D: return "D" + std::to_string(param);
    case Kind::E: return "E" + std::to_string(param);
    case Kind::Diag: return "<" + std::to_string(param) + ">";
  }
  return "?";
}

std::string LatticeExpr::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [atom, mult] : terms) {
    if (!first) os << " + ";
    first = false;
    os << atom.to_string();
    if (mult != 1) os << "^" << mult;
  }
  return os.str();
}

int LatticeExpr::rank() const {
  int r = 0;
  for (const auto& [atom, mult] : terms) {
    int ar = 0;
    switch (atom.kind) {
      case LatticeAtom::Kind::U:
      case LatticeAtom::Kind::U2: ar = 2; break;
      case LatticeAtom::Kind::Diag: ar = 1; break;
      default: ar = atom.param; break;
    }
    r += ar * mult;
  }
  return r;
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& msg) {
  throw InputError("lattice expression error at position " + std::to_string(pos) + ": " + msg +
                   " in \"" + text + "\"");
}

}  // namespace

LatticeExpr parse_lattice_expr(const std::string& text) {
  LatticeExpr expr;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && isspace(text[i])) ++i; };
  auto read_uint = [&](const char* what) {
    size_t start = i;
    while (i < text.size() && isdigit(text[i])) ++i;
    if (i == start) parse_fail(text, start, std::string("expected ") + what);
    return std::stoi(text.substr(start, i - start));
  };
  skip_ws();
  if (i < text.size() && text[i] == '0' && i + 1 == text.size()) return expr;  // empty sum
  bool expect_atom = true;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (!expect_atom) {
      if (text[i] != '+') parse_fail(text, i, "expected '+'");
      ++i;
      skip_ws();
    }
    expect_atom = false;
    if (i >= text.size()) parse_fail(text, i, "expected atom");
    LatticeAtom atom;
    char c = text[i];
    if (c == 'U') {
      ++i;
      if (i + 2 < text.size() + 1 && i < text.size() && text[i] == '(') {
        size_t open = i++;
        int n = read_uint("twist");
        if (i >= text.size() || text[i] != ')') parse_fail(text, open, "unclosed '('");
        ++i;
        if (n != 2) parse_fail(text, open, "only the twist U(2) is supported");
        atom.kind = LatticeAtom::Kind::U2;
      } else {
        atom.kind = LatticeAtom::Kind::U;
      }
    } else if (c == 'A' || c == 'D' || c == 'E') {
      ++i;
      int n = read_uint("family index");
      if (c == 'A') {
        if (n < 1) parse_fail(text, i, "A_n requires n >= 1");
        atom.kind = LatticeAtom::Kind::A;
      } else if (c == 'D') {
        if (n < 3) parse_fail(text, i, "D_n requires n >= 3");
        atom.kind = LatticeAtom::Kind::D;
      } else {
        if (n < 6 || n > 8) parse_fail(text, i, "E_n requires n in {6,7,8}");
        atom.kind = LatticeAtom::Kind::E;
      }
      atom.param = n;
    } else if (c == '<') {
      size_t open = i++;
      skip_ws();
      bool neg = false;
      if (i < text.size() && text[i] == '-') { neg = true; ++i; }
      int n = read_uint("integer");
      skip_ws();
      if (i >= text.size() || text[i] != '>') parse_fail(text, open, "unclosed '<'");
      ++i;
      if (neg) n = -n;
      if (n == 0) parse_fail(text, open, "<0> is degenerate");
      if (n % 2 != 0) parse_fail(text, open, "<n> must be even for an even lattice");
      atom.kind = LatticeAtom::Kind::Diag;
      atom.param = n;
    } else {
      parse_fail(text, i, "unknown atom");
    }
    int mult = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      mult = read_uint("exponent");
      if (mult < 1) parse_fail(text, i, "exponent must be positive");
    }
    expr.terms.push_back({atom, mult});
    skip_ws();
  }
  if (expect_atom) parse_fail(text, i, "expected atom");
  return expr;
}

namespace {

IntMat negated_cartan(int n, const std::vector<std::pair<int, int>>& edges) {
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) g.at(i, i) = -2;
  for (auto [a, b] : edges) {
    g.at(a, b) = 1;
    g.at(b, a) = 1;
  }
  return g;
}

std::vector<std::pair<int, int>> chain_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return e;
}

}  // namespace

Lattice make_atom(const LatticeAtom& atom) {
  using K = LatticeAtom::Kind;
  switch (atom.kind) {
    case K::U:
      return Lattice::from_gram(IntMat{{0, 1}, {1, 0}}, "U");
    case K::U2:
      return Lattice::from_gram(IntMat{{0, 2}, {2, 0}}, "U(2)");
    case K::Diag:
      return Lattice::from_gram(IntMat{{atom.param}}, atom.to_string());
    case K::A:
      return Lattice::from_gram(negated_cartan(atom.param, chain_edges(atom.param)),
                                atom.to_string());
    case K::D: {
      // Basis e1-e2, ..., e_{n-1}-e_n, e_{n-1}+e_n.
      int n = atom.param;
      auto edges = chain_edges(n - 1);
      edges.push_back({n - 3, n - 1});
      return Lattice::from_gram(negated_cartan(n, edges), atom.to_string());
    }
    case K::E: {
      // Chain 1-3-4-5-6(-7-8) with node 2 attached to node 4.
      int n = atom.param;
      std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      if (n >= 7) edges.push_back({5, 6});
      if (n == 8) edges.push_back({6, 7});
      return Lattice::from_gram(negated_cartan(n, edges), atom.to_string());
    }
  }
  throw std::logic_error("unreachable atom kind");
}

Lattice make_lattice(const LatticeExpr& expr) {
  IntMat g(expr.rank(), expr.rank());
  int off = 0;
  for (const auto& [atom, mult] : expr.terms) {
    Lattice block = make_atom(atom);
    for (int k = 0; k < mult; ++k) {
      for (int i = 0; i < block.rank(); ++i)
        for (int j = 0; j < block.rank(); ++j) g.at(off + i, off + j) = block.gram().at(i, j);
      off += block.rank();
    }
  }
  return Lattice::from_gram(std::move(g), expr.to_string(), /*allow_degenerate=*/true);
}

namespace {

// Quarter turn in column convention: e1 -> e2, e2 -> -e1.
IntMat quarter_turn() { return IntMat{{0, -1}, {1, 0}}; }

IntMat build_rotation_matrix() {
  IntMat m(14, 14);
  IntMat r = quarter_turn();
  // <2>^2 block.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i, j) = r.at(i, j);
  // D4 blocks, conjugated from the (f1, Jf1, f2, Jf2) basis back to the
  // simple-root basis. Columns of p: f1, Jf1, f2, Jf2 in root coordinates.
  IntMat p{{1, 0, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 0, 0, 1}};
  IntMat rr(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      rr.at(i, j) = r.at(i, j);
      rr.at(2 + i, 2 + j) = r.at(i, j);
    }
  RatMat pinv_q = rat_inverse(RatMat(p));
  IntMat pinv(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (!is_integral(pinv_q.at(i, j))) throw std::logic_error("basis change not unimodular");
      pinv.at(i, j) = rat_num(pinv_q.at(i, j));
    }
  IntMat block = p * rr * pinv;
  for (int b = 0; b < 3; ++b) {
    int off = 2 + 4 * b;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(off + i, off + j) = block.at(i, j);
  }
  return m;
}

OrderFourAction build_rotation() {
  OrderFourAction act{make_lattice("<2>^2 + D4^3"), build_rotation_matrix()};
  IsometryCheck chk = is_isometry(act.host, act.matrix);
  if (!chk.isometry || chk.order != 4) throw std::logic_error("rotation is not an order-4 isometry");
  if (act.matrix * act.matrix != -IntMat::identity(14))
    throw std::logic_error("rotation squared is not -I");
  if (fixed_sublattice(act.matrix).rows() != 0)
    throw std::logic_error("rotation has a nonzero fixed sublattice");
  return act;
}

struct RootClassProfile {
  int rank;
  Signature sig;
  std::vector<Int> factors;
  std::optional<int> delta;
};

RootClassProfile profile_of(const Lattice& l) {
  DiscriminantData d = discriminant_data(l);
  return {l.rank(), signature(l), d.invariant_factors, d.delta};
}

bool matches(const RootClassProfile& a, const RootClassProfile& b) {
  return a.rank == b.rank && a.sig == b.sig && a.factors == b.factors && a.delta == b.delta;
}

}  // namespace

const OrderFourAction& transcendental_rotation() {
  static const OrderFourAction act = build_rotation();
  return act;
}

RootClass classify_root(const std::vector<Int>& r) {
  const OrderFourAction& act = transcendental_rotation();
  if (int(r.size()) != 14) throw InputError("root must have 14 coordinates");
  if (act.host.norm(r) != -2) throw InputError("vector is not a root (norm != -2)");
  std::vector<Int> jr = act.apply(r);
  SaturationResult plane = saturate(act.host, {r, jr});
  std::vector<std::vector<Int>> basis;
  for (int i = 0; i < plane.basis.rows(); ++i) {
    std::vector<Int> row(14);
    for (int j = 0; j < 14; ++j) row[j] = plane.basis.at(i, j);
    basis.push_back(row);
  }
  Lattice plane_lat = Lattice::from_gram(restrict_gram(act.host.gram(), plane.basis), {},
                                         /*allow_degenerate=*/true);
  if (signature(plane_lat) != Signature{0, 2, 0})
    throw std::logic_error("root plane is not negative definite of rank 2");
  Lattice comp = orthogonal_complement(act.host, basis);
  RootClassProfile got = profile_of(comp);
  static const RootClassProfile node_profile = profile_of(make_lattice("U^2 + A1^8"));
  static const RootClassProfile hyp_profile = profile_of(make_lattice("U(2)^2 + D8"));
  if (matches(got, node_profile)) return RootClass::node_class;
  if (matches(got, hyp_profile)) return RootClass::hyperelliptic_class;
  throw std::logic_error("root complement matches neither mirror class");
}

std::optional<std::vector<Int>> isotropic_rho_vector_search(int bound) {
  if (bound < 0) throw InputError("search bound must be nonnegative");
  const OrderFourAction& act = transcendental_rotation();

  struct BlockData {
    int offset, dim;
    std::vector<std::vector<int>> vecs;  // lexicographic
    std::vector<long long> norm, pair;
  };
  auto block_tables = [&](int offset, int dim) {
    BlockData bd{offset, dim, {}, {}, {}};
    std::vector<int> v(dim, -bound);
    for (;;) {
      bd.vecs.push_back(v);
      int i = dim - 1;
      while (i >= 0 && v[i] == bound) { v[i] = -bound; --i; }
      if (i < 0) break;
      ++v[i];
    }
    const IntMat& g = act.host.gram();
    const IntMat& j = act.matrix;
    for (const auto& w : bd.vecs) {
      long long n = 0, p = 0;
      std::vector<long long> jw(dim, 0);  // J w restricted to the block
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
          jw[a] += j.at(offset + a, offset + b).convert_to<long long>() * w[b];
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
          long long gab = g.at(offset + a, offset + b).convert_to<long long>();
          n += w[a] * gab * w[b];
          p += w[a] * gab * jw[b];
        }
      bd.norm.push_back(n);
      bd.pair.push_back(p);
    }
    return bd;
  };

  BlockData b0 = block_tables(0, 2);
  BlockData b1 = block_tables(2, 4);
  BlockData b2 = block_tables(6, 4);
  BlockData b3 = block_tables(10, 4);

  // Index the last block by (norm, pair) keeping lexicographic order.
  std::map<std::pair<long long, long long>, std::vector<int>> last;
  for (int i = 0; i < int(b3.vecs.size()); ++i)
    last[{b3.norm[i], b3.pair[i]}].push_back(i);

  for (int i0 = 0; i0 < int(b0.vecs.size()); ++i0)
    for (int i1 = 0; i1 < int(b1.vecs.size()); ++i1)
      for (int i2 = 0; i2 < int(b2.vecs.size()); ++i2) {
        long long n = b0.norm[i0] + b1.norm[i1] + b2.norm[i2];
        long long p = b0.pair[i0] + b1.pair[i1] + b2.pair[i2];
        auto it = last.find({-n, -p});
        if (it == last.end()) continue;
        for (int i3 : it->second) {
          std::vector<Int> x(14);
          for (int a = 0; a < 2; ++a) x[a] = b0.vecs[i0][a];
          for (int a = 0; a < 4; ++a) x[2 + a] = b1.vecs[i1][a];
          for (int a = 0; a < 4; ++a) x[6 + a] = b2.vecs[i2][a];
          for (int a = 0; a < 4; ++a) x[10 + a] = b3.vecs[i3][a];
          Int g = 0;
          for (const Int& c : x) g = boost::multiprecision::gcd(g, c);
          if (g != 1) continue;  // zero or imprimitive
          return x;
        }
      }
  return std::nullopt;
}

}  // namespace qk3
