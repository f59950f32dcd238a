#include "doctest.h"

#include "qk3/named.hpp"

using namespace qk3;

TEST_CASE("expression parser round trips") {
  for (const char* e : {"U", "U(2)", "A1^8", "<2>^2 + D4^3", "U + A1^2 + E8^2", "0"}) {
    LatticeExpr expr = parse_lattice_expr(e);
    CHECK(expr.to_string() == e);
  }
  CHECK(parse_lattice_expr("  U +  A1 ^ 8 ").to_string() == "U + A1^8");
}

TEST_CASE("expression parser reports positions") {
  CHECK_THROWS_WITH_AS(parse_lattice_expr("U + Q"), doctest::Contains("position 4"), InputError);
  CHECK_THROWS_AS(parse_lattice_expr("E5"), InputError);
  CHECK_THROWS_AS(parse_lattice_expr("D2"), InputError);
  CHECK_THROWS_AS(parse_lattice_expr("<3>"), InputError);
  CHECK_THROWS_AS(parse_lattice_expr("<0>"), InputError);
  CHECK_THROWS_AS(parse_lattice_expr("A0"), InputError);
  CHECK_THROWS_AS(parse_lattice_expr("U U"), InputError);
  CHECK_THROWS_AS(parse_lattice_expr(""), InputError);
}

TEST_CASE("catalog atoms: determinants and evenness") {
  CHECK(make_lattice("U").det() == -1);
  CHECK(make_lattice("U(2)").det() == -4);
  CHECK(make_lattice("A1").det() == -2);
  CHECK(make_lattice("D4").det() == 4);
  CHECK(abs(make_lattice("E6").det()) == 3);
  CHECK(abs(make_lattice("E7").det()) == 2);
  CHECK(abs(make_lattice("E8").det()) == 1);
  CHECK(make_lattice("<2>").gram() == IntMat{{2}});
  for (const char* e : {"U", "U(2)", "A4", "D5", "E6", "E7", "E8", "<2>", "<-4>"}) {
    Lattice l = make_lattice(e);
    CHECK(!l.degenerate());
    for (int i = 0; i < l.rank(); ++i) CHECK(l.gram().at(i, i) % 2 == 0);
  }
}

TEST_CASE("the two rank-8 catalog pieces pair up") {
  Lattice plus = make_lattice("<2> + A1^7");
  Lattice minus = make_lattice("<2>^2 + D4^3");
  CHECK(plus.rank() == 8);
  CHECK(signature(plus) == Signature{1, 7, 0});
  CHECK(minus.rank() == 14);
  CHECK(signature(minus) == Signature{2, 12, 0});
  CHECK(plus.rank() + minus.rank() == 22);
  CHECK(discriminant_data(plus).invariant_factors == discriminant_data(minus).invariant_factors);
}

TEST_CASE("rank-14 lattice invariants: ell = 8, delta = 1") {
  DiscriminantData d = discriminant_data(make_lattice("<2>^2 + D4^3"));
  CHECK(d.ell == 8);
  CHECK(d.two_elementary);
  CHECK(d.delta == 1);
}

TEST_CASE("order-four action invariants") {
  const OrderFourAction& act = transcendental_rotation();
  IsometryCheck chk = is_isometry(act.host, act.matrix);
  CHECK(chk.isometry);
  CHECK(chk.order == 4);
  CHECK(act.matrix * act.matrix == -IntMat::identity(14));
  CHECK(fixed_sublattice(act.matrix).rows() == 0);
}

TEST_CASE("action restricts to blocks as paired quarter turns") {
  const OrderFourAction& act = transcendental_rotation();
  const IntMat& m = act.matrix;
  // Off-block entries vanish.
  auto block_of = [](int i) { return i < 2 ? 0 : 1 + (i - 2) / 4; };
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j)
      if (block_of(i) != block_of(j)) CHECK(m.at(i, j) == 0);
  // In the basis (f1, Jf1, f2, Jf2) each D4 block is two quarter turns.
  IntMat p{{1, 0, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 0, 0, 1}};
  IntMat turn2{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  IntMat expected = p * turn2;  // m_block * p must equal p * (J2 (+) J2)
  for (int b = 0; b < 3; ++b) {
    int off = 2 + 4 * b;
    IntMat blk(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) blk.at(i, j) = m.at(off + i, off + j);
    CHECK(blk * p == expected);
  }
}

TEST_CASE("classify_root on block roots and mixed roots") {
  const OrderFourAction& act = transcendental_rotation();
  // f1 in the first D4 block.
  std::vector<Int> f1(14, 0);
  f1[2] = 1;
  RootClass c1 = classify_root(f1);
  RootClass c1j = classify_root(act.apply(f1));
  CHECK(c1 == c1j);  // rho-equivariance

  // Mixed root: generator of the first <2> plus a norm -4 vector of D4.
  std::vector<Int> mixed(14, 0);
  mixed[0] = 1;
  mixed[2] = 1; mixed[3] = 2; mixed[4] = 1; mixed[5] = 2;  // e1+e2+e3+e4
  REQUIRE(act.host.norm(mixed) == -2);
  RootClass c2 = classify_root(mixed);
  CHECK(classify_root(act.apply(mixed)) == c2);

  // Non-root input is rejected.
  std::vector<Int> bad(14, 0);
  bad[2] = 1; bad[3] = 2; bad[4] = 1; bad[5] = 2;  // norm -4
  CHECK_THROWS_AS(classify_root(bad), InputError);
}

TEST_CASE("classify_root equivariance over an enumerated sample") {
  const OrderFourAction& act = transcendental_rotation();
  // All roots supported on the <2>^2 block plus the first D4 block, found by
  // box search; this exercises both pure and mixed supports.
  std::vector<std::vector<Int>> sample;
  std::vector<int> w(6, -2);
  for (;;) {
    std::vector<Int> v(14, 0);
    for (int i = 0; i < 2; ++i) v[i] = w[i];
    for (int i = 0; i < 4; ++i) v[2 + i] = w[2 + i];
    if (act.host.norm(v) == -2) sample.push_back(v);
    int i = 5;
    while (i >= 0 && w[i] == 2) { w[i] = -2; --i; }
    if (i < 0) break;
    ++w[i];
  }
  REQUIRE(sample.size() > 20);
  int node = 0, hyper = 0;
  for (const auto& r : sample) {
    RootClass c = classify_root(r);
    CHECK(classify_root(act.apply(r)) == c);
    (c == RootClass::node_class ? node : hyper)++;
  }
  CHECK(node + hyper == int(sample.size()));
  CHECK(node > 0);  // the block roots land in the node mirror
}

TEST_CASE("isotropic vector search") {
  auto x = isotropic_rho_vector_search(1);
  REQUIRE(x.has_value());
  const OrderFourAction& act = transcendental_rotation();
  CHECK(act.host.norm(*x) == 0);
  CHECK(act.host.inner(*x, act.apply(*x)) == 0);
  Int g = 0;
  for (const Int& c : *x) g = boost::multiprecision::gcd(g, c);
  CHECK(g == 1);

  CHECK(!isotropic_rho_vector_search(0).has_value());

  // The spec's witness: first <2> generator plus f1 of the first D4 block.
  std::vector<Int> witness(14, 0);
  witness[0] = 1;
  witness[2] = 1;
  CHECK(act.host.norm(witness) == 0);
  CHECK(act.host.inner(witness, act.apply(witness)) == 0);
}
