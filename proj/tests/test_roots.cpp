#include "doctest.h"

#include "qk3/lattice.hpp"
#include "qk3/named.hpp"

#include <algorithm>
#include <set>

using namespace qk3;

namespace {

// Independent oracle 1: plain box search over basis coordinates.
std::vector<std::vector<Int>> box_roots(const Lattice& l, int bound) {
  int n = l.rank();
  std::vector<std::vector<Int>> out;
  std::vector<Int> v(n, -bound);
  for (;;) {
    if (l.norm(v) == -2) out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == bound) { v[i] = -bound; --i; }
    if (i < 0) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Independent oracle 2: the even coordinate model of E8, with doubled
// coordinates so everything stays integral. Roots are doubled vectors of
// norm 8: all-even (two entries +-2) or all-odd ((+-1)^8), subject to the
// coordinate-sum lattice condition (sum divisible by 4).
std::vector<std::vector<int>> e8_model_roots() {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          std::vector<int> v(8, 0);
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;  // even number of minus signs
    std::vector<int> v(8, 1);
    for (int b = 0; b < 8; ++b)
      if (mask & (1 << b)) v[b] = -1;
    out.push_back(v);
  }
  return out;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("roots of A1 and A1^2 match box search") {
  auto r1 = roots(make_lattice("A1"));
  CHECK(r1.size() == 2);
  CHECK(r1 == box_roots(make_lattice("A1"), 1));

  auto r2 = roots(make_lattice("A1^2"));
  CHECK(r2.size() == 4);
  CHECK(r2 == box_roots(make_lattice("A1^2"), 1));
}

TEST_CASE("roots of D4 match exhaustive |x_i| <= 2 box search") {
  Lattice d4 = make_lattice("D4");
  auto enumerated = roots(d4);
  auto oracle = box_roots(d4, 2);
  CHECK(enumerated.size() == 24);
  CHECK(enumerated == oracle);
}

TEST_CASE("A_n root counts: n(n+1)") {
  for (int n = 1; n <= 7; ++n) {
    auto r = roots(make_lattice("A" + std::to_string(n)));
    CHECK(int(r.size()) == n * (n + 1));
  }
}

TEST_CASE("D_n root counts: 2n(n-1)") {
  for (int n : {3, 4, 5, 6, 8}) {
    auto r = roots(make_lattice("D" + std::to_string(n)));
    CHECK(int(r.size()) == 2 * n * (n - 1));
  }
}

TEST_CASE("E6, E7, E8, D8 counts against the coordinate-model oracle") {
  auto model = e8_model_roots();
  REQUIRE(model.size() == 240);
  for (const auto& v : model) CHECK(dot(v, v) == 8);  // doubled norm

  // E7 = roots orthogonal to a fixed root; E6 = roots orthogonal to an A2.
  std::vector<int> a(8, 0), b(8, 0);
  a[0] = 2; a[1] = -2;          // doubled e1 - e2
  b[1] = 2; b[2] = -2;          // doubled e2 - e3
  int e7_count = 0, e6_count = 0, d8_count = 0;
  for (const auto& v : model) {
    bool integral = v[0] % 2 == 0;
    if (integral) ++d8_count;
    if (dot(v, a) == 0) ++e7_count;
    if (dot(v, a) == 0 && dot(v, b) == 0) ++e6_count;
  }
  CHECK(d8_count == 112);
  CHECK(e7_count == 126);
  CHECK(e6_count == 72);

  CHECK(roots(make_lattice("E6")).size() == 72);
  CHECK(roots(make_lattice("E7")).size() == 126);
  CHECK(roots(make_lattice("E8")).size() == 240);
  CHECK(roots(make_lattice("D8")).size() == 112);
}

TEST_CASE("root sets are closed under negation and sorted") {
  for (const char* e : {"A3", "D4", "E6"}) {
    auto r = roots(make_lattice(e));
    CHECK(std::is_sorted(r.begin(), r.end()));
    std::set<std::vector<Int>> s(r.begin(), r.end());
    for (auto v : r) {
      for (auto& x : v) x = -x;
      CHECK(s.count(v) == 1);
    }
  }
}

TEST_CASE("positive definite input accepted via internal rescale") {
  Lattice pos = rescale(make_lattice("D4"), -1);
  CHECK(roots(pos).size() == 24);
}

TEST_CASE("roots refuses indefinite or degenerate input") {
  CHECK_THROWS_AS(roots(make_lattice("U")), InputError);
  Lattice z = Lattice::from_gram(IntMat{{0}}, {}, true);
  CHECK_THROWS_AS(roots(z), InputError);
}
