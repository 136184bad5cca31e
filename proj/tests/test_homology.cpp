#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "tri/builder.hpp"
#include "tri/homology.hpp"
#include "tri/surface.hpp"
#include "tri/surgery.hpp"

using namespace tri;

namespace {

using Mat = std::vector<std::vector<long long>>;

// oracle: invariant factors via determinantal divisors. d_k = D_k / D_{k-1}
// where D_k is the gcd of all k by k minors. Entirely independent of the
// elimination the library runs.
long long det_rec(const Mat& a, std::vector<int> rows, std::vector<int> cols) {
  size_t k = rows.size();
  if (k == 1) return a[rows[0]][cols[0]];
  long long out = 0;
  for (size_t j = 0; j < k; j++) {
    std::vector<int> sub_cols;
    for (size_t t = 0; t < k; t++)
      if (t != j) sub_cols.push_back(cols[t]);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    long long minor = det_rec(a, sub_rows, sub_cols);
    long long term = a[rows[0]][cols[j]] * minor;
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) i--;
    if (i < 0) return;
    pick[i]++;
    for (int j = i + 1; j < k; j++) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<long long> oracle_diag(const Mat& a) {
  int R = (int)a.size(), C = R ? (int)a[0].size() : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (int k = 1; k <= std::min(R, C); k++) {
    std::vector<std::vector<int>> rs, cs;
    subsets(R, k, rs);
    subsets(C, k, cs);
    long long g = 0;
    for (auto& r : rs)
      for (auto& c : cs) g = std::gcd(g, det_rec(a, r, c));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace

TEST_CASE("smith normal form matches the determinantal divisor oracle") {
  std::mt19937 rng(0xd1a60u);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 100; trial++) {
    int R = dim(rng), C = dim(rng);
    Mat a(R, std::vector<long long>(C));
    for (auto& row : a)
      for (auto& v : row) v = entry(rng);
    auto mine = smith_diagonal(a);
    auto want = oracle_diag(a);
    REQUIRE(mine == want);
    for (size_t i = 0; i < mine.size(); i++) {
      CHECK(mine[i] > 0);
      if (i + 1 < mine.size()) CHECK(mine[i + 1] % mine[i] == 0);
    }
  }
}

TEST_CASE("quotient groups of small presentations") {
  CHECK(quotient_group(2, {{1, 0}, {0, 1}}) == AbelianGroup{0, {}});
  CHECK(quotient_group(2, {{2, 0}}) == AbelianGroup{1, {2}});
  CHECK(quotient_group(2, {{2, 0}, {0, 2}}) == AbelianGroup{0, {2, 2}});
  CHECK(quotient_group(2, {{2, 0}, {0, 3}}) == AbelianGroup{0, {6}});
  CHECK(quotient_group(3, {{1, 2, 3}}) == AbelianGroup{2, {}});
  CHECK(quotient_group(0, {}) == AbelianGroup{0, {}});
  CHECK(group_str(AbelianGroup{0, {}}) == "0");
  CHECK(group_str(AbelianGroup{1, {}}) == "Z");
  CHECK(group_str(AbelianGroup{2, {2, 4}}) == "Z^2 + Z/2 + Z/4");
}

TEST_CASE("homology classes of torus curves in the loop basis") {
  Surface m;
  auto h = make_page(m, 1, 0);
  int x = lay_parallel(m, "x", Family::A, h.loops[0][0]);
  int y = lay_parallel(m, "y", Family::B, h.loops[0][1]);
  m.validate_map();
  CHECK(homology_class(m, h.loops, x) == std::vector<long long>{1, 0});
  CHECK(homology_class(m, h.loops, y) == std::vector<long long>{0, 1});
  CHECK(symplectic_pairing({1, 0}, {0, 1}) == 1);
  CHECK(symplectic_pairing({0, 1}, {1, 0}) == -1);

  // a loop crossing one edge back and forth bounds a disk
  Dart be = m.strand_walk(h.loops[0][1]).front();
  int z = lay_closed(m, "z", Family::C, {be, m.twin(be)});
  m.validate_map();
  CHECK(homology_class(m, h.loops, z) == std::vector<long long>{0, 0});
}

TEST_CASE("twists act on homology by the symplectic formula") {
  Surface m;
  auto h = make_page(m, 1, 0);
  int x = lay_parallel(m, "x", Family::A, h.loops[0][0]);
  int y = lay_parallel(m, "y", Family::B, h.loops[0][1]);
  auto cx = homology_class(m, h.loops, x);
  auto cy = homology_class(m, h.loops, y);

  // surgery rebuilds the rerouted strand, so its walk may come back with
  // either orientation; classes are only pinned up to sign
  auto flip = [](std::vector<long long> v) {
    for (auto& t : v) t = -t;
    return v;
  };
  auto up_to_sign = [&](const std::vector<long long>& a,
                        const std::vector<long long>& b) {
    return a == b || a == flip(b);
  };

  twist_strand(m, x, 1);
  m.validate_map();
  auto cy2 = homology_class(m, h.loops, y);
  std::vector<long long> want = cy;
  long long p = symplectic_pairing(cx, cy);
  for (size_t i = 0; i < want.size(); i++) want[i] += p * cx[i];
  CHECK(up_to_sign(cy2, want));
  CHECK(up_to_sign(cy2, {1, 1}));

  twist_strand(m, x, -1);
  m.validate_map();
  CHECK(up_to_sign(homology_class(m, h.loops, y), cy));
  CHECK(normalize(m) > 0);
  CHECK(up_to_sign(homology_class(m, h.loops, y), cy));
  CHECK(homology_class(m, h.loops, x) == cx);
}

TEST_CASE("four-manifold homology from genus, euler number and classes") {
  // complex projective plane: one handle, the three curves span everything
  auto cp2 = four_homology(1, 3, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(cp2[0] == AbelianGroup{1, {}});
  CHECK(cp2[1] == AbelianGroup{0, {}});
  CHECK(cp2[2] == AbelianGroup{1, {}});
  CHECK(cp2[3] == AbelianGroup{0, {}});
  CHECK(cp2[4] == AbelianGroup{1, {}});

  // circle times three-sphere: all three curves parallel
  auto s1s3 = four_homology(1, 0, {{1, 0}, {1, 0}, {1, 0}});
  CHECK(s1s3[1] == AbelianGroup{1, {}});
  CHECK(s1s3[2] == AbelianGroup{0, {}});
  CHECK(s1s3[3] == AbelianGroup{1, {}});

  // the four-sphere at genus zero
  auto s4 = four_homology(0, 2, {});
  CHECK(s4[1] == AbelianGroup{0, {}});
  CHECK(s4[2] == AbelianGroup{0, {}});
  CHECK(s4[3] == AbelianGroup{0, {}});

  // product of two two-spheres at genus two
  auto s2s2 = four_homology(2, 4,
                            {{1, 0, 0, 0},
                             {0, 0, 1, 0},
                             {0, 1, 0, 0},
                             {0, 0, 0, 1},
                             {1, 1, 0, 0},
                             {0, 0, 1, 1}});
  CHECK(s2s2[1] == AbelianGroup{0, {}});
  CHECK(s2s2[2] == AbelianGroup{2, {}});
  CHECK(s2s2[3] == AbelianGroup{0, {}});

  // torsion example: a double cover signature, k = 1 with a doubled curve
  auto tor = four_homology(1, 2, {{2, 0}});
  CHECK(tor[1] == AbelianGroup{1, {2}});
  CHECK(tor[2] == AbelianGroup{2, {2}});
  CHECK(tor[3] == AbelianGroup{1, {}});
}

TEST_CASE("scaffold words and the polygon relation") {
  Surface m;
  auto h = make_page(m, 1, 0);
  int x = lay_parallel(m, "x", Family::A, h.loops[0][0]);
  m.validate_map();

  auto w = scaffold_word(m, h.loops, x);
  REQUIRE(w.size() == 1);
  CHECK(std::abs(w[0]) == 2);  // one crossing with b1

  auto rel = surface_relation(m, h.loops);
  REQUIRE(rel.size() == 4);
  std::multiset<int> letters(rel.begin(), rel.end());
  CHECK(letters == std::multiset<int>{-2, -1, 1, 2});

  Presentation p;
  p.names = {"a1", "b1"};
  p.relators = {rel, w};
  CHECK(abelianization(p) == AbelianGroup{1, {}});
}

TEST_CASE("tietze simplification") {
  Presentation p;
  p.names = {"a", "b"};
  p.relators = {{1, 2, -1, -2}, {1, 1, 2}};
  Presentation q = tietze_simplify(p);
  CHECK(q.names.size() == 1);
  CHECK(q.relators.empty());
  CHECK(abelianization(q) == AbelianGroup{1, {}});
  CHECK(abelianization(p) == abelianization(q));

  Presentation t;
  t.names = {"a", "b"};
  t.relators = {{1, 2, 1, -2, -1, -2}};
  Presentation t2 = tietze_simplify(t);
  CHECK(t2.names.size() == 2);
  CHECK(t2.relators.size() == 1);
  CHECK(abelianization(t2) == AbelianGroup{1, {}});

  Presentation f;
  f.names = {"a", "b"};
  f.relators = {{2}, {1, -1}, {}};
  Presentation f2 = tietze_simplify(f);
  CHECK(f2.names == std::vector<std::string>{"a"});
  CHECK(f2.relators.empty());
  CHECK(presentation_str(f2) == "<a | >");
}

TEST_CASE("homology class rejects arcs") {
  Surface m;
  auto h = make_page(m, 0, 2);
  int s = lay_arc(m, "s", Family::A, m.strand_walk(h.rings[0]).front(), {},
                  m.strand_walk(h.rings[1]).front());
  std::vector<std::array<int, 2>> no_loops;
  CHECK_THROWS_AS(homology_class(m, no_loops, s), Error);
}

TEST_CASE("twist homology action with two handles") {
  Surface m;
  auto h = make_page(m, 2, 0);
  int x = lay_parallel(m, "x", Family::A, h.loops[0][0]);
  int y = lay_parallel(m, "y", Family::B, h.loops[1][1]);
  m.validate_map();
  CHECK(homology_class(m, h.loops, x) == std::vector<long long>{1, 0, 0, 0});
  CHECK(homology_class(m, h.loops, y) == std::vector<long long>{0, 0, 0, 1});
  // disjoint supports: twisting along x leaves y alone
  twist_strand(m, x, 1);
  m.validate_map();
  CHECK(homology_class(m, h.loops, y) == std::vector<long long>{0, 0, 0, 1});
}