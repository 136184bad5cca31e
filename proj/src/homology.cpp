#include "tri/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "tri/surgery.hpp"

namespace tri {

namespace {

long long add_ll(long long a, long long b) {
  long long r;
  check(!__builtin_add_overflow(a, b, &r), "integer overflow in homology");
  return r;
}

long long sub_ll(long long a, long long b) {
  long long r;
  check(!__builtin_sub_overflow(a, b, &r), "integer overflow in homology");
  return r;
}

long long mul_ll(long long a, long long b) {
  long long r;
  check(!__builtin_mul_overflow(a, b, &r), "integer overflow in homology");
  return r;
}

}  // namespace

std::string group_str(const AbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.rank == 1) parts.push_back("Z");
  if (g.rank > 1) parts.push_back("Z^" + std::to_string(g.rank));
  for (long long t : g.torsion) parts.push_back("Z/" + std::to_string(t));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); i++) out += " + " + parts[i];
  return out;
}

namespace {

using Wide = __int128;
constexpr Wide kWideCap = (Wide)1 << 100;

Wide wide_guard(Wide v) {
  check(v < kWideCap && v > -kWideCap, "integer overflow in homology");
  return v;
}

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

}  // namespace

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> in) {
  int R = (int)in.size();
  int C = R ? (int)in[0].size() : 0;
  std::vector<std::vector<Wide>> a(R, std::vector<Wide>(C));
  for (int i = 0; i < R; i++)
    for (int j = 0; j < C; j++) a[i][j] = in[i][j];
  std::vector<long long> out;
  int t = 0;
  while (t < R && t < C) {
    bool done = false;
    for (;;) {
      // pivot on the smallest entry every pass; remainders shrink fast and
      // the intermediate values stay tame
      int pi = -1, pj = -1;
      for (int i = t; i < R; i++)
        for (int j = t; j < C; j++)
          if (a[i][j] != 0 && (pi < 0 || wide_abs(a[i][j]) < wide_abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        done = true;
        break;
      }
      std::swap(a[t], a[pi]);
      for (int i = 0; i < R; i++) std::swap(a[i][t], a[i][pj]);
      bool clean = true;
      for (int i = t + 1; i < R; i++) {
        if (a[i][t] == 0) continue;
        Wide q = a[i][t] / a[t][t];
        for (int j = t; j < C; j++) a[i][j] = wide_guard(a[i][j] - q * a[t][j]);
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < C; j++) {
        if (a[t][j] == 0) continue;
        Wide q = a[t][j] / a[t][t];
        for (int i = t; i < R; i++) a[i][j] = wide_guard(a[i][j] - q * a[i][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide everything that is left
      bool divides = true;
      for (int i = t + 1; i < R && divides; i++)
        for (int j = t + 1; j < C && divides; j++)
          if (a[i][j] % a[t][t] != 0) {
            for (int jj = t; jj < C; jj++)
              a[t][jj] = wide_guard(a[t][jj] + a[i][jj]);
            divides = false;
          }
      if (divides) break;
    }
    if (done) break;
    Wide d = wide_abs(a[t][t]);
    check(d <= (Wide)__LONG_LONG_MAX__, "invariant factor exceeds 64 bits");
    out.push_back((long long)d);
    t++;
  }
  return out;
}

AbelianGroup quotient_group(int n, const std::vector<std::vector<long long>>& columns) {
  std::vector<std::vector<long long>> mat(n, std::vector<long long>(columns.size(), 0));
  for (size_t j = 0; j < columns.size(); j++) {
    check((int)columns[j].size() == n, "column length does not match the rank");
    for (int i = 0; i < n; i++) mat[i][j] = columns[j][i];
  }
  auto diag = smith_diagonal(mat);
  AbelianGroup g;
  g.rank = n - (long long)diag.size();
  for (long long d : diag)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

namespace {

// transversal strand at a crossing vertex seen from one of its darts
int crossing_other(const Surface& m, Dart d, int s) {
  auto orb = m.vertex_orbit(d);
  for (Dart e : orb)
    if (m.owner(e) != s) return m.owner(e);
  return -1;
}

}  // namespace

std::vector<long long> homology_class(const Surface& m,
                                      const std::vector<std::array<int, 2>>& loops,
                                      int s) {
  check(m.strand(s).kind == StrandKind::Closed,
        "homology classes are read off closed strands");
  int g = (int)loops.size();
  std::vector<long long> cls(2 * g, 0);
  // coefficient on a_i is the signed count against B_i, on b_i against A_i;
  // signs fixed so a parallel push-off of a loop reads off that loop itself
  for (int i = 0; i < g; i++) {
    cls[2 * i] = -algebraic_intersection(m, s, loops[i][1]);
    cls[2 * i + 1] = algebraic_intersection(m, s, loops[i][0]);
  }
  return cls;
}

long long symplectic_pairing(const std::vector<long long>& x,
                             const std::vector<long long>& y) {
  check(x.size() == y.size() && x.size() % 2 == 0, "pairing needs matching 2g vectors");
  long long out = 0;
  for (size_t i = 0; i + 1 < x.size(); i += 2)
    out = add_ll(out, sub_ll(mul_ll(x[i], y[i + 1]), mul_ll(x[i + 1], y[i])));
  return out;
}

std::array<AbelianGroup, 5> four_homology(
    int g, long long chi, const std::vector<std::vector<long long>>& curve_columns) {
  AbelianGroup h1 = quotient_group(2 * g, curve_columns);
  long long b1 = h1.rank;
  long long b2 = chi - 2 + 2 * b1;
  check(b2 >= 0, "euler characteristic inconsistent with the first betti number");
  std::array<AbelianGroup, 5> h;
  h[0] = {1, {}};
  h[1] = h1;
  h[2] = {b2, h1.torsion};
  h[3] = {b1, {}};
  h[4] = {1, {}};
  return h;
}

namespace {

std::map<int, int> loop_generators(const std::vector<std::array<int, 2>>& loops) {
  std::map<int, int> gen;
  for (size_t i = 0; i < loops.size(); i++) {
    gen[loops[i][0]] = 2 * (int)i + 1;
    gen[loops[i][1]] = 2 * (int)i + 2;
  }
  return gen;
}

}  // namespace

std::vector<int> scaffold_word(const Surface& m,
                               const std::vector<std::array<int, 2>>& loops, int s) {
  check(m.strand(s).kind == StrandKind::Closed, "words are read off closed strands");
  auto gen = loop_generators(loops);
  std::map<int, std::set<Dart>> fwd;
  for (auto [o, k] : gen) {
    (void)k;
    for (Dart d : m.strand_walk(o)) fwd[o].insert(d);
  }
  std::vector<int> word;
  for (Dart d : m.strand_walk(s)) {
    if (m.vertex_kind(d) != VertexKind::Crossing) continue;
    int other = crossing_other(m, d, s);
    auto it = gen.find(other);
    if (it == gen.end()) continue;
    int sign = fwd[other].count(m.next(d)) ? 1 : -1;
    word.push_back(sign * it->second);
  }
  return word;
}

std::vector<int> surface_relation(const Surface& m,
                                  const std::vector<std::array<int, 2>>& loops) {
  Surface r = restrict_families(m, {});
  auto gen = loop_generators(loops);
  auto faces = r.all_faces();
  check(faces.size() == 1, "the scaffold polygon must be a single face");
  std::map<int, std::set<Dart>> fwd;
  for (auto [o, k] : gen) {
    (void)k;
    for (Dart d : r.strand_walk(o)) fwd[o].insert(d);
  }
  std::vector<int> word;
  for (Dart d : faces[0]) {
    // a marker in the middle of a polygon side continues the same letter
    if (r.vertex_kind(d) == VertexKind::Marker) continue;
    int o = r.owner(d);
    auto it = gen.find(o);
    check(it != gen.end(), "non-loop scaffold in a closed page polygon");
    word.push_back(fwd[o].count(d) ? it->second : -it->second);
  }
  return word;
}

namespace {

std::vector<int> invert_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::vector<int> free_reduce(const std::vector<int>& w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

std::vector<int> cyclic_reduce(std::vector<int> w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(w);
  }
  return w;
}

std::vector<int> canonical_cyclic(const std::vector<int>& w) {
  if (w.empty()) return w;
  std::vector<int> best;
  for (auto base : {w, invert_word(w)}) {
    for (size_t r = 0; r < base.size(); r++) {
      std::vector<int> rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

// substitute gen k by the word rep inside w, then renumber letters above k down
std::vector<int> substitute(const std::vector<int>& w, int k,
                            const std::vector<int>& rep) {
  std::vector<int> out;
  for (int x : w) {
    if (x == k)
      out.insert(out.end(), rep.begin(), rep.end());
    else if (x == -k) {
      auto inv = invert_word(rep);
      out.insert(out.end(), inv.begin(), inv.end());
    } else
      out.push_back(x);
  }
  for (int& x : out) {
    if (x > k) x--;
    if (x < -k) x++;
  }
  return free_reduce(out);
}

}  // namespace

Presentation tietze_simplify(Presentation p) {
  for (int round = 0; round < 64; round++) {
    for (auto& r : p.relators) r = cyclic_reduce(r);
    p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(),
                                    [](const std::vector<int>& r) { return r.empty(); }),
                     p.relators.end());
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> kept;
    for (auto& r : p.relators)
      if (seen.insert(canonical_cyclic(r)).second) kept.push_back(r);
    p.relators = std::move(kept);

    // a relator using some generator exactly once lets that generator go
    int pick = -1, gen = 0;
    for (size_t i = 0; i < p.relators.size() && pick < 0; i++) {
      std::map<int, int> uses;
      for (int x : p.relators[i]) uses[std::abs(x)]++;
      for (auto [k, cnt] : uses)
        if (cnt == 1) {
          pick = (int)i;
          gen = k;
          break;
        }
    }
    if (pick < 0) return p;
    std::vector<int> r = p.relators[pick];
    auto it = std::find_if(r.begin(), r.end(),
                           [&](int x) { return std::abs(x) == gen; });
    std::rotate(r.begin(), it, r.end());
    // r = gen^e . w, so gen^e = w^-1
    std::vector<int> rest(r.begin() + 1, r.end());
    std::vector<int> rep = invert_word(rest);
    if (r[0] < 0) rep = invert_word(rep);
    p.relators.erase(p.relators.begin() + pick);
    for (auto& w : p.relators) w = substitute(w, gen, rep);
    p.names.erase(p.names.begin() + (gen - 1));
  }
  return p;
}

AbelianGroup abelianization(const Presentation& p) {
  int n = (int)p.names.size();
  std::vector<std::vector<long long>> cols;
  for (auto& r : p.relators) {
    std::vector<long long> col(n, 0);
    for (int x : r) {
      int k = std::abs(x) - 1;
      check(k >= 0 && k < n, "relator letter out of range");
      col[k] = add_ll(col[k], x > 0 ? 1 : -1);
    }
    cols.push_back(col);
  }
  return quotient_group(n, cols);
}

std::string presentation_str(const Presentation& p) {
  std::string out = "<";
  for (size_t i = 0; i < p.names.size(); i++)
    out += (i ? ", " : "") + p.names[i];
  out += " | ";
  for (size_t i = 0; i < p.relators.size(); i++) {
    if (i) out += ", ";
    if (p.relators[i].empty()) out += "1";
    for (size_t j = 0; j < p.relators[i].size(); j++) {
      int x = p.relators[i][j];
      if (j) out += " ";
      out += p.names[std::abs(x) - 1];
      if (x < 0) out += "^-1";
    }
  }
  out += ">";
  return out;
}

}  // namespace tri
