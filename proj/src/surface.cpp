#include "tri/surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tri {

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::C: return "c";
    case Family::Scaffold: return "scaffold";
    case Family::Guide: return "guide";
    case Family::Grey: return "grey";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "a") return Family::A;
  if (s == "b") return Family::B;
  if (s == "c") return Family::C;
  if (s == "scaffold") return Family::Scaffold;
  if (s == "guide") return Family::Guide;
  if (s == "grey") return Family::Grey;
  fail("unknown family name: " + s);
}

const char* strand_kind_name(StrandKind k) {
  return k == StrandKind::Closed ? "closed" : "arc";
}

const char* vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Crossing: return "crossing";
    case VertexKind::Marker: return "marker";
    case VertexKind::Endpoint: return "endpoint";
    case VertexKind::Attach: return "attach";
    case VertexKind::Junction: return "junction";
  }
  return "?";
}

void fail(const std::string& msg) { throw Error(msg); }

// --- strands ---

int Surface::add_strand(const std::string& name, Family f, StrandKind k) {
  check(!name.empty(), "strand needs a name");
  check(find_strand(name) < 0, "duplicate strand name: " + name);
  Strand s;
  s.name = name;
  s.family = f;
  s.kind = k;
  strands_.push_back(s);
  return (int)strands_.size() - 1;
}

int Surface::find_strand(const std::string& name) const {
  for (int i = 0; i < (int)strands_.size(); i++)
    if (!strands_[i].dead && strands_[i].name == name) return i;
  return -1;
}

int Surface::strand_checked(const std::string& name) const {
  int s = find_strand(name);
  check(s >= 0, "no strand named " + name);
  return s;
}

void Surface::remove_strand(int s) {
  check(s >= 0 && s < strand_count() && !strands_[s].dead, "bad strand id");
  for (Dart d = 0; d < dart_limit(); d++)
    check(!alive_[d] || owner_[d] != s,
          "remove_strand: " + strands_[s].name + " still owns darts");
  strands_[s].dead = true;
}

std::vector<int> Surface::live_strands() const {
  std::vector<int> out;
  for (int i = 0; i < strand_count(); i++)
    if (!strands_[i].dead) out.push_back(i);
  return out;
}

// --- darts ---

Dart Surface::new_dart(int owner) {
  check(owner >= 0 && owner < strand_count() && !strands_[owner].dead,
        "new_dart: bad owner");
  Dart d = (Dart)twin_.size();
  twin_.push_back(kNoDart);
  next_.push_back(d);
  prev_.push_back(d);
  owner_.push_back(owner);
  alive_.push_back(1);
  return d;
}

std::vector<Dart> Surface::darts() const {
  std::vector<Dart> out;
  for (Dart d = 0; d < dart_limit(); d++)
    if (alive_[d]) out.push_back(d);
  return out;
}

int Surface::dart_count() const {
  int n = 0;
  for (Dart d = 0; d < dart_limit(); d++) n += alive_[d] ? 1 : 0;
  return n;
}

// --- structure editing ---

void Surface::set_twin(Dart a, Dart b) {
  check(alive(a) && alive(b) && a != b, "set_twin: bad darts");
  twin_[a] = b;
  twin_[b] = a;
}

void Surface::rot_insert_after(Dart pos, Dart d) {
  check(alive(pos) && alive(d), "rot_insert_after: bad darts");
  check(next_[d] == d, "rot_insert_after: dart already placed");
  Dart n = next_[pos];
  next_[pos] = d;
  prev_[d] = pos;
  next_[d] = n;
  prev_[n] = d;
}

void Surface::rot_remove(Dart d) {
  check(alive(d), "rot_remove: dead dart");
  Dart p = prev_[d], n = next_[d];
  if (p == d) return;  // already isolated
  next_[p] = n;
  prev_[n] = p;
  next_[d] = d;
  prev_[d] = d;
}

void Surface::kill_dart(Dart d) {
  check(alive(d), "kill_dart: dead dart");
  check(next_[d] == d, "kill_dart: dart still in a rotation");
  alive_[d] = 0;
  twin_[d] = kNoDart;
}

std::pair<Dart, Dart> Surface::subdivide(Dart d) {
  check(alive(d) && twin_[d] != kNoDart, "subdivide: bad dart");
  Dart t = twin_[d];
  int s = owner_[d];
  Dart u = new_dart(s);
  Dart v = new_dart(s);
  rot_insert_after(u, v);  // rotation (u, v) at the new vertex
  set_twin(d, u);
  set_twin(v, t);
  return {u, v};
}

void Surface::dissolve_marker(Dart u) {
  check(alive(u), "dissolve_marker: dead dart");
  Dart v = next_[u];
  check(v != u && next_[v] == u, "dissolve_marker: not a degree-2 vertex");
  check(owner_[u] == owner_[v], "dissolve_marker: owners differ");
  Dart d = twin_[u], t = twin_[v];
  check(d != v, "dissolve_marker: would erase a one-vertex circle");
  rot_remove(u);
  rot_remove(v);
  kill_dart(u);
  kill_dart(v);
  set_twin(d, t);
}

void Surface::reverse_orientation() { std::swap(next_, prev_); }

// --- orbits ---

std::vector<Dart> Surface::vertex_orbit(Dart d) const {
  check(alive(d), "vertex_orbit: dead dart");
  std::vector<Dart> out;
  Dart e = d;
  do {
    out.push_back(e);
    e = next_[e];
    check((int)out.size() <= dart_limit(), "vertex_orbit: rotation corrupt");
  } while (e != d);
  return out;
}

int Surface::vertex_degree(Dart d) const { return (int)vertex_orbit(d).size(); }

Dart Surface::vertex_rep(Dart d) const {
  Dart best = d, e = next_[d];
  while (e != d) {
    best = std::min(best, e);
    e = next_[e];
  }
  return best;
}

std::vector<Dart> Surface::face_orbit(Dart d) const {
  check(alive(d), "face_orbit: dead dart");
  std::vector<Dart> out;
  Dart e = d;
  do {
    out.push_back(e);
    check(twin_[e] != kNoDart, "face_orbit: missing twin");
    e = next_[twin_[e]];
    check((int)out.size() <= dart_limit(), "face_orbit: orbit corrupt");
  } while (e != d);
  return out;
}

Dart Surface::face_rep(Dart d) const {
  Dart best = d, e = next_[twin_[d]];
  while (e != d) {
    best = std::min(best, e);
    e = next_[twin_[e]];
  }
  return best;
}

std::vector<std::vector<Dart>> Surface::all_vertices() const {
  std::vector<std::vector<Dart>> out;
  std::vector<uint8_t> seen(dart_limit(), 0);
  for (Dart d = 0; d < dart_limit(); d++) {
    if (!alive_[d] || seen[d]) continue;
    auto orb = vertex_orbit(d);
    for (Dart e : orb) seen[e] = 1;
    out.push_back(orb);
  }
  return out;
}

std::vector<std::vector<Dart>> Surface::all_faces() const {
  std::vector<std::vector<Dart>> out;
  std::vector<uint8_t> seen(dart_limit(), 0);
  for (Dart d = 0; d < dart_limit(); d++) {
    if (!alive_[d] || seen[d]) continue;
    auto orb = face_orbit(d);
    for (Dart e : orb) seen[e] = 1;
    out.push_back(orb);
  }
  return out;
}

VertexKind Surface::vertex_kind(Dart d) const {
  auto orb = vertex_orbit(d);
  int n = (int)orb.size();
  auto fam = [&](Dart e) { return strands_[owner_[e]].family; };
  if (n == 2 && owner_[orb[0]] == owner_[orb[1]]) return VertexKind::Marker;
  if (n == 4 && owner_[orb[0]] == owner_[orb[2]] &&
      owner_[orb[1]] == owner_[orb[3]] && twin_[orb[0]] != orb[2] &&
      twin_[orb[1]] != orb[3])
    return VertexKind::Crossing;
  bool all_scaffold = true;
  for (Dart e : orb) all_scaffold = all_scaffold && fam(e) == Family::Scaffold;
  if (all_scaffold) return VertexKind::Junction;
  if (n == 3) {
    // endpoint: an arc dart plus two darts of one scaffold ring
    for (int i = 0; i < 3; i++) {
      Dart a = orb[i], r1 = orb[(i + 1) % 3], r2 = orb[(i + 2) % 3];
      const Strand& sa = strands_[owner_[a]];
      if (family_curvelike(sa.family) && sa.kind == StrandKind::Arc &&
          owner_[r1] == owner_[r2] && fam(r1) == Family::Scaffold &&
          strands_[owner_[r1]].kind == StrandKind::Closed)
        return VertexKind::Endpoint;
    }
    // attach: a guide end on a strand passing through
    for (int i = 0; i < 3; i++) {
      Dart g = orb[i], s1 = orb[(i + 1) % 3], s2 = orb[(i + 2) % 3];
      if (fam(g) == Family::Guide && owner_[s1] == owner_[s2] &&
          fam(s1) != Family::Guide)
        return VertexKind::Attach;
    }
  }
  std::ostringstream os;
  os << "unclassifiable vertex at dart " << d << " degree " << n << " owners";
  for (Dart e : orb) os << " " << strands_[owner_[e]].name;
  fail(os.str());
}

// --- strand geometry ---

std::vector<Dart> Surface::strand_darts(int s) const {
  std::vector<Dart> out;
  for (Dart d = 0; d < dart_limit(); d++)
    if (alive_[d] && owner_[d] == s) out.push_back(d);
  return out;
}

Dart Surface::strand_continue(Dart d) const {
  check(alive(d), "strand_continue: dead dart");
  Dart t = twin_[d];
  switch (vertex_kind(t)) {
    case VertexKind::Crossing:
      return next_[next_[t]];
    case VertexKind::Marker:
      return next_[t];
    case VertexKind::Attach: {
      for (Dart e : vertex_orbit(t))
        if (e != t && owner_[e] == owner_[d]) return e;
      return kNoDart;  // the guide stops here
    }
    case VertexKind::Endpoint: {
      if (strands_[owner_[d]].family != Family::Scaffold) return kNoDart;
      for (Dart e : vertex_orbit(t))
        if (e != t && owner_[e] == owner_[d]) return e;
      fail("endpoint vertex lost its ring");
    }
    case VertexKind::Junction: {
      Dart found = kNoDart;
      for (Dart e : vertex_orbit(t)) {
        if (e == t || owner_[e] != owner_[d]) continue;
        check(found == kNoDart, "ambiguous scaffold walk at a junction");
        found = e;
      }
      return found;
    }
  }
  return kNoDart;
}

Dart Surface::strand_precede(Dart d) const {
  Dart back = strand_continue(twin_[d]);
  return back == kNoDart ? kNoDart : twin_[back];
}

std::vector<Dart> Surface::strand_walk(int s) const {
  auto ds = strand_darts(s);
  if (ds.empty()) return {};
  Dart start = kNoDart;
  for (Dart d : ds)
    if (strand_precede(d) == kNoDart) {
      start = d;
      break;  // ds ascending, so this is the least open start
    }
  bool open = start != kNoDart;
  if (!open) start = ds[0];
  std::vector<Dart> walk;
  Dart d = start;
  while (true) {
    walk.push_back(d);
    check((int)walk.size() * 2 <= (int)ds.size(), "strand walk repeats edges");
    Dart n = strand_continue(d);
    if (n == kNoDart || n == start) break;
    d = n;
  }
  check((int)walk.size() * 2 == (int)ds.size(),
        "strand " + strands_[s].name + " is not a single walk");
  if (open)
    check(strand_continue(walk.back()) == kNoDart,
          "strand " + strands_[s].name + " has one loose end");
  return walk;
}

bool Surface::strand_walk_closed(int s) const {
  auto walk = strand_walk(s);
  check(!walk.empty(), "strand has no darts");
  return strand_continue(walk.back()) == walk.front();
}

// --- designated holes ---

bool Surface::face_pure(Dart d, int s) const {
  for (Dart e : face_orbit(d))
    if (owner_[e] != s) return false;
  return true;
}

Dart Surface::ring_hole_face(int s) const {
  const Strand& r = strands_.at(s);
  check(!r.dead && r.family == Family::Scaffold && r.kind == StrandKind::Closed,
        "ring_hole_face: not a scaffold ring");
  std::set<Dart> pure;
  for (Dart d : strand_darts(s))
    if (face_pure(d, s)) pure.insert(face_rep(d));
  // two pure faces force the ring to be a bare circle alone in its
  // component (anything attached would dirty one side), and then either
  // face caps off to a disk, so the designation can be arbitrary
  if (pure.size() == 2) return *pure.begin();
  check(pure.size() == 1, "ring " + r.name + " has " +
                              std::to_string(pure.size()) +
                              " pure faces, wanted exactly 1");
  return *pure.begin();
}

std::vector<int> Surface::ring_strands() const {
  std::vector<int> out;
  for (int s : live_strands())
    if (strands_[s].boundary || strands_[s].frontier) out.push_back(s);
  return out;
}

std::vector<Dart> Surface::hole_faces() const {
  std::vector<Dart> out;
  for (int s : ring_strands()) out.push_back(ring_hole_face(s));
  std::sort(out.begin(), out.end());
  check(std::adjacent_find(out.begin(), out.end()) == out.end(),
        "two rings claim the same hole face");
  return out;
}

bool Surface::is_hole_face(Dart d) const {
  auto holes = hole_faces();
  Dart rep = face_rep(d);
  return std::binary_search(holes.begin(), holes.end(), rep);
}

// --- checks and counts ---

void Surface::validate_map() const {
  for (Dart d = 0; d < dart_limit(); d++) {
    if (!alive_[d]) continue;
    Dart t = twin_[d];
    check(t != kNoDart, "dart " + std::to_string(d) + " has no twin");
    check(alive(t) && t != d && twin_[t] == d,
          "twin involution broken at dart " + std::to_string(d));
    check(owner_[t] == owner_[d],
          "edge at dart " + std::to_string(d) + " straddles two strands");
    check(owner_[d] >= 0 && owner_[d] < strand_count() &&
              !strands_[owner_[d]].dead,
          "dart " + std::to_string(d) + " owned by a dead strand");
    check(alive(next_[d]) && prev_[next_[d]] == d,
          "rotation broken at dart " + std::to_string(d));
  }
  for (const auto& orb : all_vertices()) vertex_kind(orb[0]);
  for (int s : live_strands()) {
    const Strand& st = strands_[s];
    if (strand_darts(s).empty()) continue;
    bool closed = strand_walk_closed(s);
    check(closed == (st.kind == StrandKind::Closed),
          "strand " + st.name + " walk does not match its kind");
    if (st.boundary || st.frontier) {
      check(st.family == Family::Scaffold && st.kind == StrandKind::Closed,
            "ring flags on a non-ring strand " + st.name);
    }
  }
  hole_faces();  // each ring designates exactly one hole, all distinct
}

SurfaceStats Surface::stats() const {
  SurfaceStats st;
  int n = dart_limit();
  // union-find over darts joined by twin and next
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  auto unite = [&](int a, int b) { up[find(a)] = find(b); };
  for (Dart d = 0; d < n; d++) {
    if (!alive_[d]) continue;
    unite(d, twin_[d]);
    unite(d, next_[d]);
  }
  std::map<int, int> vs, es, fs, hs;  // per component root
  for (const auto& orb : all_vertices()) vs[find(orb[0])]++;
  for (Dart d = 0; d < n; d++)
    if (alive_[d] && d < twin_[d]) es[find(d)]++;
  auto holes = hole_faces();
  for (const auto& orb : all_faces()) {
    fs[find(orb[0])]++;
    Dart rep = *std::min_element(orb.begin(), orb.end());
    if (std::binary_search(holes.begin(), holes.end(), rep)) hs[find(orb[0])]++;
  }
  for (auto& [root, v] : vs) {
    int e = es.count(root) ? es[root] : 0;
    int f = fs.count(root) ? fs[root] : 0;
    int h = hs.count(root) ? hs[root] : 0;
    int chi_closed = v - e + f;
    check(chi_closed % 2 == 0 && chi_closed <= 2,
          "component has impossible euler number " + std::to_string(chi_closed));
    st.components++;
    st.vertices += v;
    st.edges += e;
    st.disk_faces += f - h;
    st.holes += h;
    st.genus += (2 - chi_closed) / 2;
  }
  st.euler = st.vertices - st.edges + st.disk_faces;
  return st;
}

std::string Surface::dump() const {
  std::ostringstream os;
  os << "darts (id twin next prev owner):\n";
  for (Dart d = 0; d < dart_limit(); d++) {
    if (!alive_[d]) continue;
    os << "  " << d << " " << twin_[d] << " " << next_[d] << " " << prev_[d]
       << " " << strands_[owner_[d]].name << "\n";
  }
  os << "strands:";
  for (int s : live_strands()) {
    const Strand& st = strands_[s];
    os << " " << st.name << "(" << family_name(st.family) << ","
       << strand_kind_name(st.kind);
    if (st.boundary) os << ",boundary";
    if (st.frontier) os << ",frontier";
    os << ")";
  }
  os << "\n";
  return os.str();
}

}  // namespace tri
