#include "tri/surgery.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "tri/builder.hpp"

namespace tri {

namespace {

bool is_crossing_vertex(const Surface& m, const std::vector<Dart>& orb) {
  return orb.size() == 4 && m.vertex_kind(orb[0]) == VertexKind::Crossing;
}

// strands passing a crossing, one per opposite pair
std::array<int, 2> passages(const Surface& m, const std::vector<Dart>& orb) {
  return {m.owner(orb[0]), m.owner(orb[1])};
}

void rebuild_rotation(Surface& m, const std::vector<Dart>& rot) {
  for (Dart d : rot) m.rot_remove(d);
  for (size_t k = 1; k < rot.size(); k++) m.rot_insert_after(rot[k - 1], rot[k]);
}

void delete_edge(Surface& m, Dart d) {
  Dart t = m.twin(d);
  m.rot_remove(d);
  m.rot_remove(t);
  m.kill_dart(d);
  m.kill_dart(t);
}

}  // namespace

int crossing_count(const Surface& m, int s, int t) {
  int n = 0;
  for (auto& orb : m.all_vertices()) {
    if (!is_crossing_vertex(m, orb)) continue;
    auto p = passages(m, orb);
    if ((p[0] == s && p[1] == t) || (p[0] == t && p[1] == s)) n++;
  }
  return n;
}

int strand_crossing_vertices(const Surface& m, int g) {
  int n = 0;
  for (auto& orb : m.all_vertices()) {
    if (!is_crossing_vertex(m, orb)) continue;
    auto p = passages(m, orb);
    if (p[0] == g || p[1] == g) n++;
  }
  return n;
}

namespace {

// reroute the transversal met at walk[i] so it runs once around the whole
// walk before continuing. The edge ahead of the vertex is cut back to a
// dangling stub, and the detour is laid from the vacated rotation slot,
// crossing one spoke per walk vertex, into the stub. sign > 0 runs against
// the walk order, sign < 0 follows it, always on the same side: a spoke
// crossed head-on is entered from the face ahead of it, its twin from the
// face behind, so the vertex order has to match the crossing style.
void lay_lap(Surface& m, const std::vector<Dart>& walk, int i, int sign) {
  int n = (int)walk.size();
  Dart c_out = walk[i];
  Dart f = m.next(c_out);
  int g = m.owner(f);
  auto piece = m.subdivide(f);
  Dart landing = piece.second;
  m.rot_remove(f);
  m.rot_remove(piece.first);
  m.kill_dart(f);
  m.kill_dart(piece.first);

  std::vector<Dart> route;
  for (int k = 1; k < n; k++) {
    int j = sign > 0 ? (i - k + n) % n : (i + k) % n;
    Dart a = walk[j];
    Dart stop = m.twin(walk[(j - 1 + n) % n]);
    std::vector<Dart> spokes;
    for (Dart e = m.next(a); e != stop; e = m.next(e)) {
      check(e != a, "twist walk misses its own vertex");
      spokes.push_back(e);
    }
    if (sign > 0) {
      for (Dart e : spokes) route.push_back(e);
    } else {
      for (auto it = spokes.rbegin(); it != spokes.rend(); ++it)
        route.push_back(m.twin(*it));
    }
  }
  lay_path(m, g, c_out, route, landing);
}

}  // namespace

void twist_strand(Surface& m, int c, int sign) {
  check(sign == 1 || sign == -1, "twist sign must be +1 or -1");
  check(m.strand(c).family != Family::Scaffold, "cannot twist along scaffolding");
  check(m.strand(c).kind == StrandKind::Closed && m.strand_walk_closed(c),
        "twists run along closed curves");
  auto walk = m.strand_walk(c);
  std::vector<int> visits;
  for (int i = 0; i < (int)walk.size(); i++) {
    VertexKind k = m.vertex_kind(walk[i]);
    if (k == VertexKind::Marker) continue;
    check(k == VertexKind::Crossing,
          std::string("cannot twist through a ") + vertex_kind_name(k) +
              " vertex");
    int t = m.owner(m.next(walk[i]));
    check(t != c, "cannot twist along a self-crossing curve");
    if (m.strand(t).family == Family::Scaffold) continue;
    visits.push_back(i);
  }
  // orientation pinned so that on homology a +1 twist sends x to
  // x + <[c],x>.[c] in the standard symplectic pairing
  for (int i : visits) lay_lap(m, walk, i, -sign);
}

namespace {

// two-cornered disk between two strands; everything needed to splice it out
struct Bigon {
  std::vector<Dart> doomed;
  Dart xa, xb, ya, yb;  // outer continuations at the two corners
};

// a face qualifies when exactly two of its corners are crossings at distinct
// vertices and every other corner is a marker
bool bigon_at(const Surface& m, const std::vector<Dart>& face, Bigon& out) {
  std::vector<Dart> corners;
  for (Dart d : face) {
    VertexKind k = m.vertex_kind(d);
    if (k == VertexKind::Crossing) {
      corners.push_back(d);
    } else if (k != VertexKind::Marker) {
      return false;
    }
  }
  if (corners.size() == 1) fail("monogon face, the diagram has a kink");
  if (corners.size() != 2) return false;
  if (m.vertex_rep(corners[0]) == m.vertex_rep(corners[1])) return false;

  // walk the two sides, each a same-owner chain
  auto side_of = [&](Dart from, Dart to) {
    std::vector<Dart> side;
    size_t at = std::find(face.begin(), face.end(), from) - face.begin();
    while (face[at] != to) {
      side.push_back(face[at]);
      at = (at + 1) % face.size();
    }
    return side;
  };
  std::vector<Dart> s1 = side_of(corners[0], corners[1]);
  std::vector<Dart> s2 = side_of(corners[1], corners[0]);

  int x = m.owner(s1.front()), y = m.owner(s2.front());
  for (int o : {x, y}) {
    const Strand& st = m.strand(o);
    if (st.family == Family::Scaffold || st.kind != StrandKind::Closed) continue;
    check(strand_crossing_vertices(m, o) > 2,
          "removing this disk would leave " + st.name +
              " crossing nothing at all");
  }

  Dart xa = m.next(m.next(s1.front()));
  Dart xb = m.next(m.next(m.twin(s1.back())));
  Dart ya = m.next(m.next(s2.front()));
  Dart yb = m.next(m.next(m.twin(s2.back())));
  // a shared outer edge means the strand is nothing but this disk's rim
  for (auto [o, a, b] : {std::tuple{x, xa, xb}, std::tuple{y, ya, yb}}) {
    if (m.twin(a) != b) continue;
    if (x == y) return false;  // tight curl of one strand, leave it
    fail("removing this disk would strip " + m.strand(o).name + " bare");
  }

  std::set<Dart> doom;
  for (Dart d : m.vertex_orbit(corners[0])) doom.insert(d);
  for (Dart d : m.vertex_orbit(corners[1])) doom.insert(d);
  for (Dart d : s1) {
    doom.insert(d);
    doom.insert(m.twin(d));
  }
  for (Dart d : s2) {
    doom.insert(d);
    doom.insert(m.twin(d));
  }
  for (Dart d : {m.twin(xa), m.twin(xb), m.twin(ya), m.twin(yb)})
    if (doom.count(d)) return false;  // corners entangled with their outers

  out.doomed.assign(doom.begin(), doom.end());
  out.xa = xa;
  out.xb = xb;
  out.ya = ya;
  out.yb = yb;
  return true;
}

void remove_bigon(Surface& m, const Bigon& b) {
  Dart x1 = m.twin(b.xa), x2 = m.twin(b.xb);
  Dart y1 = m.twin(b.ya), y2 = m.twin(b.yb);
  for (Dart d : b.doomed) m.rot_remove(d);
  for (Dart d : b.doomed) m.kill_dart(d);
  m.set_twin(x1, x2);
  m.set_twin(y1, y2);
}

void drop_idle_markers(Surface& m) {
  for (;;) {
    bool did = false;
    for (auto& orb : m.all_vertices()) {
      if (orb.size() != 2) continue;
      if (m.vertex_kind(orb[0]) != VertexKind::Marker) continue;
      int s = m.owner(orb[0]);
      if (m.strand(s).family == Family::Scaffold) continue;
      if (m.twin(orb[0]) == orb[1]) continue;  // one-vertex circle
      Dart tx = m.twin(orb[0]), ty = m.twin(orb[1]);
      if (m.vertex_rep(tx) == m.vertex_rep(ty) && m.vertex_degree(tx) == 4 &&
          m.next(m.next(tx)) == ty)
        continue;  // merged edge would double back on one crossing
      m.dissolve_marker(orb[0]);
      did = true;
      break;
    }
    if (!did) return;
  }
}

}  // namespace

int normalize(Surface& m) {
  int removed = 0;
  for (;;) {
    bool did = false;
    for (auto& face : m.all_faces()) {
      Bigon b;
      if (!bigon_at(m, face, b)) continue;
      remove_bigon(m, b);
      removed++;
      did = true;
      break;
    }
    if (!did) break;
  }
  drop_idle_markers(m);
  return removed;
}

int geometric_intersection(Surface m, int s, int t) {
  normalize(m);
  return crossing_count(m, s, t);
}

int algebraic_intersection(const Surface& m, int s, int t) {
  check(s != t, "signed count needs two distinct strands");
  std::set<Dart> fwd_s, fwd_t;
  for (Dart d : m.strand_walk(s)) fwd_s.insert(d);
  for (Dart d : m.strand_walk(t)) fwd_t.insert(d);
  int total = 0;
  for (auto& orb : m.all_vertices()) {
    if (!is_crossing_vertex(m, orb)) continue;
    auto p = passages(m, orb);
    if (!((p[0] == s && p[1] == t) || (p[0] == t && p[1] == s))) continue;
    Dart fs = kNoDart;
    for (Dart d : orb)
      if (m.owner(d) == s && fwd_s.count(d)) fs = d;
    check(fs != kNoDart, "crossing with no outgoing dart");
    total += fwd_t.count(m.next(fs)) ? 1 : -1;
  }
  return total;
}

void delete_strand(Surface& m, int s) {
  check(m.strand(s).family != Family::Scaffold,
        "scaffolding is structural, cannot delete it");
  auto ds = m.strand_darts(s);
  for (Dart d : ds) m.rot_remove(d);
  for (Dart d : ds) m.kill_dart(d);
  m.remove_strand(s);
}

Surface restrict_families(const Surface& m, const std::vector<Family>& keep) {
  Surface out = m;
  for (int s : out.live_strands()) {
    Family f = out.strand(s).family;
    if (f == Family::Scaffold) continue;
    if (std::find(keep.begin(), keep.end(), f) != keep.end()) continue;
    delete_strand(out, s);
  }
  drop_idle_markers(out);
  return out;
}

namespace {

// after a cut, strands crossed by the cut line are broken into open pieces;
// reassign each piece its own strand, named after the original
void split_severed(Surface& m, int g) {
  auto ds = m.strand_darts(g);
  if (ds.empty()) {
    m.remove_strand(g);
    return;
  }
  std::set<Dart> used;
  std::vector<std::vector<Dart>> pieces;
  for (Dart d : ds) {
    if (used.count(d)) continue;
    if (m.strand_precede(d) != kNoDart) continue;
    std::vector<Dart> piece;
    for (Dart e = d; e != kNoDart; e = m.strand_continue(e)) {
      piece.push_back(e);
      used.insert(e);
      used.insert(m.twin(e));
    }
    pieces.push_back(std::move(piece));
  }
  if (pieces.empty()) return;  // closed loop, never touched
  if (pieces.size() == 1 && m.strand(g).kind == StrandKind::Arc) return;
  const Strand proto = m.strand(g);
  for (size_t k = 0; k < pieces.size(); k++) {
    int ns = m.add_strand(proto.name + "." + std::to_string(k + 1),
                          proto.family, StrandKind::Arc);
    for (Dart e : pieces[k]) {
      m.set_owner(e, ns);
      m.set_owner(m.twin(e), ns);
    }
  }
  check(m.strand_darts(g).empty(), "strand " + proto.name + " left darts behind");
  m.remove_strand(g);
}

}  // namespace

CutResult cut_along(Surface& m, int c) {
  const Strand st = m.strand(c);
  check(st.family != Family::Scaffold, "cuts run along curves, not scaffolding");
  auto walk = m.strand_walk(c);
  check(!walk.empty(), "cannot cut along an empty strand");
  int n = (int)walk.size();
  bool closed = m.strand_walk_closed(c);
  check(closed == (st.kind == StrandKind::Closed), "strand kind out of sync");

  std::vector<Dart> told(n), d2(n), t2(n);
  for (int i = 0; i < n; i++) told[i] = m.twin(walk[i]);
  for (int i = 0; i < n; i++) {
    d2[i] = m.new_dart(c);
    t2[i] = m.new_dart(c);
  }

  // per vertex, the walk dart and the previous twin bracket the rotation
  // into a left arc (kept) and a right arc (moved to the new side)
  std::vector<std::vector<Dart>> plans;
  std::set<int> severed;
  auto interior_plan = [&](int i) {
    Dart a = walk[i];
    Dart b = told[(i - 1 + n) % n];
    auto orb = m.vertex_orbit(a);
    auto it = std::find(orb.begin(), orb.end(), b);
    check(it != orb.end(), "cut line broken at a vertex");
    int pos = (int)(it - orb.begin());
    std::vector<Dart> left, right;
    left.push_back(a);
    for (int p = 1; p < pos; p++) {
      check(m.owner(orb[p]) != c, "cannot cut along a self-crossing curve");
      left.push_back(orb[p]);
      severed.insert(m.owner(orb[p]));
    }
    left.push_back(t2[(i - 1 + n) % n]);
    right.push_back(d2[i]);
    right.push_back(b);
    for (int p = pos + 1; p < (int)orb.size(); p++) {
      check(m.owner(orb[p]) != c, "cannot cut along a self-crossing curve");
      right.push_back(orb[p]);
      severed.insert(m.owner(orb[p]));
    }
    plans.push_back(left);
    plans.push_back(right);
  };

  CutResult out;
  if (closed) {
    for (int i = 0; i < n; i++) interior_plan(i);
    for (int i = 0; i < n; i++) {
      m.set_twin(walk[i], t2[i]);
      m.set_twin(told[i], d2[i]);
    }
    for (auto& p : plans) rebuild_rotation(m, p);
    int left = m.add_strand(st.name + ".cut1", Family::Scaffold, StrandKind::Closed);
    int right = m.add_strand(st.name + ".cut2", Family::Scaffold, StrandKind::Closed);
    m.strand_mut(left).boundary = true;
    m.strand_mut(right).boundary = true;
    for (int i = 0; i < n; i++) {
      m.set_owner(walk[i], left);
      m.set_owner(t2[i], left);
      m.set_owner(told[i], right);
      m.set_owner(d2[i], right);
    }
    out.rings = {left, right};
    m.remove_strand(c);
  } else {
    check(m.vertex_kind(walk[0]) == VertexKind::Endpoint &&
              m.vertex_kind(told[n - 1]) == VertexKind::Endpoint,
          "cut arcs must span boundary rings");
    auto orb0 = m.vertex_orbit(walk[0]);
    auto orbn = m.vertex_orbit(told[n - 1]);
    for (int i = 1; i < n; i++) interior_plan(i);
    // ends split in two; the ring dart bounding the face left of the arc
    // stays with the walk side
    plans.push_back({walk[0], orb0[2]});
    plans.push_back({d2[0], orb0[1]});
    plans.push_back({told[n - 1], orbn[2]});
    plans.push_back({orbn[1], t2[n - 1]});
    std::set<int> old_rings = {m.owner(orb0[1]), m.owner(orbn[1])};
    for (int i = 0; i < n; i++) {
      m.set_twin(walk[i], t2[i]);
      m.set_twin(told[i], d2[i]);
    }
    for (auto& p : plans) rebuild_rotation(m, p);
    // the new boundary circles run along the slit banks and the old ring
    // edges; walking the one-skeleton finds them no matter how the old holes
    // merge with the opened slit
    std::set<Dart> bdry;
    for (int i = 0; i < n; i++)
      for (Dart d : {walk[i], t2[i], told[i], d2[i]}) bdry.insert(d);
    for (int g : old_rings)
      for (Dart d : m.strand_darts(g)) bdry.insert(d);
    std::set<Dart> used;
    int idx = 0;
    for (Dart start : bdry) {
      if (used.count(start)) continue;
      std::vector<Dart> circuit;
      Dart cur = start;
      for (;;) {
        circuit.push_back(cur);
        used.insert(cur);
        used.insert(m.twin(cur));
        Dart in = m.twin(cur);
        Dart nxt = kNoDart;
        for (Dart e : m.vertex_orbit(in)) {
          if (e == in || !bdry.count(e)) continue;
          check(nxt == kNoDart, "cut boundary branches at a vertex");
          nxt = e;
        }
        check(nxt != kNoDart, "cut boundary breaks off at a vertex");
        if (nxt == start) break;
        cur = nxt;
      }
      idx++;
      int ring = m.add_strand(st.name + ".cut" + std::to_string(idx),
                              Family::Scaffold, StrandKind::Closed);
      m.strand_mut(ring).boundary = true;
      for (Dart d : circuit) {
        m.set_owner(d, ring);
        m.set_owner(m.twin(d), ring);
      }
      out.rings.push_back(ring);
    }
    for (int s : m.live_strands())
      if (m.strand_darts(s).empty()) m.remove_strand(s);
  }
  for (int g : severed) split_severed(m, g);
  return out;
}

void cap_ring(Surface& m, int ring) {
  Strand& st = m.strand_mut(ring);
  check(st.family == Family::Scaffold && st.kind == StrandKind::Closed,
        "only scaffold circles bound holes");
  check(st.boundary || st.frontier, st.name + " is not an open ring");
  st.boundary = false;
  st.frontier = false;
}

namespace {

bool face_all_owned_by(const Surface& m, Dart rep, int s) {
  for (Dart d : m.face_orbit(rep))
    if (m.owner(d) != s) return false;
  return true;
}

// a capped circle bounding a bare disk contracts to a point: its rotation
// blocks of outside darts reattach around a single merged vertex
bool contract_capped(Surface& m, int s) {
  const Strand& st = m.strand(s);
  if (st.family != Family::Scaffold || st.kind != StrandKind::Closed) return false;
  if (st.boundary || st.frontier) return false;
  if (m.strand_darts(s).empty() || !m.strand_walk_closed(s)) return false;
  auto walk = m.strand_walk(s);
  int n = (int)walk.size();
  std::vector<Dart> w = walk;
  if (!face_all_owned_by(m, m.face_rep(walk[0]), s)) {
    for (int i = 0; i < n; i++) w[i] = m.twin(walk[n - 1 - i]);
    if (!face_all_owned_by(m, m.face_rep(w[0]), s)) return false;
  }
  // every vertex must be a marker or a junction of plain scaffold stubs
  bool any_stub = false;
  for (Dart d : w) {
    VertexKind k = m.vertex_kind(d);
    if (k == VertexKind::Marker) continue;
    if (k != VertexKind::Junction) return false;
    any_stub = true;
  }
  if (!any_stub) return false;  // a bare circle is its own sphere

  std::vector<std::vector<Dart>> blocks(n);
  for (int i = 0; i < n; i++) {
    auto orb = m.vertex_orbit(w[i]);
    Dart stop = m.twin(w[(i - 1 + n) % n]);
    check(orb.back() == stop, "capped circle rotation out of order");
    for (size_t p = 1; p + 1 < orb.size(); p++) blocks[i].push_back(orb[p]);
  }
  for (int i = 0; i < n; i++) delete_edge(m, w[i]);
  std::vector<Dart> merged;
  for (int i = n - 1; i >= 0; i--)
    for (Dart d : blocks[i]) merged.push_back(d);
  rebuild_rotation(m, merged);
  m.remove_strand(s);
  return true;
}

// scaffold edge hanging loose at a degree-one vertex; removable unless it is
// the last thing tying a flagged ring to the rest of the page
bool remove_spur(Surface& m) {
  for (Dart d : m.darts()) {
    if (m.next(d) != d) continue;
    if (m.strand(m.owner(d)).family != Family::Scaffold) continue;
    Dart t = m.twin(d);
    // a lone segment stays, every component keeps some representative
    if (m.next(t) == t) continue;
    bool guarded = false;
    for (Dart h : m.vertex_orbit(t)) {
      if (h == t) continue;
      const Strand& hs = m.strand(m.owner(h));
      if (!hs.boundary && !hs.frontier) continue;
      int junctions = 0;
      for (Dart rd : m.strand_walk(m.owner(h)))
        if (m.vertex_kind(rd) != VertexKind::Marker) junctions++;
      if (junctions <= 1) guarded = true;
    }
    if (guarded) continue;
    delete_edge(m, d);
    return true;
  }
  return false;
}

bool dissolve_scaffold_marker(Surface& m) {
  for (auto& orb : m.all_vertices()) {
    if (orb.size() != 2) continue;
    if (m.owner(orb[0]) != m.owner(orb[1])) continue;
    int s = m.owner(orb[0]);
    if (m.strand(s).family != Family::Scaffold) continue;
    if (m.twin(orb[0]) == orb[1]) continue;  // one-vertex circle
    Dart tx = m.twin(orb[0]), ty = m.twin(orb[1]);
    if (m.vertex_rep(tx) == m.vertex_rep(ty) && m.vertex_degree(tx) == 4 &&
        m.next(m.next(tx)) == ty)
      continue;
    // an arc whose two ends have met is a circle in all but name
    if (m.strand(s).kind == StrandKind::Arc && m.strand_walk_closed(s))
      m.strand_mut(s).kind = StrandKind::Closed;
    m.dissolve_marker(orb[0]);
    return true;
  }
  return false;
}

// two scaffold arcs meeting end to end fuse into one
bool fuse_scaffold_arcs(Surface& m) {
  for (auto& orb : m.all_vertices()) {
    if (orb.size() != 2) continue;
    int a = m.owner(orb[0]), b = m.owner(orb[1]);
    if (a == b) continue;
    if (m.strand(a).family != Family::Scaffold) continue;
    if (m.strand(b).family != Family::Scaffold) continue;
    if (m.strand(a).kind != StrandKind::Arc) continue;
    if (m.strand(b).kind != StrandKind::Arc) continue;
    int keep = std::min(a, b), lose = std::max(a, b);
    for (Dart d : m.strand_darts(lose)) m.set_owner(d, keep);
    m.remove_strand(lose);
    if (m.strand_walk_closed(keep))
      m.strand_mut(keep).kind = StrandKind::Closed;
    return true;
  }
  return false;
}

}  // namespace

void scaffold_cleanup(Surface& m) {
  for (;;) {
    // dangling trees go first; contracting first can turn the last circle
    // of a component into such a tree and lose the component entirely
    bool did = remove_spur(m);
    if (!did)
      for (int s : m.live_strands())
        if (contract_capped(m, s)) {
          did = true;
          break;
        }
    if (!did && fuse_scaffold_arcs(m)) did = true;
    if (!did && dissolve_scaffold_marker(m)) did = true;
    if (!did) {
      for (int s : m.live_strands())
        if (m.strand_darts(s).empty() && m.strand(s).family == Family::Scaffold) {
          m.remove_strand(s);
          did = true;
        }
    }
    if (!did) return;
  }
}

void surger_along(Surface& m, int c) {
  check(m.strand(c).kind == StrandKind::Closed,
        "surgery runs along a closed curve");
  CutResult cut = cut_along(m, c);
  for (int ring : cut.rings) cap_ring(m, ring);
  scaffold_cleanup(m);
}

}  // namespace tri
