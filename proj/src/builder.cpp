#include "tri/builder.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace tri {

PageHandles make_page(Surface& m, int genus, int nrings) {
  check(m.dart_limit() == 0, "make_page wants a fresh surface");
  check(genus >= 0 && nrings >= 0, "make_page: bad parameters");
  PageHandles h;
  if (genus == 0 && nrings == 0) {
    int eq = m.add_strand("E1", Family::Scaffold, StrandKind::Closed);
    Dart e = m.new_dart(eq), et = m.new_dart(eq);
    m.set_twin(e, et);
    m.rot_insert_after(e, et);
    h.equator = eq;
    return h;
  }
  Dart hub_last = kNoDart;
  auto hub_append = [&](Dart d) {
    if (hub_last != kNoDart) m.rot_insert_after(hub_last, d);
    hub_last = d;
  };
  for (int i = 1; i <= genus; i++) {
    int A = m.add_strand("A" + std::to_string(i), Family::Scaffold,
                         StrandKind::Closed);
    int B = m.add_strand("B" + std::to_string(i), Family::Scaffold,
                         StrandKind::Closed);
    Dart a = m.new_dart(A), at = m.new_dart(A);
    Dart b = m.new_dart(B), bt = m.new_dart(B);
    m.set_twin(a, at);
    m.set_twin(b, bt);
    hub_append(a);
    hub_append(b);
    hub_append(at);
    hub_append(bt);
    h.loops.push_back({A, B});
  }
  for (int j = 1; j <= nrings; j++) {
    int R = m.add_strand("R" + std::to_string(j), Family::Scaffold,
                         StrandKind::Closed);
    int T = m.add_strand("T" + std::to_string(j), Family::Scaffold,
                         StrandKind::Arc);
    m.strand_mut(R).boundary = true;
    Dart r = m.new_dart(R), rt = m.new_dart(R);
    Dart t = m.new_dart(T), tt = m.new_dart(T);
    m.set_twin(r, rt);
    m.set_twin(t, tt);
    hub_append(t);
    // junction rotation (ring out, tether, ring in): hole left of r
    m.rot_insert_after(r, tt);
    m.rot_insert_after(tt, rt);
    h.rings.push_back(R);
    h.tethers.push_back(T);
  }
  return h;
}

std::pair<Dart, Dart> connect(Surface& m, int strand, Dart p, Dart q) {
  check(m.alive(p) && m.alive(q), "connect: dead darts");
  check(m.face_rep(m.twin(p)) == m.face_rep(m.twin(q)),
        "connect: corners do not share a face");
  Dart x = m.new_dart(strand), y = m.new_dart(strand);
  m.set_twin(x, y);
  m.rot_insert_after(p, x);
  m.rot_insert_after(q, y);
  return {x, y};
}

namespace {

// exit and entry corners left open while a strand is being laid
struct Port {
  Dart entry = kNoDart;  // insert the arriving twin dart after this
  Dart exit = kNoDart;   // insert the departing dart after this
};

Port crossing_port(Surface& m, Dart d) {
  auto [u, v] = m.subdivide(d);
  return {u, v};
}

}  // namespace

Dart ring_hole_side(const Surface& m, Dart d) {
  int r = m.owner(d);
  const Strand& st = m.strand(r);
  check(st.family == Family::Scaffold && st.kind == StrandKind::Closed &&
            (st.boundary || st.frontier),
        "arc endpoint must sit on a boundary ring, got " + st.name);
  Dart hole = m.ring_hole_face(r);
  if (m.face_rep(d) == hole) return d;
  Dart t = m.twin(d);
  check(m.face_rep(t) == hole, "ring edge does not touch its hole");
  return t;
}

int lay_closed(Surface& m, const std::string& name, Family f,
               const std::vector<Dart>& crossings) {
  check(!crossings.empty(), "a floating closed curve is not supported");
  int s = m.add_strand(name, f, StrandKind::Closed);
  int n = (int)crossings.size();
  std::vector<Port> ports;
  ports.reserve(n);
  for (Dart d : crossings) ports.push_back(crossing_port(m, d));
  Dart first_edge = kNoDart;
  for (int i = 0; i < n; i++) {
    auto [x, y] = connect(m, s, ports[i].exit, ports[(i + 1) % n].entry);
    (void)y;
    if (i == 0) first_edge = x;
  }
  // a one-crossing circle needs a marker so its crossing stays transversal
  if (n == 1) m.subdivide(first_edge);
  return s;
}

int lay_arc(Surface& m, const std::string& name, Family f, Dart ring_from,
            const std::vector<Dart>& crossings, Dart ring_to) {
  check(family_curvelike(f), "arcs belong to curve families");
  int s = m.add_strand(name, f, StrandKind::Arc);
  Dart start = ring_hole_side(m, ring_from);
  auto [su, sv] = m.subdivide(start);
  (void)su;
  std::vector<Port> ports;
  for (Dart d : crossings) ports.push_back(crossing_port(m, d));
  Dart stop = ring_hole_side(m, ring_to);
  auto [eu, ev] = m.subdivide(stop);
  (void)eu;
  Dart open = sv;  // exit slot of the start endpoint
  for (auto& p : ports) {
    connect(m, s, open, p.entry);
    open = p.exit;
  }
  connect(m, s, open, ev);  // end endpoint takes the arriving dart after v
  return s;
}

int lay_guide(Surface& m, const std::string& name, Dart strand_from,
              const std::vector<Dart>& crossings, Dart strand_to) {
  int s = m.add_strand(name, Family::Guide, StrandKind::Arc);
  auto [su, sv] = m.subdivide(strand_from);
  (void)su;
  std::vector<Port> ports;
  for (Dart d : crossings) ports.push_back(crossing_port(m, d));
  auto [eu, ev] = m.subdivide(strand_to);
  (void)eu;
  Dart open = sv;
  for (auto& p : ports) {
    connect(m, s, open, p.entry);
    open = p.exit;
  }
  connect(m, s, open, ev);
  return s;
}

void lay_path(Surface& m, int strand, Dart anchor_from,
              const std::vector<Dart>& crossings, Dart anchor_to) {
  std::vector<Port> ports;
  ports.reserve(crossings.size());
  for (Dart d : crossings) ports.push_back(crossing_port(m, d));
  Dart open = anchor_from;
  for (auto& p : ports) {
    connect(m, strand, open, p.entry);
    open = p.exit;
  }
  connect(m, strand, open, anchor_to);
}

// spokes are crossed head-on, which enters each from the face ahead of it,
// so the copy runs against the walk order: vertices are visited last to
// first, spokes at each vertex kept in rotation order
std::vector<Dart> parallel_route(const Surface& m, int s) {
  auto walk = m.strand_walk(s);
  check(m.strand_walk_closed(s), "parallel_route wants a closed strand");
  int n = (int)walk.size();
  std::vector<Dart> out;
  for (int i = n - 1; i >= 0; i--) {
    Dart arriving = walk[(i - 1 + n) % n];
    Dart in = m.twin(arriving);
    Dart e = m.next(walk[i]);
    while (e != in) {
      check(e != walk[i], "parallel_route: walk misses its own vertex");
      out.push_back(e);
      e = m.next(e);
    }
  }
  check(!out.empty(), "parallel of a strand crossing nothing");
  return out;
}

int lay_parallel(Surface& m, const std::string& name, Family f,
                 int of_strand) {
  return lay_closed(m, name, f, parallel_route(m, of_strand));
}

std::vector<Dart> route_faces(const Surface& m, Dart from_face, Dart to_face,
                              const std::vector<int>& avoid) {
  Dart from = m.face_rep(from_face), to = m.face_rep(to_face);
  if (from == to) return {};
  auto holes = m.hole_faces();
  auto is_hole = [&](Dart f) {
    return std::binary_search(holes.begin(), holes.end(), f);
  };
  auto avoided = [&](int s) {
    return std::find(avoid.begin(), avoid.end(), s) != avoid.end();
  };
  std::map<Dart, std::pair<Dart, Dart>> from_via;  // face -> (prev face, dart)
  std::deque<Dart> queue{from};
  from_via[from] = {kNoDart, kNoDart};
  while (!queue.empty()) {
    Dart f = queue.front();
    queue.pop_front();
    if (f == to) break;
    auto orb = m.face_orbit(f);
    std::sort(orb.begin(), orb.end());
    for (Dart d : orb) {
      if (avoided(m.owner(d))) continue;
      Dart g = m.face_rep(m.twin(d));
      if (is_hole(g) || from_via.count(g)) continue;
      from_via[g] = {f, d};
      queue.push_back(g);
    }
  }
  check(from_via.count(to), "route_faces: no route");
  std::vector<Dart> rev;
  for (Dart f = to; f != from;) {
    auto [pf, via] = from_via[f];
    rev.push_back(via);
    f = pf;
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace tri
