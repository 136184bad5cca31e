#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tri/surface.hpp"

using namespace tri;

// one vertex, two interleaved scaffold loops
static Surface torus_bouquet() {
  Surface m;
  int A1 = m.add_strand("A1", Family::Scaffold, StrandKind::Closed);
  int B1 = m.add_strand("B1", Family::Scaffold, StrandKind::Closed);
  Dart a = m.new_dart(A1), at = m.new_dart(A1);
  Dart b = m.new_dart(B1), bt = m.new_dart(B1);
  m.set_twin(a, at);
  m.set_twin(b, bt);
  m.rot_insert_after(a, b);
  m.rot_insert_after(b, at);
  m.rot_insert_after(at, bt);
  return m;
}

TEST_CASE("torus bouquet") {
  Surface m = torus_bouquet();
  m.validate_map();
  auto st = m.stats();
  CHECK(st.components == 1);
  CHECK(st.vertices == 1);
  CHECK(st.edges == 2);
  CHECK(st.disk_faces == 1);
  CHECK(st.holes == 0);
  CHECK(st.euler == 0);
  CHECK(st.genus == 1);
  CHECK(m.vertex_kind(0) == VertexKind::Junction);
  CHECK(m.strand_walk(0) == std::vector<Dart>{0});
  CHECK(m.strand_walk_closed(0));
  CHECK(m.strand_walk_closed(1));
}

TEST_CASE("subdivide and dissolve round trip") {
  Surface m = torus_bouquet();
  auto [u, v] = m.subdivide(0);
  m.validate_map();
  auto st = m.stats();
  CHECK(st.vertices == 2);
  CHECK(st.edges == 3);
  CHECK(st.genus == 1);
  CHECK(m.vertex_kind(u) == VertexKind::Marker);
  CHECK(m.strand_walk(0) == std::vector<Dart>{0, v});
  m.dissolve_marker(u);
  m.validate_map();
  CHECK(m.stats().vertices == 1);
  CHECK(m.stats().edges == 2);
  CHECK(m.dart_count() == 4);
}

TEST_CASE("sphere equator") {
  Surface m;
  int eq = m.add_strand("equator", Family::Scaffold, StrandKind::Closed);
  Dart e = m.new_dart(eq), et = m.new_dart(eq);
  m.set_twin(e, et);
  m.rot_insert_after(e, et);
  m.validate_map();
  auto st = m.stats();
  CHECK(st.vertices == 1);
  CHECK(st.edges == 1);
  CHECK(st.disk_faces == 2);
  CHECK(st.euler == 2);
  CHECK(st.genus == 0);
  CHECK(m.vertex_kind(e) == VertexKind::Marker);
  CHECK(m.strand_walk_closed(eq));

  // an untethered circle has two pure sides; either one caps to a disk,
  // so the hole designation falls back to the smaller face
  m.strand_mut(eq).boundary = true;
  CHECK(m.hole_faces() == std::vector<Dart>{m.face_rep(e)});
  CHECK(m.stats().holes == 1);
  CHECK(m.stats().euler == 1);

  // nor may its one marker be dissolved away
  m.strand_mut(eq).boundary = false;
  CHECK_THROWS_AS(m.dissolve_marker(e), Error);
}

// two circles meeting twice, four bigon faces on a sphere
static Surface venn_sphere() {
  Surface m;
  int X = m.add_strand("X", Family::A, StrandKind::Closed);
  int Y = m.add_strand("Y", Family::B, StrandKind::Closed);
  Dart x1 = m.new_dart(X), x1t = m.new_dart(X);
  Dart x2 = m.new_dart(X), x2t = m.new_dart(X);
  Dart y1 = m.new_dart(Y), y1t = m.new_dart(Y);
  Dart y2 = m.new_dart(Y), y2t = m.new_dart(Y);
  m.set_twin(x1, x1t);
  m.set_twin(x2, x2t);
  m.set_twin(y1, y1t);
  m.set_twin(y2, y2t);
  m.rot_insert_after(x1, y1);
  m.rot_insert_after(y1, x2t);
  m.rot_insert_after(x2t, y2t);
  m.rot_insert_after(x2, y1t);
  m.rot_insert_after(y1t, x1t);
  m.rot_insert_after(x1t, y2);
  return m;
}

TEST_CASE("two circles crossing twice") {
  Surface m = venn_sphere();
  m.validate_map();
  auto st = m.stats();
  CHECK(st.components == 1);
  CHECK(st.vertices == 2);
  CHECK(st.edges == 4);
  CHECK(st.disk_faces == 4);
  CHECK(st.euler == 2);
  CHECK(st.genus == 0);
  CHECK(m.vertex_kind(0) == VertexKind::Crossing);
  CHECK(m.vertex_kind(1) == VertexKind::Crossing);
  CHECK(m.strand_walk(0) == std::vector<Dart>{0, 2});
  CHECK(m.strand_walk(1) == std::vector<Dart>{4, 6});
  for (auto& f : m.all_faces()) CHECK(f.size() == 2);
}

// disk page: ring with tether to a bare hub, one trivial arc on the ring
TEST_CASE("disk page with one arc") {
  Surface m;
  int R = m.add_strand("R1", Family::Scaffold, StrandKind::Closed);
  m.strand_mut(R).boundary = true;
  int T = m.add_strand("T1", Family::Scaffold, StrandKind::Arc);
  Dart r1 = m.new_dart(R), r2 = m.new_dart(R);
  Dart t1 = m.new_dart(T), t2 = m.new_dart(T);
  m.set_twin(r1, r2);
  m.set_twin(t1, t2);
  // junction rotation (ring out, tether, ring in): hole face is left of r1
  m.rot_insert_after(r1, t2);
  m.rot_insert_after(t2, r2);
  m.validate_map();
  CHECK(m.hole_faces() == std::vector<Dart>{r1});
  CHECK(m.stats().euler == 1);
  CHECK(m.stats().genus == 0);
  CHECK(m.vertex_kind(r1) == VertexKind::Junction);
  CHECK(m.vertex_kind(t1) == VertexKind::Junction);

  // endpoints subdivide darts on the hole side; the arc leaves on the other
  int arc = m.add_strand("arc1", Family::A, StrandKind::Arc);
  auto [u1, v1] = m.subdivide(r1);
  auto [u2, v2] = m.subdivide(v1);
  Dart a1 = m.new_dart(arc), a2 = m.new_dart(arc);
  m.set_twin(a1, a2);
  m.rot_insert_after(v1, a1);
  m.rot_insert_after(v2, a2);
  m.validate_map();
  auto st = m.stats();
  CHECK(st.vertices == 4);
  CHECK(st.edges == 5);
  CHECK(st.disk_faces == 2);
  CHECK(st.holes == 1);
  CHECK(st.euler == 1);
  CHECK(st.genus == 0);
  CHECK(m.vertex_kind(u1) == VertexKind::Endpoint);
  CHECK(m.vertex_kind(u2) == VertexKind::Endpoint);
  CHECK(m.hole_faces() == std::vector<Dart>{r1});
  CHECK(m.face_pure(r1, R));
  CHECK(m.strand_walk(R) == std::vector<Dart>{r1, v1, v2});
  CHECK(m.strand_walk(arc) == std::vector<Dart>{a1});
  CHECK_FALSE(m.strand_walk_closed(arc));

  // capping forgets the hole
  m.strand_mut(R).boundary = false;
  CHECK(m.stats().euler == 2);
  CHECK(m.stats().holes == 0);
}

TEST_CASE("validate_map catches defects") {
  Surface m = torus_bouquet();
  m.set_owner(1, 1);  // half an edge reassigned to the other strand
  CHECK_THROWS_AS(m.validate_map(), Error);

  Surface w;
  int s = w.add_strand("loop", Family::A, StrandKind::Arc);  // wrong kind
  Dart e = w.new_dart(s), et = w.new_dart(s);
  w.set_twin(e, et);
  w.rot_insert_after(e, et);
  CHECK_THROWS_AS(w.validate_map(), Error);
}
