#pragma once
// Combinatorial surface maps. A surface is a set of darts (directed half
// edges) with an involution twin and a counterclockwise rotation next.
// Vertices are next-orbits, faces are next(twin(.))-orbits, and every dart
// is owned by a strand: a curve, arc, guide, or piece of scaffolding drawn
// on the surface. Everything else in the library is built on this type.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tri {

using Dart = int32_t;
inline constexpr Dart kNoDart = -1;

enum class Family : uint8_t { A, B, C, Scaffold, Guide, Grey };
enum class StrandKind : uint8_t { Closed, Arc };
enum class VertexKind : uint8_t { Crossing, Marker, Endpoint, Attach, Junction };

const char* family_name(Family f);
Family family_from_name(const std::string& s);
const char* strand_kind_name(StrandKind k);
const char* vertex_kind_name(VertexKind k);

// families that draw honest diagram curves or arcs
inline bool family_curvelike(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::Grey;
}

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

[[noreturn]] void fail(const std::string& msg);
inline void check(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

struct Strand {
  std::string name;
  Family family = Family::Scaffold;
  StrandKind kind = StrandKind::Closed;
  bool boundary = false;  // scaffold ring bounding a designated hole
  bool frontier = false;  // ring left open by a partial gluing
  bool dead = false;
};

struct SurfaceStats {
  int components = 0;
  int vertices = 0;
  int edges = 0;
  int disk_faces = 0;  // faces that are not designated holes
  int holes = 0;
  int euler = 0;  // V - E + disk_faces, the punctured surface
  int genus = 0;  // summed over components
};

class Surface {
 public:
  // --- strands ---
  int add_strand(const std::string& name, Family f, StrandKind k);
  int strand_count() const { return (int)strands_.size(); }
  const Strand& strand(int s) const { return strands_.at(s); }
  Strand& strand_mut(int s) { return strands_.at(s); }
  int find_strand(const std::string& name) const;     // -1 if absent
  int strand_checked(const std::string& name) const;  // throws if absent
  void remove_strand(int s);                          // its darts must already be gone
  std::vector<int> live_strands() const;

  // --- darts ---
  Dart new_dart(int owner);
  int dart_limit() const { return (int)twin_.size(); }
  bool alive(Dart d) const { return d >= 0 && d < dart_limit() && alive_[d]; }
  Dart twin(Dart d) const { return twin_.at(d); }
  Dart next(Dart d) const { return next_.at(d); }
  Dart prev(Dart d) const { return prev_.at(d); }
  int owner(Dart d) const { return owner_.at(d); }
  void set_owner(Dart d, int s) { owner_.at(d) = s; }
  std::vector<Dart> darts() const;  // alive, ascending
  int dart_count() const;

  // --- structure editing ---
  void set_twin(Dart a, Dart b);
  void rot_insert_after(Dart pos, Dart d);  // d becomes next(pos)
  void rot_remove(Dart d);                  // d left as a fixed point of next
  void kill_dart(Dart d);                   // d must be rotation-isolated
  // splits the edge of d with a degree-2 vertex; returns {u, v} where
  // twin(u) = d and v continues toward the old head, rotation (u, v)
  std::pair<Dart, Dart> subdivide(Dart d);
  void dissolve_marker(Dart u);  // u sits at a degree-2 same-owner vertex
  void reverse_orientation();    // flips every rotation; twins and owners stay

  // --- orbits ---
  std::vector<Dart> vertex_orbit(Dart d) const;  // rotation at origin of d
  int vertex_degree(Dart d) const;
  Dart vertex_rep(Dart d) const;                 // min dart of the orbit
  std::vector<Dart> face_orbit(Dart d) const;    // face to the left of d
  Dart face_rep(Dart d) const;
  std::vector<std::vector<Dart>> all_vertices() const;
  std::vector<std::vector<Dart>> all_faces() const;

  VertexKind vertex_kind(Dart d) const;  // classifies the vertex at origin of d

  // --- strand geometry ---
  std::vector<Dart> strand_darts(int s) const;  // ascending, both directions
  // forward dart after the head of d, or kNoDart where the strand stops
  Dart strand_continue(Dart d) const;
  Dart strand_precede(Dart d) const;
  // every edge once, as forward darts; closed strands start at the least dart
  std::vector<Dart> strand_walk(int s) const;
  bool strand_walk_closed(int s) const;

  // --- designated holes ---
  bool face_pure(Dart d, int s) const;  // every dart of face(d) owned by s
  Dart ring_hole_face(int s) const;     // the unique pure face of ring s
  std::vector<Dart> hole_faces() const; // sorted face reps
  bool is_hole_face(Dart d) const;
  std::vector<int> ring_strands() const;  // boundary or frontier, ascending

  // --- checks and counts ---
  void validate_map() const;  // throws Error on the first defect found
  SurfaceStats stats() const;

  std::string dump() const;

 private:
  std::vector<Dart> twin_, next_, prev_;
  std::vector<int32_t> owner_;
  std::vector<uint8_t> alive_;
  std::vector<Strand> strands_;
};

}  // namespace tri
