#pragma once
// Construction helpers: scaffold pages, and laying curves, arcs, and guides
// through the faces of an existing map. A crossing is specified by a dart d:
// the new strand crosses the edge of d entering from the face left of d and
// leaving on the twin side. Consecutive crossings must see a common face at
// insertion time, which is exactly the condition for the strand to embed.

#include <array>

#include "tri/surface.hpp"

namespace tri {

struct PageHandles {
  std::vector<std::array<int, 2>> loops;  // {A_i, B_i} strand ids
  std::vector<int> rings, tethers;
  int equator = -1;  // closed genus-0 page only
};

// hub with interleaved loops, plus tethered boundary rings
PageHandles make_page(Surface& m, int genus, int nrings);

// edge between the corners after p and after q through their common face;
// returns {x, y} with x inserted after p and y = twin(x) after q
std::pair<Dart, Dart> connect(Surface& m, int strand, Dart p, Dart q);

// chain of edges from the corner after anchor_from, crossing the listed
// darts in order, ending at the corner after anchor_to
void lay_path(Surface& m, int strand, Dart anchor_from,
              const std::vector<Dart>& crossings, Dart anchor_to);

int lay_closed(Surface& m, const std::string& name, Family f,
               const std::vector<Dart>& crossings);

// arc between two ring edges; either dart of the edge may be given, the
// hole-side dart is selected automatically
int lay_arc(Surface& m, const std::string& name, Family f, Dart ring_from,
            const std::vector<Dart>& crossings, Dart ring_to);

// guide attached onto two strand edges (on the right of the given darts)
int lay_guide(Surface& m, const std::string& name, Dart strand_from,
              const std::vector<Dart>& crossings, Dart strand_to);

// crossing sequence a pushoff of closed strand s would make, hugging s on
// its rotation-forward side
std::vector<Dart> parallel_route(const Surface& m, int s);
int lay_parallel(Surface& m, const std::string& name, Family f, int of_strand);

// breadth-first crossing sequence leading from one face to another, never
// entering designated holes, skipping edges owned by the avoid strands;
// deterministic, throws if unreachable
std::vector<Dart> route_faces(const Surface& m, Dart from_face, Dart to_face,
                              const std::vector<int>& avoid);

// the dart of d's edge whose left face is the hole of the ring owning it
Dart ring_hole_side(const Surface& m, Dart d);

}  // namespace tri
