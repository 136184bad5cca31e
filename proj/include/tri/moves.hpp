#pragma once
// Diagram moves. Each move checks its preconditions and throws Error naming
// the offending strands; on success the underlying map is left normalized
// enough for the validators to run. Scaffolding is never twisted or slid, it
// only gets rearranged when a handle is surgered away.

#include <array>
#include <string>

#include "tri/diagram.hpp"

namespace tri {

// twist every strand crossing `curve` once around it, then normalize
void dehn_twist(Diagram& d, const std::string& curve, int sign);

// replace `moving` by its band sum with a pushoff of `over`, banded along
// `guide`; the guide is consumed. `moving` may be an arc, `over` may not.
void handle_slide(Diagram& d, const std::string& moving,
                  const std::string& over, const std::string& guide);

// connected sum with the genus-one piece of the given type at a strand-free
// face (face_hint picks among eligible faces). Returns the names of the new
// curves {dual, pair1, pair2}: the dual meets each pair curve once and the
// pair curves are parallel.
std::array<std::string, 3> stabilize(Diagram& d, int type, int face_hint = -1);

// inverse of stabilize. `a` meets `b` once and `c` once and nothing else,
// `b` and `c` cobound an annulus whose interior is clear of strands; the
// handle carrying `a` is surgered out and all three curves are deleted.
void destabilize(Diagram& d, const std::string& a, const std::string& b,
                 const std::string& c);

// relative diagrams only: new handle by the boundary raising the chosen
// sector count by one, leaving the page and boundary data alone
std::array<std::string, 3> boundary_stabilize(Diagram& d, int sector,
                                              int face_hint = -1);

}  // namespace tri
