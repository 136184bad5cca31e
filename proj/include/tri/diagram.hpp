#pragma once
// Trisection diagrams on top of combinatorial surfaces: parameter checking
// for closed and relative (arced) diagrams, mirroring, a canonical isomorphism
// code, and the bundled standard diagrams.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tri/builder.hpp"
#include "tri/surface.hpp"

namespace tri {

enum class Variant : uint8_t { Closed, RelativeArced, Patch };

// Parameters read off a diagram. Closed diagrams use (g; k1,k2,k3) and keep
// p = b = 0. Relative diagrams carry the page data (p, b) as well; the three
// sector counts agree for balanced diagrams but are stored separately since
// moves can unbalance them.
struct TrisectionParams {
  bool closed = true;
  int g = 0;
  int k1 = 0, k2 = 0, k3 = 0;
  int p = 0, b = 0;
  bool operator==(const TrisectionParams&) const = default;
  bool balanced() const { return k1 == k2 && k2 == k3; }
};

std::string params_str(const TrisectionParams& t);

struct Diagram {
  Surface m;
  std::vector<std::array<int, 2>> loops;  // {A_i, B_i} scaffold handle pairs
  Variant variant = Variant::Closed;
};

// live strands of one family split by kind, ascending ids
std::vector<int> family_closed(const Surface& m, Family f);
std::vector<int> family_arcs(const Surface& m, Family f);

// the one or two rings an arc ends on (repeated id if both ends share a ring)
std::array<int, 2> arc_end_rings(const Surface& m, int s);

// Checks that each family is a genus-g cut system (cutting gives a planar
// connected surface) and that families are internally disjoint, then returns
// the parameters with k_i = g - rank of the intersection pairing between
// families i and i+1.
TrisectionParams validate_closed(const Diagram& d);

// Relative counterpart: each family holds g-p closed curves and 2p+b-1 arcs;
// cutting the curves leaves a connected genus-p surface, and after capping
// the cut circles the arcs cut the page to a disk. Sector counts come from
// k_i = (g+p+b-1) - rank of the pairing between the closed curves.
TrisectionParams validate_relative(const Diagram& d);

// dispatch on variant; patch pieces carry no parameter contract and throw
TrisectionParams validate(const Diagram& d);

// orientation reversal; an involution. Every crossing sign flips.
Diagram mirror(const Diagram& d);

// Isomorphism code of the underlying map: minimal breadth-first encoding over
// all starting darts, after suppressing marker vertices. Strand names never
// enter the code, only family/kind/ring flags; `relabel` overrides the label
// of selected strands (by id) when a comparison needs to pin strands.
std::string canonical_code(const Surface& m,
                           const std::map<int, std::string>& relabel = {});
std::string canonical_code(const Diagram& d);

// lay a closed curve, trying dart flips and crossing orders until one embeds
// and satisfies `accept`; restores the surface between attempts and returns
// -1 when nothing fits
int lay_closed_search(Surface& m, const std::string& name, Family f,
                      const std::vector<std::vector<Dart>>& options,
                      const std::function<bool(const Surface&, int)>& accept);

Diagram standard(const std::string& name);
std::vector<std::string> standard_names();

}  // namespace tri
