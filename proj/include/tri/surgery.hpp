#pragma once

#include <vector>

#include "tri/surface.hpp"

namespace tri {

// crossing vertices whose two transversal passages belong to s and t
int crossing_count(const Surface& m, int s, int t);

// crossing vertices with at least one passage on strand g
int strand_crossing_vertices(const Surface& m, int g);

// Dehn twist along the closed embedded strand c, applied to every
// non-scaffold strand crossing it; sign = +1 or -1 picks the handedness.
// Each moving transversal is rerouted through a full circuit parallel to
// c, so the picture gains one crossing per moving transversal per strand
// edge that c crosses. The result is not normalized.
void twist_strand(Surface& m, int c, int sign);

// remove two-cornered disk faces until none remain, innermost (smallest
// representative dart) first, then dissolve idle markers on non-scaffold
// strands. A removal that would leave a non-scaffold strand without any
// crossing is an error, as is a one-cornered disk face. Returns the
// number of faces removed.
int normalize(Surface& m);

// minimal crossing number of the pair, computed on a normalized copy
int geometric_intersection(Surface m, int s, int t);

// signed crossing sum, each strand oriented by its walk
int algebraic_intersection(const Surface& m, int s, int t);

// drop a strand's edges; crossings with it degrade to markers
void delete_strand(Surface& m, int s);

// copy keeping the scaffold plus the listed families
Surface restrict_families(const Surface& m, const std::vector<Family>& keep);

struct CutResult {
  std::vector<int> rings;  // boundary strands created by the cut
};

// cut the surface open along a closed strand (two new rings) or along an
// arc with both endpoints on rings (the touched boundary reshapes into
// one or two new rings). Transversal strands are severed into pieces
// named <name>.1, <name>.2, ...; the cut strand itself is consumed.
CutResult cut_along(Surface& m, int strand);

// fill a boundary ring back in; its hole stops counting
void cap_ring(Surface& m, int ring);

// cut along a closed strand, cap both new rings, tidy the scaffold
void surger_along(Surface& m, int c);

// retract dangling scaffold spurs and dissolve idle scaffold markers;
// never strips a flagged ring's last attachment
void scaffold_cleanup(Surface& m);

}  // namespace tri
