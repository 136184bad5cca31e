#pragma once

#include <array>
#include <string>
#include <vector>

#include "tri/surface.hpp"

namespace tri {

// finitely generated abelian group: Z^rank + sum of Z/t, torsion entries
// greater than one and each dividing the next
struct AbelianGroup {
  long long rank = 0;
  std::vector<long long> torsion;
  bool operator==(const AbelianGroup&) const = default;
};

std::string group_str(const AbelianGroup& g);

// nonzero diagonal of the Smith normal form, d1 | d2 | ... | dr, all positive
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> mat);

// Z^n modulo the span of the given integer columns
AbelianGroup quotient_group(int n, const std::vector<std::vector<long long>>& columns);

// signed crossings of closed strand s against the 2g page loops, coordinates
// ordered (a1, b1, a2, b2, ...)
std::vector<long long> homology_class(const Surface& m,
                                      const std::vector<std::array<int, 2>>& loops,
                                      int s);

// standard symplectic form in those coordinates: <a_i, b_i> = +1
long long symplectic_pairing(const std::vector<long long>& x,
                             const std::vector<long long>& y);

// H0..H4 of a closed trisected 4-manifold: H1 is Z^2g modulo the curve
// classes, chi pins b2, duality fills in the rest
std::array<AbelianGroup, 5> four_homology(
    int g, long long chi, const std::vector<std::vector<long long>>& curve_columns);

struct Presentation {
  std::vector<std::string> names;          // generator names
  std::vector<std::vector<int>> relators;  // letters +k / -k, 1-based
};

std::string presentation_str(const Presentation& p);
Presentation tietze_simplify(Presentation p);
AbelianGroup abelianization(const Presentation& p);

// word of closed strand s in the loop generators, one letter per scaffold
// crossing in walk order
std::vector<int> scaffold_word(const Surface& m,
                               const std::vector<std::array<int, 2>>& loops, int s);

// boundary word of the one-vertex polygon carried by the scaffold loops
std::vector<int> surface_relation(const Surface& m,
                                  const std::vector<std::array<int, 2>>& loops);

}  // namespace tri
