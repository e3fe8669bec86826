#pragma once
#include <string>
#include <vector>

#include "twobridge/farey.hpp"

namespace tb {

struct Gap {
  Slope lo, hi;          // open interval (lo, hi)
  ReflectionWord word;   // maps int I_source onto (lo, hi)
  int source = 1;
};

struct GapSystem {
  Slope r;
  int depth = 0;
  std::vector<Gap> gaps;  // sorted, pairwise disjoint
  std::vector<Slope> cusp_points;  // finite images of inf and r under the enumerated words

  // Total length of the gaps inside [0,1].
  double covered_length() const;
  const Gap* find(const Slope& s) const;
};

// Reduced words of length <= depth in the four edge reflections generating
// the group, applied to int I1 and int I2.
GapSystem gap_intervals(const Slope& r, int depth);

bool is_end_invariant(const Slope& s, const Slope& r);

enum class Tri { Yes, No, Unknown };
// Does the open interval (lo, hi) meet the limit set? Decided from gap coverage.
Tri meets_limit_set(const Slope& lo, const Slope& hi, const GapSystem& gs);

enum class EndCase { Generic = 0, TwoFifths = 1, NOverTwoNPlusOne = 2, TwoOverTwoNPlusOne = 3 };

struct EndInvariantReport {
  Slope r;
  Slope normalized;  // r or 1 - r, in (0, 1/2)
  bool mirrored = false;
  EndCase kase = EndCase::Generic;
  std::vector<Slope> extra_orbits;  // accidental parabolic slopes, in the frame of r
  GapSystem gap_system;
};

EndInvariantReport bowditch_L(const Slope& r, int depth = 6);
std::string to_string(EndCase c);

}  // namespace tb
