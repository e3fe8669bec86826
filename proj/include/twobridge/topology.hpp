#pragma once
#include <array>
#include <vector>

#include "twobridge/farey.hpp"

namespace tb {

enum class Orientation { Default, Reversed };

struct StrandState {
  int component = -1;
  int direction = 0;  // +1 travelling down the diagram, -1 up
};

struct PlatCrossing {
  int block = 0;     // 1-based twist block
  int level = 0;
  int position = 0;  // strands position and position+1 cross
  int sign = 0;      // right-hand rule
  bool mixed = false;
};

// 4-plat: caps (1,2),(3,4) on top; block k twists strands 2,3 (k odd) or 1,2
// (k even); bottom caps (1,2),(3,4) for n odd and (1,4),(2,3) for n even.
// Each component is oriented downward from its leftmost top endpoint;
// Reversed flips the last traced component.
struct PlatDiagram {
  Slope r;
  ContinuedFraction cf;
  Orientation orientation = Orientation::Default;
  int components = 0;
  std::vector<int> level_block;                 // block of each crossing level
  std::vector<int> level_position;
  std::vector<std::array<StrandState, 4>> nodes;  // nodes[s][j]: strand between levels s-1 and s
  std::vector<PlatCrossing> crossings;
};

PlatDiagram build_plat(const Slope& r, Orientation o = Orientation::Default);

// delta_k = 0 when the strands of block k are parallel, 1 otherwise.
std::vector<int> delta_vector(const PlatDiagram& d);
int linking_number_formula(const PlatDiagram& d);
// Independent count: signed crossings of the block-wise pushoff with the diagram.
int linking_number_diagram(const PlatDiagram& d);
int linking_number_components(const PlatDiagram& d);  // lk(K1, K2), 0 for knots

struct LongitudeClass {
  int components = 1;
  int lk_ell_K = 0;
  int lk_ell_K_diagram = 0;
  int lk_components = 0;
  std::vector<std::array<int, 2>> coefficients;  // (a, b): [l] = a[l0] + b[m]
  std::vector<int> delta;
  bool remark_hypothesis = false;  // all a_i even and n odd
  bool remark_conclusion = false;  // lk = 2
};

LongitudeClass longitude_class(const Slope& r, Orientation o = Orientation::Default);

}  // namespace tb
