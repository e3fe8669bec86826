#pragma once
#include <array>
#include <string>
#include <vector>

#include "twobridge/mcshane.hpp"

namespace tb {

// One period of the zigzag line of a chain triangle. Point j has slope
// slopes[j mod 3] and position c[j mod 3] + floor(j/3).
struct ZigzagLine {
  std::size_t triangle_index = 0;  // 1-based chain index, 2 <= i <= c-1
  std::array<Slope, 3> slopes;
  std::array<cd, 3> c;

  cd point(long j) const;
  const Slope& slope(long j) const;
};

struct CuspLayout {
  Slope r;
  std::vector<ZigzagLine> lines;
  double L_minus = 0, L_plus = 0;
  std::vector<cd> longitude_path;
  std::vector<Slope> longitude_slopes;
  cd lambda_half;
  double max_gluing_error = 0;
  Slope fold_first, fold_last;  // 1/2 on sigma_2, the vertex of sigma_{c-1} not in sigma_c
  // Signed areas of the triangles between consecutive lines.
  double min_area = 0, max_area = 0;
};

// Throws NotGeometric on vanishing traces or gluing mismatch > 1e-8.
CuspLayout layout_cusp(const Slope& r, const MarkoffEvaluation& ev);

// True when every triangle between consecutive zigzag lines has the same
// nonzero orientation. This is what distinguishes the holonomy from the
// other roots of the trace polynomial.
bool layout_coherently_oriented(const CuspLayout& layout, double tol = 1e-12);

struct FoldReport {
  double fold_error_first = 0;  // |c(P_{j-1}) - c(P_{j+1})| at slope 1/2 on sigma_2
  double fold_error_last = 0;   // same on sigma_{c-1}
  Slope fold_first, fold_last;
  double L_minus = 0, L_plus = 0;
  double strip_excess = 0;      // how far any vertex leaves the strip between L- and L+
  bool oriented = false;
  bool ok(double tol = 1e-9) const {
    return fold_error_first <= tol && fold_error_last <= tol && strip_excess <= tol && oriented;
  }
};

FoldReport fold_report(const CuspLayout& layout);
// Throws NotGeometric("layout not geometric") if fold_report fails.
FoldReport check_simply_folded(const CuspLayout& layout, const Slope& r);

struct SvgOptions {
  int width = 800;
  int height = 600;
  int periods = 2;
  bool longitude = true;
};

std::string render_svg(const CuspLayout& layout, const SvgOptions& opt = {});

}  // namespace tb
