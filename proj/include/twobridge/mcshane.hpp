#pragma once
#include <complex>
#include <vector>

#include "twobridge/markoff.hpp"

namespace tb {

// h(x) = (1 - sqrt(1 - 4/x^2))/2, Re sqrt >= 0. Throws DomainError on real [-2,2].
cd h(cd x);

// Head triangle <s0,s1,s2>, tail triangle <s1,s2,s3>.
struct DirectedFareyEdge {
  Slope s1, s2;  // s1 < s2
  Slope s0, s3;
};

cd psi(const DirectedFareyEdge& e, const MarkoffEvaluation& ev);

struct EdgeSets {
  std::vector<DirectedFareyEdge> E1, E2;  // sorted by left endpoint
  DirectedFareyEdge e_minus, e_plus;
  FundamentalIntervals intervals;
};

EdgeSets boundary_edge_sets(const Slope& r);

struct FiniteSums {
  cd E1, E2;
  cd all;  // including e_minus and e_plus
};

FiniteSums finite_edge_sums(const EdgeSets& es, const MarkoffEvaluation& ev);
FiniteSums finite_edge_sums(const Slope& r, const MarkoffEvaluation& ev);

struct CensusEntry {
  Slope s;
  cd phi;
};

struct SeriesResult {
  cd sum;
  double tail_bound = 0;
  bool partial = false;      // depth, node or fan caps were hit
  int depth_used = 0;
  std::size_t nodes = 0;
  double tau = 0;            // per-subtree pruning threshold of the final pass
  std::vector<CensusEntry> census;      // |phi| <= 2
  std::vector<CensusEntry> violations;  // real phi in (-2,2)
  std::vector<CensusEntry> parabolics;  // phi = +-2
};

struct SeriesOptions {
  double eps = 1e-8;
  int max_depth = 400;
  std::size_t node_budget = 50'000'000;
  bool throw_on_violation = true;
  bool adaptive = true;  // shrink tau until tail_bound <= eps
  double tau = 0;        // fixed tau when not adaptive
};

// S_j = 2 sum_{int I_j} h(phi) + sum_{boundary I_j} h(phi).
SeriesResult interval_series(const EdgeSets& es, const MarkoffEvaluation& ev, int j, const SeriesOptions& opt);
SeriesResult interval_series(const Slope& r, const MarkoffEvaluation& ev, int j, double eps, int max_depth);

struct IdentityReport {
  Slope r;
  cd x;
  cd finite_sum_E1, finite_sum_E2, finite_sum_all;
  cd series_S1, series_S2;
  double tail_bound_1 = 0, tail_bound_2 = 0;
  cd lambda_orbifold;       // 2 sum_{E1} psi
  cd lambda_link;           // 2 lambda_orbifold / |K|
  cd lambda_link_I1;        // (4/|K|) S1
  cd lambda_link_I2;        // -(4/|K|) (S2 + 1)
  int components = 1;
  int depth_used = 0;
  std::size_t nodes = 0;
  bool partial = false;
  std::vector<CensusEntry> slopes_small_trace;
  std::vector<CensusEntry> accidental_parabolics;

  double identity_residual() const { return std::abs(series_S1 + series_S2 + 1.0); }
  double finite_residual() const { return std::abs(finite_sum_E1 + finite_sum_E2 + 1.0); }
  double total_residual() const { return std::abs(finite_sum_all - 1.0); }
};

struct CuspShapeOptions {
  double eps = 1e-8;
  int max_depth = 400;
  Precision precision = Precision::Double;
};

IdentityReport cusp_shape(const Slope& r, const CuspShapeOptions& opt = {});
IdentityReport identity_report(const Slope& r, const MarkoffEvaluation& ev, const CuspShapeOptions& opt = {});

}  // namespace tb
