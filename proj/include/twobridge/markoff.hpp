#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <unordered_map>
#include <vector>

#include "twobridge/farey.hpp"

namespace tb {

using cd = std::complex<double>;
using cld = std::complex<long double>;
using BigInt = boost::multiprecision::cpp_int;

struct MarkoffTriple {
  cd x, y, z;
  // Relative residual of x^2 + y^2 + z^2 - xyz.
  double residual() const;
  bool nontrivial() const { return x != 0.0 || y != 0.0 || z != 0.0; }
};

// Replaces coordinate idx (0,1,2) by (product of the other two) - old value.
MarkoffTriple edge_flip(const MarkoffTriple& t, int idx);

struct GaussInt {
  BigInt re, im;
  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

// Polynomial in x over Z[i], ascending degree.
struct TracePolynomial {
  std::vector<GaussInt> c;
  int degree() const { return int(c.size()) - 1; }
  cld evaluate(cld x) const;
  std::vector<cld> coefficients_ld() const;
  std::string str() const;
  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;
};

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b);
TracePolynomial operator-(const TracePolynomial& a, const TracePolynomial& b);

// phi(r) as a polynomial in x = phi(0) with phi(inf) = 0, phi(1) = i x.
// Non-hyperbolic r is only accepted when allow_nonhyperbolic is set.
TracePolynomial trace_polynomial(const Slope& r, bool allow_nonhyperbolic = false);

enum class Precision { Double, Extended };

struct RootInfo {
  cld value;
  int multiplicity = 1;
  long double residual = 0;  // |P(root)|
};

// All roots with multiplicity (one entry per root, duplicates repeated).
std::vector<cld> polynomial_roots(const std::vector<cld>& coeffs, Precision prec = Precision::Double);
std::vector<cld> polynomial_roots(const TracePolynomial& p, Precision prec = Precision::Double);
// Groups repeated roots; residuals are measured on the exact polynomial.
std::vector<RootInfo> root_report(const TracePolynomial& p, const std::vector<cld>& roots);

// Chain recursion for phi(r)(x) together with its x-derivative; used for polishing.
std::pair<cld, cld> chain_value_and_derivative(const FareyChain& chain, cld x);

// A root x together with a memo of phi values on Farey vertices.
class MarkoffEvaluation {
 public:
  MarkoffEvaluation(const Slope& r, cd x);

  const Slope& r() const { return r_; }
  cd root() const { return x_; }
  cd phi(const Slope& s) const;
  // After sealing, lookups no longer write to the cache.
  void seal() { sealed_ = true; }
  bool sealed() const { return sealed_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  Slope r_;
  cd x_;
  bool sealed_ = false;
  mutable std::unordered_map<Slope, cd, SlopeHash> cache_;
};

inline cd evaluate_phi(const MarkoffEvaluation& ev, const Slope& s) { return ev.phi(s); }
// Plain walk from <0,1,inf> for an arbitrary x; no memo.
cd phi_at(cd x, const Slope& s);

struct ComplexLength {
  cd value;
  bool parabolic = false;
};

// l with 2 cosh(l/2) = +-phi, Re l >= 0, Im l in (-pi, pi].
ComplexLength translation_length(cd phi);

struct RootCandidate {
  cld x;
  int multiplicity = 1;
  bool chain_nonvanishing = false;  // phi != 0 on chain vertices other than inf, r
  bool finite_identity = false;     // sum over E1 and E2 of psi equals -1
  bool oriented = false;            // cusp triangles coherently oriented
  bool no_real_short = false;       // no real trace in (-2,2) on I1, I2 (depth 20)
  bool census_stable = false;       // |phi| <= 2 census equal at depths 15 and 20
  bool screened = false;            // depth filters were run
  cd lambda_orbifold;
  bool accepted = false;
};

struct RootSelection {
  Slope r;
  TracePolynomial poly;
  std::vector<RootCandidate> candidates;
  std::size_t chosen = 0;  // index into candidates
  MarkoffEvaluation evaluation() const;
};

// Filters the roots of trace_polynomial(r); throws NoGeometricRoot or AmbiguousRoot.
RootSelection select_geometric_root(const std::vector<cld>& roots, const Slope& r);
RootSelection select_geometric_root(const Slope& r, Precision prec = Precision::Double);
MarkoffEvaluation geometric_evaluation(const Slope& r, Precision prec = Precision::Double);

}  // namespace tb
