#pragma once
#include <array>
#include <optional>
#include <vector>

#include "twobridge/errors.hpp"
#include "twobridge/slope.hpp"

namespace tb {

struct ContinuedFraction {
  std::vector<i64> a;  // [a1, ..., an]
  std::size_t length() const { return a.size(); }
  i64 sum() const;
};

ContinuedFraction continued_fraction(const Slope& r);
// Accepts trailing 1s and interior zeros; used for the r1, r2 truncations.
Slope evaluate_cf(const std::vector<i64>& a);
inline Slope evaluate_cf(const ContinuedFraction& cf) { return evaluate_cf(cf.a); }

bool is_hyperbolic(const Slope& r);
int num_components(const Slope& r);
// Throws NotHyperbolic (or DomainError outside (0,1)).
void require_hyperbolic(const Slope& r);

struct FareyTriangle {
  std::array<Slope, 3> v;
  bool contains(const Slope& s) const { return v[0] == s || v[1] == s || v[2] == s; }
};

struct ChainBlock {
  Slope pivot;
  std::vector<Slope> others;  // s_0 ... s_{a_k}
  std::size_t first = 0;       // index of the first triangle of the block (0-based)
  std::size_t count = 0;       // a_k
};

struct FareyChain {
  Slope r;
  ContinuedFraction cf;
  std::vector<FareyTriangle> triangles;  // sigma_1 ... sigma_c, stored 0-based
  std::vector<ChainBlock> blocks;
  bool hyperbolic = false;

  std::size_t size() const { return triangles.size(); }
  // Vertex of triangles[i] not in triangles[i+1].
  Slope dropped(std::size_t i) const;
  // Vertex of triangles[i+1] not in triangles[i].
  Slope added(std::size_t i) const;
};

FareyChain farey_chain(const Slope& r);

struct Interval {
  Slope lo, hi;
  bool contains(const Slope& s) const;           // closed, finite slopes only
  bool contains_interior(const Slope& s) const;  // open
  std::string str() const;
};

struct FundamentalIntervals {
  Interval I1, I2;
  Slope r1, r2;
};

FundamentalIntervals fundamental_intervals(const Slope& r);

struct Matrix2 {
  i64 a = 1, b = 0, c = 0, d = 1;
  i64 det() const;
  Slope apply(const Slope& s) const;
  Matrix2 operator*(const Matrix2& o) const;
  Matrix2 inverse() const;  // exact, det = +-1
  bool same_projective(const Matrix2& o) const;
  bool is_identity_projective() const { return same_projective(Matrix2{}); }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

// Reflection in the Farey edge <inf, n> (factor Inf) or <r, g(n)> (factor R),
// where g is the normalizing matrix of Gamma_r, see ReflectionGroup.
struct Letter {
  enum class Factor { Inf, R } factor = Factor::Inf;
  i64 n = 0;
  std::string str() const;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct ReflectionWord {
  Matrix2 matrix;                // product of letter matrices in list order
  std::vector<Letter> letters;   // letters.back() acts first
  Slope apply(const Slope& s) const { return matrix.apply(s); }
  bool empty() const { return letters.empty(); }
};

// The group generated by reflections in Farey edges ending at inf or at r.
class ReflectionGroup {
 public:
  explicit ReflectionGroup(const Slope& r);

  const Slope& r() const { return r_; }
  const FundamentalIntervals& intervals() const { return iv_; }
  // g maps inf -> r, 0 -> r2, 1 -> r1; det g = 1.
  const Matrix2& g() const { return g_; }
  Matrix2 letter_matrix(const Letter& l) const;
  // Prepends l (it acts after w).
  ReflectionWord extend(const Letter& l, const ReflectionWord& w) const;

  // The four generators of the free product: <0,inf>, <1,inf>, <r,r2>, <r,r1>.
  static std::array<Letter, 4> generators();

 private:
  Slope r_;
  FundamentalIntervals iv_;
  Matrix2 g_, ginv_;
};

struct Reduction {
  Slope s0;
  ReflectionWord word;  // word.apply(s) == s0
};

Reduction reduce_slope(const Slope& s, const Slope& r);
Reduction reduce_slope(const Slope& s, const ReflectionGroup& G);
bool is_nullhomotopic(const Slope& s, const Slope& r);

}  // namespace tb
