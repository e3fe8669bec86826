#pragma once
#include <random>
#include <vector>

#include "twobridge/farey.hpp"

namespace support {

inline std::vector<tb::Slope> hyperbolic_slopes(tb::i64 pmax, tb::i64 pmin = 5) {
  std::vector<tb::Slope> out;
  for (tb::i64 p = pmin; p <= pmax; ++p)
    for (tb::i64 q = 1; q < p; ++q) {
      const tb::Slope r(q, p);
      if (r.den() == p && tb::is_hyperbolic(r)) out.push_back(r);
    }
  return out;
}

// Random slope in (0,1) reached by a Stern-Brocot descent of the given depth.
inline tb::Slope random_unit_slope(std::mt19937_64& rng, int depth) {
  tb::i64 ln = 0, ld = 1, rn = 1, rd = 1;
  tb::i64 mn = 1, md = 2;
  for (int k = 0; k < depth; ++k) {
    mn = ln + rn, md = ld + rd;
    if (rng() & 1) ln = mn, ld = md;
    else rn = mn, rd = md;
  }
  return tb::Slope(ln + rn, ld + rd);
}

// Length of a reduction word in the four edge reflections. The reflection in
// <n, inf> (or its conjugate on the r side) is a palindrome of length
// 2n - 1 for n >= 1 and 2|n| + 1 for n <= 0. The sum bounds the reduced length.
inline std::size_t generator_length(const std::vector<tb::Letter>& letters) {
  std::size_t len = 0;
  for (const auto& l : letters) len += std::size_t(l.n >= 1 ? 2 * l.n - 1 : 1 - 2 * l.n);
  return len;
}

}  // namespace support
