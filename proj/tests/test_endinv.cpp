#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "twobridge/endinv.hpp"
#include "twobridge/mcshane.hpp"

using namespace tb;

namespace {

// Exceptional families read off the continued fraction of min(r, 1 - r).
EndCase family_from_cf(const Slope& r) {
  const Slope n = Slope(1, 2) < r ? Slope(r.den() - r.num(), r.den()) : r;
  const auto a = continued_fraction(n).a;
  if (a == std::vector<i64>{2, 2}) return EndCase::TwoFifths;
  if (a.size() == 2 && a[0] == 2 && a[1] >= 3) return EndCase::NOverTwoNPlusOne;
  if (a.size() == 2 && a[1] == 2 && a[0] >= 3) return EndCase::TwoOverTwoNPlusOne;
  return EndCase::Generic;
}

}  // namespace

TEST_CASE("exceptional families up to p = 101") {
  int exceptional = 0;
  for (const auto& r : support::hyperbolic_slopes(101)) {
    const auto rep = bowditch_L(r, 1);
    CHECK_MESSAGE(rep.kase == family_from_cf(r), r.str());
    exceptional += rep.kase != EndCase::Generic;
    CHECK(rep.extra_orbits.size() == (rep.kase == EndCase::TwoFifths ? 2u : rep.kase == EndCase::Generic ? 0u : 1u));
  }
  CHECK(exceptional > 150);
  CHECK(to_string(EndCase::Generic) == "generic");
  CHECK(to_string(EndCase::TwoOverTwoNPlusOne) == "exceptional(3)");
}

TEST_CASE("extra orbits are accidental parabolics") {
  for (const auto& r : support::hyperbolic_slopes(31)) {
    const auto rep = bowditch_L(r, 1);
    const auto ev = geometric_evaluation(r);
    for (const auto& s : rep.extra_orbits) CHECK_MESSAGE(std::abs(std::abs(ev.phi(s)) - 2.0) < 1e-9, (r.str() + " " + s.str()));
  }
}

TEST_CASE("generic slopes have no accidental parabolics in the census") {
  for (const auto& r : support::hyperbolic_slopes(25)) {
    const auto rep = bowditch_L(r, 1);
    const auto id = cusp_shape(r);
    if (rep.kase == EndCase::Generic) {
      CHECK_MESSAGE(id.accidental_parabolics.empty(), r.str());
    } else {
      REQUIRE_MESSAGE(!id.accidental_parabolics.empty(), r.str());
      for (const auto& c : id.accidental_parabolics) {
        bool in_orbit = false;
        for (const auto& s : rep.extra_orbits) in_orbit = in_orbit || reduce_slope(c.s, r).s0 == reduce_slope(s, r).s0;
        CHECK_MESSAGE(in_orbit, (r.str() + " " + c.s.str()));
      }
    }
  }
}

TEST_CASE("gap systems") {
  for (const char* rs : {"2/5", "3/7", "3/8", "5/17", "7/19"}) {
    const Slope r = Slope::parse(rs);
    double prev = -1;
    std::size_t prev_count = 0;
    for (int depth = 0; depth <= 8; ++depth) {
      const auto gs = gap_intervals(r, depth);
      for (std::size_t i = 0; i < gs.gaps.size(); ++i) {
        const auto& g = gs.gaps[i];
        CHECK(g.lo < g.hi);
        CHECK_FALSE((g.lo < r && r < g.hi));
        if (i) CHECK(compare(gs.gaps[i - 1].hi, g.lo) <= 0);
      }
      const double cov = gs.covered_length();
      CHECK(cov >= prev);
      CHECK(cov <= 1.0 + 1e-12);
      CHECK(gs.gaps.size() >= prev_count);
      prev = cov;
      prev_count = gs.gaps.size();
    }
    CHECK(prev > 0.9);
  }
  CHECK_THROWS_AS(gap_intervals(Slope(2, 5), 13), DomainError);
}

TEST_CASE("limit set membership") {
  const Slope r(2, 5);
  const auto gs = gap_intervals(r, 8);
  const auto fi = fundamental_intervals(r);
  CHECK(meets_limit_set(Slope(1, 100), Slope(1, 4), gs) == Tri::No);  // inside int I1
  CHECK(meets_limit_set(Slope(3, 10), Slope(1, 2), gs) == Tri::Yes);  // contains r
  CHECK(meets_limit_set(fi.I2.lo, Slope(1, 1), gs) == Tri::No);
  CHECK_THROWS_AS(meets_limit_set(Slope(1, 2), Slope(1, 3), gs), DomainError);
  CHECK(is_end_invariant(Slope::inf(), r));
  CHECK(is_end_invariant(r, r));
  CHECK_FALSE(is_end_invariant(Slope(1, 5), r));
}

TEST_CASE("end invariants and gaps are consistent") {
  std::mt19937_64 rng(37);
  for (const char* rs : {"2/5", "3/7", "3/8", "5/17"}) {
    const Slope r = Slope::parse(rs);
    const auto gs0 = gap_intervals(r, 0);
    const auto fi = fundamental_intervals(r);
    REQUIRE(gs0.gaps.size() == 2);
    CHECK(gs0.gaps[0].lo == fi.I1.lo);
    CHECK(gs0.gaps[0].hi == fi.I1.hi);
    CHECK(gs0.gaps[1].lo == fi.I2.lo);
    CHECK(gs0.gaps[1].hi == fi.I2.hi);
    CHECK_FALSE(is_end_invariant(Slope(0, 1), r));

    const auto gs = gap_intervals(r, 6);
    CHECK(gs.covered_length() < 1.0);
    for (const auto& g : gs.gaps) {
      const Slope mid(g.lo.num() + g.hi.num(), g.lo.den() + g.hi.den());
      CHECK_FALSE(is_end_invariant(mid, r));
    }

    // orbit points of r and inf under random words of length <= 6
    const ReflectionGroup G(r);
    const auto gens = ReflectionGroup::generators();
    for (int t = 0; t < 50; ++t) {
      Matrix2 w;
      const int len = 1 + int(rng() % 6);
      for (int k = 0; k < len; ++k) w = G.letter_matrix(gens[rng() % 4]) * w;
      CHECK(is_end_invariant(w.apply(r), r));
      CHECK(is_end_invariant(w.apply(Slope::inf()), r));
    }
  }
  const auto rep = bowditch_L(Slope(3, 7), 2);
  REQUIRE(rep.extra_orbits.size() == 1);
  CHECK(rep.extra_orbits[0] == Slope(4, 7));
  CHECK(bowditch_L(Slope(5, 17), 1).kase == EndCase::Generic);
  const auto mir = bowditch_L(Slope(3, 5), 1);
  CHECK(mir.mirrored);
  CHECK(mir.kase == EndCase::TwoFifths);
  for (const auto& s : bowditch_L(Slope(2, 5), 1).extra_orbits) CHECK_FALSE(is_end_invariant(s, Slope(2, 5)));
}
