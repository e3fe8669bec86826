#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace tb {

using i64 = std::int64_t;

// Element of Q u {inf} in lowest terms, denominator >= 0. inf is 1/0.
class Slope {
 public:
  Slope() = default;
  Slope(i64 num, i64 den);
  static Slope inf() { return Slope(); }
  static Slope parse(std::string_view text);

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_inf() const { return den_ == 0; }
  double value() const;
  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  i64 num_ = 1;
  i64 den_ = 0;
};

// Total order on finite slopes; inf compares greater than everything else.
int compare(const Slope& a, const Slope& b);
inline bool operator<(const Slope& a, const Slope& b) { return compare(a, b) < 0; }

// |p1 q2 - p2 q1| = 1
bool farey_neighbours(const Slope& a, const Slope& b);

// Overflow-checked integer helpers; throw InternalError on overflow.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

struct SlopeHash {
  std::size_t operator()(const Slope& s) const noexcept {
    return std::hash<i64>()(s.num()) * 1000003u ^ std::hash<i64>()(s.den());
  }
};

}  // namespace tb
