#pragma once
#include <compare>
#include <cstdint>

namespace reeslab {

// Position (alpha, n) of the basis element x_{alpha,n}.  Ordered by level
// first, then column, which is the order every reduction walks in.
struct Index {
  int64_t alpha = 0;
  int64_t n = 0;

  friend bool operator==(const Index&, const Index&) = default;
  friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.alpha <=> b.alpha;
  }
};

}  // namespace reeslab
