#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "reeslab/index.hpp"
#include "reeslab/rational.hpp"

namespace reeslab {

struct Point {
  Rat x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct LatticePoint {
  int64_t x = 0, y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Triangle with vertices (x2, ubar*x2), (x1, ubar*x1), (0, 1).
// sbar == nullopt means +infinity, tbar == nullopt means -infinity.
struct NormalizedTriangle {
  std::array<Point, 3> vertices;  // in the order above
  Rat x1, x2, W, ubar;
  std::optional<Rat> sbar, tbar;
  int64_t s2 = 0, s3 = 0, t = 0, t3 = 0, u2 = 0, u = 0;
  int64_t t1 = 0, u1 = 0;
};

NormalizedTriangle normalize_triangle(const std::array<Point, 3>& vertices);

// The family Delta_g, 2 <= g <= 3, already moved into normalized position.
NormalizedTriangle g_family_triangle(const Rat& g);

std::array<Point, 3> delta_prime(const NormalizedTriangle& tri);

struct PeriodData {
  int64_t sigma = 1, theta = 0, theta_prime = 0;
};

PeriodData period_data(const NormalizedTriangle& tri);

// Lattice points of scale*polygon (convex, boundary included), sorted
// lexicographically.
std::vector<LatticePoint> enumerate_polygon_points(const std::vector<Point>& polygon, int64_t scale);

struct EmuResult {
  bool holds = false;
  std::vector<int64_t> column_counts;  // m_1..m_u
  std::vector<int64_t> sorted;
};

EmuResult emu_check(const NormalizedTriangle& tri);

// Column count that may be unbounded; infinite compares above every integer.
struct Count {
  bool infinite = false;
  int64_t value = 0;
  bool at_least(int64_t k) const { return infinite || value >= k; }
  friend bool operator==(const Count&, const Count&) = default;
};

class ConeTables {
 public:
  explicit ConeTables(const NormalizedTriangle& tri);

  Count a(int64_t i) const;  // i >= 0
  Count b(int64_t i) const;  // b_i = 0 for i > 0

  bool pa_member(int64_t alpha, int64_t n) const;
  bool pb_member(int64_t alpha, int64_t n) const;
  bool pa_member(const Index& p) const { return pa_member(p.alpha, p.n); }
  bool pb_member(const Index& p) const { return pb_member(p.alpha, p.n); }

  int64_t u2() const { return u2_; }
  int64_t u() const { return u_; }

  // Rational slopes of the P_A lower and P_B upper column bounds per level.
  Rat pa_rate() const;
  Rat pb_rate() const;

 private:
  std::optional<Rat> sbar_, tbar_;
  Rat ubar_;
  int64_t s2_, s3_, t_, t3_, u2_, u_;
};

struct GapScan {
  std::vector<Index> overlaps;
  std::vector<Index> gaps;
};

// Columns scanned per level n: [floor(n*lo) - slack, ceil(n*hi) + slack].
GapScan overlaps_and_gaps(const ConeTables& ct, const PeriodData& pd, int64_t m, int64_t l,
                          int64_t slack);

struct ToricData {
  std::array<int64_t, 2> normal_a{}, normal_b{}, normal_c{};
  std::array<int64_t, 3> weights{};
  std::vector<Int> invariant_factors;  // nonzero diagonal of the Smith form
  Int torsion_order = 1;
  bool torsion_cyclic = true;
  bool i_is_prime = true;
  std::array<std::array<int64_t, 3>, 2> ideal_matrix{};
};

ToricData toric_data(const NormalizedTriangle& tri);
ToricData toric_data_from_normals(const std::array<int64_t, 2>& a, const std::array<int64_t, 2>& b,
                                  const std::array<int64_t, 2>& c);

}  // namespace reeslab
