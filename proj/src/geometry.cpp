#include "reeslab/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "reeslab/errors.hpp"
#include "reeslab/smith.hpp"

namespace reeslab {

namespace {

std::string show(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

NormalizedTriangle normalize_triangle(const std::array<Point, 3>& v) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (v[i] == v[j]) throw ShapeError("repeated vertex " + show(v[i]));

  const Point apex{Rat(0), Rat(1)};
  int apex_at = -1;
  for (int i = 0; i < 3; ++i)
    if (v[i] == apex) apex_at = i;
  if (apex_at < 0) throw ShapeError("no vertex equals (0,1)");

  std::array<Point, 2> base;
  for (int i = 0, k = 0; i < 3; ++i)
    if (i != apex_at) base[k++] = v[i];
  if (base[1].x < base[0].x) std::swap(base[0], base[1]);
  const Point& p2 = base[0];
  const Point& p1 = base[1];

  for (const Point& p : base)
    if (p.x == 0 && p.y != 0) throw ShapeError("base vertex " + show(p) + " is off any line through the origin");

  Rat ubar;
  if (p2.x != 0 && p1.x != 0) {
    Rat s = p2.y / p2.x, s1 = p1.y / p1.x;
    if (s != s1) throw ShapeError("base vertices " + show(p2) + ", " + show(p1) + " not collinear with the origin");
    ubar = s;
  } else {
    const Point& other = p2.x != 0 ? p2 : p1;
    ubar = other.y / other.x;
  }
  if (!(p2.x <= 0 && p1.x >= 0)) throw ShapeError("need x2 <= 0 <= x1, got x2=" + to_string(p2.x) + ", x1=" + to_string(p1.x));

  NormalizedTriangle tri;
  tri.vertices = {p2, p1, apex};
  tri.x2 = p2.x;
  tri.x1 = p1.x;
  tri.W = tri.x1 - tri.x2;
  tri.ubar = ubar;

  if (ubar < -1 || ubar > 0) throw SlopeError("ubar=" + to_string(ubar) + " outside [-1,0]");
  if (tri.x2 != 0) {
    Rat s = (ubar * tri.x2 - 1) / tri.x2;
    if (s < 0) throw SlopeError("sbar=" + to_string(s) + " < 0");
    tri.sbar = s;
  }
  if (tri.x1 != 0) {
    Rat t = (ubar * tri.x1 - 1) / tri.x1;
    if (t > -1) throw SlopeError("tbar=" + to_string(t) + " > -1");
    tri.tbar = t;
  }
  if (tri.W <= 0 || tri.W > 1) throw WidthError("W=" + to_string(tri.W) + " outside (0,1]");

  if (tri.sbar) {
    tri.s2 = to_int64(tri.sbar->get_num());
    tri.s3 = to_int64(tri.sbar->get_den());
  } else {
    tri.s2 = 1;
    tri.s3 = 0;
  }
  if (tri.tbar) {
    tri.t = to_int64(-tri.tbar->get_num());
    tri.t3 = to_int64(tri.tbar->get_den());
  } else {
    tri.t = 1;
    tri.t3 = 0;
  }
  tri.u2 = to_int64(-ubar.get_num());
  tri.u = to_int64(ubar.get_den());
  tri.t1 = tri.t - tri.t3;
  tri.u1 = tri.u - tri.u2;
  return tri;
}

NormalizedTriangle g_family_triangle(const Rat& g) {
  if (g < 2 || g > 3) throw RangeError("g=" + to_string(g) + " outside [2,3]");
  return normalize_triangle({Point{g - 3, (3 - g) / 2}, Point{g - 2, (2 - g) / 2}, Point{Rat(0), Rat(1)}});
}

std::array<Point, 3> delta_prime(const NormalizedTriangle& tri) {
  Rat u(tri.u), u2(tri.u2);
  return {Point{Rat(0), Rat(0)}, Point{u, -u2}, Point{-u * tri.x2 / tri.W, (u + u2 * tri.x2) / tri.W}};
}

PeriodData period_data(const NormalizedTriangle& tri) {
  Int l = 1;
  for (const Point& p : tri.vertices)
    for (const Rat* c : {&p.x, &p.y}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c->get_den_mpz_t());
  PeriodData pd;
  pd.sigma = to_int64(l);
  Rat theta = -tri.x2 * pd.sigma, theta_prime = tri.x1 * pd.sigma;
  pd.theta = to_int64(theta.get_num());
  pd.theta_prime = to_int64(theta_prime.get_num());
  if (tri.W == 1 && pd.theta + pd.theta_prime != pd.sigma)
    throw InconsistencyError("sigma != theta + theta'");
  return pd;
}

std::vector<LatticePoint> enumerate_polygon_points(const std::vector<Point>& polygon, int64_t scale) {
  std::vector<Point> p;
  for (const Point& q : polygon) p.push_back(Point{q.x * scale, q.y * scale});
  std::vector<LatticePoint> out;
  if (p.empty()) return out;
  Rat xmin = p[0].x, xmax = p[0].x, ymin = p[0].y, ymax = p[0].y;
  for (const Point& q : p) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  Rat area2 = 0;
  for (size_t i = 1; i + 1 < p.size(); ++i) area2 += cross(p[0], p[i], p[i + 1]);
  const int orient = sgn(area2);
  for (int64_t x = to_int64(ceil(xmin)); x <= to_int64(floor(xmax)); ++x)
    for (int64_t y = to_int64(ceil(ymin)); y <= to_int64(floor(ymax)); ++y) {
      Point q{Rat(x), Rat(y)};
      bool inside = true;
      for (size_t i = 0; i < p.size() && inside; ++i) {
        int c = sgn(cross(p[i], p[(i + 1) % p.size()], q));
        inside = orient == 0 ? c == 0 : c * orient >= 0;
      }
      if (inside) out.push_back({x, y});
    }
  return out;
}

EmuResult emu_check(const NormalizedTriangle& tri) {
  auto dp = delta_prime(tri);
  auto pts = enumerate_polygon_points({dp[0], dp[1], dp[2]}, 1);
  EmuResult r;
  r.column_counts.assign(tri.u, 0);
  for (const auto& q : pts)
    if (q.x >= 1 && q.x <= tri.u) ++r.column_counts[q.x - 1];
  r.sorted = r.column_counts;
  std::sort(r.sorted.begin(), r.sorted.end());
  r.holds = true;
  for (size_t i = 0; i < r.sorted.size(); ++i)
    if (r.sorted[i] < static_cast<int64_t>(i + 1)) r.holds = false;
  return r;
}

ConeTables::ConeTables(const NormalizedTriangle& tri)
    : sbar_(tri.sbar),
      tbar_(tri.tbar),
      ubar_(tri.ubar),
      s2_(tri.s2),
      s3_(tri.s3),
      t_(tri.t),
      t3_(tri.t3),
      u2_(tri.u2),
      u_(tri.u) {}

Count ConeTables::a(int64_t i) const {
  if (s3_ == 0) return Count{true, 0};
  return Count{false, floor_div(i * s2_, s3_) - ceil_div(-i * u2_, u_) + 1};
}

Count ConeTables::b(int64_t i) const {
  if (i > 0) return Count{false, 0};
  if (t3_ == 0) return Count{true, 0};
  return Count{false, floor_div(-i * t_, t3_) - ceil_div(-i * u2_, u_) + 1};
}

bool ConeTables::pa_member(int64_t alpha, int64_t n) const {
  return alpha >= 0 && n >= 0 && a(alpha).at_least(n + 1);
}

bool ConeTables::pb_member(int64_t alpha, int64_t n) const { return n >= 0 && b(alpha - n).at_least(n + 1); }

Rat ConeTables::pa_rate() const {
  if (!sbar_) return Rat(0);
  return 1 / (*sbar_ - ubar_);
}

Rat ConeTables::pb_rate() const {
  if (!tbar_) return Rat(1);
  return 1 - 1 / (ubar_ - *tbar_);
}

GapScan overlaps_and_gaps(const ConeTables& ct, const PeriodData& pd, int64_t m, int64_t l, int64_t slack) {
  if (m < 0 || m >= l) throw RangeError("need 0 <= m < l");
  if (slack < 1) throw RangeError("slack must be positive");
  Rat lo_rate = std::min(ct.pa_rate(), ct.pb_rate());
  Rat hi_rate = std::max(ct.pa_rate(), ct.pb_rate());
  GapScan out;
  for (int64_t n = m; n < l; ++n) {
    int64_t lo = to_int64(floor(lo_rate * n)) - slack;
    int64_t hi = to_int64(ceil(hi_rate * n)) + slack;
    if (!(ct.pb_member(lo, n) && !ct.pa_member(lo, n)) || !(ct.pa_member(hi, n) && !ct.pb_member(hi, n)))
      throw ClaimViolation("column window at level " + std::to_string(n) + " does not bracket the gap strip");
    bool expect = n % pd.sigma == 0;
    bool seen = false;
    for (int64_t alpha = lo + 1; alpha < hi; ++alpha) {
      bool a = ct.pa_member(alpha, n), b = ct.pb_member(alpha, n);
      if (a && b) {
        if (!expect || alpha * pd.sigma != pd.theta * n)
          throw ClaimViolation("unexpected overlap at (" + std::to_string(alpha) + "," + std::to_string(n) + ")");
        seen = true;
        out.overlaps.push_back({alpha, n});
      } else if (!a && !b) {
        out.gaps.push_back({alpha, n});
      }
    }
    if (expect && !seen) throw ClaimViolation("missing overlap at level " + std::to_string(n));
  }
  return out;
}

ToricData toric_data_from_normals(const std::array<int64_t, 2>& a, const std::array<int64_t, 2>& b,
                                  const std::array<int64_t, 2>& c) {
  ToricData td;
  td.normal_a = a;
  td.normal_b = b;
  td.normal_c = c;
  // Kernel of the 2x3 matrix with columns a, b, c: cross product of its rows.
  Int k0 = Int(b[0]) * c[1] - Int(c[0]) * b[1];
  Int k1 = Int(c[0]) * a[1] - Int(a[0]) * c[1];
  Int k2 = Int(a[0]) * b[1] - Int(b[0]) * a[1];
  Int g;
  mpz_gcd(g.get_mpz_t(), k0.get_mpz_t(), k1.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k2.get_mpz_t());
  if (g == 0) throw DegenerateError("normal vectors are collinear");
  if (k0 < 0 || (k0 == 0 && (k1 < 0 || (k1 == 0 && k2 < 0)))) g = -g;
  td.weights = {to_int64(k0 / g), to_int64(k1 / g), to_int64(k2 / g)};
  for (int64_t w : td.weights)
    if (w <= 0) throw DegenerateError("kernel vector has a nonpositive entry");

  IntMatrix m = {{Int(a[0]), Int(a[1])}, {Int(b[0]), Int(b[1])}, {Int(c[0]), Int(c[1])}};
  td.invariant_factors = smith_invariant_factors(m);
  td.torsion_order = 1;
  int nontrivial = 0;
  for (const Int& d : td.invariant_factors) {
    td.torsion_order *= d;
    if (d != 1) ++nontrivial;
  }
  td.torsion_cyclic = nontrivial <= 1;
  td.i_is_prime = td.torsion_order == 1;
  return td;
}

ToricData toric_data(const NormalizedTriangle& tri) {
  ToricData td = toric_data_from_normals({tri.s2, -tri.s3}, {-tri.t, -tri.t3}, {tri.u2, tri.u});
  td.ideal_matrix = {{{tri.s2, tri.t3, tri.u1}, {tri.t1, tri.u2, tri.s3}}};
  return td;
}

}  // namespace reeslab
