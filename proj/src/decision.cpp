#include "reeslab/decision.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <tuple>

#include "reeslab/errors.hpp"

namespace reeslab {

int64_t effective_j_max(const SearchBounds& b, uint64_t p) {
  if (b.j_max > 0) return b.j_max;
  return p > 2 ? static_cast<int64_t>(p) - 1 : 1;
}

int64_t resolve_slack(const PeriodData& pd, int64_t requested) {
  int64_t s = requested;
  if (s <= 0) {
    if (const char* env = std::getenv("REESLAB_SLACK"); env && *env) {
      Rat v = parse_rat(env);
      if (!is_integer(v)) throw RangeError("REESLAB_SLACK must be an integer");
      s = to_int64(v.get_num());
    } else {
      return pd.sigma;
    }
  }
  if (s < pd.sigma) throw RangeError("slack " + std::to_string(s) + " below sigma=" + std::to_string(pd.sigma));
  return s;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::FG_EXACT: return "FG_EXACT";
    case Status::FG_WITNESS: return "FG_WITNESS";
    case Status::NOT_FG_EXACT: return "NOT_FG_EXACT";
    case Status::NO_WITNESS_UP_TO_BOUNDS: return "NO_WITNESS_UP_TO_BOUNDS";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  for (Status st : {Status::FG_EXACT, Status::FG_WITNESS, Status::NOT_FG_EXACT, Status::NO_WITNESS_UP_TO_BOUNDS})
    if (s == status_name(st)) return st;
  throw ParseError("unknown status '" + s + "'");
}

bool is_fg(Status s) { return s == Status::FG_EXACT || s == Status::FG_WITNESS; }

namespace {

void check_bounds(const SearchBounds& b) {
  if (b.r_max < 0) throw RangeError("r_max must be nonnegative");
  if (b.j_max < 0) throw RangeError("j_max must be positive");
  if (b.m_max < 1) throw RangeError("m_max must be positive");
  if (b.branch_budget < 1) throw RangeError("branch_budget must be positive");
}

int64_t ipow(int64_t b, int64_t e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Verdict decide(const NormalizedTriangle& tri, const Field& field, const SearchBounds& bounds) {
  check_bounds(bounds);
  Verdict v;
  v.triangle = tri;
  v.period = period_data(tri);
  v.characteristic = field.characteristic();
  v.bounds = bounds;
  v.bounds.slack = resolve_slack(v.period, bounds.slack);
  v.bounds.j_max = effective_j_max(bounds, field.characteristic());
  ConeTables ct(tri);

  if (!field.is_prime_field()) {
    v.emu = emu_check(tri);
    v.b2 = char0_b2_check(tri, ct, v.period);
    v.status = v.emu->holds ? Status::FG_EXACT : Status::NOT_FG_EXACT;
    return v;
  }
  if (tri.W < 1) {
    v.status = Status::FG_EXACT;
    v.note = "W < 1: finitely generated in every characteristic";
    return v;
  }

  const int64_t p = static_cast<int64_t>(field.characteristic());
  const CohomOptions opt{v.bounds.policy, v.bounds.slack};
  for (int64_t r = 0; r <= v.bounds.r_max; ++r) {
    const int64_t pr = ipow(p, r);
    for (int64_t j = 1; j <= v.bounds.j_max; ++j) {
      if (j > 1 && j % p == 0) continue;
      const int64_t m = v.period.sigma * j * pr;
      v.probes.push_back(CohomProbe{r, j, cohomology_dims(ct, v.period, m, m + v.period.sigma * pr, field, opt)});
    }
  }
  for (int64_t m = 1; m <= v.bounds.m_max; ++m) {
    FactorizationOutcome f = factorization_search(ct, v.period, m, field, v.bounds.branch_budget);
    const bool ok = f.success;
    v.probes.push_back(std::move(f));
    if (ok) break;
  }

  // Smallest-m factorization first, then the first nonzero h0 in probe order.
  for (const Probe& pr : v.probes)
    if (auto* f = std::get_if<FactorizationOutcome>(&pr); f && f->success) {
      if (!verify_factorization(*f, ct)) throw InconsistencyError("factorization witness failed re-verification");
      v.witness = Witness{"A4", f->m, 0, 0, 0};
      break;
    }
  if (!v.witness)
    for (const Probe& pr : v.probes)
      if (auto* c = std::get_if<CohomProbe>(&pr); c && c->report.h0 > 0) {
        CohomOptions wide = opt;
        wide.slack = 2 * opt.slack;
        CohomReport again = cohomology_dims(ct, v.period, c->report.m, c->report.l, field, wide);
        if (again.h0 != c->report.h0) throw InconsistencyError("h0 changed when the scan slack was doubled");
        v.witness = Witness{c->j == 1 ? "C4" : "C3", 0, c->r, c->j, c->report.h0};
        break;
      }
  if (v.witness) {
    v.status = Status::FG_WITNESS;
  } else {
    v.status = Status::NO_WITNESS_UP_TO_BOUNDS;
    v.note = "inconclusive: no witness within the search bounds";
  }
  return v;
}

std::vector<ScanRow> scan_family(const std::vector<Rat>& g_values, const Field& field, const SearchBounds& bounds) {
  std::vector<ScanRow> rows;
  for (const Rat& g : g_values) {
    if (g < 2 || g > 3) throw RangeError("g=" + to_string(g) + " outside [2,3]");
    ScanRow row{g, std::nullopt, ""};
    try {
      row.verdict = decide(g_family_triangle(g), field, bounds);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  if (n < 0) n = -n;
  if (n < 2) return out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string format_factorization(const std::vector<std::pair<Int, unsigned>>& f) {
  std::string s;
  for (const auto& [q, e] : f) {
    if (!s.empty()) s += "*";
    s += q.get_str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

Int scaled_remainder(const std::vector<Int>& coeffs, const Int& num, const Int& den) {
  const size_t deg = coeffs.empty() ? 0 : coeffs.size() - 1;
  Int acc = 0;
  std::vector<Int> npow(deg + 1, 1);
  for (size_t i = 1; i <= deg; ++i) npow[i] = npow[i - 1] * num;
  for (size_t i = 0; i <= deg && i < coeffs.size(); ++i) {
    Int dp = 1;
    for (size_t k = i; k < deg; ++k) dp *= den;
    acc += coeffs[i] * npow[i] * dp;
  }
  return acc;
}

std::pair<std::vector<Int>, Int> divide_linear(const std::vector<Int>& coeffs, const Int& a, const Int& b) {
  if (coeffs.size() < 2) return {{}, coeffs.empty() ? Int(0) : coeffs[0]};
  std::vector<Int> q(coeffs.size() - 1);
  Int carry = 0;
  for (size_t i = coeffs.size() - 1; i >= 1; --i) {
    Int top = coeffs[i] - carry;
    if (top % a != 0) throw RangeError("inexact division by the linear factor");
    q[i - 1] = top / a;
    carry = q[i - 1] * b;
  }
  return {q, coeffs[0] - carry};
}

namespace {

using Check = std::function<std::pair<bool, std::string>()>;

std::string show_points(const std::vector<Index>& v) {
  std::string s;
  for (const Index& i : v) s += "(" + std::to_string(i.alpha) + "," + std::to_string(i.n) + ")";
  return s;
}

std::vector<Int> ints(std::initializer_list<const char*> xs) {
  std::vector<Int> out;
  for (const char* x : xs) out.emplace_back(x);
  return out;
}

bool contains(const std::vector<Index>& v, Index i) { return std::find(v.begin(), v.end(), i) != v.end(); }

}  // namespace

std::vector<SuiteItem> example_rei_suite() {
  const NormalizedTriangle tri = g_family_triangle(make_rat(13, 6));
  const ConeTables ct(tri);
  const PeriodData pd = period_data(tri);

  std::vector<std::tuple<std::string, std::string, Check>> checks;
  checks.emplace_back("a", "period data sigma=12, theta=10, theta'=2", [&] {
    std::ostringstream d;
    d << "sigma=" << pd.sigma << " theta=" << pd.theta << " theta'=" << pd.theta_prime;
    return std::pair{pd.sigma == 12 && pd.theta == 10 && pd.theta_prime == 2, d.str()};
  });
  checks.emplace_back("b", "a/b prefixes and periodicity", [&] {
    const int64_t a_ref[] = {1, 1, 3, 4, 5, 6, 8, 8, 10, 11, 13};
    bool ok = true;
    for (int i = 0; i <= 10; ++i) ok &= ct.a(i) == Count{false, a_ref[i]};
    ok &= ct.b(0) == Count{false, 1} && ct.b(-1) == Count{false, 6} && ct.b(-2) == Count{false, 13};
    for (int i = 0; i <= 50; ++i) {
      ok &= ct.a(i + 10).value == ct.a(i).value + 12;
      ok &= ct.b(-i - 2).value == ct.b(-i).value + 12;
    }
    return std::pair{ok, std::string("a_0..a_10, b_0..b_-2, shifts checked for i <= 50")};
  });
  checks.emplace_back("c", "toric data (1,1,6), d=24, ideal matrix", [&] {
    ToricData td = toric_data(tri);
    const std::array<std::array<int64_t, 3>, 2> im{{{7, 2, 1}, {11, 1, 10}}};
    bool ok = td.weights == std::array<int64_t, 3>{1, 1, 6} && td.torsion_order == 24 && !td.i_is_prime &&
              td.ideal_matrix == im;
    std::ostringstream d;
    d << "weights=(" << td.weights[0] << "," << td.weights[1] << "," << td.weights[2] << ") d=" << td.torsion_order
      << " prime=" << td.i_is_prime;
    return std::pair{ok, d.str()};
  });
  checks.emplace_back("d", "per-level chi on n=0..11", [&] {
    const int64_t ref[] = {1, -1, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0};
    bool ok = true;
    std::string d;
    for (int n = 0; n < 12; ++n) {
      int64_t c = per_level_chi(ct, pd, n);
      ok &= c == ref[n];
      d += std::to_string(c) + (n < 11 ? "," : "");
    }
    return std::pair{ok, d};
  });
  checks.emplace_back("e", "factorizations at m=2 (char 2) and m=3 (char 3)", [&] {
    bool ok = true;
    std::string d;
    for (uint64_t p : {2u, 3u}) {
      Field f(p);
      auto m1 = factorization_search(ct, pd, 1, f);
      auto mp = factorization_search(ct, pd, static_cast<int64_t>(p), f);
      ok &= !m1.success && mp.success && verify_factorization(mp, ct);
      AlgebraContext ctx{ct.u2(), ct.u(), f, static_cast<int64_t>(p) * ct.u()};
      // xi^p = 1 + (-1)^{p+1} (x_{0,p} + ...) - (vx)^p, with (vx)^p canonicalized
      LaurentPoly vx{ctx, {{{static_cast<int64_t>(p), static_cast<int64_t>(p)}, Rat(1)}}};
      Element expect = one(ctx) + x_basis(ctx, 0, static_cast<int64_t>(p)).scaled(p == 2 ? 1 : -1) -
                       canonicalize_from_laurent(vx);
      ok &= xi_power(ctx, static_cast<int64_t>(p)) == expect;
      d += "char " + std::to_string(p) + ": m=1 " + (m1.success ? "ok" : "fails") + ", m=" + std::to_string(p) +
           (mp.success ? " ok; " : " fails; ");
    }
    return std::pair{ok, d};
  });
  checks.emplace_back("f", "char 5, r=0,1, j=1: h0=0 and p^r pivots", [&] {
    bool ok = true;
    std::string d;
    for (int64_t r = 0; r <= 1; ++r) {
      DSetResult ds = d_set(tri, ct, pd, 5, r, 1);
      ok &= ds.report.h0 == 0 && ds.count == ds.bound;
      d += "r=" + std::to_string(r) + ": h0=" + std::to_string(ds.report.h0) + " pivots=" + std::to_string(ds.count) +
           " " + show_points(ds.d_positions) + "; ";
    }
    return std::pair{ok, d};
  });
  checks.emplace_back("g", "char 7: (10e+7,12e+8) pivots at e=7 (r=1,j=1) and e=14 (r=1,j=2)", [&] {
    bool ok = true;
    std::string d;
    for (int64_t j : {1, 2}) {
      const int64_t e = 7 * j;
      DSetResult ds = d_set(tri, ct, pd, 7, 1, j);
      const Index want{10 * e + 7, 12 * e + 8};
      const bool hit = contains(ds.d_positions, want);
      ok &= hit && ds.report.h0 == 0 && ds.meets_bound;
      d += "e=" + std::to_string(e) + (hit ? " pivot" : " missing") + " h0=" + std::to_string(ds.report.h0) + "; ";
    }
    return std::pair{ok, d};
  });
  checks.emplace_back("h", "101757 = 3*107*317 and 250258653 = 3^5*23*44777", [&] {
    // 10^5 N(f) divided by 10f + 1
    const auto n_poly = ints({"-2400000", "-30800000", "-60000000", "-20500000", "11400000", "-11700000"});
    auto [quot, rem] = divide_linear(n_poly, Int(10), Int(1));
    const auto quot_ref = ints({"-2501757", "-5782430", "-2175700", "1257000", "-1170000"});
    bool ok = rem == 101757 && quot == quot_ref && scaled_remainder({-24, -308, -600, -205, 114, -117}, -1, 10) == rem;
    ok &= format_factorization(factor_integer(rem)) == "3*107*317";
    // 720 q_1 and 40320 q_2 evaluated at f = -7/10
    const auto q1 = ints({"-26767572480", "-246120200736", "-967942897272", "-2110412205706", "-2754630615405",
                          "-2152135097539", "-931716713643", "-172390143619"});
    const auto q2 = ints({"-348081961328640", "-4085017940012352", "-21279829406091360", "-64577996264481356",
                          "-125811467012647820", "-163172345721567295", "-140876419259495720",
                          "-78068028418279174", "-25195471807991660", "-3607880835288623"});
    Int r1 = scaled_remainder(q1, -7, 10), r2 = scaled_remainder(q2, -7, 10);
    ok &= r1 == Int("-250258653") && format_factorization(factor_integer(r1)) == "3^5*23*44777";
    ok &= r2 == Int("-5257057765239") && r2 % 44777 != 0;
    return std::pair{ok, "101757=" + format_factorization(factor_integer(rem)) + ", " + r1.get_str() + "=-" +
                             format_factorization(factor_integer(r1)) + ", " + r2.get_str() + " mod 44777 = " +
                             Int(r2 % 44777).get_str()};
  });

  std::vector<SuiteItem> out;
  for (auto& [id, title, check] : checks) {
    SuiteItem item{id, title, false, ""};
    try {
      auto [ok, detail] = check();
      item.pass = ok;
      item.detail = detail;
    } catch (const std::exception& e) {
      item.detail = e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace reeslab
