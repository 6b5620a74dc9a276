#include "reeslab/cohomology.hpp"

#include <algorithm>
#include <set>

#include "reeslab/errors.hpp"

namespace reeslab {

namespace {

int64_t pick_slack(const PeriodData& pd, int64_t slack) { return slack > 0 ? slack : pd.sigma; }

std::string show(const Index& i) { return "(" + std::to_string(i.alpha) + "," + std::to_string(i.n) + ")"; }

}  // namespace

std::pair<int64_t, std::vector<Index>> echelonize(std::vector<Terms> rows, const Field& f) {
  std::map<Index, Terms> basis;  // leading position -> row with leading coefficient 1
  for (Terms& row : rows) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto hit = basis.find(lead->first);
      if (hit == basis.end()) break;
      Rat c = lead->second;
      for (const auto& [at, b] : hit->second) accumulate(row, f, at, -c * b);
    }
    if (row.empty()) continue;
    Index lead = row.begin()->first;
    Rat inv = f.inv(row.begin()->second);
    Terms normalized;
    for (const auto& [at, c] : row) accumulate(normalized, f, at, c * inv);
    basis.emplace(lead, std::move(normalized));
  }
  std::vector<Index> pivots;
  for (const auto& [lead, row] : basis) pivots.push_back(lead);
  return {static_cast<int64_t>(pivots.size()), pivots};
}

int64_t per_level_chi(const ConeTables& ct, const PeriodData& pd, int64_t n, int64_t slack) {
  GapScan s = overlaps_and_gaps(ct, pd, n, n + 1, pick_slack(pd, slack));
  return static_cast<int64_t>(s.overlaps.size()) - static_cast<int64_t>(s.gaps.size());
}

ObstructionMatrix obstruction_matrix(const ConeTables& ct, const PeriodData& pd, int64_t m, int64_t l,
                                     const Field& field, const CohomOptions& opt) {
  if (m < 0 || m >= l) throw RangeError("need 0 <= m < l");
  GapScan scan = overlaps_and_gaps(ct, pd, m, l, pick_slack(pd, opt.slack));
  ObstructionMatrix om;
  om.m = m;
  om.l = l;
  om.overlaps = scan.overlaps;
  om.gaps = scan.gaps;
  const std::set<Index> gap_set(scan.gaps.begin(), scan.gaps.end());

  AlgebraContext ctx{ct.u2(), ct.u(), field, l};
  ZCache cache(ctx, m);
  for (const Index& ov : om.overlaps) {
    auto [z, shift] = cache.lookup(ov.alpha, ov.n);
    Terms tail;
    for (const auto& [at, c] : *z)
      if (at.n != ov.n) tail.emplace(Index{at.alpha + shift, at.n}, c);
    Terms row = reduce_to_gaps(tail, m, ct, opt.policy, cache);
    for (const auto& [at, c] : row)
      if (!gap_set.count(at)) throw ClaimViolation("residual at " + show(at) + " outside the scanned gap set");
    om.rows.push_back(std::move(row));
  }
  auto [rank, pivots] = echelonize(om.rows, field);
  om.rank = rank;
  om.pivot_gaps = pivots;
  return om;
}

CohomReport cohomology_dims(const ConeTables& ct, const PeriodData& pd, int64_t m, int64_t l, const Field& field,
                            const CohomOptions& opt) {
  ObstructionMatrix om = obstruction_matrix(ct, pd, m, l, field, opt);
  CohomReport r;
  r.m = m;
  r.l = l;
  r.characteristic = field.characteristic();
  r.overlaps = om.overlaps;
  r.gaps = om.gaps;
  r.pivot_gaps = om.pivot_gaps;
  r.rank = om.rank;
  r.h0 = static_cast<int64_t>(om.overlaps.size()) - om.rank;
  r.h1 = static_cast<int64_t>(om.gaps.size()) - om.rank;
  r.chi = r.h0 - r.h1;
  for (int64_t n = m; n < l; ++n) r.chi_independent += per_level_chi(ct, pd, n, opt.slack);
  r.consistent = r.chi == r.chi_independent;
  r.policy = opt.policy;
  r.slack = pick_slack(pd, opt.slack);
  if (!r.consistent)
    throw InconsistencyError("h0 - h1 = " + std::to_string(r.chi) + " but the level sum of chi is " +
                             std::to_string(r.chi_independent));
  return r;
}

DSetResult d_set(const NormalizedTriangle& tri, const ConeTables& ct, const PeriodData& pd, uint64_t p, int64_t r,
                 int64_t j, const CohomOptions& opt) {
  if (tri.W != 1) throw WidthError("D-sets are defined for W = 1");
  if (r < 0 || j < 1) throw RangeError("need r >= 0 and j >= 1");
  Field field(p);
  DSetResult out;
  int64_t pr = 1;
  for (int64_t i = 0; i < r; ++i) pr *= static_cast<int64_t>(p);
  if (j % static_cast<int64_t>(p) == 0) out.warning = "p divides j";
  out.bound = pr;
  out.report = cohomology_dims(ct, pd, pd.sigma * j * pr, pd.sigma * (j + 1) * pr, field, opt);
  out.d_positions = out.report.pivot_gaps;
  out.count = static_cast<int64_t>(out.d_positions.size());
  out.meets_bound = out.count >= pr;
  return out;
}

namespace {

struct SearchState {
  const ConeTables& ct;
  AlgebraContext ctx;
  ZCache cache;
  int64_t budget;
  FactorizationOutcome out;
};

Element b_unit(SearchState& st, const Terms& fb) {
  Element g = one(st.ctx);
  for (const auto& [at, c] : fb) {
    auto [z, shift] = st.cache.lookup(at.alpha, at.n);
    for (const auto& [zi, zc] : *z) g.add_term({zi.alpha + shift, zi.n}, c * zc);
  }
  return g;
}

bool search(SearchState& st, const Element& rho, const Element& ua, const Element& ub, int64_t n) {
  const Field& f = st.ctx.field;
  if (n >= st.ctx.level) {
    if (!(rho == one(st.ctx))) throw InconsistencyError("residual unit did not reduce to 1");
    st.out.unit_a = ua;
    st.out.unit_b = ub;
    return true;
  }
  Terms fa, fb, gaps;
  std::optional<std::pair<Index, Rat>> overlap;
  const Element layer = rho.level_component(n);
  for (const auto& [at, c] : layer.terms()) {
    const bool a = st.ct.pa_member(at), b = st.ct.pb_member(at);
    if (a && b) {
      if (overlap) throw ClaimViolation("two overlaps on one level");
      overlap.emplace(at, c);
    } else if (a) {
      fa.emplace(at, c);
    } else if (b) {
      fb.emplace(at, c);
    } else {
      gaps.emplace(at, c);
    }
  }
  if (!gaps.empty()) {
    st.out.obstruction_level = n;
    st.out.obstruction = gaps;
    return false;
  }
  std::vector<Rat> to_a;  // share of the overlap coefficient routed to A
  if (!overlap) {
    to_a.push_back(Rat(0));
  } else if (f.is_prime_field()) {
    for (uint64_t t = 0; t < f.characteristic(); ++t) to_a.push_back(Rat(Int(static_cast<unsigned long>(t))));
  } else {
    to_a = {overlap->second, Rat(0)};
  }
  for (const Rat& t : to_a) {
    Terms fa2 = fa, fb2 = fb;
    if (overlap) {
      if (++st.out.branches_explored > st.budget) throw BudgetExceeded("factorization branch budget exhausted");
      accumulate(fa2, f, overlap->first, t);
      accumulate(fb2, f, overlap->first, overlap->second - t);
    }
    Element ga = one(st.ctx) + Element(st.ctx, fa2);
    Element gb = b_unit(st, fb2);
    Element next = multiply(multiply(rho, invert_unit(ga)), invert_unit(gb));
    if (search(st, next, multiply(ua, ga), multiply(gb, ub), n + 1)) return true;
  }
  return false;
}

}  // namespace

FactorizationOutcome factorization_search(const ConeTables& ct, const PeriodData& pd, int64_t m, const Field& field,
                                          int64_t branch_budget) {
  (void)pd;
  if (m < 1) throw RangeError("m must be positive");
  const int64_t l = m * ct.u();
  AlgebraContext ctx{ct.u2(), ct.u(), field, l};
  SearchState st{ct, ctx, ZCache(ctx, 0), branch_budget, {}};
  st.out.m = m;
  st.out.characteristic = field.characteristic();
  Element xi = xi_power(ctx, m);
  st.out.success = search(st, xi, one(ctx), one(ctx), 1);
  if (st.out.success && !verify_factorization(st.out, ct))
    throw InconsistencyError("factorization failed re-verification");
  return st.out;
}

bool verify_factorization(const FactorizationOutcome& out, const ConeTables& ct) {
  if (!out.success || !out.unit_a || !out.unit_b) return false;
  const AlgebraContext& ctx = out.unit_a->context();
  if (!(multiply(*out.unit_a, *out.unit_b) == xi_power(ctx, out.m))) return false;
  for (const auto& [at, c] : out.unit_a->terms())
    if (!ct.pa_member(at)) return false;
  return in_b_span(*out.unit_b, ct);
}

bool char0_b2_check(const NormalizedTriangle& tri, const ConeTables& ct, const PeriodData& pd) {
  FactorizationOutcome f = factorization_search(ct, pd, 1, Field(0));
  EmuResult emu = emu_check(tri);
  if (f.success != emu.holds)
    throw TheoremViolation(std::string("unit factorization at m=1 ") + (f.success ? "succeeds" : "fails") +
                           " but the EMU condition " + (emu.holds ? "holds" : "fails"));
  return f.success;
}

}  // namespace reeslab
