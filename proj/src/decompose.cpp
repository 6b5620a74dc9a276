#include "reeslab/decompose.hpp"

#include <optional>

#include "reeslab/errors.hpp"

namespace reeslab {

const char* policy_name(OverlapPolicy p) { return p == OverlapPolicy::A ? "A" : "B"; }

ZCache::ZCache(const AlgebraContext& ctx, int64_t min_level)
    : ctx_(ctx), rel_(ctx.at_level(std::max<int64_t>(1, ctx.level - min_level))), min_level_(min_level) {}

const Element& ZCache::x_times_w_power(int64_t r, int64_t delta) {
  auto key = std::make_pair(r, delta);
  if (auto it = xw_.find(key); it != xw_.end()) return it->second;
  // Continue from the largest cached power below delta.
  auto it = xw_.lower_bound(key);
  std::optional<Element> e;
  int64_t from = 0;
  if (it != xw_.begin()) {
    auto prev = std::prev(it);
    if (prev->first.first == r) {
      e = prev->second;
      from = prev->first.second;
    }
  }
  if (!e) e = x_basis(rel_, r, 0);
  for (int64_t d = from; d < delta; ++d) e = mul_w(*e);
  return xw_.emplace(key, std::move(*e)).first->second;
}

std::pair<const Terms*, int64_t> ZCache::lookup(int64_t alpha, int64_t n) {
  if (n < min_level_ || n >= ctx_.level) throw LevelError("z requested outside the cached range");
  const int64_t r = mod_floor(alpha, ctx_.u);
  auto key = std::make_pair(r, n);
  auto it = z_.find(key);
  if (it == z_.end()) {
    const int64_t delta = ctx_.ceil_ubar(r - n) - ctx_.ceil_ubar(r);
    const Element& xw = x_times_w_power(r, delta);
    const int64_t room = ctx_.level - n;
    std::vector<Rat> geo(room);  // coefficients of (1-x)^{-n}
    for (int64_t s = 0; s < room; ++s) geo[s] = Rat(binomial(Int(static_cast<long>(n + s - 1)), s));
    Terms z;
    for (const auto& [at, c] : xw.terms()) {
      if (at.n >= room) break;
      for (int64_t s = 0; at.n + s < room; ++s) accumulate(z, ctx_.field, {at.alpha, n + at.n + s}, c * geo[s]);
    }
    it = z_.emplace(key, std::move(z)).first;
  }
  return {&it->second, alpha - r};
}

namespace {

void check_tables(const AlgebraContext& ctx, const ConeTables& ct) {
  if (ctx.u2 != ct.u2() || ctx.u != ct.u()) throw ContextMismatch("cone tables belong to a different slope");
}

enum class Route { A, B, Gap };

Route route(const ConeTables& ct, const Index& at, OverlapPolicy policy) {
  const bool a = ct.pa_member(at), b = ct.pb_member(at);
  if (a && b) return policy == OverlapPolicy::A ? Route::A : Route::B;
  if (a) return Route::A;
  if (b) return Route::B;
  return Route::Gap;
}

}  // namespace

DecompositionCertificate subspace_decompose(const Element& e, int64_t m, const ConeTables& ct, OverlapPolicy policy,
                                            ZCache* cache) {
  const AlgebraContext& ctx = e.context();
  check_tables(ctx, ct);
  if (e.lowest_level() < m) throw LevelError("element has terms below level m");
  std::optional<ZCache> local;
  if (!cache || !(cache->context() == ctx)) cache = &local.emplace(ctx, m);

  DecompositionCertificate cert;
  cert.policy = policy;
  Terms residual = e.terms();
  while (!residual.empty()) {
    auto [at, c] = *residual.begin();
    residual.erase(residual.begin());
    switch (route(ct, at, policy)) {
      case Route::A:
        accumulate(cert.a_part, ctx.field, at, c);
        break;
      case Route::Gap:
        accumulate(cert.gap_residual, ctx.field, at, c);
        break;
      case Route::B: {
        accumulate(cert.b_part, ctx.field, at, c);
        auto [z, shift] = cache->lookup(at.alpha, at.n);
        for (const auto& [zi, zc] : *z) {
          if (zi.n == at.n) continue;  // the leading x_{alpha,n}
          accumulate(residual, ctx.field, {zi.alpha + shift, zi.n}, -c * zc);
        }
        break;
      }
    }
  }
  return cert;
}

Terms reduce_to_gaps(const Terms& start, int64_t m, const ConeTables& ct, OverlapPolicy policy, ZCache& cache) {
  const AlgebraContext& ctx = cache.context();
  check_tables(ctx, ct);
  Terms residual;
  for (const auto& [at, c] : start) {
    if (at.n < m) throw LevelError("element has terms below level m");
    if (route(ct, at, policy) != Route::A) accumulate(residual, ctx.field, at, c);
  }
  Terms gaps;
  while (!residual.empty()) {
    auto [at, c] = *residual.begin();
    residual.erase(residual.begin());
    if (route(ct, at, policy) == Route::Gap) {
      accumulate(gaps, ctx.field, at, c);
      continue;
    }
    auto [z, shift] = cache.lookup(at.alpha, at.n);
    for (const auto& [zi, zc] : *z) {
      if (zi.n == at.n) continue;
      Index target{zi.alpha + shift, zi.n};
      if (route(ct, target, policy) == Route::A) continue;
      accumulate(residual, ctx.field, target, -c * zc);
    }
  }
  return gaps;
}

Element reexpand(const DecompositionCertificate& cert, const AlgebraContext& ctx) {
  Element out(ctx, cert.a_part);
  for (const auto& [at, c] : cert.gap_residual) out.add_term(at, c);
  for (const auto& [at, c] : cert.b_part) out += z_element(ctx, at.alpha, at.n).scaled(c);
  return out;
}

bool in_b_span(const Element& e, const ConeTables& ct, ZCache* cache) {
  auto cert = subspace_decompose(e, 0, ct, OverlapPolicy::B, cache);
  return cert.a_part.empty() && cert.gap_residual.empty();
}

}  // namespace reeslab
