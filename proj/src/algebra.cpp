#include "reeslab/algebra.hpp"

#include <sstream>

#include "reeslab/errors.hpp"

namespace reeslab {

void accumulate(Terms& terms, const Field& f, const Index& at, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(at, f.reduce(c));
  if (!inserted) it->second = f.add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

Element::Element(AlgebraContext ctx, Terms terms) : ctx_(std::move(ctx)) {
  for (auto& [at, c] : terms) add_term(at, c);
}

Rat Element::coeff(const Index& at) const {
  auto it = terms_.find(at);
  return it == terms_.end() ? Rat(0) : it->second;
}

int64_t Element::lowest_level() const { return terms_.empty() ? ctx_.level : terms_.begin()->first.n; }

void Element::add_term(const Index& at, const Rat& c) {
  if (at.n < 0) throw LevelError("negative level");
  if (at.n >= ctx_.level) return;
  accumulate(terms_, ctx_.field, at, c);
}

Element& Element::operator+=(const Element& o) {
  if (!(ctx_ == o.ctx_)) throw ContextMismatch("adding elements of different algebras");
  for (const auto& [at, c] : o.terms_) accumulate(terms_, ctx_.field, at, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!(ctx_ == o.ctx_)) throw ContextMismatch("subtracting elements of different algebras");
  for (const auto& [at, c] : o.terms_) accumulate(terms_, ctx_.field, at, -c);
  return *this;
}

Element Element::scaled(const Rat& c) const {
  Element r(ctx_);
  for (const auto& [at, d] : terms_) accumulate(r.terms_, ctx_.field, at, c * d);
  return r;
}

Element Element::level_component(int64_t n) const {
  Element r(ctx_);
  for (auto it = terms_.lower_bound(Index{INT64_MIN, n}); it != terms_.end() && it->first.n == n; ++it)
    r.terms_.insert(*it);
  return r;
}

Element Element::truncated(int64_t l) const {
  Element r(ctx_.at_level(l));
  for (const auto& [at, c] : terms_)
    if (at.n < l) r.terms_.insert({at, c});
  return r;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

Element zero(const AlgebraContext& ctx) { return Element(ctx); }

Element one(const AlgebraContext& ctx) { return x_basis(ctx, 0, 0); }

Element x_basis(const AlgebraContext& ctx, int64_t alpha, int64_t n) {
  if (n < 0 || n >= ctx.level)
    throw LevelError("x_{" + std::to_string(alpha) + "," + std::to_string(n) + "} outside F_" + std::to_string(ctx.level));
  Element e(ctx);
  e.add_term({alpha, n}, Rat(1));
  return e;
}

namespace {

// c * x_{beta,m} * w, using x_{b,m} w = x_{b,m} - x_{b,m+1} + x_{b+1,m+1} w^eps
// with eps = ceil(b ubar) - ceil((b+1) ubar) in {0, 1}.
void add_times_w(Terms& out, const AlgebraContext& ctx, int64_t beta, int64_t m, const Rat& c) {
  const int64_t l = ctx.level;
  while (m < l) {
    accumulate(out, ctx.field, {beta, m}, c);
    if (m + 1 >= l) return;
    accumulate(out, ctx.field, {beta, m + 1}, -c);
    if (ctx.ceil_ubar(beta) == ctx.ceil_ubar(beta + 1)) {
      accumulate(out, ctx.field, {beta + 1, m + 1}, c);
      return;
    }
    ++beta;
    ++m;
  }
}

void check_same(const Element& a, const Element& b) {
  if (!(a.context() == b.context())) throw ContextMismatch("operands live in different algebras");
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  check_same(a, b);
  const AlgebraContext& ctx = a.context();
  const int64_t l = ctx.level;
  Terms direct, corrected;
  for (const auto& [i1, c1] : a.terms()) {
    for (const auto& [i2, c2] : b.terms()) {
      const int64_t n = i1.n + i2.n;
      if (n >= l) break;
      const int64_t alpha = i1.alpha + i2.alpha;
      const int64_t delta = ctx.ceil_ubar(i1.alpha) + ctx.ceil_ubar(i2.alpha) - ctx.ceil_ubar(alpha);
      accumulate(delta == 0 ? direct : corrected, ctx.field, {alpha, n}, c1 * c2);
    }
  }
  for (const auto& [at, c] : corrected) add_times_w(direct, ctx, at.alpha, at.n, c);
  Element r(ctx);
  for (const auto& [at, c] : direct) r.add_term(at, c);
  return r;
}

Element mul_w(const Element& e) {
  Terms out;
  for (const auto& [at, c] : e.terms()) add_times_w(out, e.context(), at.alpha, at.n, c);
  return Element(e.context(), std::move(out));
}

Element shift_levels(const Element& e, int64_t i) {
  Element r(e.context());
  for (const auto& [at, c] : e.terms()) r.add_term({at.alpha, at.n + i}, c);
  return r;
}

Element power(const Element& e, uint64_t k) {
  Element result = one(e.context());
  Element base = e;
  while (k) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return result;
}

Element invert_unit(const Element& e) {
  Element head = e.level_component(0);
  if (head.terms().size() != 1 || head.terms().begin()->first != Index{0, 0})
    throw NotAUnit("level-0 part is not a nonzero multiple of x_{0,0}");
  const Field& f = e.context().field;
  Rat cinv = f.inv(head.terms().begin()->second);
  Element neg_n = one(e.context()) - e.scaled(cinv);  // -(normalized e - 1)
  Element result = one(e.context());
  Element term = one(e.context());
  for (int64_t i = 1; i < e.level(); ++i) {
    term = multiply(term, neg_n);
    if (term.is_zero()) break;
    result += term;
  }
  return result.scaled(cinv);
}

Element w_element(const AlgebraContext& ctx) { return mul_w(one(ctx)); }

Element w_power(const AlgebraContext& ctx, int64_t k) {
  if (k >= 0) {
    Element r = one(ctx);
    for (int64_t i = 0; i < k; ++i) r = mul_w(r);
    return r;
  }
  return power(invert_unit(w_element(ctx)), static_cast<uint64_t>(-k));
}

Element one_minus_x_power(const AlgebraContext& ctx, int64_t j) {
  Element r(ctx);
  for (int64_t i = 0; i < ctx.level; ++i) {
    Int c = binomial(Int(static_cast<long>(j)), static_cast<uint64_t>(i));
    if (i % 2) c = -c;
    r.add_term({0, i}, Rat(c));
  }
  return r;
}

Element xi_power(const AlgebraContext& ctx, int64_t m) {
  return multiply(one_minus_x_power(ctx, m * ctx.u), w_power(ctx, -m * ctx.u2));
}

Element z_element(const AlgebraContext& ctx, int64_t alpha, int64_t n) {
  Element e = x_basis(ctx, alpha, n);
  const int64_t delta = ctx.ceil_ubar(alpha - n) - ctx.ceil_ubar(alpha);
  for (int64_t i = 0; i < delta; ++i) e = mul_w(e);
  return multiply(e, one_minus_x_power(ctx, -n));
}

namespace {

// coef * (1-x)^j * x_{beta,m}
void add_one_minus_x_times(Element& out, int64_t j, int64_t beta, int64_t m, const Int& coef) {
  for (int64_t i = 0; m + i < out.level() && i <= j; ++i) {
    Int c = binomial(Int(static_cast<long>(j)), static_cast<uint64_t>(i)) * coef;
    if (i % 2) c = -c;
    out.add_term({beta, m + i}, Rat(c));
  }
}

Int binom(int64_t top, int64_t k) { return binomial(Int(static_cast<long>(top)), static_cast<uint64_t>(k)); }

}  // namespace

Element w_pow_expand(const AlgebraContext& ctx, int64_t alpha, int64_t n, int64_t k) {
  if (!(ctx.u2 == 1 && ctx.u == 2)) throw ContextError("closed form requires ubar = -1/2");
  if (k < 1) throw RangeError("k must be positive");
  if (n < 0 || n >= ctx.level) throw LevelError("n outside truncation");
  Element out(ctx);
  if (mod_floor(alpha, 2) == 0) {
    for (int64_t q = 0; q < k; ++q) {
      add_one_minus_x_times(out, k - q, alpha + 2 * q, n + 2 * q, binom(k + q - 1, 2 * q));
      add_one_minus_x_times(out, k - q - 1, alpha + 2 * q + 1, n + 2 * q + 1, binom(k + q, 2 * q + 1));
    }
  } else {
    add_one_minus_x_times(out, k, alpha, n, Int(1));
    for (int64_t q = 0; q < k; ++q) {
      add_one_minus_x_times(out, k - q, alpha + 2 * q + 1, n + 2 * q + 1, binom(k + q, 2 * q + 1));
      add_one_minus_x_times(out, k - q - 1, alpha + 2 * q + 2, n + 2 * q + 2, binom(k + q + 1, 2 * q + 2));
    }
  }
  return out;
}

namespace {

void laurent_add(LaurentPoly& p, int64_t xn, int64_t vexp, const Rat& c) {
  if (xn >= p.ctx.level || c == 0) return;
  auto [it, inserted] = p.coeffs.try_emplace({xn, vexp}, p.ctx.field.reduce(c));
  if (!inserted) it->second = p.ctx.field.add(it->second, c);
  if (it->second == 0) p.coeffs.erase(it);
}

}  // namespace

LaurentPoly laurent_basis(const AlgebraContext& ctx, int64_t alpha, int64_t n) {
  // v^alpha (1 + (v-1)x)^k x^n, k = ceil(alpha ubar), as a series in x.
  LaurentPoly p{ctx, {}};
  const Int k(static_cast<long>(ctx.ceil_ubar(alpha)));
  for (int64_t i = 0; n + i < ctx.level; ++i) {
    Int bk = binomial(k, static_cast<uint64_t>(i));
    if (bk == 0) continue;
    for (int64_t j = 0; j <= i; ++j) {
      Int c = bk * binom(i, j);
      if ((i - j) % 2) c = -c;
      laurent_add(p, n + i, alpha + j, Rat(c));
    }
  }
  return p;
}

LaurentPoly to_laurent(const Element& e) {
  LaurentPoly p{e.context(), {}};
  for (const auto& [at, c] : e.terms()) {
    LaurentPoly b = laurent_basis(e.context(), at.alpha, at.n);
    for (const auto& [key, d] : b.coeffs) laurent_add(p, key.first, key.second, c * d);
  }
  return p;
}

LaurentPoly laurent_multiply(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.ctx == b.ctx)) throw ContextMismatch("Laurent operands in different algebras");
  LaurentPoly p{a.ctx, {}};
  for (const auto& [ka, ca] : a.coeffs)
    for (const auto& [kb, cb] : b.coeffs) {
      if (ka.first + kb.first >= a.ctx.level) break;
      laurent_add(p, ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  return p;
}

Element canonicalize_from_laurent(const LaurentPoly& poly) {
  LaurentPoly rest = poly;
  Element out(poly.ctx);
  while (!rest.coeffs.empty()) {
    auto [key, c] = *rest.coeffs.begin();
    const int64_t n = key.first, alpha = key.second;
    out.add_term({alpha, n}, c);
    LaurentPoly b = laurent_basis(poly.ctx, alpha, n);
    for (const auto& [kb, d] : b.coeffs) laurent_add(rest, kb.first, kb.second, -c * d);
  }
  return out;
}

std::string dump(const Element& e) {
  std::ostringstream os;
  for (const auto& [at, c] : e.terms()) os << at.alpha << ' ' << at.n << ' ' << c.get_str() << '\n';
  return os.str();
}

Element parse_dump(const AlgebraContext& ctx, const std::string& text) {
  Element e(ctx);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int64_t alpha, n;
    std::string coeff;
    if (!(ls >> alpha >> n >> coeff)) throw ParseError("bad dump line: " + line);
    e.add_term({alpha, n}, parse_rat(coeff));
  }
  return e;
}

}  // namespace reeslab
