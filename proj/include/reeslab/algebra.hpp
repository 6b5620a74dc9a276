#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "reeslab/field.hpp"
#include "reeslab/index.hpp"
#include "reeslab/rational.hpp"

namespace reeslab {

// Slope ubar = -u2/u, base field and truncation level l of F_l = F / x^l F.
struct AlgebraContext {
  int64_t u2 = 0;
  int64_t u = 1;
  Field field;
  int64_t level = 1;

  int64_t ceil_ubar(int64_t alpha) const { return ceil_div(-alpha * u2, u); }
  AlgebraContext at_level(int64_t l) const { return AlgebraContext{u2, u, field, l}; }

  friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;
};

using Terms = std::map<Index, Rat>;

void accumulate(Terms& terms, const Field& f, const Index& at, const Rat& c);

// Sparse element of F_l in the basis x_{alpha,n} = v^alpha w^{ceil(alpha ubar)} x^n.
class Element {
 public:
  explicit Element(AlgebraContext ctx) : ctx_(std::move(ctx)) {}
  Element(AlgebraContext ctx, Terms terms);

  const AlgebraContext& context() const { return ctx_; }
  int64_t level() const { return ctx_.level; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Index& at) const;
  int64_t lowest_level() const;  // level of the first term; level() if zero

  void add_term(const Index& at, const Rat& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element scaled(const Rat& c) const;
  Element level_component(int64_t n) const;
  Element truncated(int64_t l) const;

  friend bool operator==(const Element& a, const Element& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

 private:
  AlgebraContext ctx_;
  Terms terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Element& a, const Element& b);

Element zero(const AlgebraContext& ctx);
Element one(const AlgebraContext& ctx);
Element x_basis(const AlgebraContext& ctx, int64_t alpha, int64_t n);

Element multiply(const Element& a, const Element& b);
Element mul_w(const Element& e);
Element shift_levels(const Element& e, int64_t i);  // e * x^i
Element power(const Element& e, uint64_t k);
Element invert_unit(const Element& e);

Element w_element(const AlgebraContext& ctx);
Element w_power(const AlgebraContext& ctx, int64_t k);
Element one_minus_x_power(const AlgebraContext& ctx, int64_t j);
Element xi_power(const AlgebraContext& ctx, int64_t m);
Element z_element(const AlgebraContext& ctx, int64_t alpha, int64_t n);

// Closed-form binomial expansion of x_{alpha,n} w^k, valid only for ubar = -1/2.
Element w_pow_expand(const AlgebraContext& ctx, int64_t alpha, int64_t n, int64_t k);

// Concrete model K[v^{+-1}][x]/(x^l); key is (power of x, power of v).
struct LaurentPoly {
  AlgebraContext ctx;
  std::map<std::pair<int64_t, int64_t>, Rat> coeffs;
};

LaurentPoly laurent_basis(const AlgebraContext& ctx, int64_t alpha, int64_t n);
LaurentPoly to_laurent(const Element& e);
LaurentPoly laurent_multiply(const LaurentPoly& a, const LaurentPoly& b);
Element canonicalize_from_laurent(const LaurentPoly& poly);

// One line "alpha n coeff" per term, sorted by (n, alpha).
std::string dump(const Element& e);
Element parse_dump(const AlgebraContext& ctx, const std::string& text);

}  // namespace reeslab
