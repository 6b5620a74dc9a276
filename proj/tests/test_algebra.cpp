#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "reeslab/algebra.hpp"
#include "reeslab/decompose.hpp"
#include "reeslab/errors.hpp"

using namespace reeslab;

namespace {

AlgebraContext ctx13(uint64_t p, int64_t level) { return AlgebraContext{1, 2, Field(p), level}; }

Element random_element(const AlgebraContext& ctx, std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int64_t> alpha(-6, 6), n(0, ctx.level - 1), c(-4, 4);
  Element e(ctx);
  for (int i = 0; i < terms; ++i) e.add_term({alpha(rng), n(rng)}, Rat(c(rng)));
  return e;
}

void laurent_add(LaurentPoly& p, int64_t xpow, int64_t vexp, const Rat& c) {
  if (xpow >= p.ctx.level || c == 0) return;
  Rat& slot = p.coeffs[{xpow, vexp}];
  slot = p.ctx.field.reduce(slot + c);
  if (slot == 0) p.coeffs.erase({xpow, vexp});
}

// v^alpha w^k x^n (1-x)^{-n} with w = 1 + (v-1)x, expanded by hand.
LaurentPoly z_oracle(const AlgebraContext& ctx, int64_t alpha, int64_t n, int64_t k) {
  LaurentPoly w{ctx, {}};
  for (int64_t i = 0; n + i < ctx.level; ++i) {
    Int bk = binomial(Int(static_cast<long>(k)), i);
    for (int64_t j = 0; j <= i; ++j) {
      Int c = bk * binomial(Int(static_cast<long>(i)), j) * ((i - j) % 2 ? -1 : 1);
      laurent_add(w, i, alpha + j, Rat(c));
    }
  }
  LaurentPoly geo{ctx, {}};
  for (int64_t s = 0; n + s < ctx.level; ++s) laurent_add(geo, n + s, 0, Rat(binomial(Int(static_cast<long>(n + s - 1)), s)));
  return laurent_multiply(w, geo);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Algebra, MultiplyMatchesLaurentModel) {
  std::mt19937 rng(7);
  for (uint64_t p : {0u, 2u, 5u}) {
    AlgebraContext ctx = ctx13(p, 9);
    for (int trial = 0; trial < 30; ++trial) {
      Element a = random_element(ctx, rng, 5), b = random_element(ctx, rng, 5);
      Element direct = canonicalize_from_laurent(laurent_multiply(to_laurent(a), to_laurent(b)));
      EXPECT_EQ(multiply(a, b), direct);
    }
  }
}

TEST(Algebra, OtherSlopeMatchesLaurentModel) {
  std::mt19937 rng(11);
  AlgebraContext ctx{2, 5, Field(0), 8};
  for (int trial = 0; trial < 20; ++trial) {
    Element a = random_element(ctx, rng, 4), b = random_element(ctx, rng, 4);
    EXPECT_EQ(multiply(a, b), canonicalize_from_laurent(laurent_multiply(to_laurent(a), to_laurent(b))));
  }
}

TEST(Algebra, CanonicalizeInvertsToLaurent) {
  std::mt19937 rng(3);
  AlgebraContext ctx = ctx13(0, 10);
  for (int trial = 0; trial < 20; ++trial) {
    Element a = random_element(ctx, rng, 6);
    EXPECT_EQ(canonicalize_from_laurent(to_laurent(a)), a);
  }
}

TEST(Algebra, RingAxioms) {
  std::mt19937 rng(5);
  AlgebraContext ctx = ctx13(3, 8);
  for (int trial = 0; trial < 10; ++trial) {
    Element a = random_element(ctx, rng, 4), b = random_element(ctx, rng, 4), c = random_element(ctx, rng, 4);
    EXPECT_EQ(multiply(a, b), multiply(b, a));
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    EXPECT_EQ(multiply(a, b + c), multiply(a, b) + multiply(a, c));
    EXPECT_EQ(multiply(a, one(ctx)), a);
  }
}

TEST(Algebra, WTimesBasisByHand) {
  AlgebraContext ctx = ctx13(0, 6);
  // x_{0,0} w = 1 - x + v x
  Element e0(ctx, {{{0, 0}, Rat(1)}, {{0, 1}, Rat(-1)}, {{1, 1}, Rat(1)}});
  EXPECT_EQ(mul_w(x_basis(ctx, 0, 0)), e0);
  // odd alpha: (1-x) x_{1,n} + (1-x) x_{2,n+1} + x_{3,n+2}
  Element e1(ctx, {{{1, 0}, Rat(1)}, {{1, 1}, Rat(-1)}, {{2, 1}, Rat(1)}, {{2, 2}, Rat(-1)}, {{3, 2}, Rat(1)}});
  EXPECT_EQ(mul_w(x_basis(ctx, 1, 0)), e1);
  EXPECT_EQ(w_pow_expand(ctx, 1, 0, 1), e1);
}

TEST(Algebra, WPowExpandMatchesMultiplication) {
  for (uint64_t p : {0u, 5u}) {
    AlgebraContext ctx = ctx13(p, 12);
    for (int64_t k = 1; k <= 6; ++k) {
      Element wk = w_power(ctx, k);
      for (int64_t alpha = -4; alpha <= 4; ++alpha)
        for (int64_t n = 0; n <= 2; ++n)
          EXPECT_EQ(w_pow_expand(ctx, alpha, n, k), multiply(x_basis(ctx, alpha, n), wk)) << alpha << " " << n << " " << k;
    }
  }
  EXPECT_THROW(w_pow_expand(AlgebraContext{1, 3, Field(0), 6}, 0, 0, 1), ContextError);
}

TEST(Algebra, InverseAndPowers) {
  std::mt19937 rng(9);
  AlgebraContext ctx = ctx13(0, 8);
  for (int trial = 0; trial < 10; ++trial) {
    Element e = one(ctx) + random_element(ctx, rng, 4).truncated(8);
    Element unit = one(ctx);
    for (const auto& [at, c] : e.terms())
      if (at.n > 0) unit.add_term(at, c);
    EXPECT_EQ(multiply(unit, invert_unit(unit)), one(ctx));
  }
  EXPECT_EQ(multiply(w_power(ctx, 3), w_power(ctx, -3)), one(ctx));
  EXPECT_EQ(multiply(one_minus_x_power(ctx, 4), one_minus_x_power(ctx, -4)), one(ctx));
  EXPECT_EQ(power(w_element(ctx), 3), w_power(ctx, 3));
  EXPECT_THROW(invert_unit(x_basis(ctx, 0, 1)), NotAUnit);
  EXPECT_THROW(x_basis(ctx, 0, 8), LevelError);
}

TEST(Algebra, XiCanonicalForms) {
  for (int64_t p : {2, 3}) {
    AlgebraContext ctx = ctx13(static_cast<uint64_t>(p), 2 * p);
    LaurentPoly vxp{ctx, {{{p, p}, Rat(1)}}};
    Element expect = one(ctx) + x_basis(ctx, 0, p).scaled(p == 2 ? 1 : -1) - canonicalize_from_laurent(vxp);
    EXPECT_EQ(xi_power(ctx, p), expect);
  }
  // over Q, xi^m is (1 - x)^{2m} (1 - x + v x)^{-m}
  AlgebraContext q = ctx13(0, 6);
  EXPECT_EQ(xi_power(q, 2), multiply(one_minus_x_power(q, 4), w_power(q, -2)));
}

TEST(Algebra, XiLevelOneCoefficient) {
  AlgebraContext ctx = ctx13(0, 2);
  for (int64_t m = 1; m <= 5; ++m) {
    Element xi = xi_power(ctx, m);
    EXPECT_EQ(xi.coeff({0, 1}), -m);
    EXPECT_EQ(xi.coeff({1, 1}), -m);
  }
}

TEST(Algebra, ZElementMatchesOracle) {
  for (uint64_t p : {0u, 7u}) {
    AlgebraContext ctx = ctx13(p, 10);
    ZCache cache(ctx, 0);
    for (int64_t alpha = -5; alpha <= 9; ++alpha)
      for (int64_t n = 0; n < 10; ++n) {
        Element z = z_element(ctx, alpha, n);
        EXPECT_EQ(z, canonicalize_from_laurent(z_oracle(ctx, alpha, n, ctx.ceil_ubar(alpha - n))));
        auto [terms, shift] = cache.lookup(alpha, n);
        Element cached(ctx);
        for (const auto& [at, c] : *terms) cached.add_term({at.alpha + shift, at.n}, c);
        EXPECT_EQ(cached, z) << alpha << " " << n;
      }
  }
}

TEST(Algebra, DumpRoundTripAndGolden) {
  AlgebraContext ctx = ctx13(2, 4);
  Element xi2 = xi_power(ctx, 2);
  EXPECT_EQ(parse_dump(ctx, dump(xi2)), xi2);
  EXPECT_EQ(dump(xi2), read_file(std::string(REESLAB_GOLDEN_DIR) + "/xi2_char2.txt"));
  AlgebraContext c3 = ctx13(3, 6);
  EXPECT_EQ(dump(xi_power(c3, 3)), read_file(std::string(REESLAB_GOLDEN_DIR) + "/xi3_char3.txt"));
}

TEST(Algebra, FieldArithmetic) {
  Field f7(7);
  EXPECT_EQ(f7.reduce(make_rat(1, 3)), 5);
  EXPECT_EQ(f7.reduce(Rat(-1)), 6);
  EXPECT_EQ(f7.mul(f7.inv(Rat(3)), Rat(3)), 1);
  EXPECT_THROW(f7.reduce(make_rat(1, 14)), ContextError);
  EXPECT_ANY_THROW(Field(6));
}
