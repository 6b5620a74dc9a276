#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace reeslab {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(int64_t num, int64_t den = 1);

Int floor(const Rat& q);
Int ceil(const Rat& q);

// Accepts "p/q" or an integer, with optional sign. Decimal points and
// exponents are rejected so nothing is ever read as a float.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

int64_t to_int64(const Int& z);
bool is_integer(const Rat& q);

int64_t floor_div(int64_t a, int64_t b);
int64_t ceil_div(int64_t a, int64_t b);
int64_t mod_floor(int64_t a, int64_t b);

Int binomial(const Int& top, uint64_t k);  // generalized: top may be negative

}  // namespace reeslab
