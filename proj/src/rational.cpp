#include "reeslab/rational.hpp"

#include <limits>

#include "reeslab/errors.hpp"

namespace reeslab {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ParseError("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(int64_t num, int64_t den) { return make_rat(Int(num), Int(den)); }

Int floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') s.push_back(c);
  std::string_view v(s);
  bool neg = false;
  if (!v.empty() && (v[0] == '-' || v[0] == '+')) {
    neg = v[0] == '-';
    v.remove_prefix(1);
  }
  auto slash = v.find('/');
  std::string_view num = v.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : v.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  Int n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rat(neg ? Int(-n) : n, d);
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

int64_t to_int64(const Int& z) {
  if (!z.fits_slong_p()) throw RangeError("integer too large: " + z.get_str());
  return z.get_si();
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

int64_t mod_floor(int64_t a, int64_t b) { return a - b * floor_div(a, b); }

Int binomial(const Int& top, uint64_t k) {
  Int num = 1, den = 1;
  for (uint64_t i = 0; i < k; ++i) {
    num *= top - Int(static_cast<unsigned long>(i));
    den *= Int(static_cast<unsigned long>(i + 1));
  }
  return num / den;
}

}  // namespace reeslab
