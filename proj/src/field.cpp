#include "reeslab/field.hpp"

#include "reeslab/errors.hpp"

namespace reeslab {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(uint64_t characteristic) : p_(characteristic), pz_(static_cast<unsigned long>(characteristic)) {
  if (p_ != 0 && !is_prime(p_)) throw ContextError("characteristic " + std::to_string(p_) + " is not prime");
}

Rat Field::reduce(const Rat& a) const {
  if (p_ == 0) return a;
  Int num, den;
  mpz_mod(num.get_mpz_t(), a.get_num_mpz_t(), pz_.get_mpz_t());
  if (a.get_den() == 1) return Rat(num);
  mpz_mod(den.get_mpz_t(), a.get_den_mpz_t(), pz_.get_mpz_t());
  if (den == 0) throw ContextError("denominator divisible by the characteristic");
  mpz_invert(den.get_mpz_t(), den.get_mpz_t(), pz_.get_mpz_t());
  num *= den;
  mpz_mod(num.get_mpz_t(), num.get_mpz_t(), pz_.get_mpz_t());
  return Rat(num);
}

Rat Field::inv(const Rat& a) const {
  if (a == 0) throw ContextError("inverse of zero");
  return reduce(1 / a);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

}  // namespace reeslab
