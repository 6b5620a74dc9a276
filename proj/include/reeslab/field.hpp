#pragma once
#include <cstdint>
#include <string>

#include "reeslab/rational.hpp"

namespace reeslab {

// Q (characteristic 0) or F_p.  Elements are carried as Rat; over F_p the
// canonical representative is the integer in [0, p).
class Field {
 public:
  explicit Field(uint64_t characteristic = 0);

  uint64_t characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }

  Rat reduce(const Rat& a) const;
  Rat add(const Rat& a, const Rat& b) const { return reduce(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return reduce(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return reduce(a * b); }
  Rat neg(const Rat& a) const { return reduce(-a); }
  Rat inv(const Rat& a) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  uint64_t p_;
  Int pz_;
};

bool is_prime(uint64_t n);

}  // namespace reeslab
