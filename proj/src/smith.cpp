#include "reeslab/smith.hpp"

#include <utility>

namespace reeslab {

namespace {

bool find_min_pivot(const IntMatrix& m, size_t t, size_t& pi, size_t& pj) {
  bool found = false;
  Int best;
  for (size_t i = t; i < m.size(); ++i)
    for (size_t j = t; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      Int a = abs(m[i][j]);
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

std::vector<Int> smith_invariant_factors(IntMatrix m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  std::vector<Int> diag;
  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    size_t pi = 0, pj = 0;
    if (!find_min_pivot(m, t, pi, pj)) break;
    for (;;) {
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) dirty = true;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) dirty = true;
      }
      if (!dirty) {
        // Pivot must divide the rest; otherwise fold an offending row in.
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
          for (size_t j = t + 1; j < cols; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
              divides = false;
              break;
            }
        if (divides) break;
      }
      find_min_pivot(m, t, pi, pj);
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

}  // namespace reeslab
