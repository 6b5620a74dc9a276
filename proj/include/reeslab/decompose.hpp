#pragma once
#include <cstdint>
#include <map>
#include <utility>

#include "reeslab/algebra.hpp"
#include "reeslab/geometry.hpp"

namespace reeslab {

enum class OverlapPolicy { A, B };

const char* policy_name(OverlapPolicy p);

// Memoized z_{alpha,n} expansions for one algebra, valid for n >= min_level.
// Uses z_{alpha+uq,n} = x_{uq,0} z_{alpha,n}, a pure column shift, so only
// u residues per level are ever expanded.  Not thread-safe; keep one per task.
class ZCache {
 public:
  ZCache(const AlgebraContext& ctx, int64_t min_level);

  const AlgebraContext& context() const { return ctx_; }

  // Terms of z_{r,n} for r = alpha mod u, and the column offset alpha - r.
  std::pair<const Terms*, int64_t> lookup(int64_t alpha, int64_t n);

 private:
  const Element& x_times_w_power(int64_t r, int64_t delta);

  AlgebraContext ctx_;
  AlgebraContext rel_;
  int64_t min_level_;
  std::map<std::pair<int64_t, int64_t>, Terms> z_;
  std::map<std::pair<int64_t, int64_t>, Element> xw_;
};

struct DecompositionCertificate {
  Terms a_part;        // x-basis, P_A positions
  Terms b_part;        // z-basis, P_B positions
  Terms gap_residual;  // x-basis, gap positions
  OverlapPolicy policy = OverlapPolicy::A;
};

DecompositionCertificate subspace_decompose(const Element& e, int64_t m, const ConeTables& ct,
                                            OverlapPolicy policy, ZCache* cache = nullptr);

// Same reduction, keeping only the gap residual (A-side coordinates are
// discarded as soon as they appear).
Terms reduce_to_gaps(const Terms& start, int64_t m, const ConeTables& ct, OverlapPolicy policy, ZCache& cache);

// Sum of a_part * x + b_part * z + gap_residual.
Element reexpand(const DecompositionCertificate& cert, const AlgebraContext& ctx);

// True iff e lies in the z-span of P_B positions, i.e. in psi(B_l).
bool in_b_span(const Element& e, const ConeTables& ct, ZCache* cache = nullptr);

}  // namespace reeslab
