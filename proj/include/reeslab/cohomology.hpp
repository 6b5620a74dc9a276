#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reeslab/algebra.hpp"
#include "reeslab/decompose.hpp"
#include "reeslab/geometry.hpp"

namespace reeslab {

struct CohomOptions {
  OverlapPolicy policy = OverlapPolicy::A;
  int64_t slack = 0;  // 0 selects sigma
};

struct ObstructionMatrix {
  int64_t m = 0, l = 0;
  std::vector<Index> overlaps;
  std::vector<Index> gaps;
  std::vector<Terms> rows;  // gap residual of z - x for each overlap
  int64_t rank = 0;
  std::vector<Index> pivot_gaps;
};

struct CohomReport {
  int64_t m = 0, l = 0;
  uint64_t characteristic = 0;
  std::vector<Index> overlaps, gaps, pivot_gaps;
  int64_t rank = 0, h0 = 0, h1 = 0;
  int64_t chi = 0, chi_independent = 0;
  bool consistent = true;
  OverlapPolicy policy = OverlapPolicy::A;
  int64_t slack = 0;
};

// Rank and leading positions of a row set; leading means smallest Index.
std::pair<int64_t, std::vector<Index>> echelonize(std::vector<Terms> rows, const Field& f);

int64_t per_level_chi(const ConeTables& ct, const PeriodData& pd, int64_t n, int64_t slack = 0);

ObstructionMatrix obstruction_matrix(const ConeTables& ct, const PeriodData& pd, int64_t m, int64_t l,
                                     const Field& field, const CohomOptions& opt = {});

CohomReport cohomology_dims(const ConeTables& ct, const PeriodData& pd, int64_t m, int64_t l, const Field& field,
                            const CohomOptions& opt = {});

struct DSetResult {
  std::vector<Index> d_positions;
  int64_t count = 0;
  int64_t bound = 1;  // p^r
  bool meets_bound = false;
  std::string warning;
  CohomReport report;
};

DSetResult d_set(const NormalizedTriangle& tri, const ConeTables& ct, const PeriodData& pd, uint64_t p, int64_t r,
                 int64_t j, const CohomOptions& opt = {});

struct FactorizationOutcome {
  bool success = false;
  int64_t m = 1;
  uint64_t characteristic = 0;
  std::optional<Element> unit_a, unit_b;
  int64_t obstruction_level = -1;
  Terms obstruction;  // gap residual at obstruction_level
  int64_t branches_explored = 0;
};

FactorizationOutcome factorization_search(const ConeTables& ct, const PeriodData& pd, int64_t m, const Field& field,
                                          int64_t branch_budget = 10000);

// Recomputes xi^m and the product of the two units; checks supports.
bool verify_factorization(const FactorizationOutcome& out, const ConeTables& ct);

bool char0_b2_check(const NormalizedTriangle& tri, const ConeTables& ct, const PeriodData& pd);

}  // namespace reeslab
