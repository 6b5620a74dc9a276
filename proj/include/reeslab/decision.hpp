#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reeslab/cohomology.hpp"
#include "reeslab/geometry.hpp"

namespace reeslab {

struct SearchBounds {
  int64_t r_max = 1;
  int64_t j_max = 0;  // 0 selects p - 1 in characteristic p, 1 otherwise
  int64_t m_max = 6;
  int64_t branch_budget = 10000;
  int64_t slack = 0;  // 0 selects REESLAB_SLACK or sigma
  OverlapPolicy policy = OverlapPolicy::A;
};

int64_t effective_j_max(const SearchBounds& b, uint64_t p);

// Explicit slack if positive, else REESLAB_SLACK, else sigma. Must be >= sigma.
int64_t resolve_slack(const PeriodData& pd, int64_t requested);

enum class Status { FG_EXACT, FG_WITNESS, NOT_FG_EXACT, NO_WITNESS_UP_TO_BOUNDS };

const char* status_name(Status s);
Status parse_status(const std::string& s);
bool is_fg(Status s);

struct Witness {
  std::string kind;  // "A4" (unit factorization), "C4" (j = 1) or "C3" (j >= 2)
  int64_t m = 0;     // A4
  int64_t r = 0, j = 0, h0 = 0;  // C3 / C4
};

struct CohomProbe {
  int64_t r = 0, j = 0;
  CohomReport report;
};

using Probe = std::variant<CohomProbe, FactorizationOutcome>;

struct Verdict {
  NormalizedTriangle triangle;
  PeriodData period;
  uint64_t characteristic = 0;
  Status status = Status::NO_WITNESS_UP_TO_BOUNDS;
  std::optional<Witness> witness;
  std::optional<EmuResult> emu;
  std::optional<bool> b2;
  std::vector<Probe> probes;
  SearchBounds bounds;  // j_max and slack resolved
  std::string note;
};

Verdict decide(const NormalizedTriangle& tri, const Field& field, const SearchBounds& bounds = {});

struct ScanRow {
  Rat g;
  std::optional<Verdict> verdict;
  std::string error;  // "Name: message" when decide raised
};

std::vector<ScanRow> scan_family(const std::vector<Rat>& g_values, const Field& field,
                                 const SearchBounds& bounds = {});

struct SuiteItem {
  std::string id, title;
  bool pass = false;
  std::string detail;
};

std::vector<SuiteItem> example_rei_suite();

// Prime factorization by trial division, ascending primes with multiplicity.
std::vector<std::pair<Int, unsigned>> factor_integer(Int n);
std::string format_factorization(const std::vector<std::pair<Int, unsigned>>& f);

// den^deg * P(num/den) for P with integer coefficients (constant term first):
// the remainder of den^deg * P on division by (den*f - num).
Int scaled_remainder(const std::vector<Int>& coeffs, const Int& num, const Int& den);

// Quotient and remainder of P by (a*f + b), a dividing each step exactly.
std::pair<std::vector<Int>, Int> divide_linear(const std::vector<Int>& coeffs, const Int& a, const Int& b);

}  // namespace reeslab
