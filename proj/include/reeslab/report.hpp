#pragma once
#include <string>
#include <vector>

#include "reeslab/cohomology.hpp"
#include "reeslab/decision.hpp"

namespace reeslab {

inline constexpr const char* kVersion = "0.1.0";

// Stable JSON (2-space indent, fixed key order, rationals as "p/q" strings).
std::string to_json(const Verdict& v);
std::string to_json(const CohomReport& r);
std::string to_json(const FactorizationOutcome& f);

// Inverse of to_json(Verdict); re-serializing the result is byte-identical.
Verdict verdict_from_json(const std::string& text);

std::string to_text(const Verdict& v);
std::string to_text(const CohomReport& r);
std::string to_text(const FactorizationOutcome& f);
std::string scan_table(const std::vector<ScanRow>& rows);

}  // namespace reeslab
