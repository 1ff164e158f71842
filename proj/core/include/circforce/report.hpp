#pragma once

#include <circforce/families.hpp>
#include <circforce/verify.hpp>

#include <string>
#include <vector>

namespace circforce {

/// Machine-readable output is JSON with a fixed key order; tables are aligned text.
/// Timing fields appear only when include_timing is set, so default output is reproducible.

std::string predictions_to_json(const CirculantSpec& spec, const std::vector<Prediction>& predictions);
std::string predictions_to_table(const CirculantSpec& spec, const std::vector<Prediction>& predictions);

std::string report_to_json(const VerificationReport& report, bool include_timing = false);
std::string report_to_table(const VerificationReport& report);

std::string sweep_to_json(const SweepSummary& summary, bool include_timing = false);
std::string sweep_to_table(const SweepSummary& summary);

/// "[2, 5]" or "5".
std::string to_string(const Interval& z);

} // namespace circforce
