#pragma once

#include <iosfwd>
#include <string>

#include "crp/bay.hpp"

namespace crp {

struct TwoStageInstance;  // stochastic.hpp

/// Instance file: {"tiers": P, "columns": C, "stacks": [[bottom,...,top], ...]}.
std::string bay_to_json(const Bay& bay);
Bay bay_from_json(const std::string& text);

/// Plain-text form for hand-written tests: header "P C", then one column per
/// line, labels space-separated bottom to top (blank line = empty column).
std::string bay_to_text(const Bay& bay);
Bay bay_from_text(const std::string& text);

/// Reads either format: JSON when the first non-space character is '{'.
Bay load_bay_file(const std::string& path);
void save_bay_file(const Bay& bay, const std::string& path);

/// Two-stage instance file: the bay JSON fields plus
/// {"known": k, "t_star": t, "seed": s}.
std::string two_stage_to_json(const TwoStageInstance& inst, std::uint64_t seed);
TwoStageInstance two_stage_from_json(const std::string& text, std::uint64_t* seed_out = nullptr);
TwoStageInstance load_two_stage_file(const std::string& path, std::uint64_t* seed_out = nullptr);

}  // namespace crp
