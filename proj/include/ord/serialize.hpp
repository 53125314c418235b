#pragma once

#include <string>

#include <json.hpp>

#include "ord/fundamental.hpp"
#include "ord/ramsey.hpp"

namespace ord {

// Structured exports. All Nat values are emitted as decimal strings since
// they routinely exceed any fixed-width JSON number. Every top-level object
// carries "format_version": 1.

inline constexpr int kFormatVersion = 1;

// Line-oriented trace format: one line "i <TAB> x_i <TAB> render(state_i)"
// per step, then a final line "k <TAB> - <TAB> render(terminal)".
std::string trace_to_text(const DescentTrace& trace);
nlohmann::json trace_to_json(const DescentTrace& trace);

std::string tree_to_text(const ErdosRadoTree& tree);
nlohmann::json tree_to_json(const ErdosRadoTree& tree);

nlohmann::json gamma_to_json(const GammaTrace& trace);
std::string gamma_to_text(const GammaTrace& trace);

nlohmann::json report_to_json(const Verify411Report& report);
std::string report_to_text(const Verify411Report& report);

std::string largeness_name(Largeness value);
std::string claim_status_name(Verify411Report::ClaimStatus value);

}  // namespace ord
