#include "ord/serialize.hpp"

#include <sstream>

namespace ord {

using nlohmann::json;

std::string trace_to_text(const DescentTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    out << i << '\t';
    if (i < trace.inputs.size()) {
      out << trace.inputs[i].str();
    } else {
      out << '-';
    }
    out << '\t' << render(trace.states[i]) << '\n';
  }
  return out.str();
}

json trace_to_json(const DescentTrace& trace) {
  json steps = json::array();
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    json step{{"i", i}, {"state", render(trace.states[i])}};
    if (i < trace.inputs.size()) {
      step["x"] = trace.inputs[i].str();
    }
    steps.push_back(std::move(step));
  }
  return json{{"format_version", kFormatVersion},
              {"start", render(trace.start)},
              {"steps", std::move(steps)},
              {"terminal", render(trace.terminal())},
              {"reaches_zero", trace.reaches_zero()}};
}

std::string tree_to_text(const ErdosRadoTree& tree) { return tree.to_text(); }

json tree_to_json(const ErdosRadoTree& tree) {
  json nodes = json::array();
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    const auto& node = tree.nodes[id];
    json entry{{"id", id}, {"children", node.children.size()}};
    if (id != 0) {
      entry["parent"] = node.parent;
      entry["label"] = node.label.str();
      entry["created_at"] = node.created_at;
    }
    json labels = json::array();
    for (const Nat& l : node.labels) labels.push_back(l.str());
    entry["labels"] = std::move(labels);
    nodes.push_back(std::move(entry));
  }
  return json{{"format_version", kFormatVersion},
              {"level", tree.level},
              {"nodes", std::move(nodes)}};
}

json gamma_to_json(const GammaTrace& trace) {
  json gammas = json::array();
  for (const Ordinal& g : trace.gammas) gammas.push_back(render(g));
  json steps = json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& st = trace.steps[i];
    json stats = json::array();
    for (const auto& ns : st.node_stats) {
      json stat{{"node", ns.node},
                {"count", ns.count.str()},
                {"branches", ns.branches}};
      if (trace.flavor == GammaFlavor::Pairs) {
        stat["d"] = ns.d.str();
        stat["r"] = ns.r.str();
      } else {
        stat["exponent"] = render(ns.exponent);
      }
      stats.push_back(std::move(stat));
    }
    steps.push_back(json{{"step", i + 1},
                         {"inserted_node", st.inserted_node},
                         {"large_branch", st.large_branch},
                         {"node_stats", std::move(stats)}});
  }
  return json{{"format_version", kFormatVersion},
              {"flavor", trace.flavor == GammaFlavor::Pairs ? "pairs" : "general"},
              {"seed", render(trace.seed_power)},
              {"gammas", std::move(gammas)},
              {"steps", std::move(steps)},
              {"overflow_nodes", trace.overflow_nodes}};
}

std::string gamma_to_text(const GammaTrace& trace) {
  std::ostringstream out;
  out << "seed\t" << render(trace.seed_power) << '\n';
  for (std::size_t i = 0; i < trace.gammas.size(); ++i) {
    out << "gamma\t" << i << '\t' << render(trace.gammas[i]);
    if (i >= 1 && trace.steps[i - 1].large_branch) out << "\tlarge-branch";
    out << '\n';
  }
  return out.str();
}

std::string largeness_name(Largeness value) {
  switch (value) {
    case Largeness::Yes:
      return "yes";
    case Largeness::No:
      return "no";
    default:
      return "unknown";
  }
}

std::string claim_status_name(Verify411Report::ClaimStatus value) {
  switch (value) {
    case Verify411Report::ClaimStatus::Verified:
      return "verified";
    case Verify411Report::ClaimStatus::SkippedScale:
      return "skipped-scale";
    default:
      return "skipped-premise";
  }
}

json report_to_json(const Verify411Report& report) {
  json out{{"format_version", kFormatVersion},
           {"phi_large", largeness_name(report.phi_large)},
           {"mc_bounds_hold", report.mc_bounds_hold},
           {"strictly_decreasing", report.strictly_decreasing},
           {"conclusion_holds", report.conclusion_holds},
           {"claim_status", claim_status_name(report.claim_status)}};
  if (report.witness_indices) {
    json w = json::array();
    for (const Nat& v : *report.witness_indices) w.push_back(v.str());
    out["witness_indices"] = std::move(w);
  } else {
    out["witness_indices"] = nullptr;
  }
  return out;
}

std::string report_to_text(const Verify411Report& report) {
  std::ostringstream out;
  out << "phi_large\t" << largeness_name(report.phi_large) << '\n'
      << "mc_bounds_hold\t" << (report.mc_bounds_hold ? "true" : "false") << '\n'
      << "strictly_decreasing\t" << (report.strictly_decreasing ? "true" : "false")
      << '\n'
      << "conclusion_holds\t" << (report.conclusion_holds ? "true" : "false") << '\n'
      << "claim_status\t" << claim_status_name(report.claim_status) << '\n';
  out << "witness_indices\t";
  if (report.witness_indices) {
    for (std::size_t i = 0; i < report.witness_indices->size(); ++i) {
      if (i) out << ' ';
      out << (*report.witness_indices)[i].str();
    }
  } else {
    out << '-';
  }
  out << '\n';
  return out.str();
}

}  // namespace ord
