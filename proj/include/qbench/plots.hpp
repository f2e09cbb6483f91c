#pragma once

#include <string>
#include <vector>

#include "qbench/analysis.hpp"
#include "qbench/harness.hpp"

namespace qbench {

enum class PlotKind { Box, Scatter, Convergence };

PlotKind plot_kind_from_name(const std::string& name);

/// Written files (CSV always; SVG when requested).
struct PlotOutput {
  std::vector<std::string> files;
};

/// Box kind: one CSV row per (group, metric) with the box statistics.
PlotOutput emit_box_plot(const std::map<GroupKey, GroupSummary>& summary,
                         const std::string& out_prefix, bool svg);

/// Scatter kind: (l1, normalized_hog, class, width) per row plus a
/// regression footer.
PlotOutput emit_scatter_plot(const std::vector<ResultRow>& rows,
                             const std::string& out_prefix, bool svg);

/// Convergence kind: (n_qubits, layers, distance) per curve point.
PlotOutput emit_convergence_plot(const std::vector<FitCurve>& curves,
                                 const std::string& out_prefix, bool svg);

}  // namespace qbench
