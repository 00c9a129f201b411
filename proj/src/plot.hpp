#pragma once

#include <string>

#include "sweep.hpp"

namespace photonet {

// Renders a self-contained SVG: squares for f0 and circles for f1 per sweep
// point (open markers for the open configuration, filled otherwise) with the
// amplitude-model curves dashed underneath.  An empty table yields axes only.
void emit_plot(const SweepTable& table, const std::string& path);

}  // namespace photonet
