#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stab/stability.hpp"

namespace toric::io {

// 2-D figures (n = 2 only): one drawing of P with its lattice points, and
// one per triangulation with the cells drawn and massive boundary edges
// highlighted. Byte output is deterministic for a fixed input.
// Throws input_error when the configuration is not 2-dimensional.
std::vector<std::pair<std::string, std::string>> render_svgs(
    const stab::StabilityContext& ctx);

} // namespace toric::io
