#pragma once

#include <string>

#include "gathersim/engine.hpp"

namespace gathersim {

/// Static SVG of a trace: one colored layer per round with robot markers,
/// movement arrows and multiplicity badges, plus the final configuration
/// labelled with exact coordinates. Byte-identical for identical traces.
std::string render_svg(const Trace& trace);

}  // namespace gathersim
