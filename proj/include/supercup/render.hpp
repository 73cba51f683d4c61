// render.hpp -- plain-text rendering of weight and cup diagrams.

#pragma once

#include <string>

#include "supercup/diagrams.hpp"

namespace supercup {

enum class RenderStyle { Ascii, Unicode };

// Three bands: symbol row, position ruler, nested cup rows beneath.
// Deterministic; the window covers every labelled position plus one
// position of padding on each side.
std::string render_diagram(const SuperWeight& w, RenderStyle style = RenderStyle::Unicode);
std::string render_diagram(const CupDiagram& c, RenderStyle style = RenderStyle::Unicode);

}  // namespace supercup
