#include "supercup/render.hpp"

#include <algorithm>
#include <sstream>

namespace supercup {

namespace {

struct Glyphs {
  std::string vee, wedge, cross, circle;
  std::string horizontal, vertical, left_corner, right_corner;
};

const Glyphs kAscii{"v", "^", "x", "o", "_", "|", "\\", "/"};
const Glyphs kUnicode{"∨", "∧", "×", "∘",
                      "─", "│", "╰", "╯"};

// Rows are built as vectors of cells so that multi-byte glyphs keep the
// column grid aligned.
std::string join_cells(const std::vector<std::string>& cells) {
  std::string line;
  for (const auto& c : cells) line += c;
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

std::string pad_cell(const std::string& glyph, int width) {
  return std::string(width - 1, ' ') + glyph;
}

}  // namespace

std::string render_diagram(const CupDiagram& c, RenderStyle style) {
  const Glyphs& g = style == RenderStyle::Ascii ? kAscii : kUnicode;
  const WeightDiagram& d = c.base;

  std::set<Int> marked = d.cores();
  marked.insert(d.vees.begin(), d.vees.end());
  for (const Arc& a : c.arcs) {
    marked.insert(a.left);
    marked.insert(a.right);
  }
  Int lo = marked.empty() ? -2 : *marked.begin() - 1;
  Int hi = marked.empty() ? 2 : *marked.rbegin() + 1;

  int width = 2;
  for (Int p = lo; p <= hi; ++p)
    width = std::max(width, static_cast<int>(std::to_string(p).size()) + 1);
  const int cols = static_cast<int>(hi - lo + 1);
  auto col_of = [&](Int p) { return static_cast<int>(p - lo); };

  std::ostringstream out;

  std::vector<std::string> symbol_row(cols);
  for (Int p = lo; p <= hi; ++p) {
    const std::string* glyph = &g.wedge;
    switch (d.label(p)) {
      case Symbol::Vee: glyph = &g.vee; break;
      case Symbol::Cross: glyph = &g.cross; break;
      case Symbol::Circle: glyph = &g.circle; break;
      case Symbol::Wedge: glyph = &g.wedge; break;
    }
    symbol_row[col_of(p)] = pad_cell(*glyph, width);
  }
  out << join_cells(symbol_row) << '\n';

  std::vector<std::string> ruler(cols);
  for (Int p = lo; p <= hi; ++p) {
    std::string label = std::to_string(p);
    ruler[col_of(p)] = std::string(width - label.size(), ' ') + label;
  }
  out << join_cells(ruler) << '\n';

  if (!c.arcs.empty()) {
    // height = nesting depth below the arc; outer arcs turn on deeper rows
    std::vector<int> height(c.arcs.size(), 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t i = 0; i < c.arcs.size(); ++i)
        for (size_t j = 0; j < c.arcs.size(); ++j)
          if (c.arcs[i].left < c.arcs[j].left && c.arcs[j].right < c.arcs[i].right &&
              height[i] < height[j] + 1) {
            height[i] = height[j] + 1;
            changed = true;
          }
    }
    auto repeat = [](const std::string& glyph, int count) {
      std::string s;
      for (int q = 0; q < count; ++q) s += glyph;
      return s;
    };
    int max_h = *std::max_element(height.begin(), height.end());
    for (int row = 0; row <= max_h; ++row) {
      std::vector<std::string> cells(cols, std::string(width, ' '));
      for (size_t i = 0; i < c.arcs.size(); ++i) {
        const Arc& a = c.arcs[i];
        if (height[i] == row) {
          cells[col_of(a.left)] = std::string(width - 1, ' ') + g.left_corner;
          for (Int p = a.left + 1; p < a.right; ++p)
            cells[col_of(p)] = repeat(g.horizontal, width);
          cells[col_of(a.right)] = repeat(g.horizontal, width - 1) + g.right_corner;
        } else if (height[i] > row) {
          cells[col_of(a.left)] = pad_cell(g.vertical, width);
          cells[col_of(a.right)] = pad_cell(g.vertical, width);
        }
      }
      out << join_cells(cells) << '\n';
    }
  }
  return out.str();
}

std::string render_diagram(const SuperWeight& w, RenderStyle style) {
  return render_diagram(cup_diagram(weight_to_diagram(w)), style);
}

}  // namespace supercup
