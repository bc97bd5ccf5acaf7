#include "parkfact/render.hpp"

#include <algorithm>
#include <sstream>

namespace parkfact {

namespace {

struct PathGeometry {
  const LabelledDyckPath& path;
  int n() const { return path.n(); }
  int top(int x) const { return x < n() ? path.heights[static_cast<std::size_t>(x)] : n(); }
  int bottom(int x) const { return x == 0 ? 0 : path.heights[static_cast<std::size_t>(x) - 1]; }
  bool on_path(int x, int y) const { return bottom(x) <= y && y <= top(x); }
  bool vertical(int x, int y) const { return bottom(x) <= y && y + 1 <= top(x); }
};

std::vector<std::pair<int, int>> bounce_points(const std::vector<int>& contacts, PathSide side) {
  std::vector<std::pair<int, int>> pts;
  if (contacts.empty()) return pts;
  pts.emplace_back(contacts.front(), contacts.front());
  for (std::size_t k = 1; k < contacts.size(); ++k) {
    const int from = contacts[k - 1], to = contacts[k];
    if (side == PathSide::Below) {
      pts.emplace_back(to, from);
    } else {
      pts.emplace_back(from, to);
    }
    pts.emplace_back(to, to);
  }
  return pts;
}

std::string vertex_name(int position, const FullCycle* sigma) {
  return std::to_string(sigma ? sigma->at(position) : position);
}

// 1 + deepest level of any arc inside; arcs sharing a span nest by label order
std::vector<int> arc_levels(const ArchDiagram& a) {
  const auto& arcs = a.arcs();
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return arcs[x].right - arcs[x].left < arcs[y].right - arcs[y].left;
  });
  std::vector<int> level(arcs.size(), 1);
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const auto& outer = arcs[order[oi]];
    for (std::size_t ii = 0; ii < oi; ++ii) {
      const auto& inner = arcs[order[ii]];
      if (outer.left <= inner.left && inner.right <= outer.right) {
        level[order[oi]] = std::max(level[order[oi]], level[order[ii]] + 1);
      }
    }
  }
  return level;
}

}  // namespace

std::string render_path_svg(const LabelledDyckPath& path, const std::optional<std::vector<int>>& bounce_contacts) {
  path.validate();
  const PathGeometry g{path};
  const int n = g.n();
  const int unit = 40, margin = 30;
  const int size = 2 * margin + unit * n;
  auto px = [&](int x) { return margin + unit * x; };
  auto py = [&](int y) { return size - margin - unit * y; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << " " << size << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" style=\"fill:#ffffff\"/>\n";
  for (int k = 0; k <= n; ++k) {
    out << "<line x1=\"" << px(k) << "\" y1=\"" << py(0) << "\" x2=\"" << px(k) << "\" y2=\"" << py(n)
        << "\" style=\"stroke:#dddddd;stroke-width:1\"/>\n";
    out << "<line x1=\"" << px(0) << "\" y1=\"" << py(k) << "\" x2=\"" << px(n) << "\" y2=\"" << py(k)
        << "\" style=\"stroke:#dddddd;stroke-width:1\"/>\n";
  }
  out << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(n) << "\" y2=\"" << py(n)
      << "\" style=\"stroke:#888888;stroke-width:1;stroke-dasharray:4,4\"/>\n";

  out << "<polyline style=\"fill:none;stroke:#000000;stroke-width:3\" points=\"" << px(0) << "," << py(0);
  for (int x = 0; x <= n; ++x) {
    out << " " << px(x) << "," << py(g.top(x));
    if (x < n) out << " " << px(x + 1) << "," << py(g.top(x));
  }
  out << "\"/>\n";

  if (bounce_contacts) {
    out << "<polyline style=\"fill:none;stroke:#cc2222;stroke-width:2;stroke-dasharray:6,3\" points=\"";
    bool first = true;
    for (auto [x, y] : bounce_points(*bounce_contacts, path.side)) {
      out << (first ? "" : " ") << px(x) << "," << py(y);
      first = false;
    }
    out << "\"/>\n";
    for (int c : *bounce_contacts) {
      out << "<circle cx=\"" << px(c) << "\" cy=\"" << py(c) << "\" r=\"4\" style=\"fill:#cc2222\"/>\n";
    }
  }

  for (int x = 0; x < n; ++x) {
    out << "<text x=\"" << px(x) + unit / 2 << "\" y=\"" << py(g.top(x)) - 6
        << "\" style=\"font-family:monospace;font-size:16px;text-anchor:middle\">"
        << path.labels[static_cast<std::size_t>(x)] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_path_ascii(const LabelledDyckPath& path, const std::optional<std::vector<int>>& bounce_contacts) {
  path.validate();
  const PathGeometry g{path};
  const int n = g.n();
  auto is_contact = [&](int x, int y) {
    return bounce_contacts && x == y && std::find(bounce_contacts->begin(), bounce_contacts->end(), x) != bounce_contacts->end();
  };
  std::ostringstream out;
  for (int y = n; y >= 0; --y) {
    std::string row;
    for (int x = 0; x <= n; ++x) {
      row += is_contact(x, y) ? '*' : g.on_path(x, y) ? '+' : '.';
      if (x == n) break;
      if (g.top(x) == y) {
        std::string label = std::to_string(path.labels[static_cast<std::size_t>(x)]);
        row += std::string(label.size() < 2 ? 2 - label.size() : 0, '-') + label;
      } else {
        row += "  ";
      }
    }
    out << row << "\n";
    if (y == 0) break;
    std::string between;
    for (int x = 0; x <= n; ++x) {
      between += g.vertical(x, y - 1) ? '|' : ' ';
      if (x < n) between += "  ";
    }
    while (!between.empty() && between.back() == ' ') between.pop_back();
    out << between << "\n";
  }
  return out.str();
}

std::string render_arch_svg(const ArchDiagram& a, const FullCycle* sigma) {
  const int n = a.n();
  const int unit = 60, margin = 30;
  const int width = 2 * margin + unit * n;
  const int height = margin * 2 + unit * std::max(n, 1) / 2 + 20;
  const int base = height - margin;
  auto px = [&](int x) { return margin + unit * x; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << " " << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" style=\"fill:#ffffff\"/>\n";
  out << "<line x1=\"" << px(0) - 10 << "\" y1=\"" << base << "\" x2=\"" << px(n) + 10 << "\" y2=\"" << base
      << "\" style=\"stroke:#888888;stroke-width:1\"/>\n";
  for (const auto& arc : a.arcs()) {
    const int r = unit * (arc.right - arc.left) / 2;
    out << "<path d=\"M " << px(arc.left) << " " << base << " A " << r << " " << r << " 0 0 1 " << px(arc.right) << " "
        << base << "\" style=\"fill:none;stroke:#000000;stroke-width:2\"/>\n";
    out << "<text x=\"" << (px(arc.left) + px(arc.right)) / 2 << "\" y=\"" << base - r - 4
        << "\" style=\"font-family:monospace;font-size:14px;text-anchor:middle\">" << arc.label << "</text>\n";
  }
  for (int x = 0; x <= n; ++x) {
    out << "<circle cx=\"" << px(x) << "\" cy=\"" << base << "\" r=\"5\" style=\"fill:#000000\"/>\n";
    out << "<text x=\"" << px(x) << "\" y=\"" << base + 20
        << "\" style=\"font-family:monospace;font-size:14px;text-anchor:middle\">" << vertex_name(x, sigma) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_arch_ascii(const ArchDiagram& a, const FullCycle* sigma) {
  const int n = a.n();
  const int unit = 4;
  const auto levels = arc_levels(a);
  const int top = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
  const std::size_t width = static_cast<std::size_t>(unit * n + 1);
  std::ostringstream out;
  for (int level = top; level >= 1; --level) {
    std::string row(width, ' ');
    for (std::size_t k = 0; k < a.arcs().size(); ++k) {
      if (levels[k] != level) continue;
      const auto& arc = a.arcs()[k];
      const auto l = static_cast<std::size_t>(unit * arc.left), r = static_cast<std::size_t>(unit * arc.right);
      for (std::size_t c = l + 1; c < r; ++c) row[c] = '-';
      row[l] = row[l] == ' ' ? '[' : '+';
      row[r] = row[r] == ' ' ? ']' : '+';
      const std::string label = std::to_string(arc.label);
      const std::size_t mid = (l + r) / 2 - (label.size() - 1) / 2;
      row.replace(mid, label.size(), label);
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << "\n";
  }
  std::string axis;
  for (int x = 0; x <= n; ++x) {
    std::string name = vertex_name(x, sigma);
    axis += name;
    if (x < n) axis += std::string(name.size() < unit ? unit - name.size() : 1, ' ');
  }
  out << axis << "\n";
  return out.str();
}

}  // namespace parkfact
