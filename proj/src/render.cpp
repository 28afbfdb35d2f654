#include <algorithm>
#include <cstdio>
#include <vector>

#include "divclust/io.hpp"

namespace divclust {

namespace {

constexpr double kMargin = 40.0;
constexpr double kLeafStep = 36.0;
constexpr double kPlotHeight = 320.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string tree_to_svg(const Dendrogram& t) {
  const auto order = t.leaf_order();
  const std::size_t n = t.size();
  const double width = 2 * kMargin + kLeafStep * static_cast<double>(n - 1) + 20.0;
  const double height = kPlotHeight + 2 * kMargin + 20.0;
  const double baseline = kMargin + kPlotHeight;
  const double top = t.root().level;
  const double scale = top > 0.0 ? kPlotHeight / top : 0.0;

  std::vector<double> x(t.nodes().size(), 0.0);
  std::vector<double> slot(n, 0.0);
  for (std::size_t k = 0; k < order.size(); ++k)
    slot[order[k]] = kMargin + 10.0 + kLeafStep * static_cast<double>(k);

  // Smaller clusters first, so children are placed before their parent.
  std::vector<const DendrogramNode*> by_size;
  for (const auto& node : t.nodes()) by_size.push_back(&node);
  std::stable_sort(by_size.begin(), by_size.end(), [](const auto* a, const auto* b) {
    return a->members.size() < b->members.size();
  });

  std::string body;
  const auto y = [&](double level) { return baseline - level * scale; };
  for (const auto* node : by_size) {
    if (node->is_leaf()) {
      x[node->id] = slot[node->members.front()];
      body += "  <text x=\"" + num(x[node->id]) + "\" y=\"" + num(baseline + 16.0) +
              "\" text-anchor=\"middle\" font-size=\"11\">o" +
              std::to_string(node->members.front() + 1) + "</text>\n";
      continue;
    }
    const auto& a = t.node((*node->children)[0]);
    const auto& b = t.node((*node->children)[1]);
    x[node->id] = 0.5 * (x[a.id] + x[b.id]);
    body += "  <path class=\"junction\" d=\"M" + num(x[a.id]) + " " + num(y(a.level)) + " V" +
            num(y(node->level)) + " H" + num(x[b.id]) + " V" + num(y(b.level)) +
            "\" fill=\"none\" stroke=\"black\"/>\n";
  }

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                    "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
                    num(height) + "\">\n";
  out += "  <line x1=\"" + num(kMargin - 10.0) + "\" y1=\"" + num(baseline) + "\" x2=\"" +
         num(kMargin - 10.0) + "\" y2=\"" + num(y(top)) + "\" stroke=\"gray\"/>\n";
  char label[48];
  std::snprintf(label, sizeof label, "%.6g", top);
  out += "  <text x=\"" + num(kMargin - 14.0) + "\" y=\"" + num(y(top) + 4.0) +
         "\" text-anchor=\"end\" font-size=\"10\">" + label + "</text>\n";
  out += body;
  out += "</svg>\n";
  return out;
}

}  // namespace divclust
