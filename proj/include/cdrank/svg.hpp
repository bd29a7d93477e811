#pragma once

// Critical-difference diagram as standalone SVG.
//
// The axis runs from k on the left to 1 on the right, so the best approaches
// appear first. Each approach gets a marker at its (clamped) mean rank and one
// <text class="label">; each CD group gets one <line class="group-bar">; the
// CD itself is drawn as a <line class="cd-bar"> above the axis.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "cdrank/nemenyi.hpp"
#include "cdrank/ranking.hpp"

namespace cdrank {

namespace svg_detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

inline std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace svg_detail

struct DiagramStyle {
  double width = 800.0;
  double margin = 150.0;  // room for labels on each side
  double axis_y = 60.0;
  double row_height = 16.0;
  int max_ticks = 20;
};

inline std::string render_cd_diagram(const Grouping& g, const MeanRanks& mr, const NemenyiParams& params,
                                     const std::vector<std::string>& names, const DiagramStyle& style = {}) {
  using svg_detail::num;
  const std::size_t k = mr.size();
  const double kmax = static_cast<double>(std::max<std::size_t>(k, 2));
  const double left = style.margin;
  const double right = style.width - style.margin;
  const auto clamp_rank = [&](double r) { return std::clamp(r, 1.0, kmax); };
  const auto x_of = [&](double r) { return left + (kmax - clamp_rank(r)) / (kmax - 1.0) * (right - left); };
  const auto name_of = [&](std::size_t i) { return i < names.size() ? names[i] : "A" + std::to_string(i + 1); };

  const std::size_t half = (k + 1) / 2;
  const double labels_top = style.axis_y + 3.0 * style.row_height;
  const double groups_top = labels_top + static_cast<double>(half) * style.row_height + style.row_height;
  const double height = groups_top + static_cast<double>(g.group_count()) * 8.0 + 2.0 * style.row_height;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(style.width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(style.width) + " " + num(height) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(style.width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";

  // Axis and ticks.
  out += "<line class=\"axis\" x1=\"" + num(left) + "\" y1=\"" + num(style.axis_y) + "\" x2=\"" + num(right) +
         "\" y2=\"" + num(style.axis_y) + "\" stroke=\"black\"/>\n";
  const int step = std::max(1, static_cast<int>(std::ceil(kmax / style.max_ticks)));
  std::vector<int> ticks;
  for (int t = 1; t <= static_cast<int>(kmax); t += step) ticks.push_back(t);
  if (ticks.back() != static_cast<int>(kmax)) ticks.push_back(static_cast<int>(kmax));
  for (int t : ticks) {
    const double x = x_of(t);
    out += "<line class=\"tick\" x1=\"" + num(x) + "\" y1=\"" + num(style.axis_y - 4) + "\" x2=\"" + num(x) +
           "\" y2=\"" + num(style.axis_y) + "\" stroke=\"black\"/>\n";
    out += "<text class=\"tick-label\" x=\"" + num(x) + "\" y=\"" + num(style.axis_y - 7) +
           "\" text-anchor=\"middle\">" + std::to_string(t) + "</text>\n";
  }

  // Critical distance reference bar, anchored at the best end of the axis.
  const double cd_len = std::min(params.cd, kmax - 1.0) / (kmax - 1.0) * (right - left);
  out += "<line class=\"cd-bar\" x1=\"" + num(left) + "\" y1=\"" + num(style.axis_y - 30) + "\" x2=\"" +
         num(left + cd_len) + "\" y2=\"" + num(style.axis_y - 30) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out += "<text class=\"cd-label\" x=\"" + num(left) + "\" y=\"" + num(style.axis_y - 36) + "\">CD = " +
         num(params.cd) + "</text>\n";

  // Approach markers and labels: better half to the left, worse half to the right.
  for (std::size_t p = 0; p < g.order.size(); ++p) {
    const std::size_t i = g.order[p];
    const bool left_side = p < half;
    const std::size_t row = left_side ? p : k - 1 - p;
    const double x = x_of(mr[i]);
    const double y = labels_top + static_cast<double>(row) * style.row_height;
    const double lx = left_side ? left - 10.0 : right + 10.0;
    out += "<polyline class=\"marker\" points=\"" + num(x) + "," + num(style.axis_y) + " " + num(x) + "," + num(y) +
           " " + num(lx) + "," + num(y) + "\" fill=\"none\" stroke=\"black\"/>\n";
    out += "<text class=\"label\" x=\"" + num(left_side ? lx - 3.0 : lx + 3.0) + "\" y=\"" + num(y + 4.0) +
           "\" text-anchor=\"" + (left_side ? "end" : "start") + "\">" + svg_detail::escape(name_of(i)) + " (" +
           num(mr[i]) + ")</text>\n";
  }

  // One bar per group spanning its members' mean ranks.
  for (int grp = 0; grp <= g.rank_max; ++grp) {
    double hi = -1.0, lo = 0.0;
    for (std::size_t i = 0; i < g.group_index.size(); ++i) {
      if (g.group_index[i] != grp) continue;
      const double r = clamp_rank(mr[i]);
      if (hi < 0.0) hi = lo = r;
      hi = std::max(hi, r);
      lo = std::min(lo, r);
    }
    if (hi < 0.0) continue;
    const double y = groups_top + grp * 8.0;
    const double x1 = x_of(hi) - 3.0;
    const double x2 = x_of(lo) + 3.0;
    out += "<line class=\"group-bar\" data-group=\"" + std::to_string(grp) + "\" x1=\"" + num(x1) + "\" y1=\"" +
           num(y) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y) + "\" stroke=\"black\" stroke-width=\"4\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace cdrank
