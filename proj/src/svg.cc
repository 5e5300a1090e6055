// Copyright 2026 The PDFF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdff/svg.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pdff/analysis.h"

namespace pdff {

namespace {

constexpr double kWidth = 720, kHeight = 420;
constexpr double kLeft = 60, kRight = 60, kTop = 40, kBottom = 50;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                "#bcbd22", "#17becf"};

std::string Color(size_t i) { return kPalette[i % std::size(kPalette)]; }

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Svg {
 public:
  Svg(double width, double height) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
         << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
         << height << "\">\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  void Text(double x, double y, const std::string& text,
            const std::string& anchor = "middle", int size = 12) {
    out_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\""
         << " font-size=\"" << size << "\" text-anchor=\"" << anchor << "\">"
         << Escape(text) << "</text>\n";
  }
  void VerticalText(double x, double y, const std::string& text, int size = 12) {
    out_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\""
         << " font-size=\"" << size << "\" text-anchor=\"middle\" transform=\"rotate(-90 "
         << x << ' ' << y << ")\">" << Escape(text) << "</text>\n";
  }
  void Line(double x1, double y1, double x2, double y2,
            const std::string& stroke, double width = 1,
            const std::string& dash = "") {
    out_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
         << "\" y2=\"" << y2 << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << width << '"';
    if (!dash.empty()) out_ << " stroke-dasharray=\"" << dash << '"';
    out_ << "/>\n";
  }
  void Rect(double x, double y, double w, double h, const std::string& fill) {
    out_ << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
         << "\" height=\"" << h << "\" fill=\"" << fill << "\"/>\n";
  }
  void Polygon(const std::vector<std::pair<double, double>>& points,
               const std::string& fill, double opacity = 1.0) {
    out_ << "<polygon fill=\"" << fill << "\" fill-opacity=\"" << opacity
         << "\" points=\"" << Points(points) << "\"/>\n";
  }
  void Polyline(const std::vector<std::pair<double, double>>& points,
                const std::string& stroke, double width = 2) {
    out_ << "<polyline fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"" << width << "\" points=\"" << Points(points)
         << "\"/>\n";
  }
  void Ellipse(double cx, double cy, double rx, double ry, double angle_deg,
               const std::string& stroke) {
    out_ << "<ellipse cx=\"" << cx << "\" cy=\"" << cy << "\" rx=\"" << rx
         << "\" ry=\"" << ry << "\" transform=\"rotate(" << angle_deg << ' '
         << cx << ' ' << cy << ")\" fill=\"none\" stroke=\"" << stroke
         << "\"/>\n";
  }
  std::string Finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  static std::string Points(const std::vector<std::pair<double, double>>& pts) {
    std::ostringstream s;
    for (const auto& [x, y] : pts) s << x << ',' << y << ' ';
    return s.str();
  }
  std::ostringstream out_;
};

std::vector<double> ColumnValues(const CsvTable& table, const std::string& name) {
  std::vector<double> values;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    values.push_back(table.Number(r, name));
  }
  return values;
}

std::vector<std::string> ColumnsWithPrefix(const CsvTable& table,
                                           const std::string& prefix) {
  std::vector<std::string> names;
  for (const std::string& h : table.header) {
    if (h.rfind(prefix, 0) == 0) names.push_back(h);
  }
  return names;
}

std::string Short(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

void Axes(Svg& svg, const std::string& title, const std::string& xlabel,
          const std::string& ylabel, double ymax) {
  svg.Line(kLeft, kTop + kPlotH, kLeft + kPlotW, kTop + kPlotH, "black");
  svg.Line(kLeft, kTop, kLeft, kTop + kPlotH, "black");
  svg.Text(kWidth / 2, 22, title, "middle", 15);
  svg.Text(kLeft + kPlotW / 2, kHeight - 12, xlabel);
  svg.VerticalText(16, kTop + kPlotH / 2, ylabel);
  for (int i = 0; i <= 4; ++i) {
    const double y = kTop + kPlotH - kPlotH * i / 4;
    svg.Line(kLeft - 4, y, kLeft, y, "black");
    svg.Text(kLeft - 6, y + 4, Short(ymax * i / 4), "end", 10);
  }
}

// Roughly five ticks at 1, 2 or 5 times a power of ten.
void UpdateTicks(Svg& svg, double u0, double u1,
                 const std::function<double(double)>& sx) {
  const double raw = (u1 - u0) / 5;
  const double mag = std::pow(10.0, std::floor(std::log10(std::max(raw, 1.0))));
  double step = mag;
  for (double f : {2.0, 5.0, 10.0}) {
    if (step < raw) step = f * mag;
  }
  for (double u = std::ceil(u0 / step) * step; u <= u1 + 1e-9; u += step) {
    svg.Line(sx(u), kTop + kPlotH, sx(u), kTop + kPlotH + 4, "black");
    svg.Text(sx(u), kTop + kPlotH + 16, Short(u), "middle", 10);
  }
}

}  // namespace

std::string RenderExplorationSvg(const CsvTable& campaign,
                                 const std::string& title) {
  const std::vector<double> updates = ColumnValues(campaign, "update");
  const std::vector<double> total = ColumnValues(campaign, "total_lambda");
  const std::vector<std::string> rel = ColumnsWithPrefix(campaign, "rel_");
  if (updates.empty() || rel.empty()) {
    throw std::invalid_argument("exploration table has no data");
  }
  const double u0 = updates.front(), u1 = std::max(updates.back(), u0 + 1);
  auto sx = [&](double u) { return kLeft + kPlotW * (u - u0) / (u1 - u0); };
  auto sy = [&](double v) { return kTop + kPlotH * (1.0 - v); };

  Svg svg(kWidth, kHeight);
  Axes(svg, title, "update", "relative exploration", 1.0);
  UpdateTicks(svg, u0, u1, sx);
  std::vector<double> lower(updates.size(), 0.0);
  for (size_t j = 0; j < rel.size(); ++j) {
    const std::vector<double> share = ColumnValues(campaign, rel[j]);
    std::vector<std::pair<double, double>> poly;
    for (size_t i = 0; i < updates.size(); ++i) {
      poly.emplace_back(sx(updates[i]), sy(lower[i] + share[i]));
    }
    for (size_t i = updates.size(); i-- > 0;) {
      poly.emplace_back(sx(updates[i]), sy(lower[i]));
    }
    svg.Polygon(poly, Color(j), 0.75);
    for (size_t i = 0; i < updates.size(); ++i) lower[i] += share[i];
    svg.Text(kLeft + kPlotW + 8, kTop + 14 * (j + 1), "joint " + rel[j].substr(4),
             "start", 10);
    svg.Rect(kLeft + kPlotW + 44, kTop + 14 * (j + 1) - 9, 10, 10, Color(j));
  }
  // Peak bars: position = update of the maximum, height = the maximum.
  for (size_t j = 0; j < rel.size(); ++j) {
    const std::vector<double> share = ColumnValues(campaign, rel[j]);
    const size_t at = std::max_element(share.begin(), share.end()) - share.begin();
    svg.Line(sx(updates[at]), sy(0), sx(updates[at]), sy(share[at]), Color(j), 4);
  }
  const double tmax = *std::max_element(total.begin(), total.end());
  std::vector<std::pair<double, double>> line;
  for (size_t i = 0; i < updates.size(); ++i) {
    line.emplace_back(sx(updates[i]), sy(tmax > 0 ? total[i] / tmax : 0));
  }
  svg.Polyline(line, "black", 3);
  std::ostringstream label;
  label.precision(4);
  label << "total exploration (max " << tmax << ")";
  svg.Text(kLeft + kPlotW, kTop - 6, label.str(), "end", 10);
  return svg.Finish();
}

std::string RenderBandSvg(const CsvTable& aligned, const std::string& title) {
  const std::vector<double> updates = ColumnValues(aligned, "update");
  const std::vector<double> mean = ColumnValues(aligned, "mean");
  const std::vector<double> sd = ColumnValues(aligned, "std");
  if (updates.empty()) throw std::invalid_argument("band table has no data");
  double ymax = 0;
  for (size_t i = 0; i < mean.size(); ++i) ymax = std::max(ymax, mean[i] + sd[i]);
  if (ymax <= 0) ymax = 1;
  const double u0 = updates.front(), u1 = std::max(updates.back(), u0 + 1);
  auto sx = [&](double u) { return kLeft + kPlotW * (u - u0) / (u1 - u0); };
  auto sy = [&](double v) { return kTop + kPlotH * (1.0 - v / ymax); };

  Svg svg(kWidth, kHeight);
  Axes(svg, title, "update", "exploration magnitude", ymax);
  UpdateTicks(svg, u0, u1, sx);
  std::vector<std::pair<double, double>> band, line;
  for (size_t i = 0; i < updates.size(); ++i) {
    band.emplace_back(sx(updates[i]), sy(mean[i] + sd[i]));
    line.emplace_back(sx(updates[i]), sy(mean[i]));
  }
  for (size_t i = updates.size(); i-- > 0;) {
    band.emplace_back(sx(updates[i]), sy(std::max(0.0, mean[i] - sd[i])));
  }
  svg.Polygon(band, Color(0), 0.3);
  svg.Polyline(line, Color(0), 2);
  return svg.Finish();
}

std::string RenderGroupedBarsSvg(const CsvTable& table,
                                 const std::string& title) {
  const std::vector<std::string> bars = ColumnsWithPrefix(table, "joint_");
  if (table.rows.empty() || bars.empty()) {
    throw std::invalid_argument("bar table has no data");
  }
  double ymax = 0;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    for (const std::string& b : bars) ymax = std::max(ymax, table.Number(r, b));
  }
  if (ymax <= 0) ymax = 1;
  Svg svg(kWidth, kHeight);
  Axes(svg, title, "", "mean |cost difference|", ymax);
  for (size_t b = 0; b < bars.size(); ++b) {
    svg.Text(kLeft + kPlotW + 8, kTop + 14 * (b + 1), "joint " + bars[b].substr(6),
             "start", 10);
    svg.Rect(kLeft + kPlotW + 44, kTop + 14 * (b + 1) - 9, 10, 10, Color(b));
  }
  const double group_w = kPlotW / table.rows.size();
  const double bar_w = group_w * 0.8 / bars.size();
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const double x0 = kLeft + r * group_w + group_w * 0.1;
    for (size_t b = 0; b < bars.size(); ++b) {
      const double h = kPlotH * table.Number(r, bars[b]) / ymax;
      svg.Rect(x0 + b * bar_w, kTop + kPlotH - h, bar_w * 0.9, h, Color(b));
    }
    svg.Text(x0 + group_w * 0.4, kTop + kPlotH + 16, table.rows[r][0]);
  }
  return svg.Finish();
}

std::string RenderInteractionSvg(const CsvTable& table,
                                 const std::string& title) {
  if (table.rows.empty()) throw std::invalid_argument("no interaction data");
  const size_t morph = table.Column("morphology");
  const size_t ratio = table.Column("ratio");
  const size_t prox = table.Column("proximal");
  const size_t dist = table.Column("distal");
  std::vector<std::string> order;
  std::map<std::string, std::vector<size_t>> rows;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const std::string& m = table.rows[r][morph];
    if (!rows.count(m)) order.push_back(m);
    rows[m].push_back(r);
  }
  const double panel_h = 160;
  const double height = kTop + panel_h * order.size() + 20;
  Svg svg(kWidth, height);
  svg.Text(kWidth / 2, 22, title, "middle", 15);
  for (size_t p = 0; p < order.size(); ++p) {
    const double top = kTop + p * panel_h;
    const double base = top + panel_h - 30;
    const double h_full = panel_h - 50;
    svg.Line(kLeft, base, kLeft + kPlotW, base, "black");
    svg.Line(kLeft, base - h_full, kLeft, base, "black");
    for (double v : {0.0, 0.5, 1.0}) {
      svg.Line(kLeft - 4, base - h_full * v, kLeft, base - h_full * v, "black");
      svg.Text(kLeft - 6, base - h_full * v + 4, Short(v), "end", 10);
    }
    svg.Text(kLeft + 6, top + 10, order[p], "start", 12);
    const std::vector<size_t>& rs = rows[order[p]];
    std::vector<double> ratios;
    for (size_t r : rs) ratios.push_back(std::stod(table.rows[r][ratio]));
    const double median = Median(ratios);
    svg.Line(kLeft, base - h_full * median, kLeft + kPlotW, base - h_full * median,
             "black", 1, "4 3");
    svg.Text(kLeft + kPlotW, top + 10, "median (dashed) " + Short(median),
             "end", 10);
    const double w = kPlotW / rs.size();
    for (size_t i = 0; i < rs.size(); ++i) {
      const double v = std::stod(table.rows[rs[i]][ratio]);
      const double h = h_full * v;
      svg.Rect(kLeft + i * w + w * 0.1, base - h, w * 0.8, h,
               Color(std::stoi(table.rows[rs[i]][prox]) - 1));
      svg.Text(kLeft + i * w + w / 2, base + 12,
               table.rows[rs[i]][prox] + "-" + table.rows[rs[i]][dist], "middle",
               9);
    }
  }
  return svg.Finish();
}

std::string RenderDemoSvg(const CsvTable& snapshots, const std::string& title) {
  const std::vector<double> mx = ColumnValues(snapshots, "mean_x");
  const std::vector<double> my = ColumnValues(snapshots, "mean_y");
  const std::vector<double> e1 = ColumnValues(snapshots, "eig1");
  const std::vector<double> e2 = ColumnValues(snapshots, "eig2");
  const std::vector<double> angle = ColumnValues(snapshots, "eigvec_angle");
  if (mx.empty()) throw std::invalid_argument("no snapshots");
  double extent = 1.0;
  for (size_t i = 0; i < mx.size(); ++i) {
    extent = std::max({extent, std::abs(mx[i]) + std::sqrt(e1[i]),
                       std::abs(my[i]) + std::sqrt(e1[i])});
  }
  const double size = 480, margin = 40, scale = (size / 2 - margin) / extent;
  auto sx = [&](double x) { return size / 2 + scale * x; };
  auto sy = [&](double y) { return size / 2 - scale * y; };
  Svg svg(size, size);
  svg.Text(size / 2, 22, title, "middle", 14);
  svg.Line(sx(-extent), sy(0), sx(extent), sy(0), "#999");
  svg.Line(sx(0), sy(-extent), sx(0), sy(extent), "#999");
  std::vector<std::pair<double, double>> path;
  for (size_t i = 0; i < mx.size(); ++i) {
    path.emplace_back(sx(mx[i]), sy(my[i]));
    // SVG y points down, so the rotation flips sign.
    svg.Ellipse(sx(mx[i]), sy(my[i]), scale * std::sqrt(e1[i]),
                scale * std::sqrt(e2[i]), -angle[i] * 180 / std::numbers::pi,
                i == 0 ? "#1f3a93" : "#d62728");
  }
  svg.Polyline(path, "black", 1.5);
  return svg.Finish();
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace pdff
