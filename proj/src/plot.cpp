#include "plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "oracle.hpp"

namespace photonet {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

constexpr int kWidth = 720;
constexpr int kHeight = 520;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 46;
constexpr int kMarginBottom = 64;

constexpr const char* kColorF0 = "#1f77b4";
constexpr const char* kColorF1 = "#d62728";

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d);
  return buf;
}

double curve_value(ExperimentKind experiment, RowConfig config, double setting_deg) {
  const double rad = setting_deg * kDegToRad;
  if (experiment == ExperimentKind::Malus) return oracle_malus(rad).first;
  return oracle_wheeler(rad, config == RowConfig::Closed);
}

}  // namespace

void emit_plot(const SweepTable& table, const std::string& path) {
  double x_min = 0.0;
  double x_max = 360.0;
  if (!table.rows.empty()) {
    x_min = x_max = table.rows.front().setting_deg;
    for (const SweepRow& row : table.rows) {
      x_min = std::min(x_min, row.setting_deg);
      x_max = std::max(x_max, row.setting_deg);
    }
    if (x_max - x_min < 1.0) {
      x_min -= 1.0;
      x_max += 1.0;
    }
  }
  const double y_min = 0.0;
  const double y_max = 1.05;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kHeight - kMarginBottom - (y - y_min) / (y_max - y_min) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"26\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << experiment_name(table.experiment)
      << " sweep</text>\n";

  // y grid and ticks
  for (int i = 0; i <= 4; ++i) {
    const double y = 0.25 * i;
    svg << fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
               "stroke=\"#dddddd\"/>\n",
               px(x_min), py(y), px(x_max), py(y));
    svg << fmt("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"12\">%.2f</text>\n",
               px(x_min) - 8.0, py(y) + 4.0, y);
  }
  // x ticks: pick a step that yields a readable count
  double x_step = 45.0;
  for (double candidate : {1.0, 5.0, 15.0, 30.0, 45.0, 60.0, 90.0}) {
    if ((x_max - x_min) / candidate <= 9.0) {
      x_step = candidate;
      break;
    }
  }
  for (double x = x_min; x <= x_max + 1e-9; x += x_step) {
    svg << fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#dddddd\"/>\n",
               px(x), py(y_min), px(x), py(y_max));
    svg << fmt("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"12\">%.0f</text>\n",
               px(x), kHeight - kMarginBottom + 18.0, x);
  }
  // axes
  svg << fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
             px(x_min), py(y_min), px(x_max), py(y_min));
  svg << fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
             px(x_min), py(y_min), px(x_min), py(y_max));
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << "setting (degrees)</text>\n";
  svg << "<text x=\"18\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 18 " << kHeight / 2 << ")\">fraction of detected events</text>\n";

  // configurations present, in a fixed order for deterministic output
  std::vector<RowConfig> configs;
  for (RowConfig candidate : {RowConfig::NotApplicable, RowConfig::Open, RowConfig::Closed}) {
    for (const SweepRow& row : table.rows) {
      if (row.config == candidate) {
        configs.push_back(candidate);
        break;
      }
    }
  }

  // dashed model curves, one pair per configuration
  for (RowConfig config : configs) {
    for (int series = 0; series < 2; ++series) {
      svg << "<polyline fill=\"none\" stroke=\"" << (series == 0 ? kColorF0 : kColorF1)
          << "\" stroke-dasharray=\"6 4\" points=\"";
      const int samples = 180;
      for (int i = 0; i <= samples; ++i) {
        const double x = x_min + (x_max - x_min) * i / samples;
        const double p0 = curve_value(table.experiment, config, x);
        svg << fmt("%.2f,%.2f ", px(x), py(series == 0 ? p0 : 1.0 - p0));
      }
      svg << "\"/>\n";
    }
  }

  // simulation markers: squares for f0, circles for f1
  for (const SweepRow& row : table.rows) {
    const bool open_marker = row.config == RowConfig::Open;
    svg << fmt("<rect x=\"%.2f\" y=\"%.2f\" width=\"7\" height=\"7\" ", px(row.setting_deg) - 3.5,
               py(row.f0) - 3.5)
        << "stroke=\"" << kColorF0 << "\" fill=\"" << (open_marker ? "white" : kColorF0)
        << "\"/>\n";
    svg << fmt("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3.5\" ", px(row.setting_deg), py(row.f1))
        << "stroke=\"" << kColorF1 << "\" fill=\"" << (open_marker ? "white" : kColorF1)
        << "\"/>\n";
  }

  // legend
  const double lx = kMarginLeft + 12.0;
  svg << "<text x=\"" << lx << "\" y=\"" << kMarginTop + 16
      << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << kColorF0
      << "\">squares: N0/N (simulation)</text>\n";
  svg << "<text x=\"" << lx << "\" y=\"" << kMarginTop + 32
      << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << kColorF1
      << "\">circles: N1/N (simulation)</text>\n";
  svg << "<text x=\"" << lx << "\" y=\"" << kMarginTop + 48
      << "\" font-family=\"sans-serif\" font-size=\"12\">dashed: amplitude model"
      << (configs.size() > 1 ? "; open markers: open configuration" : "") << "</text>\n";
  svg << "</svg>\n";

  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << svg.str();
  file.flush();
  if (!file) throw IoError("write failed for '" + path + "'");
}

}  // namespace photonet
