#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace catlab::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_histogram_svg(const stats::histogram_result& hist,
                                 const stats::density_curve& density,
                                 const std::string& title) {
  constexpr double kWidth = 640, kHeight = 420;
  constexpr double kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double x_lo = hist.lo, x_hi = hist.hi;
  double y_hi = 0.0;
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    y_hi = std::max(y_hi, hist.density(i));
  }
  if (!density.x.empty()) {
    x_lo = std::min(x_lo, density.x.front());
    x_hi = std::max(x_hi, density.x.back());
    y_hi = std::max(y_hi, *std::max_element(density.y.begin(), density.y.end()));
  }
  if (y_hi <= 0.0) y_hi = 1.0;
  y_hi *= 1.05;

  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto sy = [&](double y) { return kTop + plot_h - y / y_hi * plot_h; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
     << kHeight << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"15\">"
     << title << "</text>\n";

  const double bar_w = hist.bin_width();
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const double x0 = hist.lo + bar_w * static_cast<double>(i);
    const double y = hist.density(i);
    os << "<rect x=\"" << num(sx(x0)) << "\" y=\"" << num(sy(y))
       << "\" width=\"" << num(sx(x0 + bar_w) - sx(x0)) << "\" height=\""
       << num(sy(0) - sy(y))
       << "\" fill=\"#d9d9d9\" stroke=\"#555555\" stroke-width=\"0.8\"/>\n";
  }

  if (!density.x.empty()) {
    os << "<polyline fill=\"none\" stroke=\"#1f4fd1\" stroke-width=\"3\" points=\"";
    for (std::size_t k = 0; k < density.x.size(); ++k) {
      if (k > 0) os << ' ';
      os << num(sx(density.x[k])) << ',' << num(sy(density.y[k]));
    }
    os << "\"/>\n";
  }

  // Axes and ticks.
  os << "<line x1=\"" << kLeft << "\" y1=\"" << num(sy(0)) << "\" x2=\""
     << kLeft + plot_w << "\" y2=\"" << num(sy(0))
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
     << "\" y2=\"" << num(sy(0)) << "\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const double xv = x_lo + (x_hi - x_lo) * t / kTicks;
    const double yv = y_hi * t / kTicks;
    os << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(sy(0) + 18)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"11\">"
       << num(xv) << "</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(sy(yv) + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
          "font-size=\"11\">"
       << num(yv) << "</text>\n";
  }
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"12\">standardized value</text>\n";
  os << "<text x=\"16\" y=\"" << kTop + plot_h / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        "transform=\"rotate(-90 16 "
     << kTop + plot_h / 2 << ")\">density</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace catlab::cli
