#include "dimjac/dynamics/output.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace dimjac {

void write_csv(std::ostream& out, const Trajectory& traj) {
  std::size_t n = traj.samples.empty() ? 0 : traj.samples.front().state.dof();
  out << "t";
  for (std::size_t i = 1; i <= n; ++i) out << ",q_" << i;
  for (std::size_t i = 1; i <= n; ++i) out << ",p_" << i;
  out << ",z,h,drift\n";
  for (const auto& s : traj.samples) {
    out << format_double(s.t);
    for (double x : s.state.q()) out << ',' << format_double(x);
    for (double x : s.state.p()) out << ',' << format_double(x);
    out << ',' << format_double(s.state.z()) << ',' << format_double(s.h) << ','
        << format_double(s.drift) << '\n';
  }
}

namespace {

struct Range {
  double lo = 0, hi = 1;
};

Range range_of(const std::vector<double>& xs) {
  if (xs.empty()) return {};
  auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  Range r{*lo, *hi};
  if (r.hi - r.lo < 1e-12 * std::max(1.0, std::fabs(r.hi))) {
    r.lo -= 0.5;
    r.hi += 0.5;
  }
  return r;
}

}  // namespace

void write_svg(std::ostream& out, const Trajectory& traj) {
  constexpr double kWidth = 640, kHeight = 400, kLeft = 70, kRight = 20, kTop = 30,
                   kBottom = 50;
  std::vector<double> t, h, z;
  for (const auto& s : traj.samples) {
    t.push_back(s.t);
    h.push_back(s.h);
    z.push_back(s.state.z());
  }
  std::vector<double> both(h);
  both.insert(both.end(), z.begin(), z.end());
  Range tr = range_of(t), yr = range_of(both);
  auto px = [&](double x) {
    return kLeft + (x - tr.lo) / (tr.hi - tr.lo) * (kWidth - kLeft - kRight);
  };
  auto py = [&](double y) {
    return kHeight - kBottom - (y - yr.lo) / (yr.hi - yr.lo) * (kHeight - kTop - kBottom);
  };
  auto polyline = [&](const std::vector<double>& ys, const char* color) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    // Thin to at most 2000 points so large runs stay viewable.
    std::size_t stride = std::max<std::size_t>(1, ys.size() / 2000);
    for (std::size_t i = 0; i < ys.size(); i += stride) {
      out << format_double(std::round(px(t[i]) * 100) / 100) << ','
          << format_double(std::round(py(ys[i]) * 100) / 100) << ' ';
    }
    if (!ys.empty() && (ys.size() - 1) % stride != 0)
      out << format_double(std::round(px(t.back()) * 100) / 100) << ','
          << format_double(std::round(py(ys.back()) * 100) / 100);
    out << "\"/>\n";
  };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
      << kWidth - kRight << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kHeight - kBottom << "\" stroke=\"black\"/>\n";
  auto label = [&](double x, double y, const std::string& text, const char* anchor) {
    out << "<text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"" << anchor << "\">"
        << text << "</text>\n";
  };
  label(kLeft, kHeight - kBottom + 16, format_double(tr.lo), "middle");
  label(kWidth - kRight, kHeight - kBottom + 16, format_double(tr.hi), "middle");
  label(kLeft - 6, kHeight - kBottom, format_double(yr.lo), "end");
  label(kLeft - 6, kTop + 4, format_double(yr.hi), "end");
  label((kLeft + kWidth - kRight) / 2, kHeight - 12, "t", "middle");
  polyline(h, "#1f77b4");
  polyline(z, "#d62728");
  label(kWidth - kRight - 60, kTop - 10, "h", "start");
  out << "<line x1=\"" << kWidth - kRight - 80 << "\" y1=\"" << kTop - 14 << "\" x2=\""
      << kWidth - kRight - 64 << "\" y2=\"" << kTop - 14 << "\" stroke=\"#1f77b4\"/>\n";
  label(kWidth - kRight - 20, kTop - 10, "z", "start");
  out << "<line x1=\"" << kWidth - kRight - 40 << "\" y1=\"" << kTop - 14 << "\" x2=\""
      << kWidth - kRight - 24 << "\" y2=\"" << kTop - 14 << "\" stroke=\"#d62728\"/>\n";
  out << "</svg>\n";
}

}  // namespace dimjac
