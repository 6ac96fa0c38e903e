#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "commbench/error.hpp"
#include "commbench/harness.hpp"

namespace commbench {

namespace {

enum class Marker { square, triangle, circle, diamond, cross };

struct Series {
  std::string label;
  Marker marker;
  std::vector<std::pair<double, double>> points;
};

struct Panel {
  std::string title;
  std::vector<Series> series;
};

struct Figure {
  std::string title;
  std::string x_label;
  bool log_x = false;
  std::vector<double> x_values;
  std::vector<Panel> panels;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

void draw_marker(std::ostream& out, Marker m, double x, double y, const char* color) {
  constexpr double r = 4.5;
  switch (m) {
    case Marker::square:
      out << "<rect class=\"marker\" x=\"" << x - r << "\" y=\"" << y - r << "\" width=\"" << 2 * r
          << "\" height=\"" << 2 * r << "\" fill=\"" << color << "\"/>";
      break;
    case Marker::triangle:
      out << "<polygon class=\"marker\" points=\"" << x << "," << y - r << " " << x - r << ","
          << y + r << " " << x + r << "," << y + r << "\" fill=\"" << color << "\"/>";
      break;
    case Marker::circle:
      out << "<circle class=\"marker\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
          << "\" fill=\"" << color << "\"/>";
      break;
    case Marker::diamond:
      out << "<polygon class=\"marker\" points=\"" << x << "," << y - r << " " << x + r << "," << y
          << " " << x << "," << y + r << " " << x - r << "," << y << "\" fill=\"" << color << "\"/>";
      break;
    case Marker::cross:
      out << "<path class=\"marker\" d=\"M" << x - r << " " << y - r << "L" << x + r << " " << y + r
          << "M" << x - r << " " << y + r << "L" << x + r << " " << y - r << "\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>";
      break;
  }
}

std::string render(const Figure& fig) {
  constexpr double panel_w = 300, panel_h = 240, left = 50, top = 50, gap = 30;
  constexpr double plot_w = panel_w - 60, plot_h = panel_h - 70;
  const double width = left + fig.panels.size() * (panel_w + gap);
  std::size_t legend_rows = 0;
  for (const auto& p : fig.panels) legend_rows = std::max(legend_rows, p.series.size());
  const double height = top + panel_h + 20 + 18.0 * legend_rows;

  auto xs = fig.x_values;
  auto tx = [&](double x) { return fig.log_x ? std::log10(x) : x; };
  double xmin = tx(*std::min_element(xs.begin(), xs.end()));
  double xmax = tx(*std::max_element(xs.begin(), xs.end()));
  if (xmax - xmin < 1e-12) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  const double pad = 0.08 * (xmax - xmin);
  xmin -= pad;
  xmax += pad;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << left << "\" y=\"20\" font-size=\"14\">" << escape(fig.title) << "</text>\n";

  for (std::size_t pi = 0; pi < fig.panels.size(); ++pi) {
    const Panel& panel = fig.panels[pi];
    const double ox = left + pi * (panel_w + gap);
    const double oy = top;
    auto px = [&](double x) { return ox + (tx(x) - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return oy + (1.0 - y) * plot_h; };

    out << "<g class=\"panel\" data-title=\"" << escape(panel.title) << "\">\n";
    out << "<text x=\"" << ox << "\" y=\"" << oy - 8 << "\">" << escape(panel.title) << "</text>\n";
    out << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << plot_w << "\" height=\""
        << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 5; ++t) {
      const double y = t / 5.0;
      out << "<line x1=\"" << ox - 4 << "\" y1=\"" << py(y) << "\" x2=\"" << ox << "\" y2=\""
          << py(y) << "\" stroke=\"black\"/><text x=\"" << ox - 30 << "\" y=\"" << py(y) + 4
          << "\">" << fmt("%.1f", y) << "</text>\n";
    }
    for (double x : xs) {
      const std::string label = fig.log_x ? "10^" + fmt("%g", std::log10(x)) : fmt("%g", x);
      out << "<line x1=\"" << px(x) << "\" y1=\"" << oy + plot_h << "\" x2=\"" << px(x)
          << "\" y2=\"" << oy + plot_h + 4 << "\" stroke=\"black\"/><text x=\"" << px(x) - 10
          << "\" y=\"" << oy + plot_h + 16 << "\">" << label << "</text>\n";
    }
    out << "<text x=\"" << ox + plot_w / 2 - 20 << "\" y=\"" << oy + plot_h + 32 << "\">"
        << escape(fig.x_label) << "</text>\n";
    out << "<text transform=\"translate(" << ox - 36 << "," << oy + plot_h / 2 + 10
        << ") rotate(-90)\">NMI</text>\n";

    for (std::size_t si = 0; si < panel.series.size(); ++si) {
      const Series& s = panel.series[si];
      const char* color = kColors[si % 5];
      out << "<g class=\"series\" data-label=\"" << escape(s.label) << "\" data-points=\""
          << s.points.size() << "\">";
      if (s.points.size() > 1) {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) out << px(x) << "," << py(y) << " ";
        out << "\"/>";
      }
      for (const auto& [x, y] : s.points) draw_marker(out, s.marker, px(x), py(y), color);
      out << "</g>\n";
      const double ly = oy + plot_h + 50 + 18.0 * si;
      draw_marker(out, s.marker, ox + 6, ly - 4, color);
      out << "<text x=\"" << ox + 16 << "\" y=\"" << ly << "\">" << escape(s.label) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

struct Cell {
  double sum = 0.0;
  int count = 0;
};

std::string range_label(const SizeRange& r, NodeId reference) {
  return r.name + ": " + std::to_string(r.cmin) + "-" + std::to_string(r.cmax) + " at n=" +
         std::to_string(reference) + " (" + fmt("%g", 100.0 * r.cmin / reference) + "-" +
         fmt("%g", 100.0 * r.cmax / reference) + "% of n)";
}

}  // namespace

std::vector<std::filesystem::path> emit_plots(std::span<const AggregateRow> rows,
                                              const std::filesystem::path& out_dir,
                                              const SweepSpec& spec) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;

  std::vector<std::string> algorithms{std::string(kAllAlgorithms)};
  for (Algorithm a : spec.algorithms) algorithms.emplace_back(to_string(a));
  std::vector<NodeId> sizes = spec.sizes;
  std::sort(sizes.begin(), sizes.end());
  std::vector<double> degrees = spec.degrees;
  std::sort(degrees.begin(), degrees.end());
  std::vector<double> mixings = spec.mixings;
  std::sort(mixings.begin(), mixings.end());
  const Marker range_markers[] = {Marker::square, Marker::triangle, Marker::circle,
                                  Marker::diamond, Marker::cross};
  const Marker size_markers[] = {Marker::circle, Marker::triangle, Marker::square,
                                 Marker::diamond, Marker::cross};

  for (const AggregateRow& r : rows) {
    if (r.count > 0 && (r.mean < 0.0 || r.mean > 1.0)) {
      throw std::logic_error("NMI mean outside [0, 1] reached the plotter");
    }
  }

  for (Model model : spec.models) {
    for (const auto& alg : algorithms) {
      // Mean over the dimension a family does not plot.
      auto average = [&](auto&& match) -> std::optional<double> {
        Cell c;
        for (const AggregateRow& r : rows) {
          if (r.model == model && r.algorithm == alg && r.count > 0 && match(r)) {
            c.sum += r.mean;
            ++c.count;
          }
        }
        if (c.count == 0) return std::nullopt;
        return c.sum / c.count;
      };
      const std::string tag = std::string(to_string(model)) + "_" + alg;
      const std::string who = std::string(to_string(model)) + ", " + alg;

      auto write = [&](const Figure& fig, const std::string& name) {
        auto path = out_dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw DataError("cannot write " + path.string());
        out << render(fig);
        written.push_back(path);
      };

      Figure size_fig{"NMI vs network size (" + who + "; mean over <k>)", "n", true,
                      {sizes.begin(), sizes.end()}, {}};
      for (double mu : mixings) {
        Panel panel{"mu = " + fmt("%g", mu), {}};
        for (std::size_t ri = 0; ri < spec.ranges.size(); ++ri) {
          Series s{range_label(spec.ranges[ri], spec.reference_size), range_markers[ri % 5], {}};
          for (NodeId n : sizes) {
            auto v = average([&](const AggregateRow& r) {
              return r.mixing == mu && r.range == spec.ranges[ri].name && r.n == n;
            });
            if (v) s.points.emplace_back(n, *v);
          }
          panel.series.push_back(std::move(s));
        }
        size_fig.panels.push_back(std::move(panel));
      }
      write(size_fig, "size_" + tag + ".svg");

      Figure degree_fig{"NMI vs average degree (" + who + "; mean over mu)", "<k>", false,
                        degrees, {}};
      for (NodeId n : sizes) {
        Panel panel{"n = " + std::to_string(n), {}};
        for (std::size_t ri = 0; ri < spec.ranges.size(); ++ri) {
          Series s{range_label(spec.ranges[ri], spec.reference_size), range_markers[ri % 5], {}};
          for (double k : degrees) {
            auto v = average([&](const AggregateRow& r) {
              return r.n == n && r.range == spec.ranges[ri].name && r.avg_degree == k;
            });
            if (v) s.points.emplace_back(k, *v);
          }
          panel.series.push_back(std::move(s));
        }
        degree_fig.panels.push_back(std::move(panel));
      }
      write(degree_fig, "degree_" + tag + ".svg");

      Figure mixing_fig{"NMI vs mixing (" + who + "; mean over <k>)", "mu", false, mixings, {}};
      for (const auto& range : spec.ranges) {
        Panel panel{range_label(range, spec.reference_size), {}};
        for (std::size_t ni = 0; ni < sizes.size(); ++ni) {
          Series s{"n = " + std::to_string(sizes[ni]), size_markers[ni % 5], {}};
          for (double mu : mixings) {
            auto v = average([&](const AggregateRow& r) {
              return r.n == sizes[ni] && r.range == range.name && r.mixing == mu;
            });
            if (v) s.points.emplace_back(mu, *v);
          }
          panel.series.push_back(std::move(s));
        }
        mixing_fig.panels.push_back(std::move(panel));
      }
      write(mixing_fig, "mixing_" + tag + ".svg");
    }
  }
  return written;
}

}  // namespace commbench
