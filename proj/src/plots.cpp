#include "qbench/plots.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qbench/errors.hpp"

namespace qbench {

PlotKind plot_kind_from_name(const std::string& name) {
  if (name == "box") return PlotKind::Box;
  if (name == "scatter") return PlotKind::Scatter;
  if (name == "convergence") return PlotKind::Convergence;
  throw InputError("unknown plot kind: " + name);
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

struct SvgCanvas {
  std::ostringstream body;
  double width;
  double height;

  SvgCanvas(double w, double h) : width(w), height(h) {}

  void line(double x1, double y1, double x2, double y2, const char* colour,
            double stroke = 1.0) {
    body << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
         << "\" y2=\"" << y2 << "\" stroke=\"" << colour
         << "\" stroke-width=\"" << stroke << "\"/>\n";
  }
  void rect(double x, double y, double w, double h, const char* fill) {
    body << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
         << "\" height=\"" << h << "\" fill=\"" << fill
         << "\" stroke=\"black\"/>\n";
  }
  void circle(double x, double y, double r, const char* fill) {
    body << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
         << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
  }
  void text(double x, double y, const std::string& t, int size = 10) {
    body << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
         << "\" font-family=\"sans-serif\">" << t << "</text>\n";
  }
  std::string finish() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

const char* kPalette[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52",
                          "#8172b3", "#937860"};

}  // namespace

PlotOutput emit_box_plot(const std::map<GroupKey, GroupSummary>& summary,
                         const std::string& out_prefix, bool svg) {
  PlotOutput out;
  std::ostringstream csv;
  csv << std::setprecision(12);
  csv << "class,n_qubits,strategy,backend,metric,q1,median,q3,whisker_lo,"
         "whisker_hi,mean\n";
  auto row = [&csv](const GroupKey& key, const char* metric,
                    const BoxStats& s) {
    csv << key.circuit_class << "," << key.n_qubits << "," << key.strategy
        << "," << key.backend << "," << metric << "," << s.q1 << ","
        << s.median << "," << s.q3 << "," << s.whisker_lo << ","
        << s.whisker_hi << "," << s.mean << "\n";
  };
  for (const auto& [key, s] : summary) {
    row(key, "hog", s.hog);
    row(key, "ideal_hog", s.ideal_hog);
    row(key, "ced", s.ced);
    row(key, "l1", s.l1);
    row(key, "normalized_hog", s.normalized_hog);
  }
  write_file(out_prefix + "_box.csv", csv.str());
  out.files.push_back(out_prefix + "_box.csv");

  if (svg) {
    // one panel per metric, boxes per group along x
    const char* metrics[] = {"hog", "ideal_hog", "ced", "l1",
                             "normalized_hog"};
    for (const char* metric : metrics) {
      std::vector<std::pair<GroupKey, BoxStats>> boxes;
      for (const auto& [key, s] : summary) {
        const BoxStats& b = std::string(metric) == "hog" ? s.hog
                            : std::string(metric) == "ideal_hog" ? s.ideal_hog
                            : std::string(metric) == "ced" ? s.ced
                            : std::string(metric) == "l1" ? s.l1
                                                          : s.normalized_hog;
        boxes.emplace_back(key, b);
      }
      if (boxes.empty()) continue;
      double lo = boxes[0].second.whisker_lo, hi = boxes[0].second.whisker_hi;
      for (const auto& [key, b] : boxes) {
        lo = std::min(lo, b.whisker_lo);
        hi = std::max(hi, b.whisker_hi);
      }
      if (hi - lo < 1e-12) hi = lo + 1.0;
      const double w = 120.0 * static_cast<double>(boxes.size()) + 80.0;
      const double h = 320.0;
      SvgCanvas canvas(w, h);
      auto ycoord = [&](double v) {
        return 280.0 - 240.0 * (v - lo) / (hi - lo);
      };
      for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto& [key, b] = boxes[i];
        const double x = 80.0 + 120.0 * static_cast<double>(i);
        canvas.line(x, ycoord(b.whisker_lo), x, ycoord(b.q1), "black");
        canvas.line(x, ycoord(b.q3), x, ycoord(b.whisker_hi), "black");
        canvas.line(x - 15, ycoord(b.whisker_lo), x + 15, ycoord(b.whisker_lo),
                    "black");
        canvas.line(x - 15, ycoord(b.whisker_hi), x + 15, ycoord(b.whisker_hi),
                    "black");
        canvas.rect(x - 25, ycoord(b.q3), 50,
                    std::max(1.0, ycoord(b.q1) - ycoord(b.q3)),
                    kPalette[i % 6]);
        canvas.line(x - 25, ycoord(b.median), x + 25, ycoord(b.median),
                    "black", 2.0);
        canvas.circle(x, ycoord(b.mean), 4, "white");
        std::ostringstream label;
        label << key.circuit_class << " n=" << key.n_qubits;
        canvas.text(x - 30, 305, label.str());
      }
      canvas.text(10, 20, std::string(metric), 12);
      const std::string path =
          out_prefix + "_box_" + std::string(metric) + ".svg";
      write_file(path, canvas.finish());
      out.files.push_back(path);
    }
  }
  return out;
}

PlotOutput emit_scatter_plot(const std::vector<ResultRow>& rows,
                             const std::string& out_prefix, bool svg) {
  std::vector<double> xs, ys;
  std::ostringstream csv;
  csv << std::setprecision(12);
  csv << "l1,normalized_hog,class,n_qubits\n";
  for (const auto& row : rows) {
    if (row.status != "ok" || row.record.ideal_hog <= 0.0) continue;
    const double nhog = row.record.hog / row.record.ideal_hog;
    csv << row.record.l1 << "," << nhog << "," << row.record.circuit_class
        << "," << row.record.n_qubits << "\n";
    xs.push_back(row.record.l1);
    ys.push_back(nhog);
  }
  if (xs.size() >= 3) {
    const Regression reg = correlation_regression(xs, ys);
    csv << "# regression,r=" << reg.pearson_r << ",slope=" << reg.slope
        << ",intercept=" << reg.intercept << "\n";
  }
  PlotOutput out;
  write_file(out_prefix + "_scatter.csv", csv.str());
  out.files.push_back(out_prefix + "_scatter.csv");

  if (svg && xs.size() >= 3) {
    const double w = 480.0, h = 360.0;
    SvgCanvas canvas(w, h);
    const double xlo = *std::min_element(xs.begin(), xs.end());
    const double xhi = std::max(*std::max_element(xs.begin(), xs.end()),
                                xlo + 1e-9);
    const double ylo = *std::min_element(ys.begin(), ys.end());
    const double yhi = std::max(*std::max_element(ys.begin(), ys.end()),
                                ylo + 1e-9);
    auto xc = [&](double v) { return 50.0 + 400.0 * (v - xlo) / (xhi - xlo); };
    auto yc = [&](double v) { return 320.0 - 280.0 * (v - ylo) / (yhi - ylo); };
    canvas.line(50, 320, 450, 320, "black");
    canvas.line(50, 40, 50, 320, "black");
    for (std::size_t i = 0; i < xs.size(); ++i)
      canvas.circle(xc(xs[i]), yc(ys[i]), 2.5, kPalette[0]);
    const Regression reg = correlation_regression(xs, ys);
    canvas.line(xc(xlo), yc(reg.intercept + reg.slope * xlo), xc(xhi),
                yc(reg.intercept + reg.slope * xhi), "#c44e52", 1.5);
    canvas.text(60, 30, "normalized hog vs l1", 12);
    write_file(out_prefix + "_scatter.svg", canvas.finish());
    out.files.push_back(out_prefix + "_scatter.svg");
  }
  return out;
}

PlotOutput emit_convergence_plot(const std::vector<FitCurve>& curves,
                                 const std::string& out_prefix, bool svg) {
  std::ostringstream csv;
  csv << std::setprecision(12);
  csv << "n_qubits,layers,distance\n";
  for (const auto& curve : curves)
    for (std::size_t i = 0; i < curve.layer_counts.size(); ++i)
      csv << curve.n_qubits << "," << curve.layer_counts[i] << ","
          << curve.distances[i] << "\n";
  PlotOutput out;
  write_file(out_prefix + "_convergence.csv", csv.str());
  out.files.push_back(out_prefix + "_convergence.csv");

  if (svg && !curves.empty()) {
    double xhi = 1.0, yhi = 0.0;
    for (const auto& c : curves) {
      for (int l : c.layer_counts) xhi = std::max(xhi, static_cast<double>(l));
      for (double d : c.distances) yhi = std::max(yhi, d);
    }
    if (yhi <= 0) yhi = 1.0;
    SvgCanvas canvas(480, 360);
    auto xc = [&](double v) { return 50.0 + 400.0 * v / xhi; };
    auto yc = [&](double v) { return 320.0 - 280.0 * v / yhi; };
    canvas.line(50, 320, 450, 320, "black");
    canvas.line(50, 40, 50, 320, "black");
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
      const auto& c = curves[ci];
      const char* colour = kPalette[ci % 6];
      for (std::size_t i = 0; i + 1 < c.layer_counts.size(); ++i)
        canvas.line(xc(c.layer_counts[i]), yc(c.distances[i]),
                    xc(c.layer_counts[i + 1]), yc(c.distances[i + 1]), colour,
                    1.5);
      for (std::size_t i = 0; i < c.layer_counts.size(); ++i)
        canvas.circle(xc(c.layer_counts[i]), yc(c.distances[i]), 3, colour);
      canvas.text(360, 50 + 14 * static_cast<double>(ci),
                  "n=" + std::to_string(c.n_qubits));
    }
    canvas.text(60, 30, "exponential-fit l1 vs layers", 12);
    write_file(out_prefix + "_convergence.svg", canvas.finish());
    out.files.push_back(out_prefix + "_convergence.svg");
  }
  return out;
}

}  // namespace qbench
