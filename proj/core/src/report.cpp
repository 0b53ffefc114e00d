#include "hermex/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hermex {

void RunManifest::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : config)
    if (k == key) {
      v = value;
      return;
    }
  config.emplace_back(key, value);
}

std::uint64_t RunManifest::hash() const {
  // FNV-1a over the reproducibility-relevant fields.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  mix(command);
  for (const auto& [k, v] : config) {
    mix(k);
    mix(v);
  }
  mix(std::to_string(seed));
  return h;
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  j["config"] = cfg;
  j["seed"] = seed;
  j["output_dir"] = output_dir;
  j["started_at"] = started_at;
  char hex[32];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(hash()));
  j["manifest_hash"] = hex;
  return j.dump(2) + "\n";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     std::uint64_t manifest_hash,
                     const std::vector<std::string>& header) {
  out_.open(path);
  if (!out_) throw std::runtime_error("cannot write " + path.string());
  char hex[32];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(manifest_hash));
  out_ << "# manifest " << hex << '\n';
  for (std::size_t i = 0; i < header.size(); ++i)
    out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    out_ << (i ? "," : "") << cells[i];
  out_ << '\n';
}

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 420;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;

const char* kPalette[] = {"#c0392b", "#27ae60", "#2980b9", "#16a1a8",
                          "#8e44ad", "#d35400"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Frame {
  double x0, x1, y0, y1;
  double px(double x) const {
    const double span = x1 > x0 ? x1 - x0 : 1.0;
    return kMarginLeft + (x - x0) / span * (kWidth - kMarginLeft - kMarginRight);
  }
  double py(double y) const {
    const double span = y1 > y0 ? y1 - y0 : 1.0;
    return kHeight - kMarginBottom -
           (y - y0) / span * (kHeight - kMarginTop - kMarginBottom);
  }
};

void chart(const std::filesystem::path& path, const std::string& title,
           const std::string& x_label, const std::string& y_label,
           const std::vector<Series>& series, bool lines) {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool first = true;
  for (const Series& s : series)
    for (const auto& [x, y] : s.points) {
      if (first) {
        x0 = x1 = x;
        y0 = y1 = y;
        first = false;
      }
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  if (x0 == x1) x1 = x0 + 1;
  if (y0 == y1) y1 = y0 + 1;
  const Frame f{x0, x1, y0, y1};

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
         "font-size=\"15\" font-family=\"sans-serif\">"
      << title << "</text>\n";

  // axes
  out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
      << kMarginLeft << "\" y2=\"" << kHeight - kMarginBottom
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom
      << "\" x2=\"" << kWidth - kMarginRight << "\" y2=\""
      << kHeight - kMarginBottom << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    out << "<text x=\"" << fmt(f.px(xv)) << "\" y=\""
        << kHeight - kMarginBottom + 18
        << "\" text-anchor=\"middle\" font-size=\"11\" "
           "font-family=\"sans-serif\">"
        << fmt(xv) << "</text>\n";
    out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << fmt(f.py(yv) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\" "
           "font-family=\"sans-serif\">"
        << fmt(yv) << "</text>\n";
  }
  out << "<text x=\"" << (kMarginLeft + kWidth - kMarginRight) / 2 << "\" y=\""
      << kHeight - 12
      << "\" text-anchor=\"middle\" font-size=\"12\" "
         "font-family=\"sans-serif\">"
      << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << (kMarginTop + kHeight - kMarginBottom) / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" "
         "font-family=\"sans-serif\" transform=\"rotate(-90 16 "
      << (kMarginTop + kHeight - kMarginBottom) / 2 << ")\">" << y_label
      << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
    if (lines && series[si].points.size() > 1) {
      out << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [x, y] : series[si].points)
        out << fmt(f.px(x)) << ',' << fmt(f.py(y)) << ' ';
      out << "\"/>\n";
    } else {
      for (const auto& [x, y] : series[si].points)
        out << "<circle cx=\"" << fmt(f.px(x)) << "\" cy=\"" << fmt(f.py(y))
            << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
    }
    out << "<text x=\"" << kWidth - kMarginRight - 6 << "\" y=\""
        << kMarginTop + 16 * static_cast<int>(si)
        << "\" text-anchor=\"end\" font-size=\"11\" "
           "font-family=\"sans-serif\" fill=\""
        << color << "\">" << series[si].name << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace

void svg_line_chart(const std::filesystem::path& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<Series>& series) {
  chart(path, title, x_label, y_label, series, /*lines=*/true);
}

void svg_scatter_chart(const std::filesystem::path& path,
                       const std::string& title, const std::string& x_label,
                       const std::string& y_label,
                       const std::vector<Series>& series) {
  chart(path, title, x_label, y_label, series, /*lines=*/false);
}

}  // namespace hermex
