#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace hermex {

/// Snapshot of one CLI invocation. The hash covers command, config and seed
/// (not timestamps or paths), so identical manifests pin identical outputs.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;  // insertion order
  std::uint64_t seed = 0;
  std::string output_dir;
  std::string started_at;  // RFC 3339, informational only

  void set(const std::string& key, const std::string& value);
  std::uint64_t hash() const;
  std::string to_json() const;
};

std::string format_double(double v);  // shortest round-trip-safe decimal

/// CSV with a leading `# manifest <hex>` comment and a header row; all
/// doubles go through format_double so reruns are byte-identical.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::uint64_t manifest_hash,
            const std::vector<std::string>& header);

  void row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
};

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Minimal polyline SVG; the CSVs remain the authoritative artifact.
void svg_line_chart(const std::filesystem::path& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<Series>& series);

/// Same frame, markers only.
void svg_scatter_chart(const std::filesystem::path& path,
                       const std::string& title, const std::string& x_label,
                       const std::string& y_label,
                       const std::vector<Series>& series);

}  // namespace hermex
