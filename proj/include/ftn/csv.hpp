#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace ftn {

/// Shortest round-trip decimal representation ('.' decimal point, locale-free).
std::string format_double(double v);

/// Comma-separated output with a header row and LF line endings.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns);

  template <typename... Ts>
  void row(const Ts&... values) {
    static_assert(sizeof...(Ts) > 0);
    check_width(sizeof...(Ts));
    std::string line;
    ((line += cell(values), line += ','), ...);
    line.back() = '\n';
    out_ << line;
  }

  const std::filesystem::path& path() const { return path_; }

 private:
  static std::string cell(double v) { return format_double(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(long v) { return std::to_string(v); }
  static std::string cell(std::uint64_t v) { return std::to_string(v); }
  static std::string cell(const std::string& v) { return v; }
  static std::string cell(const char* v) { return v; }
  void check_width(std::size_t n) const;

  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t columns_ = 0;
};

/// key=value sidecar describing how to re-run the experiment exactly.
void write_metadata(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace ftn
