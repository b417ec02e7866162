#include "ftn/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace ftn {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& columns)
    : path_(path), columns_(columns.size()) {
  if (columns.empty()) throw std::invalid_argument("CsvWriter: no columns");
  std::filesystem::create_directories(path.parent_path().empty()
                                          ? std::filesystem::path(".")
                                          : path.parent_path());
  out_.open(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out_) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  for (const auto& c : columns) {
    line += c;
    line += ',';
  }
  line.back() = '\n';
  out_ << line;
}

void CsvWriter::check_width(std::size_t n) const {
  if (n != columns_)
    throw std::invalid_argument("CsvWriter: row width does not match header");
}

void write_metadata(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  for (const auto& [k, v] : entries) out << k << " = " << v << "\n";
}

}  // namespace ftn
