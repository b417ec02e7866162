#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ftn {

/// Flat key = value experiment configuration ('#' starts a comment).
/// Command-line overrides win over file values. Every key must be consumed by
/// the experiment through a typed getter; leftovers are rejected before any
/// computation starts.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;
  static KeyValueConfig from_file(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get_string(const std::string& key, std::optional<std::string> def = {});
  double get_double(const std::string& key, std::optional<double> def = {});
  int get_int(const std::string& key, std::optional<int> def = {});
  std::uint64_t get_u64(const std::string& key, std::optional<std::uint64_t> def = {});
  std::vector<double> get_double_list(const std::string& key,
                                      std::vector<double> def);
  std::vector<int> get_int_list(const std::string& key, std::vector<int> def);

  /// Throws invalid_argument naming any key no getter ever consumed.
  void reject_unknown() const;

  /// Resolved values for the metadata sidecar, sorted by key.
  std::vector<std::pair<std::string, std::string>> entries() const;

 private:
  std::string take(const std::string& key);

  std::map<std::string, std::string> values_;
  std::set<std::string> consumed_;
};

}  // namespace ftn
