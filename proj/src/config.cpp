#include "ftn/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ftn {

namespace {
std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}
}  // namespace

KeyValueConfig KeyValueConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path.string());
  KeyValueConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                  ": empty key");
    cfg.values_[key] = value;
  }
  return cfg;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
  values_[trim(key)] = trim(value);
}

std::string KeyValueConfig::take(const std::string& key) {
  consumed_.insert(key);
  auto it = values_.find(key);
  if (it == values_.end()) throw std::out_of_range(key);
  return it->second;
}

std::string KeyValueConfig::get_string(const std::string& key,
                                       std::optional<std::string> def) {
  consumed_.insert(key);
  auto it = values_.find(key);
  if (it != values_.end()) return it->second;
  if (def) return *def;
  throw std::invalid_argument("missing required config key '" + key + "'");
}

double KeyValueConfig::get_double(const std::string& key, std::optional<double> def) {
  consumed_.insert(key);
  auto it = values_.find(key);
  if (it == values_.end()) {
    if (def) return *def;
    throw std::invalid_argument("missing required config key '" + key + "'");
  }
  try {
    size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': '" + it->second +
                                "' is not a number");
  }
}

int KeyValueConfig::get_int(const std::string& key, std::optional<int> def) {
  consumed_.insert(key);
  auto it = values_.find(key);
  if (it == values_.end()) {
    if (def) return *def;
    throw std::invalid_argument("missing required config key '" + key + "'");
  }
  try {
    size_t pos = 0;
    const int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': '" + it->second +
                                "' is not an integer");
  }
}

std::uint64_t KeyValueConfig::get_u64(const std::string& key,
                                      std::optional<std::uint64_t> def) {
  consumed_.insert(key);
  auto it = values_.find(key);
  if (it == values_.end()) {
    if (def) return *def;
    throw std::invalid_argument("missing required config key '" + key + "'");
  }
  try {
    size_t pos = 0;
    const unsigned long long v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': '" + it->second +
                                "' is not an unsigned integer");
  }
}

namespace {
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}
}  // namespace

std::vector<double> KeyValueConfig::get_double_list(const std::string& key,
                                                    std::vector<double> def) {
  consumed_.insert(key);
  auto it = values_.find(key);
  if (it == values_.end()) return def;
  std::vector<double> out;
  for (const auto& item : split_list(it->second)) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("config key '" + key + "': '" + item +
                                  "' is not a number");
    }
  }
  if (out.empty())
    throw std::invalid_argument("config key '" + key + "': empty list");
  return out;
}

std::vector<int> KeyValueConfig::get_int_list(const std::string& key,
                                              std::vector<int> def) {
  consumed_.insert(key);
  auto it = values_.find(key);
  if (it == values_.end()) return def;
  std::vector<int> out;
  for (const auto& item : split_list(it->second)) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("config key '" + key + "': '" + item +
                                  "' is not an integer");
    }
  }
  if (out.empty())
    throw std::invalid_argument("config key '" + key + "': empty list");
  return out;
}

void KeyValueConfig::reject_unknown() const {
  std::string unknown;
  for (const auto& [k, v] : values_) {
    if (!consumed_.count(k)) {
      if (!unknown.empty()) unknown += ", ";
      unknown += k;
    }
  }
  if (!unknown.empty())
    throw std::invalid_argument("unknown config key(s): " + unknown);
}

std::vector<std::pair<std::string, std::string>> KeyValueConfig::entries() const {
  return {values_.begin(), values_.end()};
}

}  // namespace ftn
