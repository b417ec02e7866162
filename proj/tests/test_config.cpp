#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ftn/config.hpp"

using namespace ftn;

namespace {
std::filesystem::path write_temp(const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / "ftn_config_test.cfg";
  std::ofstream out(path);
  out << text;
  return path;
}
}  // namespace

TEST_CASE("config parsing with comments and whitespace") {
  const auto path = write_temp(
      "# experiment\n"
      "rho = 0.9   # packing\n"
      "\n"
      "n=256\n"
      "snr_db_list = 0, 2, 4\n"
      "label = fig3\n");
  KeyValueConfig cfg = KeyValueConfig::from_file(path);
  CHECK(cfg.get_double("rho") == 0.9);
  CHECK(cfg.get_int("n") == 256);
  CHECK(cfg.get_double_list("snr_db_list", {}) == std::vector<double>{0.0, 2.0, 4.0});
  CHECK(cfg.get_string("label") == "fig3");
  CHECK_NOTHROW(cfg.reject_unknown());
}

TEST_CASE("overrides win and defaults apply") {
  KeyValueConfig cfg;
  cfg.set("rho", "0.8");
  cfg.set("rho", "0.7");
  CHECK(cfg.get_double("rho") == 0.7);
  CHECK(cfg.get_double("missing", 1.5) == 1.5);
  CHECK(cfg.get_int_list("ms", {1, 2}) == std::vector<int>{1, 2});
}

TEST_CASE("unknown keys are rejected by name") {
  KeyValueConfig cfg;
  cfg.set("rho", "0.8");
  cfg.set("bogus", "1");
  cfg.get_double("rho");
  CHECK_THROWS_WITH_AS(cfg.reject_unknown(), doctest::Contains("bogus"),
                       std::invalid_argument);
}

TEST_CASE("typed getters validate values") {
  KeyValueConfig cfg;
  cfg.set("x", "abc");
  cfg.set("list", "1,zz");
  CHECK_THROWS_AS(cfg.get_double("x"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_int("x"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_double_list("list", {}), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_double("absent"), std::invalid_argument);
}

TEST_CASE("malformed files are rejected") {
  const auto path = write_temp("rho 0.9\n");
  CHECK_THROWS_AS(KeyValueConfig::from_file(path), std::invalid_argument);
  CHECK_THROWS_AS(KeyValueConfig::from_file("/nonexistent/ftn.cfg"),
                  std::invalid_argument);
}
