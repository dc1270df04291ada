#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "io.hpp"
#include "settings.hpp"

using namespace comparo::cli;

TEST_CASE("config file parsing") {
  Settings s;
  s.load_file_text("# training run\n\nepochs = 40\nlearning_rate=0.01\r\ndirection=bi\n", "run.cfg");
  CHECK(s.unsigned_value("epochs", 1) == 40);
  CHECK(s.real("learning_rate", 0.0) == 0.01);
  CHECK(s.text("direction", "uni") == "bi");
  CHECK(s.unsigned_value("hidden_dim", 128) == 128);
  CHECK_FALSE(s.has("seed"));

  s.set("epochs", "3");
  CHECK(s.unsigned_value("epochs", 1) == 3);
}

TEST_CASE("config file errors name the origin and line") {
  Settings s;
  CHECK_THROWS_WITH_AS(s.load_file_text("epochs=3\ncolour=blue\n", "a.cfg"),
                       doctest::Contains("a.cfg:2: unknown key 'colour'"), ConfigError);
  CHECK_THROWS_WITH_AS(s.load_file_text("epochs\n", "b.cfg"), doctest::Contains("b.cfg:1"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(s.load_file_text("seed=1\nseed=2\n", "c.cfg"),
                       doctest::Contains("duplicate"), ConfigError);
  CHECK_FALSE(s.has("epochs"));
  CHECK_THROWS_AS(s.set("colour", "red"), ConfigError);
}

TEST_CASE("typed accessors reject malformed values") {
  Settings s;
  s.set("epochs", "-1");
  s.set("seed", "12x");
  s.set("learning_rate", "fast");
  s.set("filter", "maybe");
  s.set("count", "");
  CHECK_THROWS_AS(s.unsigned_value("epochs", 1), ConfigError);
  CHECK_THROWS_AS(s.unsigned_value("seed", 1), ConfigError);
  CHECK_THROWS_AS(s.unsigned_value("count", 1), ConfigError);
  CHECK_THROWS_AS(s.real("learning_rate", 1.0), ConfigError);
  CHECK_THROWS_AS(s.boolean("filter", true), ConfigError);
  CHECK_THROWS_WITH_AS(s.required("loss_log"), doctest::Contains("--loss-log"), ConfigError);
  s.set("filter", "off");
  CHECK_FALSE(s.boolean("filter", true));
}

TEST_CASE("atomic writes leave no temporary files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "comparo_io_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string path = (dir / "out.txt").string();

  write_file_atomic(path, std::string_view("first\n"));
  write_file_atomic(path, std::string_view("second\n"));
  CHECK(read_text_file(path) == "second\n");
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);

  CHECK_THROWS_AS(require_output_location((dir / "missing" / "x").string()), ConfigError);
  CHECK_THROWS_AS(read_text_file((dir / "absent").string()), ConfigError);

  std::ofstream(dir / "lines.txt") << "  a b \n\n\t\nc\r\n";
  CHECK(read_lines((dir / "lines.txt").string()) == std::vector<std::string>{"a b", "c"});
  fs::remove_all(dir);
}
