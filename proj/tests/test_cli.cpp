#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netform/cli.hpp"
#include "netform/io.hpp"
#include "netform/presets.hpp"

using namespace netform;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("netform_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::map<std::string, std::string> read_dir_bytes(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) {
      files[entry.path().filename().string()] = slurp(entry.path());
    }
  }
  return files;
}

void expect_key_in_error(const std::vector<std::string>& args,
                         const std::string& key) {
  try {
    parse_command(args);
    FAIL("expected parse failure for key ", key);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(key) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("preset flags override preset defaults") {
  const auto parsed = parse_command({"preset", "friends1", "--seed", "7"});
  CHECK(parsed.action == CliAction::Preset);
  CHECK(parsed.config.model == "friends1");
  CHECK(parsed.config.seed == 7);
  CHECK(parsed.config.agents == 10);  // untouched preset default
}

TEST_CASE("range and name errors identify the offending key") {
  expect_key_in_error({"--discount", "1.5"}, "discount");
  expect_key_in_error({"preset", "nosuch"}, "nosuch");
  expect_key_in_error({"run", "--bogus", "1"}, "--bogus");
  expect_key_in_error({"run", "--noise", "1.0"}, "noise");
  expect_key_in_error({"run", "--model", "parcheesi"}, "parcheesi");
  expect_key_in_error({"run", "--format", "xml"}, "format");
  expect_key_in_error({"run", "--agents", "1"}, "agents");
}

TEST_CASE("config file values sit between defaults and flags") {
  const auto dir = fresh_dir("config");
  const auto file = dir / "exp.ini";
  {
    std::ofstream out(file);
    out << "rounds=50\nseed=9\n";
  }
  const auto parsed = parse_command(
      {"run", "--config", file.string(), "--seed", "7"});
  CHECK(parsed.config.rounds == 50);  // from file
  CHECK(parsed.config.seed == 7);     // flag wins
  CHECK(parsed.config.runs == 1);     // untouched default

  const auto bad = dir / "bad.ini";
  {
    std::ofstream out(bad);
    out << "no-such-key=3\n";
  }
  expect_key_in_error({"run", "--config", bad.string()}, "no-such-key");

  const auto missing = (dir / "absent.ini").string();
  expect_key_in_error({"run", "--config", missing}, "absent.ini");
}

TEST_CASE("implicit run and list-presets") {
  const auto run = parse_command({"--model", "friends2", "--agents", "3"});
  CHECK(run.action == CliAction::Run);
  CHECK(run.config.agents == 3);

  const auto list = parse_command({"list-presets"});
  CHECK(list.action == CliAction::ListPresets);
}

TEST_CASE("every model name resolves") {
  for (const auto* name :
       {"friends1", "friends2", "enemies1", "enemies2", "transfer",
        "staghunt", "loglik-friends1", "loglik-friends2"}) {
    CHECK_NOTHROW(parse_model(name));
  }
  const auto loglik = parse_model("loglik-friends2");
  CHECK(loglik.rule == UpdateRule::LogLikelihood);
  CHECK(loglik.game == Game::FriendsII);
}

TEST_CASE("preset table") {
  const auto& presets = preset_table();
  CHECK(presets.size() == 17);
  const std::vector<std::string> expected{
      "friends1-n3",        "friends1-n10",
      "friends2-n3",        "friends2-n10",
      "enemies1-resistance", "enemies2-resistance",
      "ehrenfest-2ball",    "ehrenfest-mixing",
      "discounted-friends1", "discounted-friends2",
      "noisy-friends2",     "noisy-discounted-friends2",
      "staghunt-frozen",    "staghunt-discounted",
      "staghunt-coevolve-q1", "staghunt-coevolve-q01",
      "staghunt-heavy-weights"};
  for (const auto& name : expected) {
    CHECK_NOTHROW(preset_config(name));
  }
  CHECK(preset_config("staghunt-coevolve-q01").revision_prob == 0.01);
  CHECK(preset_config("staghunt-heavy-weights").init_weight == 1000);
  CHECK(preset_config("discounted-friends2").discount == 0.9);
  CHECK(preset_config("noisy-discounted-friends2").noise == 0.01);
}

TEST_CASE("matrix csv shape and formatting") {
  ProbabilityMatrix pm{SquareMatrix(3)};
  pm.p(0, 1) = 0.25;
  pm.p(0, 2) = 0.75;
  pm.p(1, 0) = 1.0;
  pm.p(2, 0) = 1.0 / 3;
  pm.p(2, 1) = 2.0 / 3;
  const std::string csv = probability_csv(pm);

  std::istringstream in(csv);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 2);
  }
  CHECK(rows == 3);
  CHECK(csv.find("0,0.250000,0.750000\n") == 0);
  CHECK(csv.find("0.333333,0.666667,0") != std::string::npos);
}

TEST_CASE("summary json carries exactly the four documented keys") {
  ExperimentConfig cfg = preset_config("friends2-n3");
  cfg.rounds = 50;
  cfg.runs = 4;
  cfg.out_dir.clear();
  const auto result = run_configured(cfg);
  const auto doc = nlohmann::json::parse(summary_json(result));
  CHECK(doc.size() == 4);
  CHECK(doc.contains("config"));
  CHECK(doc.contains("class_counts"));
  CHECK(doc.contains("absorption"));
  CHECK(doc.contains("statistics"));
  CHECK(doc["config"]["model"] == "friends2");
  CHECK(doc["config"]["rounds"] == 50);
  int total = 0;
  for (const auto& [label, count] : doc["class_counts"].items()) {
    total += count.get<int>();
  }
  CHECK(total == 4);
}

TEST_CASE("experiment outputs are byte-identical across reruns") {
  ExperimentConfig cfg = preset_config("friends2-n3");
  cfg.rounds = 80;
  cfg.runs = 5;
  cfg.seed = 31;

  const auto dir = fresh_dir("rerun");
  cfg.out_dir = (dir / "out").string();

  auto first = run_configured(cfg);
  const auto bytes_first = read_dir_bytes(cfg.out_dir);
  fs::remove_all(cfg.out_dir);
  auto second = run_configured(cfg);
  const auto bytes_second = read_dir_bytes(cfg.out_dir);

  REQUIRE(bytes_first.size() == bytes_second.size());
  CHECK(bytes_first.size() == 6u);  // 5 matrices + summary.json
  CHECK(bytes_first == bytes_second);
}

TEST_CASE("json matrix format is selectable") {
  ExperimentConfig cfg = preset_config("friends2-n3");
  cfg.rounds = 10;
  cfg.runs = 2;
  cfg.format = "json";
  const auto dir = fresh_dir("jsonfmt");
  cfg.out_dir = (dir / "out").string();
  const auto result = run_configured(cfg);
  CHECK(fs::exists(fs::path(cfg.out_dir) / "p_final_0000.json"));
  const auto doc =
      nlohmann::json::parse(slurp(fs::path(cfg.out_dir) / "p_final_0001.json"));
  CHECK(doc["n"] == 3);
  CHECK(doc["p"].size() == 3);
}

TEST_CASE("cli_main drives the whole pipeline") {
  const auto dir = fresh_dir("climain");

  SUBCASE("run with files") {
    std::ostringstream out, err;
    const int status = cli_main(
        {"run", "--model", "friends2", "--agents", "3", "--rounds", "40",
         "--runs", "2", "--out", (dir / "r").string()},
        out, err);
    CHECK(status == 0);
    CHECK(fs::exists(dir / "r" / "summary.json"));
    CHECK(out.str().find("\"class_counts\"") != std::string::npos);
  }
  SUBCASE("list-presets prints every preset name") {
    std::ostringstream out, err;
    CHECK(cli_main({"list-presets"}, out, err) == 0);
    for (const auto& preset : preset_table()) {
      CHECK(out.str().find(preset.name) != std::string::npos);
    }
  }
  SUBCASE("bad flag exits nonzero naming the key") {
    std::ostringstream out, err;
    CHECK(cli_main({"run", "--discount", "2"}, out, err) == 2);
    CHECK(err.str().find("discount") != std::string::npos);
  }
  SUBCASE("io failure names the path and exits nonzero") {
    const auto blocker = dir / "blocker";
    std::ofstream(blocker) << "x";  // a file where a directory must go
    std::ostringstream out, err;
    const int status = cli_main(
        {"run", "--model", "friends2", "--agents", "3", "--rounds", "5",
         "--out", (blocker / "sub").string()},
        out, err);
    CHECK(status == 1);
    CHECK(err.str().find("blocker") != std::string::npos);
  }
  SUBCASE("help exits zero") {
    std::ostringstream out, err;
    CHECK(cli_main({"--help"}, out, err) == 0);
    CHECK(out.str().find("preset") != std::string::npos);
  }
}

TEST_CASE("installed binary round trip") {
  const char* cli = std::getenv("NETFORM_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "NETFORM_CLI not set; run via ctest");
  const auto dir = fresh_dir("binary");

  const std::string out_a = (dir / "a").string();
  const std::string cmd_base =
      std::string(cli) +
      " preset ehrenfest-2ball --rounds 400 --runs 2 --seed 5 --out ";
  const std::string log = (dir / "stdout.txt").string();

  REQUIRE(std::system((cmd_base + out_a + " > " + log + " 2>/dev/null").c_str()) == 0);
  const std::string stdout_text = slurp(log);
  CHECK(stdout_text.find("stationary_exact") != std::string::npos);
  CHECK(fs::exists(fs::path(out_a) / "summary.json"));

  const std::string out_b = (dir / "b").string();
  REQUIRE(std::system((cmd_base + out_b + " >/dev/null 2>&1").c_str()) == 0);
  auto bytes_a = read_dir_bytes(out_a);
  auto bytes_b = read_dir_bytes(out_b);
  // The config echo records the out path; align it before comparing bytes.
  for (auto* bytes : {&bytes_a, &bytes_b}) {
    auto& summary = (*bytes)["summary.json"];
    const auto doc = nlohmann::json::parse(summary);
    auto cleaned = doc;
    cleaned["config"]["out"] = "";
    summary = cleaned.dump(2);
  }
  CHECK(bytes_a == bytes_b);

  const int bad = std::system(
      (std::string(cli) + " preset nosuch >/dev/null 2>&1").c_str());
  CHECK(bad != 0);
}
