#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nqs/cli/commands.hpp>
#include <nqs/cli/csv.hpp>
#include <nqs/cli/scenario.hpp>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace nqs;
using namespace nqs::cli;
namespace fs = std::filesystem;

namespace {

std::string scenario(const char* name) { return std::string(NQS_SCENARIO_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "nqs_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

nlohmann::json run_measures(const char* name) {
  std::ostringstream out, err;
  MeasuresOptions opts;
  opts.input = scenario(name);
  opts.representations = true;
  REQUIRE(cmd_measures(opts, out, err) == kSuccess);
  return nlohmann::json::parse(out.str());
}

}  // namespace

TEST_CASE("format_number uses fixed notation with 12 significant digits") {
  CHECK(format_number(0.4) == "0.400000000000");
  CHECK(format_number(1.0) == "1.00000000000");
  CHECK(format_number(-2.5) == "-2.50000000000");
  CHECK(format_number(123456.789) == "123456.789000");
  CHECK(format_number(0.000123456789012345) == "0.000123456789012");
  CHECK(format_number(0.0) == "0.00000000000");
  CHECK(format_number(-0.0) == "0.00000000000");
  CHECK(format_number(0.99999999999996) == "1.00000000000");
  CHECK(format_number(1e-40) == "0.000000000000000000000000000000");
  CHECK(format_number(-1e-40) == "0.000000000000000000000000000000");
  CHECK(format_number(1e15) == "1000000000000000");
  CHECK(format_number(std::numbers::pi) == "3.14159265359");
}

TEST_CASE("scenario parsing round-trips losslessly") {
  const Scenario sc = load_scenario(scenario("complex_three_level.json"));
  CHECK(sc.dim == 3);
  CHECK(sc.kind == StateKind::Probs);
  CHECK(sc.gram(0, 1) == Complex(0.3, 0.2));
  const Scenario again = parse_scenario(nlohmann::json::parse(to_json(sc).dump()));
  CHECK(again.gram == sc.gram);
  CHECK(again.probs == sc.probs);

  Scenario m;
  m.dim = 2;
  m.gram = CMatrix::Identity(2, 2);
  m.kind = StateKind::Biorthogonal;
  m.matrix = CMatrix::Random(2, 2);
  const Scenario m2 = parse_scenario(nlohmann::json::parse(to_json(m).dump()));
  CHECK(m2.matrix == m.matrix);
  CHECK(m2.kind == StateKind::Biorthogonal);
}

TEST_CASE("scenario parse errors") {
  using nlohmann::json;
  const json good = json::parse(slurp(scenario("pure_thirds.json")));
  CHECK_NOTHROW(parse_scenario(good));
  json two_states = good;
  two_states["state"]["probs"] = {0.5, 0.5};
  CHECK_THROWS_AS(parse_scenario(two_states), ParseError);
  json wrong_dim = good;
  wrong_dim["dim"] = 3;
  CHECK_THROWS_AS(parse_scenario(wrong_dim), ParseError);
  json bad_entry = good;
  bad_entry["gram"][0][0] = 1.0;
  CHECK_THROWS_AS(parse_scenario(bad_entry), ParseError);
  json unknown = good;
  unknown["state"] = {{"mixed", 1}};
  CHECK_THROWS_AS(parse_scenario(unknown), ParseError);
  CHECK_THROWS_AS(load_scenario(scenario("malformed.json")), ParseError);
  CHECK_THROWS_AS(load_scenario(scenario("does_not_exist.json")), ParseError);
}

TEST_CASE("validate exit codes") {
  std::ostringstream out, err;
  CHECK(cmd_validate(scenario("identity_pure.json"), out, err) == kSuccess);
  CHECK(out.str().find("valid: yes") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cmd_validate(scenario("degenerate_gram.json"), out2, err2) == kValidationFailure);
  CHECK(out2.str().find("NotPositiveDefinite") != std::string::npos);

  std::ostringstream out3, err3;
  CHECK(cmd_validate(scenario("malformed.json"), out3, err3) == kParseFailure);
  CHECK(cmd_validate(scenario("complex_three_level.json"), out3, err3) == kSuccess);
}

TEST_CASE("measures reports") {
  {
    const auto doc = run_measures("superposition_free.json");
    CHECK(doc["l1_inter"].get<double>() == 0.0);
    CHECK(doc["l1_intra"].get<double>() == doctest::Approx(0.5).epsilon(1e-14));
  }
  {
    const auto doc = run_measures("corollary4.json");
    CHECK(std::abs(doc["l1_inter"].get<double>() - 0.4) < 1e-12);
    CHECK(std::abs(doc["l1_intra"].get<double>() - 0.4) < 1e-12);
    CHECK(std::abs(doc["l1_genuine"].get<double>() - 0.8) < 1e-12);
    CHECK(std::abs(doc["additivity_gap"].get<double>()) < 1e-12);
    CHECK(doc.contains("representations"));
    CHECK_FALSE(doc.contains("chirgwin_coulson"));
  }
  {
    const auto doc = run_measures("identity_pure.json");
    CHECK(doc["l1_genuine"].get<double>() == doctest::Approx(doc["l1_inter"].get<double>()));
    CHECK(doc["chirgwin_coulson"][0]["re"].get<double>() == doctest::Approx(0.36));
  }
  std::ostringstream out, err;
  MeasuresOptions opts;
  opts.input = scenario("degenerate_gram.json");
  CHECK(cmd_measures(opts, out, err) == kValidationFailure);

  const fs::path target = scratch("measures.json");
  opts.input = scenario("pure_thirds.json");
  opts.output = target.string();
  CHECK(cmd_measures(opts, out, err) == kSuccess);
  CHECK(nlohmann::json::parse(slurp(target)).contains("l1_genuine"));
}

TEST_CASE("sweep-corollary4 CSV") {
  const fs::path target = scratch("c4.csv");
  Corollary4Options opts;
  opts.p = 0.5;
  opts.lambda_abs = 0.25;
  opts.lambda_args = {0.0, std::numbers::pi / 2};
  opts.s_grid = "0:0.9:0.1";
  opts.output = target.string();
  std::ostringstream err;
  REQUIRE(cmd_sweep_corollary4(opts, err) == kSuccess);
  const auto rows = read_csv(target);
  REQUIRE(rows.size() == 1 + 2 * 10);
  CHECK(rows[0] == std::vector<std::string>{"p", "s", "arg_lambda", "l1_inter", "l1_intra", "l1_genuine", "gap"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double s = std::stod(rows[i][1]);
    const double arg = std::stod(rows[i][2]);
    const double gap = std::stod(rows[i][6]);
    if (arg == 0.0) CHECK(std::abs(gap) < 1e-12);
    if (arg > 1.0 && s > 0.0) CHECK(gap > 0.0);
  }
  const std::string first = slurp(target);
  REQUIRE(cmd_sweep_corollary4(opts, err) == kSuccess);
  CHECK(slurp(target) == first);

  opts.s_grid = "0.5:0.1:0.1";
  CHECK(cmd_sweep_corollary4(opts, err) == kValidationFailure);
  opts.s_grid = "0:1:0";
  CHECK(cmd_sweep_corollary4(opts, err) == kValidationFailure);
  opts.s_grid = "0:0.5";
  CHECK(cmd_sweep_corollary4(opts, err) == kParseFailure);
  opts.s_grid = "a:b:c";
  CHECK(cmd_sweep_corollary4(opts, err) == kParseFailure);
  opts.s_grid = "0:1.2:0.1";
  CHECK(cmd_sweep_corollary4(opts, err) == kValidationFailure);
}

TEST_CASE("grid expansion includes the stop value") {
  const auto pts = expand_grid(parse_grid("0.1:0.3:0.1"));
  REQUIRE(pts.size() == 3);
  CHECK(pts[2] == doctest::Approx(0.3));
  CHECK(expand_grid(parse_grid("0.2:0.2:0.05")).size() == 1);
  CHECK_THROWS_AS(parse_grid("0:1:0.1:"), ParseError);
}

TEST_CASE("sweep-discord CSV is deterministic and structured") {
  const fs::path target = scratch("discord.csv");
  DiscordOptions opts{11, 12, target.string()};
  std::ostringstream err;
  REQUIRE(cmd_sweep_discord(opts, err) == kSuccess);
  const auto rows = read_csv(target);
  REQUIRE(rows.size() == 1 + 11 * 12);
  CHECK(rows[0] == std::vector<std::string>{"p", "s", "discord_A", "discord_B", "negativity"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::abs(std::stod(rows[i][2]) - std::stod(rows[i][3])) < 1e-9);
    CHECK(std::abs(std::stod(rows[i][4])) < 1e-9);
  }
  const std::string first = slurp(target);
  REQUIRE(cmd_sweep_discord(opts, err) == kSuccess);
  CHECK(slurp(target) == first);

  opts.p_steps = 1;
  CHECK(cmd_sweep_discord(opts, err) == kValidationFailure);
}

TEST_CASE("povm report") {
  {
    std::ostringstream out, err;
    PovmOptions opts;
    opts.input = scenario("superposition_free.json");
    opts.sample = 100000;
    opts.seed = 7;
    REQUIRE(cmd_povm(opts, out, err) == kSuccess);
    const std::string text = out.str();
    CHECK(text.find("povm.valid: false") != std::string::npos);
    CHECK(text.find("povm.min_eigenvalue_last: -1.00000000000") != std::string::npos);
    CHECK(text.find("povm.probabilities: [0.300000000000, 0.700000000000, 0.00000000000]") != std::string::npos);
    CHECK(text.find("sample.counts: [") != std::string::npos);

    std::ostringstream again, err2;
    REQUIRE(cmd_povm(opts, again, err2) == kSuccess);
    CHECK(again.str() == text);
  }
  {
    std::ostringstream out, err;
    PovmOptions opts;
    opts.input = scenario("pure_antisymmetric.json");
    opts.sample = 1000;
    CHECK(cmd_povm(opts, out, err) == kSuccess);
    CHECK(err.str().find("sampling refused") != std::string::npos);
    CHECK(out.str().find("sample.counts") == std::string::npos);
    CHECK(out.str().find("povm.probabilities_in_range: false") != std::string::npos);
  }
  {
    std::ostringstream out, err;
    PovmOptions opts;
    opts.input = scenario("pure_antisymmetric.json");
    opts.scale = 0.5;
    CHECK(cmd_povm(opts, out, err) == kSuccess);
    CHECK(out.str().find("povm.valid: true") != std::string::npos);
    opts.scale = 0.9;
    CHECK(cmd_povm(opts, out, err) == kValidationFailure);
  }
}

TEST_CASE("transform conversions and round trips") {
  std::ostringstream err;
  {
    std::ostringstream out;
    TransformOptions opts{scenario("identity_pure.json"), "lowdin", std::nullopt};
    REQUIRE(cmd_transform(opts, out, err) == kSuccess);
    const Scenario sc = parse_scenario(nlohmann::json::parse(out.str()));
    CHECK(sc.kind == StateKind::Lowdin);
    CMatrix expected(2, 2);
    expected << 0.36, 0.48, 0.48, 0.64;
    CHECK(max_abs(sc.matrix - expected) < 1e-15);
  }
  {
    std::ostringstream out;
    TransformOptions opts{scenario("superposition_free.json"), "biorthogonal", std::nullopt};
    REQUIRE(cmd_transform(opts, out, err) == kSuccess);
    const Scenario sc = parse_scenario(nlohmann::json::parse(out.str()));
    CMatrix expected(2, 2);
    expected << 0.3, 0.15, 0.35, 0.7;
    CHECK(max_abs(sc.matrix - expected) < 1e-15);
  }
  for (const char* name : {"corollary4.json", "complex_three_level.json", "pure_thirds.json"}) {
    const fs::path low = scratch("low.json");
    const fs::path back = scratch("back.json");
    const fs::path conv = scratch("conv.json");
    std::ostringstream out;
    REQUIRE(cmd_transform({scenario(name), "conventional", conv.string()}, out, err) == kSuccess);
    REQUIRE(cmd_transform({conv.string(), "lowdin", low.string()}, out, err) == kSuccess);
    REQUIRE(cmd_transform({low.string(), "biorthogonal", back.string()}, out, err) == kSuccess);
    REQUIRE(cmd_transform({back.string(), "conventional", back.string()}, out, err) == kSuccess);
    CHECK(max_abs(load_scenario(back).matrix - load_scenario(conv).matrix) < 1e-9);
  }
  std::ostringstream out;
  CHECK(cmd_transform({scenario("identity_pure.json"), "pure", std::nullopt}, out, err) == kParseFailure);
  CHECK(cmd_transform({scenario("degenerate_gram.json"), "lowdin", std::nullopt}, out, err) == kValidationFailure);
}
