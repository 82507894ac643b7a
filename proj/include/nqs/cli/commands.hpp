#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nqs::cli {

/// Process exit statuses shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kValidationFailure = 1, kParseFailure = 2 };

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);

struct MeasuresOptions {
  std::string input;
  std::optional<std::string> output;
  bool representations = false;
};
int cmd_measures(const MeasuresOptions& opts, std::ostream& out, std::ostream& err);

struct Corollary4Options {
  double p = 0.5;
  double lambda_abs = 0.25;
  std::vector<double> lambda_args;
  std::string s_grid;  // START:STOP:STEP, inclusive of STOP
  std::string output;
};
int cmd_sweep_corollary4(const Corollary4Options& opts, std::ostream& err);

struct DiscordOptions {
  int p_steps = 101;
  int s_steps = 100;
  std::string output;
};
int cmd_sweep_discord(const DiscordOptions& opts, std::ostream& err);

struct PovmOptions {
  std::string input;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  std::optional<double> scale;
};
int cmd_povm(const PovmOptions& opts, std::ostream& out, std::ostream& err);

struct TransformOptions {
  std::string input;
  std::string to;
  std::optional<std::string> output;
};
int cmd_transform(const TransformOptions& opts, std::ostream& out, std::ostream& err);

/// Parsed START:STOP:STEP. Throws ParseError on malformed text.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};
GridSpec parse_grid(const std::string& text);
/// Points start + k·step up to stop (with 1e-9·step slack). Throws
/// nqs::Error(RangeError) when the grid is empty or step <= 0.
std::vector<double> expand_grid(const GridSpec& spec);

}  // namespace nqs::cli
