#include <nqs/cli/commands.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace nqs::cli;

  CLI::App app{"Quantum states over nonorthogonal bases: representations, l1 superposition measures, "
               "POVM disintegration and two-qubit discord."};
  app.require_subcommand(1);

  std::string validate_input;
  auto* validate = app.add_subcommand("validate", "Check a scenario's basis and state");
  validate->add_option("-i,--input", validate_input, "Scenario file")->required();

  MeasuresOptions measures_opts;
  std::string measures_out;
  auto* measures = app.add_subcommand("measures", "l1 inter-/intra-basis and genuine superposition");
  measures->add_option("-i,--input", measures_opts.input, "Scenario file")->required();
  auto* measures_out_opt = measures->add_option("-o,--output", measures_out, "Write the JSON report here");
  measures->add_flag("--representations", measures_opts.representations, "Include all three matrix representations");

  Corollary4Options c4;
  auto* sweep_c4 = app.add_subcommand("sweep-corollary4", "Two-level closed-form measures over an s grid");
  sweep_c4->add_option("--p", c4.p, "Population of |c1>")->required();
  sweep_c4->add_option("--lambda-abs", c4.lambda_abs, "Modulus of the coherence lambda")->required();
  sweep_c4->add_option("--lambda-args", c4.lambda_args, "Comma-separated phases of lambda (radians)")
      ->required()
      ->delimiter(',');
  sweep_c4->add_option("--s-grid", c4.s_grid, "START:STOP:STEP (inclusive)")->required();
  sweep_c4->add_option("-o,--output", c4.output, "CSV output")->required();

  DiscordOptions discord_opts;
  auto* sweep_d = app.add_subcommand("sweep-discord", "Geometric discord and negativity of the two-qubit embedding");
  sweep_d->add_option("--p-steps", discord_opts.p_steps, "Grid points in p")->required();
  sweep_d->add_option("--s-steps", discord_opts.s_steps, "Grid points in s")->required();
  sweep_d->add_option("-o,--output", discord_opts.output, "CSV output")->required();

  PovmOptions povm_opts;
  std::uint64_t sample = 0;
  double scale = 1.0;
  auto* povm = app.add_subcommand("povm", "Disintegration measurement analysis");
  povm->add_option("-i,--input", povm_opts.input, "Scenario file")->required();
  auto* sample_opt = povm->add_option("--sample", sample, "Monte Carlo copies");
  povm->add_option("--seed", povm_opts.seed, "Generator seed");
  auto* scale_opt = povm->add_option("--scale", scale, "Rescale the rank-one elements by q");

  TransformOptions transform_opts;
  std::string transform_out;
  auto* transform = app.add_subcommand("transform", "Convert the state to another representation");
  transform->add_option("-i,--input", transform_opts.input, "Scenario file")->required();
  transform->add_option("--to", transform_opts.to, "conventional | biorthogonal | lowdin")->required();
  auto* transform_out_opt = transform->add_option("-o,--output", transform_out, "Write the scenario here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseFailure;
  }

  if (*validate) return cmd_validate(validate_input, std::cout, std::cerr);
  if (*measures) {
    if (*measures_out_opt) measures_opts.output = measures_out;
    return cmd_measures(measures_opts, std::cout, std::cerr);
  }
  if (*sweep_c4) return cmd_sweep_corollary4(c4, std::cerr);
  if (*sweep_d) return cmd_sweep_discord(discord_opts, std::cerr);
  if (*povm) {
    if (*sample_opt) povm_opts.sample = sample;
    if (*scale_opt) povm_opts.scale = scale;
    return cmd_povm(povm_opts, std::cout, std::cerr);
  }
  if (*transform) {
    if (*transform_out_opt) transform_opts.output = transform_out;
    return cmd_transform(transform_opts, std::cout, std::cerr);
  }
  return kParseFailure;
}
