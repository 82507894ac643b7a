#include <nqs/cli/commands.hpp>

#include <nqs/cli/csv.hpp>
#include <nqs/cli/scenario.hpp>
#include <nqs/correlations.hpp>
#include <nqs/measures.hpp>
#include <nqs/povm.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace nqs::cli {

using nlohmann::json;

namespace {

// Runs `body`, mapping failures onto the shared exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  return out;
}

void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (path) {
    std::ofstream file = open_output(*path);
    file << text;
    if (!file) throw ParseError("failed writing " + *path);
  } else {
    out << text;
  }
}

std::string fmt(double v) { return format_number(v); }

std::string fmt(Complex z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

template <class Vec>
std::string fmt_list(const Vec& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v(i));
  return s + "]";
}

std::string verdict(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Scenario sc = load_scenario(path);
    out << "dim: " << sc.dim << '\n';
    out << "gram.hermiticity_defect: " << fmt(hermiticity_defect(sc.gram)) << '\n';
    out << "gram.eigenvalues: " << fmt_list(hermitian_eigenvalues(sc.gram)) << '\n';

    BasisPtr basis;
    try {
      basis = scenario_basis(sc);
    } catch (const Error& e) {
      out << "gram: FAIL (" << to_string(e.code()) << ")\n";
      throw;
    }
    out << "gram: ok (hermitian, unit diagonal, positive definite)\n";
    out << "gram.orthonormal: " << (basis->is_orthonormal() ? "yes" : "no") << '\n';

    out << "state.variant: " << to_string(sc.kind) << '\n';
    try {
      const ConventionalRep rep = scenario_state(sc, basis);
      const StateCheck c = check(rep);
      out << "state.hermitian: " << verdict(c.hermitian()) << '\n';
      out << "state.trace: " << fmt(c.trace) << " " << verdict(c.unit_trace()) << '\n';
      out << "state.min_lowdin_eigenvalue: " << fmt(c.min_eigenvalue) << " " << verdict(c.positive()) << '\n';
    } catch (const Error& e) {
      out << "state: FAIL (" << to_string(e.code()) << ")\n";
      throw;
    }
    out << "valid: yes\n";
    return int{kSuccess};
  });
}

int cmd_measures(const MeasuresOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Scenario sc = load_scenario(opts.input);
    const BasisPtr basis = scenario_basis(sc);
    const ConventionalRep rep = scenario_state(sc, basis);
    const MeasureReport raw = measure(rep);
    const MeasureReport r = raw.clipped();

    json doc{{"l1_inter", r.l1_inter},
             {"l1_intra", r.l1_intra},
             {"l1_genuine", r.l1_genuine},
             {"additivity_gap", r.additivity_gap}};
    if (sc.kind == StateKind::Pure)
      doc["chirgwin_coulson"] = vector_to_json(chirgwin_coulson(PureState::make(basis, sc.amps)));
    if (opts.representations) {
      doc["representations"] = {{"conventional", matrix_to_json(rep.mat())},
                                {"biorthogonal", matrix_to_json(conv_to_bio(rep).mat())},
                                {"lowdin", matrix_to_json(conv_to_lowdin(rep).mat())}};
    }
    emit(doc.dump(2) + "\n", opts.output, out);
    return int{kSuccess};
  });
}

GridSpec parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParseError("grid \"" + text + "\": expected START:STOP:STEP");
    }
    if (used != item.size()) throw ParseError("grid \"" + text + "\": trailing characters in \"" + item + "\"");
    parts.push_back(v);
  }
  if (parts.size() != 3 || text.back() == ':') throw ParseError("grid \"" + text + "\": expected START:STOP:STEP");
  return GridSpec{parts[0], parts[1], parts[2]};
}

std::vector<double> expand_grid(const GridSpec& spec) {
  if (!(spec.step > 0.0)) throw Error(ErrorCode::RangeError, "grid step must be positive");
  if (spec.stop < spec.start) throw Error(ErrorCode::RangeError, "grid is empty (STOP < START)");
  const auto count = static_cast<long long>(std::floor((spec.stop - spec.start) / spec.step + 1e-9)) + 1;
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) points.push_back(spec.start + static_cast<double>(k) * spec.step);
  return points;
}

int cmd_sweep_corollary4(const Corollary4Options& opts, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<double> s_values = expand_grid(parse_grid(opts.s_grid));
    if (opts.lambda_args.empty()) throw Error(ErrorCode::RangeError, "no lambda arguments given");
    if (!(opts.p >= 0.0 && opts.p <= 1.0)) throw Error(ErrorCode::RangeError, "p must lie in [0, 1]");
    if (!(opts.lambda_abs >= 0.0)) throw Error(ErrorCode::RangeError, "lambda modulus must be nonnegative");
    for (double s : s_values)
      if (!(std::abs(s) < 1.0)) throw Error(ErrorCode::RangeError, "s grid leaves (-1, 1)");

    std::ofstream file = open_output(opts.output);
    CsvWriter csv(file, {"p", "s", "arg_lambda", "l1_inter", "l1_intra", "l1_genuine", "gap"});
    for (double arg : opts.lambda_args) {
      const Complex lambda = std::polar(opts.lambda_abs, arg);
      for (double s : s_values) {
        const MeasureReport r = two_level_closed_form(opts.p, s, lambda);
        csv.row({opts.p, s, arg, r.l1_inter, r.l1_intra, r.l1_genuine, r.additivity_gap});
      }
    }
    if (!file) throw ParseError("failed writing " + opts.output);
    return int{kSuccess};
  });
}

int cmd_sweep_discord(const DiscordOptions& opts, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.p_steps < 2 || opts.s_steps < 2) throw Error(ErrorCode::RangeError, "step counts must be at least 2");
    std::ofstream file = open_output(opts.output);
    CsvWriter csv(file, {"p", "s", "discord_A", "discord_B", "negativity"});
    for_each_discord_row(opts.p_steps, opts.s_steps, [&csv](const DiscordRow& r) {
      csv.row({r.p, r.s, r.discord_A, r.discord_B, r.negativity});
    });
    if (!file) throw ParseError("failed writing " + opts.output);
    return int{kSuccess};
  });
}

int cmd_povm(const PovmOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Scenario sc = load_scenario(opts.input);
    const BasisPtr basis = scenario_basis(sc);
    const ConventionalRep rep = scenario_state(sc, basis);
    const double scale = opts.scale.value_or(1.0);

    const PovmSet povm = build_povm(*basis, scale);
    out << "povm.scale: " << fmt(scale) << '\n';
    out << "povm.valid: " << (povm.valid ? "true" : "false") << '\n';
    out << "povm.min_eigenvalue_last: " << fmt(povm.min_eigenvalue_last) << '\n';

    const PovmProbabilities probs = povm_probabilities(rep, scale);
    out << "povm.probabilities: " << fmt_list(probs.values) << '\n';
    out << "povm.probabilities_in_range: " << (probs.in_range ? "true" : "false") << '\n';
    out << "pvm.probabilities: " << fmt_list(pvm_probabilities(conv_to_bio(rep))) << '\n';

    const ProjectorSet proj = projectors(*basis);
    out << "projectors.completeness_residual: " << fmt(proj.completeness_residual) << '\n';
    out << "projectors.idempotence_residual: " << fmt(proj.idempotence_residual) << '\n';
    out << "projectors.action_residual: " << fmt(proj.action_residual) << '\n';

    if (opts.sample) {
      if (!probs.in_range) {
        err << "warning: outcome probabilities outside [0, 1]; sampling refused\n";
      } else {
        const auto counts = monte_carlo_disintegrate(rep, *opts.sample, opts.seed, scale);
        out << "sample.n: " << *opts.sample << '\n';
        out << "sample.seed: " << opts.seed << '\n';
        out << "sample.counts: [";
        for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? ", " : "") << counts[i];
        out << "]\n";
      }
    }
    return int{kSuccess};
  });
}

int cmd_transform(const TransformOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto target = state_kind_from(opts.to);
    if (!target || *target == StateKind::Pure || *target == StateKind::Probs)
      throw ParseError("--to must be conventional, biorthogonal or lowdin");
    const Scenario sc = load_scenario(opts.input);
    const BasisPtr basis = scenario_basis(sc);
    const ConventionalRep rep = scenario_state(sc, basis);

    Scenario result;
    result.dim = sc.dim;
    result.gram = sc.gram;
    result.kind = *target;
    if (*target == StateKind::Conventional) result.matrix = rep.mat();
    if (*target == StateKind::Biorthogonal) result.matrix = conv_to_bio(rep).mat();
    if (*target == StateKind::Lowdin) result.matrix = conv_to_lowdin(rep).mat();
    emit(to_json(result).dump(2) + "\n", opts.output, out);
    return int{kSuccess};
  });
}

}  // namespace nqs::cli
