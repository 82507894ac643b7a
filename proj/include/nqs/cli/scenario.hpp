#pragma once

#include <nqs/representations.hpp>

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nqs::cli {

/// Malformed or unreadable input; maps to exit status 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StateKind { Pure, Conventional, Biorthogonal, Lowdin, Probs };

std::string_view to_string(StateKind kind) noexcept;
std::optional<StateKind> state_kind_from(std::string_view name) noexcept;

/// Basis and state as read from disk, before any domain validation.
///
///   { "dim": 2,
///     "gram": [[{"re":1,"im":0}, {"re":0.5,"im":0}], ...],
///     "state": { "pure": [{"re":..,"im":..}, ...] } }
///
/// `state` holds exactly one of pure | conventional | biorthogonal |
/// lowdin | probs.
struct Scenario {
  int dim = 0;
  CMatrix gram;
  StateKind kind = StateKind::Pure;
  CVector amps;               // Pure
  CMatrix matrix;             // Conventional, Biorthogonal, Lowdin
  std::vector<double> probs;  // Probs
};

Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::filesystem::path& path);
nlohmann::json to_json(const Scenario& scenario);

nlohmann::json complex_to_json(Complex z);
nlohmann::json matrix_to_json(const CMatrix& m);
nlohmann::json vector_to_json(const CVector& v);

/// Validated basis; throws nqs::Error.
BasisPtr scenario_basis(const Scenario& scenario);

/// The scenario's state in conventional form, validated against `basis`.
ConventionalRep scenario_state(const Scenario& scenario, const BasisPtr& basis);

}  // namespace nqs::cli
