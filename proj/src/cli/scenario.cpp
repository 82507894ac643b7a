#include <nqs/cli/scenario.hpp>

#include <fstream>

namespace nqs::cli {

using nlohmann::json;

namespace {

Complex parse_complex(const json& v, const std::string& where) {
  if (!v.is_object() || !v.contains("re") || !v.contains("im") || !v.at("re").is_number() || !v.at("im").is_number())
    throw ParseError(where + ": expected {\"re\": number, \"im\": number}");
  return {v.at("re").get<double>(), v.at("im").get<double>()};
}

CVector parse_complex_vector(const json& v, int dim, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw ParseError(where + ": expected an array of " + std::to_string(dim) + " complex entries");
  CVector out(dim);
  for (int i = 0; i < dim; ++i) out(i) = parse_complex(v[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
  return out;
}

CMatrix parse_complex_matrix(const json& v, int dim, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
  CMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    out.row(i) = parse_complex_vector(v[static_cast<std::size_t>(i)], dim, row_where).transpose();
  }
  return out;
}

}  // namespace

std::string_view to_string(StateKind kind) noexcept {
  switch (kind) {
    case StateKind::Pure:
      return "pure";
    case StateKind::Conventional:
      return "conventional";
    case StateKind::Biorthogonal:
      return "biorthogonal";
    case StateKind::Lowdin:
      return "lowdin";
    case StateKind::Probs:
      return "probs";
  }
  return "unknown";
}

std::optional<StateKind> state_kind_from(std::string_view name) noexcept {
  for (StateKind k : {StateKind::Pure, StateKind::Conventional, StateKind::Biorthogonal, StateKind::Lowdin,
                      StateKind::Probs})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object");
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer()) throw ParseError("missing integer field \"dim\"");
  Scenario sc;
  sc.dim = doc.at("dim").get<int>();
  if (sc.dim < 1) throw ParseError("\"dim\" must be at least 1");
  if (!doc.contains("gram")) throw ParseError("missing field \"gram\"");
  sc.gram = parse_complex_matrix(doc.at("gram"), sc.dim, "gram");

  if (!doc.contains("state") || !doc.at("state").is_object()) throw ParseError("missing object field \"state\"");
  const json& state = doc.at("state");
  if (state.size() != 1) throw ParseError("\"state\" must hold exactly one variant");
  const auto kind = state_kind_from(state.begin().key());
  if (!kind) throw ParseError("unknown state variant \"" + state.begin().key() + "\"");
  sc.kind = *kind;
  const json& body = state.begin().value();
  switch (sc.kind) {
    case StateKind::Pure:
      sc.amps = parse_complex_vector(body, sc.dim, "state.pure");
      break;
    case StateKind::Probs:
      if (!body.is_array() || static_cast<int>(body.size()) != sc.dim)
        throw ParseError("state.probs: expected " + std::to_string(sc.dim) + " numbers");
      for (const json& p : body) {
        if (!p.is_number()) throw ParseError("state.probs: entries must be numbers");
        sc.probs.push_back(p.get<double>());
      }
      break;
    default:
      sc.matrix = parse_complex_matrix(body, sc.dim, "state." + std::string(to_string(sc.kind)));
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_scenario(doc);
}

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json vector_to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

json matrix_to_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i).transpose()));
  return out;
}

json to_json(const Scenario& sc) {
  json body;
  switch (sc.kind) {
    case StateKind::Pure:
      body = vector_to_json(sc.amps);
      break;
    case StateKind::Probs:
      body = sc.probs;
      break;
    default:
      body = matrix_to_json(sc.matrix);
  }
  return json{{"dim", sc.dim}, {"gram", matrix_to_json(sc.gram)}, {"state", {{std::string(to_string(sc.kind)), body}}}};
}

BasisPtr scenario_basis(const Scenario& sc) { return new_gram(sc.gram); }

ConventionalRep scenario_state(const Scenario& sc, const BasisPtr& basis) {
  switch (sc.kind) {
    case StateKind::Pure:
      return from_pure(PureState::make(basis, sc.amps));
    case StateKind::Probs:
      return superposition_free(sc.probs, basis);
    case StateKind::Conventional:
      return ConventionalRep::make(basis, sc.matrix);
    case StateKind::Biorthogonal:
      return ConventionalRep::make(basis, bio_to_conv(BiorthogonalRep::make(basis, sc.matrix)).mat());
    case StateKind::Lowdin:
      return ConventionalRep::make(basis, lowdin_to_conv(LowdinRep::make(basis, sc.matrix)).mat());
  }
  throw ParseError("unknown state variant");
}

}  // namespace nqs::cli
