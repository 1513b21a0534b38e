#include "metab/serialize.hpp"

#include "metab/errors.hpp"
#include "metab/parse.hpp"

namespace metab {

nlohmann::json endo_to_json(const IAEndomorphism &phi) {
  nlohmann::json obj = nlohmann::json::object();
  for (int j = 0; j < phi.config().rank; ++j)
    obj["y" + std::to_string(j + 1)] = phi.image(j).str();
  return obj;
}

IAEndomorphism endo_from_json(const std::string &src,
                              const AlgebraConfig &cfg) {
  if (src == "identity")
    return IAEndomorphism::identity(cfg);
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(src);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!obj.is_object())
    throw ParseError("endomorphism must be a JSON object or \"identity\"", 0);

  std::vector<LieElement> deltas(static_cast<std::size_t>(cfg.rank),
                                 LieElement(cfg));
  for (const auto &[key, value] : obj.items()) {
    if (key.size() < 2 || key[0] != 'y')
      throw ParseError("endomorphism keys must be \"y1\"..\"ym\"", 0);
    int j = std::stoi(key.substr(1)) - 1;
    if (j < 0 || j >= cfg.rank)
      throw ParseError("generator key out of range: " + key, 0);
    if (!value.is_string())
      throw ParseError("image of " + key + " must be an expression string", 0);
    LieElement delta =
        parse_lie(value.get<std::string>(), cfg) - LieElement::generator(cfg, j);
    if (delta.has_linear_part())
      throw DomainError("image of " + key +
                        " is not an IA image (linear part differs from " + key +
                        ")");
    deltas[static_cast<std::size_t>(j)] = std::move(delta);
  }
  return IAEndomorphism(cfg, std::move(deltas));
}

nlohmann::json matrix_to_json(const JacobianMatrix &M) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < M.config().rank; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < M.config().rank; ++j)
      row.push_back(M.entry(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json trace_to_json(const ReductionTrace &trace) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto &u : trace.inner_generators)
    gens.push_back(u.str());
  return nlohmann::json{{"inner_generators", std::move(gens)},
                        {"combined_inner", trace.combined_inner.str()},
                        {"theta", endo_to_json(trace.canonical.theta)}};
}

} // namespace metab
