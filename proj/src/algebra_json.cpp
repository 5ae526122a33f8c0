#include "liecurve/algebra_json.hpp"

#include <set>
#include <string>
#include <utility>

namespace liecurve {

namespace {

Index parse_index(const nlohmann::json& v, Index dim, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto i = v.get<long long>();
  if (i < 0 || i >= dim) throw ParseError(std::string(what) + " out of range: " + std::to_string(i));
  return static_cast<Index>(i);
}

}  // namespace

MetricLieAlgebra algebra_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("algebra document must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw ParseError("missing integer \"dim\"");
  const auto dim = doc["dim"].get<long long>();
  if (dim <= 0) throw ParseError("\"dim\" must be positive");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw ParseError("\"labels\" must be an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (!labels.empty() && static_cast<long long>(labels.size()) != dim)
      throw ParseError("label count does not match \"dim\"");
  }

  MetricLieAlgebra alg(static_cast<Index>(dim), std::move(labels));
  if (!doc.contains("brackets")) return alg;
  if (!doc["brackets"].is_array()) throw ParseError("\"brackets\" must be an array");

  std::set<std::pair<Index, Index>> seen;
  for (const auto& entry : doc["brackets"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j"))
      throw ParseError("bracket entries need \"i\" and \"j\"");
    const Index i = parse_index(entry["i"], alg.dim(), "\"i\"");
    const Index j = parse_index(entry["j"], alg.dim(), "\"j\"");
    if (i >= j) throw ParseError("bracket entries must have i < j");
    if (!seen.emplace(i, j).second) throw ParseError("duplicate bracket entry");

    Vector value = Vector::Zero(alg.dim());
    if (entry.contains("coeffs")) {
      const auto& coeffs = entry["coeffs"];
      if (!coeffs.is_object()) throw ParseError("\"coeffs\" must be an object");
      for (const auto& [key, c] : coeffs.items()) {
        Index k = 0;
        try {
          std::size_t used = 0;
          k = static_cast<Index>(std::stoll(key, &used));
          if (used != key.size()) throw ParseError("bad coefficient key");
        } catch (const std::logic_error&) {
          throw ParseError("coefficient key is not an integer: " + key);
        }
        if (k < 0 || k >= alg.dim()) throw ParseError("coefficient index out of range: " + key);
        if (!c.is_number()) throw ParseError("coefficients must be numbers");
        value[k] = c.get<double>();
      }
    }
    alg.set_bracket(i, j, value);
  }
  return alg;
}

nlohmann::json algebra_to_json(const MetricLieAlgebra& alg) {
  nlohmann::json doc;
  doc["dim"] = alg.dim();
  if (!alg.labels().empty()) doc["labels"] = alg.labels();
  auto brackets = nlohmann::json::array();
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = i + 1; j < alg.dim(); ++j) {
      nlohmann::json coeffs = nlohmann::json::object();
      for (Index k = 0; k < alg.dim(); ++k)
        if (alg.coeff(i, j, k) != 0.0) coeffs[std::to_string(k)] = alg.coeff(i, j, k);
      if (!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  doc["brackets"] = std::move(brackets);
  return doc;
}

}  // namespace liecurve
