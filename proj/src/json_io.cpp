#include "qsnake/json_io.hpp"

#include "qsnake/errors.hpp"

#include <limits>

namespace qsnake {

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw DomainError("not an integer: " + j.dump());
    }
  }
  throw DomainError("expected an integer, got " + j.dump());
}

nlohmann::json to_json(const QLaurent& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, bigint_to_json(c)});
  return out;
}

QLaurent qlaurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("q-polynomial must be a list of [exponent, coefficient] pairs");
  std::vector<std::pair<int, BigInt>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) throw DomainError("bad q-polynomial term " + t.dump());
    terms.emplace_back(t[0].get<int>(), bigint_from_json(t[1]));
  }
  return QLaurent::from_terms(terms);
}

nlohmann::json to_json(const TorusElement& x) {
  nlohmann::json out;
  out["m"] = x.dim();
  out["lambda"] = x.lambda() ? nlohmann::json(x.lambda()->rows()) : nlohmann::json::array();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [a, c] : x.terms()) terms.push_back({{"exp", a}, {"coeff", to_json(c)}});
  out["terms"] = std::move(terms);
  return out;
}

TorusElement torus_from_json(const nlohmann::json& j) {
  try {
    const int m = j.at("m").get<int>();
    auto lambda = std::make_shared<const SkewMatrix>(j.at("lambda").get<std::vector<std::vector<int>>>());
    if (lambda->dim() != m) throw DimensionMismatch("lambda dimension does not match m");
    TorusElement x(lambda);
    for (const auto& t : j.at("terms")) {
      const Exponent a = t.at("exp").get<Exponent>();
      if (static_cast<int>(a.size()) != m) throw DimensionMismatch("exponent length does not match m");
      x.add_term(a, qlaurent_from_json(t.at("coeff")));
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed torus element: ") + e.what());
  }
}

}  // namespace qsnake
