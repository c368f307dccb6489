#include "dimjac/jacobi/serialize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>

#include "dimjac/errors.hpp"
#include "dimjac/jacobi/polynomial_parser.hpp"
#include "dimjac/measurand/unit_system.hpp"

namespace dimjac {

namespace {

const nlohmann::json& member(const nlohmann::json& j, const char* key,
                             const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw DocumentError(where + ": missing \"" + key + "\"");
  return j[key];
}

std::size_t index_value(const nlohmann::json& j, std::size_t n,
                        const std::string& where) {
  if (!j.is_number_integer())
    throw DocumentError(where + ": index must be an integer");
  auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw DocumentError(where + ": index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

Rational coefficient_value(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) {
    double d = j.get<double>();
    if (!std::isfinite(d)) throw DocumentError(where + ": non-finite coefficient");
    return decimal_rational(d);
  }
  throw DocumentError(where + ": coefficient must be a number or \"p/q\"");
}

}  // namespace

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", e}, {"coef", to_string(c)}});
  return terms;
}

Polynomial polynomial_from_json(const nlohmann::json& j,
                                std::span<const std::string> names) {
  std::size_t n = names.size();
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), names);
  if (!j.is_array())
    throw DocumentError("polynomial must be a term list or a string");
  Polynomial p(n);
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string where = "term " + std::to_string(k);
    const auto& exp = member(j[k], "exp", where);
    if (!exp.is_array() || exp.size() != n)
      throw DocumentError(where + ": \"exp\" must list " + std::to_string(n) +
                          " integers");
    Exponents e;
    for (const auto& x : exp) {
      if (!x.is_number_integer())
        throw DocumentError(where + ": exponents must be integers");
      auto v = x.get<long long>();
      if (v < -kMaxPolynomialDegree || v > kMaxPolynomialDegree)
        throw DocumentError(where + ": exponent out of range");
      e.push_back(static_cast<int>(v));
    }
    p += Polynomial::monomial(n, e, coefficient_value(member(j[k], "coef", where), where));
  }
  return p;
}

nlohmann::json structure_to_json(const LichnerowiczStructure& l) {
  nlohmann::json pi = nlohmann::json::array(), r = nlohmann::json::array();
  for (const auto& [mask, f] : l.pi().components()) {
    std::vector<int> ij;
    for (auto rest = mask; rest; rest &= rest - 1) ij.push_back(std::countr_zero(rest));
    pi.push_back({{"ij", ij}, {"poly", polynomial_to_json(f)}});
  }
  for (const auto& [mask, f] : l.r().components())
    r.push_back({{"i", std::countr_zero(mask)}, {"poly", polynomial_to_json(f)}});
  return {{"n", l.dimension()}, {"vars", l.names()}, {"pi", pi}, {"r", r}};
}

LichnerowiczStructure structure_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DocumentError("structure must be a JSON object");
  const auto& nj = member(j, "n", "structure");
  if (!nj.is_number_integer() || nj.get<long long>() < 0 ||
      nj.get<long long>() > static_cast<long long>(MultiVector::kMaxDimension))
    throw DocumentError("structure: \"n\" must be an integer in [0, " +
                        std::to_string(MultiVector::kMaxDimension) + "]");
  std::size_t n = nj.get<std::size_t>();
  std::vector<std::string> names = default_names(n);
  if (j.contains("vars")) {
    const auto& vars = j["vars"];
    if (!vars.is_array() || vars.size() != n)
      throw DocumentError("structure: \"vars\" must list " + std::to_string(n) +
                          " names");
    names.clear();
    for (const auto& v : vars) {
      if (!v.is_string()) throw DocumentError("structure: variable names must be strings");
      std::string name = v.get<std::string>();
      if (!is_unit_identifier(name))
        throw DocumentError("structure: '" + name + "' is not a valid variable name");
      if (std::find(names.begin(), names.end(), name) != names.end())
        throw DocumentError("structure: variable '" + name + "' listed twice");
      names.push_back(name);
    }
  }
  MultiVector pi(n, 2), r(n, 1);
  if (j.contains("pi")) {
    const auto& list = j["pi"];
    if (!list.is_array()) throw DocumentError("structure: \"pi\" must be an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::string where = "pi[" + std::to_string(k) + "]";
      const auto& ij = member(list[k], "ij", where);
      if (!ij.is_array() || ij.size() != 2)
        throw DocumentError(where + ": \"ij\" must be a pair of indices");
      std::size_t i = index_value(ij[0], n, where), jj = index_value(ij[1], n, where);
      if (i == jj) throw DocumentError(where + ": \"ij\" indices must differ");
      const std::size_t idx[] = {i, jj};
      pi = pi + MultiVector::basis(n, idx, polynomial_from_json(member(list[k], "poly", where), names));
    }
  }
  if (j.contains("r")) {
    const auto& list = j["r"];
    if (!list.is_array()) throw DocumentError("structure: \"r\" must be an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::string where = "r[" + std::to_string(k) + "]";
      const std::size_t idx[] = {index_value(member(list[k], "i", where), n, where)};
      r = r + MultiVector::basis(n, idx, polynomial_from_json(member(list[k], "poly", where), names));
    }
  }
  return LichnerowiczStructure(pi, r, names);
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError("'" + path.string() + "': " + e.what());
  }
}

LichnerowiczStructure load_structure(const std::filesystem::path& path) {
  return structure_from_json(read_json_file(path));
}

}  // namespace dimjac
