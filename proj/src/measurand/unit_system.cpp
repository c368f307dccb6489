#include "dimjac/measurand/unit_system.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "dimjac/errors.hpp"
#include "dimjac/measurand/utf8.hpp"

namespace dimjac {

namespace {

Rational scale_from_json(const nlohmann::json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_number()) {
    double d = value.get<double>();
    if (!std::isfinite(d)) throw DocumentError(where + ": non-finite scale");
    return decimal_rational(d);
  }
  throw DocumentError(where + ": scale must be a number or a \"p/q\" string");
}

const nlohmann::json& require(const nlohmann::json& object, const char* key,
                              const std::string& where) {
  if (!object.is_object() || !object.contains(key))
    throw DocumentError(where + ": missing \"" + key + "\"");
  return object.at(key);
}

std::string require_string(const nlohmann::json& object, const char* key,
                           const std::string& where) {
  const auto& v = require(object, key, where);
  if (!v.is_string())
    throw DocumentError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

bool is_unit_identifier(std::string_view symbol) {
  std::size_t pos = 0;
  bool first = true;
  while (pos < symbol.size()) {
    auto d = utf8::decode(symbol, pos);
    if (!d) return false;
    if (first ? !utf8::is_identifier_start(d->code_point)
              : !utf8::is_identifier_continue(d->code_point))
      return false;
    first = false;
    pos += d->length;
  }
  return !first;
}

UnitSystem::UnitSystem(std::vector<BaseSpec> base,
                       std::vector<DerivedUnit> derived) {
  std::set<std::string> names;
  for (auto& spec : base) {
    if (spec.name.empty())
      throw InvalidArgument("base measurand name must not be empty");
    if (!names.insert(spec.name).second)
      throw InvalidArgument("duplicate base measurand '" + spec.name + "'");
    if (spec.scale <= 0)
      throw InvalidArgument("base unit '" + spec.symbol +
                            "' must have a positive scale");
    Line line(spec.name);
    base_.push_back(
        BaseUnit{spec.name, spec.symbol, line.reference<Rational>() * spec.scale});
  }
  for (auto& unit : derived) {
    if (unit.dim.rank() != base_.size())
      throw InvalidArgument("derived unit '" + unit.symbol + "' has dimension " +
                            unit.dim.to_string() + " but the system has rank " +
                            std::to_string(base_.size()));
    if (unit.scale <= 0)
      throw InvalidArgument("derived unit '" + unit.symbol +
                            "' must have a positive scale");
  }
  derived_ = std::move(derived);
  index_symbols();
}

void UnitSystem::index_symbols() {
  symbols_.clear();
  auto add = [&](const std::string& symbol, UnitMeaning meaning) {
    if (!is_unit_identifier(symbol))
      throw InvalidArgument("'" + symbol + "' is not a valid unit symbol");
    if (!symbols_.emplace(symbol, std::move(meaning)).second)
      throw InvalidArgument("unit symbol '" + symbol + "' registered twice");
  };
  for (std::size_t i = 0; i < base_.size(); ++i)
    add(base_[i].symbol, UnitMeaning{DimVector::axis(rank(), i), Rational(1)});
  for (const auto& unit : derived_)
    add(unit.symbol, UnitMeaning{unit.dim, unit.scale});
}

UnitSystem UnitSystem::from_json(const nlohmann::json& document) {
  if (!document.is_object())
    throw DocumentError("unit system document must be a JSON object");
  const auto& base_json = require(document, "base", "unit system");
  if (!base_json.is_array())
    throw DocumentError("unit system: \"base\" must be an array");
  std::vector<BaseSpec> base;
  for (std::size_t i = 0; i < base_json.size(); ++i) {
    std::string where = "base[" + std::to_string(i) + "]";
    const auto& entry = base_json[i];
    BaseSpec spec{require_string(entry, "name", where),
                  require_string(entry, "symbol", where), Rational(1)};
    if (entry.contains("scale")) spec.scale = scale_from_json(entry["scale"], where);
    base.push_back(std::move(spec));
  }
  std::vector<DerivedUnit> derived;
  if (document.contains("derived")) {
    const auto& derived_json = document["derived"];
    if (!derived_json.is_array())
      throw DocumentError("unit system: \"derived\" must be an array");
    for (std::size_t i = 0; i < derived_json.size(); ++i) {
      std::string where = "derived[" + std::to_string(i) + "]";
      const auto& entry = derived_json[i];
      std::string symbol = require_string(entry, "symbol", where);
      const auto& dim_json = require(entry, "dim", where);
      if (!dim_json.is_array())
        throw DocumentError(where + ": \"dim\" must be an array of integers");
      std::vector<int> exponents;
      for (const auto& e : dim_json) {
        if (!e.is_number_integer())
          throw DocumentError(where + ": \"dim\" must be an array of integers");
        exponents.push_back(e.get<int>());
      }
      derived.push_back(DerivedUnit{
          std::move(symbol), DimVector(std::move(exponents)),
          scale_from_json(require(entry, "scale", where), where)});
    }
  }
  return UnitSystem(std::move(base), std::move(derived));
}

UnitSystem UnitSystem::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open unit system '" + path.string() + "'");
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError("'" + path.string() + "': " + e.what());
  }
  return from_json(document);
}

nlohmann::json UnitSystem::to_json() const {
  nlohmann::json base = nlohmann::json::array();
  for (const auto& b : base_) {
    Line plain(b.name);
    base.push_back({{"name", b.name},
                    {"symbol", b.symbol},
                    {"scale", to_string(ratio(b.unit, plain.reference<Rational>().on(b.unit.line())))}});
  }
  nlohmann::json derived = nlohmann::json::array();
  for (const auto& d : derived_) {
    std::vector<int> dim(d.dim.exponents().begin(), d.dim.exponents().end());
    derived.push_back(
        {{"symbol", d.symbol}, {"dim", dim}, {"scale", to_string(d.scale)}});
  }
  return {{"base", base}, {"derived", derived}};
}

std::vector<std::string> UnitSystem::base_names() const {
  std::vector<std::string> names;
  for (const auto& b : base_) names.push_back(b.name);
  return names;
}

std::optional<UnitMeaning> UnitSystem::find(std::string_view symbol) const {
  auto it = symbols_.find(symbol);
  if (it == symbols_.end()) return std::nullopt;
  return it->second;
}

bool UnitSystem::same_measurand_space(const UnitSystem& other) const {
  return base_names() == other.base_names();
}

Rational UnitSystem::conversion_factor(const DimVector& dim,
                                       const UnitSystem& target) const {
  if (!same_measurand_space(target))
    throw IncompatibleSystems("unit systems over different measurand spaces");
  if (dim.rank() != rank())
    throw DimensionMismatch("dimension " + dim.to_string() +
                            " does not belong to a rank-" +
                            std::to_string(rank()) + " system");
  Rational factor(1);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (dim[i] == 0) continue;
    // One source unit is ratio(source, target) target units.
    Rational per_axis = ratio(base_[i].unit, target.base_[i].unit);
    factor *= pow(per_axis, dim[i]);
  }
  return factor;
}

std::string UnitSystem::render_dim(const DimVector& dim) const {
  if (dim.rank() != rank()) return dim.to_string();
  std::string numerator, denominator;
  for (std::size_t i = 0; i < rank(); ++i) {
    int e = dim[i];
    if (e == 0) continue;
    std::string factor = base_[i].name;
    int magnitude = e < 0 ? -e : e;
    if (magnitude != 1) factor += "^" + std::to_string(magnitude);
    if (e > 0) {
      if (!numerator.empty()) numerator += "·";
      numerator += factor;
    } else {
      denominator += "/" + factor;
    }
  }
  if (numerator.empty()) numerator = "1";
  return numerator + denominator;
}

UnitSystem UnitSystem::with_rescaled_generators(
    std::span<const Rational> lambdas) const {
  if (lambdas.size() != rank())
    throw InvalidArgument("one rescaling factor per base line is required");
  UnitSystem copy = *this;
  for (std::size_t i = 0; i < rank(); ++i) {
    Line regauged = base_[i].unit.line().rescaled(lambdas[i]);
    copy.base_[i].unit = base_[i].unit.on(regauged);
  }
  return copy;
}

bool UnitSystem::operator==(const UnitSystem& other) const {
  if (rank() != other.rank() || derived_.size() != other.derived_.size())
    return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto& a = base_[i];
    const auto& b = other.base_[i];
    if (a.name != b.name || a.symbol != b.symbol) return false;
    if (ratio(a.unit, b.unit) != 1) return false;
  }
  for (std::size_t i = 0; i < derived_.size(); ++i) {
    const auto& a = derived_[i];
    const auto& b = other.derived_[i];
    if (a.symbol != b.symbol || a.dim != b.dim || a.scale != b.scale)
      return false;
  }
  return true;
}

}  // namespace dimjac
