#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dimjac/measurand/dim_vector.hpp"
#include "dimjac/measurand/line.hpp"
#include "dimjac/measurand/rational.hpp"

namespace dimjac {

/// A base measurand together with the unit chosen on its line.
struct BaseUnit {
  std::string name;    // measurand label, e.g. "V"
  std::string symbol;  // unit symbol, e.g. "L"
  /// The unit as an element of the measurand line. Two systems over the
  /// same measurand space are related through ratios of these elements.
  LineElement<Rational> unit;
};

struct DerivedUnit {
  std::string symbol;
  DimVector dim;
  Rational scale;  // magnitude in the system's base units
};

/// What a unit symbol denotes inside one system.
struct UnitMeaning {
  DimVector dim;
  Rational scale;
};

/// A choice of units for a measurand space (L_1, ..., L_k): one base unit per
/// line plus named derived units. The induced splitting g -> (1, g) is
/// multiplicative by construction, so quantities are stored as a magnitude in
/// base units and a DimVector.
class UnitSystem {
 public:
  struct BaseSpec {
    std::string name;
    std::string symbol;
    Rational scale{1};  // coefficient on the measurand line
  };

  UnitSystem(std::vector<BaseSpec> base, std::vector<DerivedUnit> derived);

  static UnitSystem from_json(const nlohmann::json& document);
  static UnitSystem load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  std::size_t rank() const noexcept { return base_.size(); }
  const std::vector<BaseUnit>& base() const noexcept { return base_; }
  const std::vector<DerivedUnit>& derived() const noexcept { return derived_; }
  std::vector<std::string> base_names() const;

  /// Resolves a base or derived symbol (case-sensitive).
  std::optional<UnitMeaning> find(std::string_view symbol) const;

  bool same_measurand_space(const UnitSystem& other) const;

  /// Factor f such that a magnitude m expressed in this system's units for
  /// dimension `dim` equals m * f in `target`'s units. Throws
  /// IncompatibleSystems when the measurand spaces differ.
  Rational conversion_factor(const DimVector& dim,
                             const UnitSystem& target) const;

  /// Dimension rendered with base measurand names, e.g. "P·V/N"; "1" when
  /// dimensionless.
  std::string render_dim(const DimVector& dim) const;

  /// Same system with every base line's hidden generator multiplied by the
  /// corresponding lambda. Observable behaviour must not change.
  UnitSystem with_rescaled_generators(std::span<const Rational> lambdas) const;

  bool operator==(const UnitSystem& other) const;

 private:
  UnitSystem() = default;
  void index_symbols();

  std::vector<BaseUnit> base_;
  std::vector<DerivedUnit> derived_;
  std::map<std::string, UnitMeaning, std::less<>> symbols_;
};

using UnitSystemPtr = std::shared_ptr<const UnitSystem>;

/// True when `symbol` is a valid unit identifier for the quantity language.
bool is_unit_identifier(std::string_view symbol);

}  // namespace dimjac
