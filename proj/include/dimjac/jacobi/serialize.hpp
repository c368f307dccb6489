#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "json.hpp"

#include "dimjac/jacobi/lichnerowicz.hpp"

namespace dimjac {

/// [{"exp":[...],"coef":"p/q"}, ...] in the polynomial's term order.
nlohmann::json polynomial_to_json(const Polynomial& p);
/// Accepts a term list or polynomial text over `names`.
Polynomial polynomial_from_json(const nlohmann::json& j,
                                std::span<const std::string> names);

/// {"n":..,"vars":[..],"pi":[{"ij":[i,j],"poly":..}],"r":[{"i":i,"poly":..}]}
nlohmann::json structure_to_json(const LichnerowiczStructure& l);
LichnerowiczStructure structure_from_json(const nlohmann::json& j);
LichnerowiczStructure load_structure(const std::filesystem::path& path);

/// Reads a whole JSON document; IoError when unreadable, DocumentError when
/// malformed.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace dimjac
