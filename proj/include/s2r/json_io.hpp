#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "s2r/ideal.hpp"
#include "s2r/localization.hpp"
#include "s2r/spectrum.hpp"

namespace s2r {

/// Malformed ring file (CLI exit code 3).
struct RingFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json ring_to_json(const GradedRing& R);
GradedRing ring_from_json(const nlohmann::json& j);

nlohmann::json mor_to_json(const TwoRing& t, const Mor& m);
nlohmann::json ideal_to_json(const Ideal& ideal);

nlohmann::json spec_to_json(const SpecSpace& sp);
std::string spec_to_dot(const SpecSpace& sp);

nlohmann::json localization_to_json(const Localization& L);

/// Table { prime -> rho(sigma(prime)) }.
nlohmann::json rho_table_to_json(const TwoRing& t);

/// Parses "combo:src->tgt", e.g. "x:0->1", "e1:()->()", "2th:1->0".
Mor parse_morphism(const TwoRing& t, const std::string& selector);

}  // namespace s2r
