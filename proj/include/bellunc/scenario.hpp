#pragma once

// Scenario files: one evaluation request in JSON.
//
//   {"kind": "epr", "inequality": "general", "tolerance": 1e-9,
//    "angles_deg": [a, b, c, d]}                     planar directions, or
//    "vectors": [[x,y,z], [x,y,z], [x,y,z], [x,y,z]],  or
//    "dot_products": [ab, ac, ad, bc, bd, cd]
//   {"kind": "ghz", "inequality": "ghz_general", "angles_deg": [al, be, ga, de]}
//   {"kind": "profile", "inequality": "general",
//    "profile": {"eAC":..,"eAD":..,"eBC":..,"eBD":..,"eAB":..,"eCD":..,
//                "varA":..,"varB":..,"varC":..,"varD":..}}
//   {"kind": "lhv", "inequality": "dispersion_free",
//    "model": {"weights": [...], "A": [...], "B": [...], "C": [...], "D": [...],
//              "bound": M}}                         bound optional
//
// Exactly one parameter block, matching `kind`, must be present.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "bellunc/errors.hpp"
#include "bellunc/inequalities.hpp"
#include "bellunc/lhv.hpp"
#include "bellunc/profile.hpp"

namespace bellunc::scenario {

// Malformed or invalid scenario text. `line` is 1-based.
class ScenarioError : public InputError {
public:
    ScenarioError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class Kind { Epr, Ghz, Profile, Lhv };

std::string_view to_string(Kind kind);

struct Scenario {
    Kind kind = Kind::Profile;
    std::optional<InequalityId> inequality;
    std::optional<double> tolerance;
    std::optional<std::array<double, 4>> angles_deg;
    std::optional<std::array<std::array<double, 3>, 4>> vectors;
    std::optional<std::array<double, 6>> dot_products;
    std::optional<CorrelationProfile> profile;
    std::optional<lhv::LhvModel> model;
};

Scenario parse(std::string_view text);

}  // namespace bellunc::scenario
