#pragma once

// JSON report building blocks. Reports are written with every floating-point
// value at 17 significant digits so 64-bit values round-trip exactly.

#include <string>

#include "json.hpp"

#include "bellunc/geometry.hpp"
#include "bellunc/inequalities.hpp"
#include "bellunc/profile.hpp"

namespace bellunc::report {

using Json = nlohmann::ordered_json;

// "%.17g"
std::string format_double(double value);

// Pretty-printed JSON (2-space indent, trailing newline) with 17-digit floats.
std::string dump(const Json& value);

Json to_json(const InequalityVerdict& verdict);
Json to_json(const CorrelationProfile& profile);
Json to_json(const geometry::Realizability& r);

// {"degrees": [...], "radians": [...]}
Json angle_pair(std::span<const double> radians);

double degrees_to_radians(double degrees);
double radians_to_degrees(double radians);

// A published figure next to the value this code computes for it.
struct Discrepancy {
    std::string location;
    double published_value = 0.0;
    int published_decimals = 0;  // digits after the point as printed
    double computed_value = 0.0;

    // True iff the computed value rounds to the printed figure.
    bool agrees() const;
};

Json to_json(const Discrepancy& d);

}  // namespace bellunc::report
