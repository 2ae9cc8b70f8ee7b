#include "bellunc/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace bellunc::report {

namespace {

void write(const Json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += Json(it.key()).dump();
                out += ": ";
                write(it.value(), depth + 1, out);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                write(v, depth + 1, out);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            out += std::isfinite(v) ? format_double(v) : "null";
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string dump(const Json& value) {
    std::string out;
    write(value, 0, out);
    out += '\n';
    return out;
}

Json to_json(const InequalityVerdict& v) {
    Json j;
    j["inequality"] = std::string(to_string(v.id));
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["margin"] = v.margin;
    j["violated"] = v.violated;
    j["tolerance"] = v.tolerance;
    return j;
}

Json to_json(const CorrelationProfile& p) {
    Json j;
    j["eAC"] = p.eAC;
    j["eAD"] = p.eAD;
    j["eBC"] = p.eBC;
    j["eBD"] = p.eBD;
    j["eAB"] = p.eAB;
    j["eCD"] = p.eCD;
    j["varA"] = p.varA;
    j["varB"] = p.varB;
    j["varC"] = p.varC;
    j["varD"] = p.varD;
    return j;
}

Json to_json(const geometry::Realizability& r) {
    Json j;
    j["realizable"] = r.realizable;
    j["dimension"] = r.dimension;
    j["realizable_in_3d"] = r.in_three_dimensions;
    j["eigenvalues"] = Json::array();
    for (double e : r.eigenvalues) j["eigenvalues"].push_back(e);
    return j;
}

Json angle_pair(std::span<const double> radians) {
    Json j;
    j["degrees"] = Json::array();
    j["radians"] = Json::array();
    for (double r : radians) {
        j["degrees"].push_back(radians_to_degrees(r));
        j["radians"].push_back(r);
    }
    return j;
}

double degrees_to_radians(double degrees) { return degrees * (std::numbers::pi / 180.0); }

double radians_to_degrees(double radians) { return radians * (180.0 / std::numbers::pi); }

bool Discrepancy::agrees() const {
    const double half_unit = 0.5 * std::pow(10.0, -published_decimals);
    return std::abs(computed_value - published_value) <= half_unit;
}

Json to_json(const Discrepancy& d) {
    Json j;
    j["location"] = d.location;
    j["published_value"] = d.published_value;
    j["computed_value"] = d.computed_value;
    j["difference"] = d.computed_value - d.published_value;
    j["agrees_at_printed_precision"] = d.agrees();
    return j;
}

}  // namespace bellunc::report
