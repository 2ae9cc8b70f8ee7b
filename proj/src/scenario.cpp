#include "bellunc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "json.hpp"

namespace bellunc::scenario {

namespace {

using Json = nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of "key" in the source, else 1.
std::size_t line_of_key(std::string_view text, std::string_view key) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto pos = text.find(quoted);
    return pos == std::string_view::npos ? 1 : line_of_offset(text, pos);
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(std::string_view key, const std::string& message) const {
        throw ScenarioError(line_of_key(text_, key), message);
    }

    double number(const Json& j, std::string_view key) const {
        if (!j.is_number()) fail(key, "field '" + std::string(key) + "' must be a number");
        const double v = j.get<double>();
        if (!std::isfinite(v)) fail(key, "field '" + std::string(key) + "' must be finite");
        return v;
    }

    std::vector<double> numbers(const Json& j, std::string_view key) const {
        if (!j.is_array()) fail(key, "field '" + std::string(key) + "' must be an array of numbers");
        std::vector<double> out;
        for (const auto& v : j) out.push_back(number(v, key));
        return out;
    }

    template <std::size_t N>
    std::array<double, N> fixed(const Json& j, std::string_view key) const {
        const auto v = numbers(j, key);
        if (v.size() != N)
            fail(key, "field '" + std::string(key) + "' must have " + std::to_string(N) + " entries, found " +
                          std::to_string(v.size()));
        std::array<double, N> out{};
        std::copy(v.begin(), v.end(), out.begin());
        return out;
    }

    void only_keys(const Json& obj, std::initializer_list<std::string_view> allowed) const {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
                fail(it.key(), "unknown field '" + it.key() + "'");
        }
    }

private:
    std::string_view text_;
};

CorrelationProfile read_profile(const Reader& r, const Json& j) {
    if (!j.is_object()) r.fail("profile", "field 'profile' must be an object");
    r.only_keys(j, {"eAC", "eAD", "eBC", "eBD", "eAB", "eCD", "varA", "varB", "varC", "varD"});
    CorrelationProfile p;
    const std::array<std::pair<const char*, double*>, 10> slots{{
        {"eAC", &p.eAC}, {"eAD", &p.eAD}, {"eBC", &p.eBC}, {"eBD", &p.eBD}, {"eAB", &p.eAB},
        {"eCD", &p.eCD}, {"varA", &p.varA}, {"varB", &p.varB}, {"varC", &p.varC}, {"varD", &p.varD},
    }};
    for (const auto& [name, dst] : slots) {
        if (!j.contains(name)) r.fail("profile", std::string("profile is missing field '") + name + "'");
        *dst = r.number(j.at(name), name);
    }
    try {
        validate(p);
    } catch (const InputError& e) {
        r.fail("profile", e.what());
    }
    return p;
}

lhv::LhvModel read_model(const Reader& r, const Json& j) {
    if (!j.is_object()) r.fail("model", "field 'model' must be an object");
    r.only_keys(j, {"weights", "A", "B", "C", "D", "bound"});
    for (const char* name : {"weights", "A", "B", "C", "D"})
        if (!j.contains(name)) r.fail("model", std::string("model is missing field '") + name + "'");
    auto weights = r.numbers(j.at("weights"), "weights");
    std::array<std::vector<double>, 4> tables{r.numbers(j.at("A"), "A"), r.numbers(j.at("B"), "B"),
                                              r.numbers(j.at("C"), "C"), r.numbers(j.at("D"), "D")};
    try {
        if (j.contains("bound"))
            return lhv::LhvModel(std::move(weights), std::move(tables), r.number(j.at("bound"), "bound"));
        return lhv::LhvModel::with_implied_bound(std::move(weights), std::move(tables));
    } catch (const ScenarioError&) {
        throw;
    } catch (const InputError& e) {
        r.fail("model", e.what());
    }
}

}  // namespace

ScenarioError::ScenarioError(std::size_t line, const std::string& message)
    : InputError("scenario line " + std::to_string(line) + ": " + message), line_(line) {}

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::Epr:
            return "epr";
        case Kind::Ghz:
            return "ghz";
        case Kind::Profile:
            return "profile";
        case Kind::Lhv:
            return "lhv";
    }
    return "unknown";
}

Scenario parse(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ScenarioError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
    const Reader r(text);
    if (!root.is_object()) throw ScenarioError(1, "scenario must be a JSON object");
    r.only_keys(root, {"kind", "inequality", "tolerance", "angles_deg", "vectors", "dot_products", "profile", "model"});

    Scenario s;
    if (!root.contains("kind") || !root.at("kind").is_string()) r.fail("kind", "field 'kind' must be a string");
    const std::string kind = root.at("kind").get<std::string>();
    if (kind == "epr")
        s.kind = Kind::Epr;
    else if (kind == "ghz")
        s.kind = Kind::Ghz;
    else if (kind == "profile")
        s.kind = Kind::Profile;
    else if (kind == "lhv")
        s.kind = Kind::Lhv;
    else
        r.fail("kind", "unknown kind '" + kind + "' (expected epr, ghz, profile or lhv)");

    if (root.contains("inequality")) {
        const Json& ij = root.at("inequality");
        if (!ij.is_string()) r.fail("inequality", "field 'inequality' must be a string");
        s.inequality = parse_inequality_id(ij.get<std::string>());
        if (!s.inequality) r.fail("inequality", "unknown inequality '" + ij.get<std::string>() + "'");
    }
    if (root.contains("tolerance")) {
        s.tolerance = r.number(root.at("tolerance"), "tolerance");
        if (*s.tolerance < 0.0) r.fail("tolerance", "tolerance must be >= 0");
    }

    std::vector<std::string> blocks;
    for (const char* name : {"angles_deg", "vectors", "dot_products", "profile", "model"})
        if (root.contains(name)) blocks.emplace_back(name);
    if (blocks.size() != 1)
        r.fail(blocks.empty() ? "kind" : blocks[1],
               "scenario must contain exactly one parameter block, found " + std::to_string(blocks.size()));
    const std::string& block = blocks.front();
    const std::set<std::string> allowed = [&]() -> std::set<std::string> {
        switch (s.kind) {
            case Kind::Epr:
                return {"angles_deg", "vectors", "dot_products"};
            case Kind::Ghz:
                return {"angles_deg"};
            case Kind::Profile:
                return {"profile"};
            case Kind::Lhv:
                return {"model"};
        }
        return {};
    }();
    if (!allowed.contains(block)) r.fail(block, "block '" + block + "' does not match kind '" + kind + "'");

    const Json& b = root.at(block);
    if (block == "angles_deg") {
        s.angles_deg = r.fixed<4>(b, block);
    } else if (block == "vectors") {
        if (!b.is_array() || b.size() != 4) r.fail(block, "field 'vectors' must hold four [x, y, z] triples");
        std::array<std::array<double, 3>, 4> v{};
        for (std::size_t i = 0; i < 4; ++i) v[i] = r.fixed<3>(b.at(i), block);
        s.vectors = v;
    } else if (block == "dot_products") {
        s.dot_products = r.fixed<6>(b, block);
    } else if (block == "profile") {
        s.profile = read_profile(r, b);
    } else {
        s.model = read_model(r, b);
    }
    return s;
}

}  // namespace bellunc::scenario
