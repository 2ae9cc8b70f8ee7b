// bellunc: evaluate uncertainty-augmented Bell-like inequalities from the
// command line.
//
//   bellunc reproduce epr|ghz
//   bellunc evaluate --scenario FILE [--inequality ID] [--tolerance T]
//   bellunc search --inequality ID --space SPACE [--resolution DEG] [--refine]
//   bellunc lhv-check [--models N] [--points K] [--bound M] [--seed S]
//   bellunc sweep --inequality ID --space SPACE --base D,D,D,D --axis I
//                 --range LO:HI --steps N [--format csv|json] [--out FILE]
//
// Exit codes: 0 success, 1 input error, 2 numeric or property failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bellunc/commands.hpp"
#include "bellunc/errors.hpp"
#include "bellunc/report.hpp"
#include "bellunc/scenario.hpp"

namespace {

using namespace bellunc;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;

InequalityId require_inequality(const std::string& name) {
    const auto id = parse_inequality_id(name);
    if (!id) throw InputError("unknown inequality '" + name + "'");
    return *id;
}

search::SpaceKind require_space(const std::string& name) {
    const auto kind = search::parse_space_kind(name);
    if (!kind) throw InputError("unknown space '" + name + "' (expected planar-epr, ghz-angles or vectors3d)");
    return *kind;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InputError("--range must look like LO:HI");
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo_text = text.substr(0, colon);
        const std::string hi_text = text.substr(colon + 1);
        const double lo = std::stod(lo_text, &used_lo);
        const double hi = std::stod(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument("trailing text");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InputError("--range must look like LO:HI with numeric bounds, got '" + text + "'");
    }
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument("trailing text");
        } catch (const std::logic_error&) {
            throw InputError("--base expects comma-separated numbers, got '" + text + "'");
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read scenario file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
    out.flush();
    if (!out) throw InputError("failed writing '" + out_path + "'");
}

void require_json(const std::string& format, const char* command) {
    if (format != "json") throw InputError(std::string(command) + " only supports --format json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uncertainty-augmented Bell-like inequalities: evaluation, search and LHV checks"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "json";
    std::optional<double> tolerance;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "Write output to PATH instead of stdout");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tolerance", tolerance, "Violation tolerance (default 1e-9)");
    };

    auto* reproduce = app.add_subcommand("reproduce", "Evaluate the published EPR or GHZ example");
    std::string target;
    reproduce->add_option("target", target, "epr or ghz")->required();
    add_common(reproduce);

    auto* evaluate = app.add_subcommand("evaluate", "Evaluate a scenario file");
    std::string scenario_path;
    std::string inequality_name;
    evaluate->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    evaluate->add_option("--inequality", inequality_name, "Override the scenario's inequality");
    add_common(evaluate);

    auto* search_cmd = app.add_subcommand("search", "Grid search (and optional refinement) for the maximum margin");
    std::string space_name;
    double resolution_deg = 5.0;
    bool refine = false;
    unsigned threads = 0;
    search_cmd->add_option("--inequality", inequality_name, "Inequality id")->required();
    search_cmd->add_option("--space", space_name, "planar-epr | ghz-angles | vectors3d")->required();
    search_cmd->add_option("--resolution", resolution_deg, "Lattice step in degrees (default 5)");
    search_cmd->add_flag("--refine", refine, "Compass-refine from the grid optimum");
    search_cmd->add_option("--threads", threads, "Worker threads (0 = all cores); does not affect results");
    add_common(search_cmd);

    auto* lhv_cmd = app.add_subcommand("lhv-check", "Check the general inequality on random LHV models");
    commands::LhvCheckRequest lhv_request;
    lhv_cmd->add_option("--models", lhv_request.models, "Number of models (default 10000)");
    lhv_cmd->add_option("--points", lhv_request.points, "Hidden-variable points per model (default 8)");
    lhv_cmd->add_option("--bound", lhv_request.bound, "Table values drawn from [-M, M] (default 5)");
    lhv_cmd->add_option("--seed", lhv_request.seed, "First model seed (default 0)");
    add_common(lhv_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one coordinate and emit lhs/rhs/margin");
    std::string base_text;
    std::size_t axis = 0;
    std::string range_text = "0:180";
    std::size_t steps = 181;
    sweep_cmd->add_option("--inequality", inequality_name, "Inequality id")->required();
    sweep_cmd->add_option("--space", space_name, "planar-epr | ghz-angles | vectors3d")->required();
    sweep_cmd->add_option("--base", base_text, "Base point in degrees, comma separated")->required();
    sweep_cmd->add_option("--axis", axis, "Coordinate index to sweep")->required();
    sweep_cmd->add_option("--range", range_text, "LO:HI in degrees (default 0:180)");
    sweep_cmd->add_option("--steps", steps, "Number of samples, >= 2 (default 181)");
    add_common(sweep_cmd);
    sweep_cmd->get_option("--format")->default_str("csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        const double tol = tolerance.value_or(kDefaultViolationTolerance);
        if (reproduce->parsed()) {
            require_json(format, "reproduce");
            if (target != "epr" && target != "ghz") throw InputError("reproduce target must be epr or ghz");
            emit(report::dump(commands::reproduce(target == "epr" ? commands::Target::Epr : commands::Target::Ghz)),
                 out_path);
        } else if (evaluate->parsed()) {
            require_json(format, "evaluate");
            const auto s = scenario::parse(read_file(scenario_path));
            std::optional<InequalityId> id;
            if (!inequality_name.empty()) id = require_inequality(inequality_name);
            emit(report::dump(commands::evaluate(s, id, tolerance)), out_path);
        } else if (search_cmd->parsed()) {
            require_json(format, "search");
            commands::SearchRequest r;
            r.inequality = require_inequality(inequality_name);
            r.space = require_space(space_name);
            r.resolution_deg = resolution_deg;
            r.refine = refine;
            r.threads = threads;
            r.tolerance = tol;
            emit(report::dump(commands::run_search(r)), out_path);
        } else if (lhv_cmd->parsed()) {
            require_json(format, "lhv-check");
            lhv_request.tolerance = tol;
            const auto outcome = commands::lhv_check(lhv_request);
            emit(report::dump(outcome.report), out_path);
            if (!outcome.passed) {
                std::cerr << "lhv-check: general inequality violated by an LHV model (implementation bug)\n";
                return kExitNumeric;
            }
        } else if (sweep_cmd->parsed()) {
            if (sweep_cmd->count("--format") == 0) format = "csv";
            commands::SweepRequest r;
            r.inequality = require_inequality(inequality_name);
            r.space = require_space(space_name);
            r.base_deg = parse_list(base_text);
            r.axis = axis;
            std::tie(r.lo_deg, r.hi_deg) = parse_range(range_text);
            r.steps = steps;
            r.tolerance = tol;
            const auto rows = commands::run_sweep(r);
            emit(format == "csv" ? commands::sweep_csv(rows) : report::dump(commands::sweep_json(r, rows)), out_path);
        }
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
