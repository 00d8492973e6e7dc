#include "ivq/cli.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivq/fixtures.hpp"
#include "ivq/problem_io.hpp"
#include "ivq/repro.hpp"
#include "ivq/report.hpp"

namespace ivq {

namespace {

constexpr std::string_view kFixturePrefix = "fixture:";

DecisionProblem load_input(const std::string& path) {
    if (path.rfind(kFixturePrefix, 0) == 0) return load_fixture(path.substr(kFixturePrefix.size()));
    return load_problem(path);
}

std::optional<int> parse_q_flag(const std::string& text) {
    if (text.empty() || text == "auto") return 0;  // 0 = auto in SolveOptions
    try {
        std::size_t used = 0;
        const int q = std::stoi(text, &used);
        if (used == text.size() && q >= 1) return q;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::BadRung, "--q must be \"auto\" or a positive integer, got '" + text + "'");
}

BumFunction parse_bum(const std::string& text) {
    if (text == "identity") return BumFunction::identity();
    if (text.rfind("power:", 0) == 0) {
        try {
            return BumFunction::power(std::stod(text.substr(6)));
        } catch (const std::logic_error&) {
        }
    }
    throw Error(ErrorKind::InvalidBum, "--bum must be \"identity\" or \"power:R\", got '" + text + "'");
}

SortOrder parse_order(const std::string& text) {
    if (text == "desc") return SortOrder::Descending;
    if (text == "asc") return SortOrder::Ascending;
    throw Error(ErrorKind::Parse, "--order must be desc or asc, got '" + text + "'");
}

std::vector<int> parse_qs(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto q = parse_q_flag(item);
        if (!q || *q == 0) throw Error(ErrorKind::BadRung, "--qs takes explicit rungs, got '" + item + "'");
        out.push_back(*q);
    }
    if (out.empty()) throw Error(ErrorKind::BadRung, "--qs is empty");
    return out;
}

struct SolveFlags {
    std::string path;
    std::string q = "";
    std::string op = "ca";
    std::string expert_op;
    std::string attribute_op;
    std::string order = "desc";
    std::string bum = "identity";
    std::string format = "table";
    int precision = 4;
    std::string qs = "2,3,4,5";
};

SolveOptions make_options(const SolveFlags& f) {
    SolveOptions o;
    StageOperator stage;
    stage.kind = parse_stage_kind(f.op);
    stage.order = parse_order(f.order);
    stage.bum = parse_bum(f.bum);
    o.expert_stage = stage;
    o.attribute_stage = stage;
    if (!f.expert_op.empty()) o.expert_stage.kind = parse_stage_kind(f.expert_op);
    if (!f.attribute_op.empty()) o.attribute_stage.kind = parse_stage_kind(f.attribute_op);
    if (!f.q.empty()) o.q_override = parse_q_flag(f.q);
    return o;
}

void add_solve_flags(CLI::App* cmd, SolveFlags& f, bool with_q) {
    cmd->add_option("path", f.path, "problem file, or fixture:NAME for a built-in problem")
        ->required();
    if (with_q) cmd->add_option("--q", f.q, "rung: a positive integer or auto (default: from file)");
    cmd->add_option("--operator", f.op, "operator for both stages (ca, cg, wca, oca, owca, wcg, "
                                        "ocg, owcg, giifga, ivifegc)");
    cmd->add_option("--expert-operator", f.expert_op, "operator for the expert stage only");
    cmd->add_option("--attribute-operator", f.attribute_op, "operator for the attribute stage only");
    cmd->add_option("--order", f.order, "sort convention for ca/cg: desc or asc");
    cmd->add_option("--bum", f.bum, "BUM function for oca/ocg/owca/owcg: identity or power:R");
    cmd->add_option("--format", f.format, "table, json or csv");
    cmd->add_option("--precision", f.precision, "decimals in the report")
        ->check(CLI::Range(0, 15));
}

}  // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NoValidQ:
        case ErrorKind::ExplicitQInvalid:
        case ErrorKind::InvalidAtQ:
            return kExitBadQ;
        case ErrorKind::MissingSubset:
        case ErrorKind::NotGrounded:
        case ErrorKind::NotMonotone:
        case ErrorKind::NotAdditive:
        case ErrorKind::BadSubset:
        case ErrorKind::NegativeWeight:
        case ErrorKind::WeightSumNotOne:
        case ErrorKind::InvalidBum:
            return kExitBadMeasure;
        default:
            return kExitInvalidInput;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Choquet aggregation and group decision ranking over interval-valued q-rung "
                 "orthopair fuzzy numbers",
                 "ivqc"};
    app.require_subcommand(1);

    SolveFlags solve_flags;
    auto* solve_cmd = app.add_subcommand("solve", "rank the alternatives of a problem");
    add_solve_flags(solve_cmd, solve_flags, true);

    SolveFlags sweep_flags;
    auto* sweep_cmd = app.add_subcommand("sweep", "solve once per rung and tabulate the results");
    add_solve_flags(sweep_cmd, sweep_flags, false);
    sweep_cmd->add_option("--qs", sweep_flags.qs, "comma-separated rungs");

    std::string repro_name;
    bool repro_check = false;
    std::string repro_format = "table";
    int repro_precision = 4;
    auto* repro_cmd = app.add_subcommand("repro", "run a built-in problem against its reference values");
    repro_cmd->add_option("name", repro_name, "example1, hypertension or comparison")->required();
    repro_cmd->add_flag("--check", repro_check, "compare against reference values; exit 1 on failure");
    repro_cmd->add_option("--format", repro_format, "table, json or csv");
    repro_cmd->add_option("--precision", repro_precision, "decimals in the report")
        ->check(CLI::Range(0, 15));

    std::string validate_path;
    std::string validate_format = "text";
    auto* validate_cmd = app.add_subcommand("validate", "check a problem file");
    validate_cmd->add_option("path", validate_path, "problem file, or fixture:NAME")->required();
    validate_cmd->add_option("--format", validate_format,
                             "text, or json to print the canonical problem document")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*solve_cmd) {
            const auto p = load_input(solve_flags.path);
            const auto format = parse_output_format(solve_flags.format);
            const auto result = solve(p, make_options(solve_flags));
            out << render_result(p, result, format, solve_flags.precision);
        } else if (*sweep_cmd) {
            const auto p = load_input(sweep_flags.path);
            const auto format = parse_output_format(sweep_flags.format);
            const auto qs = parse_qs(sweep_flags.qs);
            const auto runs = sweep_q(p, qs, make_options(sweep_flags));
            out << render_sweep(p, runs, format, sweep_flags.precision);
        } else if (*repro_cmd) {
            const auto format = parse_output_format(repro_format);
            const auto report = run_repro(repro_name);
            out << render_sweep(report.problem, report.runs, format, repro_precision);
            if (repro_check) {
                out << '\n' << render_checks(report);
                if (!report.passed()) return kExitGoldenFailed;
            }
        } else if (*validate_cmd) {
            const auto p = load_input(validate_path);
            const auto standardized = standardize(p);
            const int min_q = resolve_q(standardized, std::nullopt, 20);
            if (p.q) resolve_q(standardized, p.q, 20);
            if (validate_format == "json") {
                out << emit_problem(p);
            } else {
                out << "OK, min q = " << min_q;
                if (p.q) out << ", declared q = " << *p.q;
                out << '\n';
            }
        }
    } catch (const Error& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kExitOk;
}

}  // namespace ivq
