#include "ivq/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ivq {

namespace {

using nlohmann::ordered_json;

double rounded(double x, int precision) {
    const double scale = std::pow(10.0, precision);
    const double r = std::round(x * scale) / scale;
    return r == 0.0 ? 0.0 : r;  // no -0
}

std::vector<std::size_t> rank_positions(const RankingResult& r) {
    std::vector<std::size_t> pos(r.ranking.size());
    for (std::size_t k = 0; k < r.ranking.size(); ++k) pos[r.ranking[k]] = k + 1;
    return pos;
}

std::string ranking_line(const DecisionProblem& p, const RankingResult& r) {
    std::string out;
    for (std::size_t k = 0; k < r.ranking.size(); ++k) {
        if (k) out += " > ";
        out += p.alternatives[r.ranking[k]];
    }
    return out;
}

void table_block(std::ostream& os, const DecisionProblem& p, const RankingResult& r,
                 int precision) {
    const auto pos = rank_positions(r);
    std::vector<std::string> names{"alternative"}, aggs{"aggregate"}, scores{"score"},
        doubled{"paper-scale"}, accs{"accuracy"}, ranks{"rank"};
    for (std::size_t i = 0; i < p.alternatives.size(); ++i) {
        names.push_back(p.alternatives[i]);
        aggs.push_back(to_string(r.aggregates[i], precision));
        scores.push_back(format_fixed(r.scores[i], precision));
        doubled.push_back(format_fixed(2.0 * r.scores[i], precision));
        accs.push_back(format_fixed(r.accuracies[i], precision));
        ranks.push_back(std::to_string(pos[i]));
    }
    auto width = [](const std::vector<std::string>& col) {
        std::size_t w = 0;
        for (const auto& s : col) w = std::max(w, s.size());
        return static_cast<int>(w);
    };
    const int wn = width(names), wa = width(aggs), ws = width(scores), wp = width(doubled),
              wc = width(accs);
    os << "q = " << r.resolved_q << '\n';
    for (std::size_t k = 0; k < names.size(); ++k) {
        os << std::left << std::setw(wn) << names[k] << "  " << std::setw(wa) << aggs[k] << "  "
           << std::right << std::setw(ws) << scores[k] << "  " << std::setw(wp) << doubled[k]
           << "  " << std::setw(wc) << accs[k] << "  " << ranks[k] << '\n';
    }
    os << "ranking: " << ranking_line(p, r) << '\n';
}

ordered_json json_block(const DecisionProblem& p, const RankingResult& r, int precision) {
    const auto pos = rank_positions(r);
    ordered_json alts = ordered_json::array();
    for (std::size_t i = 0; i < p.alternatives.size(); ++i) {
        const auto& a = r.aggregates[i];
        alts.push_back({{"name", p.alternatives[i]},
                        {"aggregate",
                         {rounded(a.t.lo(), precision), rounded(a.t.hi(), precision),
                          rounded(a.f.lo(), precision), rounded(a.f.hi(), precision)}},
                        {"score", rounded(r.scores[i], precision)},
                        {"paper_scale_score", rounded(2.0 * r.scores[i], precision)},
                        {"accuracy", rounded(r.accuracies[i], precision)},
                        {"rank", pos[i]}});
    }
    ordered_json ranking = ordered_json::array();
    for (auto i : r.ranking) ranking.push_back(p.alternatives[i]);
    return {{"q", r.resolved_q}, {"alternatives", alts}, {"ranking", ranking}};
}

constexpr std::string_view kCsvHeader =
    "fixture_q,alternative,t_lo,t_hi,f_lo,f_hi,score,paper_scale_score,rank\n";

void csv_rows(std::ostream& os, const DecisionProblem& p, const RankingResult& r, int precision) {
    const auto pos = rank_positions(r);
    auto f = [&](double x) { return format_fixed(x, precision); };
    for (std::size_t i = 0; i < p.alternatives.size(); ++i) {
        const auto& a = r.aggregates[i];
        os << r.resolved_q << ',' << p.alternatives[i] << ',' << f(a.t.lo()) << ','
           << f(a.t.hi()) << ',' << f(a.f.lo()) << ',' << f(a.f.hi()) << ',' << f(r.scores[i])
           << ',' << f(2.0 * r.scores[i]) << ',' << pos[i] << '\n';
    }
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw Error(ErrorKind::Parse, "unknown format '" + std::string(name) + "'");
}

std::string render_result(const DecisionProblem& p, const RankingResult& r, OutputFormat format,
                          int precision) {
    const SweepEntry single{r.resolved_q, r};
    if (format == OutputFormat::Json) return json_block(p, r, precision).dump(2) + "\n";
    return render_sweep(p, std::span(&single, 1), format, precision);
}

std::string render_sweep(const DecisionProblem& p, std::span<const SweepEntry> runs,
                         OutputFormat format, int precision) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::Table:
            for (std::size_t k = 0; k < runs.size(); ++k) {
                if (k) os << '\n';
                table_block(os, p, runs[k].result, precision);
            }
            break;
        case OutputFormat::Json: {
            ordered_json out = ordered_json::array();
            for (const auto& e : runs) out.push_back(json_block(p, e.result, precision));
            os << out.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            os << kCsvHeader;
            for (const auto& e : runs) csv_rows(os, p, e.result, precision);
            break;
    }
    return os.str();
}

std::string render_checks(const ReproReport& report) {
    std::ostringstream os;
    std::size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, c.name.size());
    for (const auto& c : report.checks) {
        os << to_string(c.status) << "  " << std::left << std::setw(static_cast<int>(width))
           << c.name << "  " << c.detail << '\n';
    }
    os << report.fixture << ": " << report.count(GoldenStatus::Pass) << " passed, "
       << report.count(GoldenStatus::Fail) << " failed, " << report.count(GoldenStatus::Info)
       << " info\n";
    return os.str();
}

}  // namespace ivq
