#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ivq/cli.hpp"
#include "ivq/fixtures.hpp"
#include "ivq/problem_io.hpp"

using namespace ivq;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run ivqc(std::vector<std::string> args) {
    args.insert(args.begin(), "ivqc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

/// Writes `text` to a scratch file removed at scope exit.
class ScratchFile {
public:
    ScratchFile(const std::string& name, const std::string& text)
        : path_(std::filesystem::temp_directory_path() / name) {
        std::ofstream(path_) << text;
    }
    ~ScratchFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::string edited(std::string text, const std::string& from, const std::string& to) {
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit code 0: solve, sweep, validate") {
    const auto solved = ivqc({"solve", "fixture:example1"});
    CHECK(solved.code == kExitOk);
    CHECK(solved.out.find("ranking: x1 > x3 > x2") != std::string::npos);
    CHECK(solved.out.find("paper-scale") != std::string::npos);

    const auto swept = ivqc({"sweep", "fixture:hypertension", "--qs", "3,4,5"});
    CHECK(swept.code == kExitOk);
    CHECK(swept.out.find("q = 5") != std::string::npos);

    const auto q3 = ivqc({"solve", "fixture:hypertension", "--q", "3"});
    CHECK(q3.out.find("ranking: x3 > x2 > x1 > x4 > x5") != std::string::npos);

    const auto ok = ivqc({"validate", "fixture:example1"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("min q = 3") != std::string::npos);
}

TEST_CASE("exit code 1: a reference check fails") {
    const auto r = ivqc({"repro", "hypertension", "--check"});
    CHECK(r.code == kExitGoldenFailed);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);

    const auto good = ivqc({"repro", "example1", "--check"});
    CHECK(good.code == kExitOk);
    CHECK(good.out.find("FAIL") == std::string::npos);
    CHECK(good.out.find("INFO") != std::string::npos);
}

TEST_CASE("exit code 2: bad input") {
    CHECK(ivqc({"frobnicate"}).code == kExitInvalidInput);
    CHECK(ivqc({"solve", "/nonexistent/problem.json"}).code == kExitInvalidInput);
    CHECK(ivqc({"solve", "fixture:nothing"}).code == kExitInvalidInput);
    CHECK(ivqc({"solve", "fixture:example1", "--format", "xml"}).code == kExitInvalidInput);
    CHECK(ivqc({"repro", "nothing"}).code == kExitInvalidInput);

    const std::string text(fixture_text("example1"));
    const ScratchFile missing("ivq_cli_missing_cell.json",
                              edited(text, "[0.7, 0.9, 0.3, 0.5], ", ""));
    const auto r = ivqc({"solve", missing.path()});
    CHECK(r.code == kExitInvalidInput);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
}

TEST_CASE("exit code 3: no usable rung") {
    const auto r = ivqc({"solve", "fixture:example1", "--q", "2"});
    CHECK(r.code == kExitBadQ);
    CHECK(r.err.find("e1/x1/C1") != std::string::npos);
    CHECK(ivqc({"solve", "fixture:example1", "--operator", "giifga"}).code == kExitBadQ);
    CHECK(ivqc({"sweep", "fixture:example1", "--qs", "2,3"}).code == kExitBadQ);
    // the hypertension data admits q = 2 but not q = 1
    CHECK(ivqc({"sweep", "fixture:hypertension", "--qs", "1"}).code == kExitBadQ);
    CHECK(ivqc({"sweep", "fixture:hypertension", "--qs", "2"}).code == kExitOk);
}

TEST_CASE("exit code 4: bad measure") {
    const std::string text(fixture_text("example1"));
    const ScratchFile bad("ivq_cli_not_monotone.json",
                          edited(text, "{\"subset\": [\"C1\"], \"value\": 0.4}",
                                 "{\"subset\": [\"C1\"], \"value\": 0.6}"));
    const auto r = ivqc({"solve", bad.path()});
    CHECK(r.code == kExitBadMeasure);
    CHECK(r.err.find("{0}") != std::string::npos);
    CHECK(r.err.find("{0,1}") != std::string::npos);
    CHECK(ivqc({"solve", "fixture:example1", "--operator", "wca"}).code == kExitBadMeasure);
    CHECK(ivqc({"solve", "fixture:example1", "--operator", "owca", "--bum", "power:-1"}).code ==
          kExitBadMeasure);
}

TEST_CASE("identical invocations give identical bytes") {
    for (const auto& fmt : {"table", "json", "csv"}) {
        const auto a = ivqc({"sweep", "fixture:hypertension", "--qs", "3,4", "--format", fmt});
        const auto b = ivqc({"sweep", "fixture:hypertension", "--qs", "3,4", "--format", fmt});
        CHECK(a.code == kExitOk);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("csv layout") {
    const auto r = ivqc({"solve", "fixture:comparison", "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "fixture_q,alternative,t_lo,t_hi,f_lo,f_hi,score,paper_scale_score,rank");
    CHECK(first.rfind("1,x1,", 0) == 0);
    CHECK(first.substr(first.rfind(',') + 1) == "5");
}

TEST_CASE("json result") {
    const auto r = ivqc({"solve", "fixture:comparison", "--format", "json", "--precision", "6"});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("q") == 1);
    CHECK(doc.at("ranking") == nlohmann::json::array({"x5", "x3", "x2", "x4", "x1"}));
}

TEST_CASE("validate --format json round-trips") {
    for (const auto& name : fixture_names()) {
        const auto r = ivqc({"validate", "fixture:" + name, "--format", "json"});
        REQUIRE(r.code == kExitOk);
        CHECK(parse_problem(r.out) == load_fixture(name));
        const ScratchFile copy("ivq_cli_roundtrip.json", r.out);
        const auto again = ivqc({"validate", copy.path(), "--format", "json"});
        CHECK(again.out == r.out);
    }
}

TEST_CASE("stage operators and ordering flags") {
    const auto base = ivqc({"solve", "fixture:comparison"});
    const auto geo = ivqc({"solve", "fixture:comparison", "--operator", "cg"});
    const auto mixed = ivqc({"solve", "fixture:comparison", "--expert-operator", "cg",
                             "--attribute-operator", "ca"});
    const auto asc = ivqc({"solve", "fixture:comparison", "--order", "asc"});
    const auto einstein = ivqc({"solve", "fixture:comparison", "--operator", "ivifegc"});
    for (const auto* r : {&geo, &mixed, &asc, &einstein}) CHECK(r->code == kExitOk);
    CHECK(geo.out != base.out);
    CHECK(mixed.out != geo.out);
    CHECK(asc.out != base.out);
}

}
