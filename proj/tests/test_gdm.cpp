#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ivq/fixtures.hpp"
#include "ivq/gdm.hpp"
#include "support/generators.hpp"

using namespace ivq;
using namespace ivq::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an ivq::Error");
    return ErrorKind::Parse;
}

std::vector<std::string> ranked_names(const DecisionProblem& p, const RankingResult& r) {
    std::vector<std::string> out;
    for (auto i : r.ranking) out.push_back(p.alternatives[i]);
    return out;
}

/// Random problem valid at q with the given shape.
DecisionProblem random_problem(Rng& rng, int alternatives, int attributes, int experts, int q) {
    std::vector<std::string> alts, experts_;
    std::vector<AttributeSpec> attrs;
    for (int i = 0; i < alternatives; ++i) alts.push_back("a" + std::to_string(i));
    for (int j = 0; j < attributes; ++j) attrs.push_back({"c" + std::to_string(j)});
    for (int k = 0; k < experts; ++k) experts_.push_back("e" + std::to_string(k));
    std::vector<Matrix> matrices;
    for (int k = 0; k < experts; ++k) {
        Matrix m;
        for (int i = 0; i < alternatives; ++i)
            m.push_back(random_items(rng, static_cast<std::size_t>(attributes), q));
        matrices.push_back(std::move(m));
    }
    auto am = random_capacity(rng, attributes);
    auto em = random_capacity(rng, experts);
    return {alts, attrs, experts_, matrices, am, em, q};
}

}  // namespace

TEST_SUITE("gdm") {

TEST_CASE("standardize complements cost columns once") {
    const auto p = load_fixture("hypertension");
    const auto s = standardize(p);
    CHECK(s.attributes[3].kind == AttributeKind::Benefit);
    CHECK(s.matrices[0][0][3] == complement(p.matrices[0][0][3]));
    CHECK(s.matrices[0][0][0] == p.matrices[0][0][0]);
    CHECK(standardize(s) == s);
}

TEST_CASE("resolving the rung") {
    const auto ex = load_fixture("example1");
    CHECK_FALSE(ex.q.has_value());
    CHECK(resolve_q(ex, 20) == 3);
    CHECK(resolve_q(ex, 4, 20) == 4);
    CHECK(kind_of([&] { resolve_q(ex, 2, 20); }) == ErrorKind::ExplicitQInvalid);
    CHECK(kind_of([&] { resolve_q(ex, 0, 20); }) == ErrorKind::BadRung);
    CHECK(kind_of([&] { resolve_q(ex, std::nullopt, 2); }) == ErrorKind::NoValidQ);
    CHECK(resolve_q(standardize(load_fixture("hypertension")), std::nullopt, 20) <= 2);
}

TEST_CASE("a single expert passes the matrix through") {
    const auto ex = load_fixture("example1");
    const auto r = solve(ex);
    CHECK(r.resolved_q == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(max_abs_diff(r.collective[i][j], ex.matrices[0][i][j]) <= 1e-15);
    CHECK(r.aggregates.size() == 3);
    CHECK(r.ranking.size() == 3);
}

TEST_CASE("hypertension fixture ranks x3 first at q = 3, 4 and 5") {
    const auto p = load_fixture("hypertension");
    const std::vector<std::string> expected = {"x3", "x2", "x1", "x4", "x5"};
    const std::vector<int> qs = {3, 4, 5};
    for (const auto& run : sweep_q(p, qs)) {
        CAPTURE(run.q);
        CHECK(run.result.resolved_q == run.q);
        CHECK(ranked_names(p, run.result) == expected);
        for (const auto& row : run.result.collective)
            for (const auto& cell : row) CHECK(is_valid(cell, run.q));
        for (const auto& a : run.result.aggregates) CHECK(is_valid(a, run.q));
    }
}

TEST_CASE("comparison fixture ranks x5 first and x1 last at q = 1") {
    const auto p = load_fixture("comparison");
    const auto r = solve(p);
    CHECK(ranked_names(p, r) == std::vector<std::string>{"x5", "x3", "x2", "x4", "x1"});
    for (std::size_t k = 0; k + 1 < r.ranking.size(); ++k)
        CHECK(r.scores[r.ranking[k]] >= r.scores[r.ranking[k + 1]]);
}

TEST_CASE("sweep with one rung equals a solve at that rung") {
    const auto p = load_fixture("hypertension");
    const std::vector<int> qs = {3};
    const auto runs = sweep_q(p, qs);
    SolveOptions o;
    o.q_override = 3;
    const auto direct = solve(p, o);
    CHECK(runs.front().result.aggregates == direct.aggregates);
    CHECK(runs.front().result.ranking == direct.ranking);
}

TEST_CASE("solve is deterministic") {
    const auto p = load_fixture("comparison");
    const auto a = solve(p);
    const auto b = solve(p);
    CHECK(a.aggregates == b.aggregates);
    CHECK(a.scores == b.scores);
}

TEST_CASE("comparison operators force q = 1") {
    const auto p = load_fixture("hypertension");
    SolveOptions o;
    o.expert_stage.kind = StageKind::GIIFGA;
    CHECK(kind_of([&] { solve(p, o); }) == ErrorKind::ExplicitQInvalid);
    o.q_override = 1;
    CHECK(kind_of([&] { solve(p, o); }) == ErrorKind::ExplicitQInvalid);

    const auto c = load_fixture("comparison");
    SolveOptions g;
    g.attribute_stage.kind = StageKind::IVIFEGC;
    g.expert_stage.kind = StageKind::IVIFEGC;
    CHECK(solve(c, g).resolved_q == 1);
}

TEST_CASE("stage operators") {
    CHECK(parse_stage_kind("OWCG") == StageKind::OWCG);
    CHECK(parse_stage_kind("ivifegc") == StageKind::IVIFEGC);
    CHECK(to_string(StageKind::GIIFGA) == "giifga");
    CHECK(kind_of([] { parse_stage_kind("median"); }) == ErrorKind::Parse);
    CHECK(is_baseline(StageKind::GIIFGA));
    CHECK_FALSE(is_baseline(StageKind::CA));

    const auto p = load_fixture("comparison");
    SolveOptions o;
    o.attribute_stage.kind = StageKind::WCA;
    CHECK(kind_of([&] { solve(p, o); }) == ErrorKind::NotAdditive);
}

TEST_CASE("relabeling alternatives, attributes and experts") {
    Rng rng(5);
    for (int c = 0; c < 50; ++c) {
        const int q = uniform_int(rng, 1, 4);
        const auto p = random_problem(rng, uniform_int(rng, 2, 5), uniform_int(rng, 2, 4),
                                      uniform_int(rng, 1, 3), q);
        const auto base = solve(p);

        // alternatives: rows move, the ranking follows
        const auto pa = random_permutation(rng, p.alternatives.size());
        auto alt = p;
        alt.alternatives = permuted(p.alternatives, pa);
        for (std::size_t k = 0; k < p.matrices.size(); ++k) alt.matrices[k] = permuted(p.matrices[k], pa);
        CHECK(ranked_names(alt, solve(alt)) == ranked_names(p, base));

        // attributes and experts move together with their measures
        const auto pc = random_permutation(rng, p.attributes.size());
        const auto pe = random_permutation(rng, p.experts.size());
        auto moved = p;
        moved.attributes = permuted(p.attributes, pc);
        moved.attribute_measure = p.attribute_measure.relabeled(pc);
        moved.experts = permuted(p.experts, pe);
        moved.expert_measure = p.expert_measure.relabeled(pe);
        moved.matrices = permuted(p.matrices, pe);
        for (auto& m : moved.matrices)
            for (auto& row : m) row = permuted(row, pc);
        const auto r = solve(moved);
        for (std::size_t i = 0; i < p.alternatives.size(); ++i)
            CHECK(max_abs_diff(r.aggregates[i], base.aggregates[i]) <= 1e-12);
        CHECK(r.ranking == base.ranking);
    }
}

TEST_CASE("ranking does not depend on the scale of the score") {
    Rng rng(6);
    for (int c = 0; c < 50; ++c) {
        const int q = uniform_int(rng, 1, 5);
        const auto values = random_items(rng, 6, q);
        const auto r = rank(values, q);
        std::vector<std::size_t> by_paper_scale(values.size());
        std::iota(by_paper_scale.begin(), by_paper_scale.end(), std::size_t{0});
        std::stable_sort(by_paper_scale.begin(), by_paper_scale.end(), [&](auto a, auto b) {
            return paper_scale_score(values[a], q) > paper_scale_score(values[b], q);
        });
        CHECK(r.ranking == by_paper_scale);
    }
}

TEST_CASE("shape validation") {
    auto p = load_fixture("example1");
    p.matrices[0][1].pop_back();
    CHECK(kind_of([&] { solve(p); }) == ErrorKind::Parse);
    auto narrow = load_fixture("example1");
    narrow.attribute_measure = FuzzyMeasure::from_table(2, {{0b01, 0.5}, {0b10, 0.5}});
    CHECK(kind_of([&] { solve(narrow); }) == ErrorKind::SizeMismatch);
    auto dup = load_fixture("example1");
    dup.alternatives[1] = dup.alternatives[0];
    CHECK(kind_of([&] { solve(dup); }) == ErrorKind::Parse);
}

}
