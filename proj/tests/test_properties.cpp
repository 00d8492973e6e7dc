#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "support/generators.hpp"
#include "support/theorems.hpp"

using namespace ivq;
using namespace ivq::testing;

namespace {

constexpr int kCases = 300;

void require_tally(const Tally& t) {
    INFO(t.summary());
    CHECK(t.ok());
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("arithmetic stays valid and ordered") {
    Rng rng(11);
    for (int c = 0; c < kCases; ++c) {
        const int q = random_q(rng);
        const auto a = random_ivqrofn(rng, q);
        const auto b = random_ivqrofn(rng, q);
        const double lambda = uniform(rng, 0.0, 5.0);
        for (const auto& r : {oplus(a, b, q), otimes(a, b, q), scalar_mul(lambda, a, q), power(a, lambda, q)}) {
            CHECK(is_valid(r, q));
            CHECK(r.t.lo() <= r.t.hi());
            CHECK(r.f.lo() <= r.f.hi());
        }
    }
}

TEST_CASE("duality and the exponent law") {
    Rng rng(12);
    for (int c = 0; c < kCases; ++c) {
        const int q = random_q(rng);
        const auto a = random_ivqrofn(rng, q);
        const auto b = random_ivqrofn(rng, q);
        const double l1 = uniform(rng, 0.0, 3.0);
        const double l2 = uniform(rng, 0.0, 3.0);
        CHECK(max_abs_diff(otimes(a, b, q), complement(oplus(complement(a), complement(b), q))) <= 1e-12);
        CHECK(max_abs_diff(power(a, l1, q), complement(scalar_mul(l1, complement(a), q))) <= 1e-12);
        CHECK(max_abs_diff(scalar_mul(l1 + l2, a, q),
                           oplus(scalar_mul(l1, a, q), scalar_mul(l2, a, q), q)) <= 1e-12);
    }
}

TEST_CASE("score, accuracy and comparison") {
    Rng rng(13);
    for (int c = 0; c < kCases; ++c) {
        const int q = random_q(rng);
        const auto a = random_ivqrofn(rng, q);
        const auto b = random_ivqrofn(rng, q);
        const auto d = random_ivqrofn(rng, q);
        const double s = score(a, q);
        CHECK(s >= -1.0);
        CHECK(s <= 1.0);
        CHECK(accuracy(a, q) >= std::abs(s));
        CHECK(compare(a, a, q) == 0);
        CHECK((compare(a, b, q) < 0) == (compare(b, a, q) > 0));
        if (compare(a, b, q) <= 0 && compare(b, d, q) <= 0) CHECK(compare(a, d, q) <= 0);
    }
}

TEST_CASE("chain weights are a distribution") {
    Rng rng(14);
    for (int c = 0; c < kCases; ++c) {
        const int n = uniform_int(rng, 1, 7);
        const auto m = random_capacity(rng, n);
        const auto sigma = random_permutation(rng, static_cast<std::size_t>(n));
        const auto w = chain_weights(m, sigma);
        const auto rw = reverse_chain_weights(m, sigma);
        CHECK(*std::min_element(w.begin(), w.end()) >= 0.0);
        CHECK(*std::min_element(rw.begin(), rw.end()) >= 0.0);
        CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::accumulate(rw.begin(), rw.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));

        auto mirrored = reverse_chain_weights(m, sigma.reversed());
        std::reverse(mirrored.begin(), mirrored.end());
        for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] == doctest::Approx(mirrored[i]).epsilon(1e-12));
    }
}

TEST_CASE("scalar Choquet integral") {
    Rng rng(15);
    for (int c = 0; c < kCases; ++c) {
        const int n = uniform_int(rng, 1, 6);
        const auto m = random_capacity(rng, n);
        std::vector<double> f(static_cast<std::size_t>(n));
        for (auto& x : f) x = uniform(rng);
        auto g = f;
        for (auto& x : g) x += uniform(rng, 0.0, 0.3);
        CHECK(scalar_choquet(g, m) >= scalar_choquet(f, m) - 1e-12);
        const std::vector<double> flat(f.size(), f[0]);
        CHECK(scalar_choquet(flat, m) == doctest::Approx(f[0]).epsilon(1e-12));

        const auto w = random_weights(rng, f.size());
        const double dot = std::inner_product(f.begin(), f.end(), w.begin(), 0.0);
        CHECK(std::abs(scalar_choquet(f, FuzzyMeasure::additive(w)) - dot) <= 1e-12);
    }
}

TEST_CASE("closed forms match the iterated arithmetic") {
    require_tally(check_oracle(false, 21, kCases));
    require_tally(check_oracle(true, 22, kCases));
}

TEST_CASE("idempotency, boundedness, commutativity and monotonicity for every operator") {
    unsigned seed = 100;
    for (const auto kind : all_operators()) {
        require_tally(check_idempotency(kind, ++seed, kCases));
        require_tally(check_boundedness(kind, ++seed, kCases));
        require_tally(check_commutativity(kind, ++seed, kCases));
        require_tally(check_monotonicity(kind, ++seed, kCases));
    }
}

TEST_CASE("reductions between operators") {
    for (const bool geometric : {false, true}) {
        require_tally(check_weighted_reduction(geometric, 31, kCases));
        require_tally(check_ordered_reduction(geometric, 32, kCases));
        require_tally(check_bum_reduction(geometric, 33, kCases));
    }
}

TEST_CASE("comparison operators are idempotent and bounded") {
    for (const auto b : {Baseline::Giifga, Baseline::Ivifegc}) {
        require_tally(check_baseline_idempotency(b, 41, kCases));
        require_tally(check_baseline_boundedness(b, 42, kCases));
    }
}

}
