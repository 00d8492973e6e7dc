#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ivq/measure.hpp"

using namespace ivq;

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

std::string message_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

// Three-criterion capacity from the single-expert supplier example.
FuzzyMeasure supplier_measure() {
    return FuzzyMeasure::from_table(3, {{0b001, 0.4},
                                        {0b010, 0.4},
                                        {0b100, 0.3},
                                        {0b011, 0.5},
                                        {0b101, 0.8},
                                        {0b110, 0.8}});
}

}  // namespace

TEST_SUITE("measure") {

TEST_CASE("subset helpers") {
    CHECK(singleton(0) == 1u);
    CHECK(singleton(3) == 8u);
    CHECK(full_set(4) == 15u);
}

TEST_CASE("permutations") {
    const Permutation p({2, 0, 1});
    CHECK(p[0] == 2);
    CHECK(p.reversed().order() == std::vector<std::size_t>{1, 0, 2});
    CHECK(p.inverse().order() == std::vector<std::size_t>{1, 2, 0});
    CHECK(Permutation::identity(3).order() == std::vector<std::size_t>{0, 1, 2});
    CHECK(kind_of([] { Permutation({0, 0, 1}); }) == ErrorKind::SizeMismatch);
    CHECK(kind_of([] { Permutation({0, 3}); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("table construction defaults the empty and full sets") {
    const auto m = supplier_measure();
    CHECK(m.size() == 3);
    CHECK(m.value(0) == 0.0);
    CHECK(m.value(0b111) == 1.0);
    CHECK(m.value(0b101) == 0.8);
    CHECK(kind_of([&] { m.value(0b1000); }) == ErrorKind::BadSubset);
}

TEST_CASE("table construction errors") {
    CHECK(kind_of([] { FuzzyMeasure::from_table(2, {{0b01, 0.5}}); }) == ErrorKind::MissingSubset);
    CHECK(kind_of([] { FuzzyMeasure::from_table(2, {{0b01, 0.5}, {0b10, 0.5}, {0b100, 0.1}}); }) ==
          ErrorKind::BadSubset);
    CHECK(kind_of([] { FuzzyMeasure::from_table(2, {{0b00, 0.1}, {0b01, 0.5}, {0b10, 0.5}}); }) ==
          ErrorKind::NotGrounded);
    CHECK(kind_of([] { FuzzyMeasure::from_table(2, {{0b01, 0.5}, {0b10, 0.5}, {0b11, 0.9}}); }) ==
          ErrorKind::NotGrounded);
    CHECK(kind_of([] { FuzzyMeasure::from_table(0, {}); }) == ErrorKind::SizeMismatch);
    CHECK(kind_of([] { FuzzyMeasure::from_table(21, {}); }) == ErrorKind::SizeMismatch);
    CHECK(kind_of([] { FuzzyMeasure::from_values({0.0, 0.5, 1.0}); }) == ErrorKind::SizeMismatch);
    CHECK(kind_of([] { FuzzyMeasure::from_values({0.0, NAN, 0.3, 1.0}); }) == ErrorKind::NonFinite);
}

TEST_CASE("monotonicity violations name the offending pair") {
    // mu{C1} = 0.5 > mu{C1,C2} = 0.4
    auto build = [] {
        return FuzzyMeasure::from_table(3, {{0b001, 0.5},
                                            {0b010, 0.2},
                                            {0b100, 0.2},
                                            {0b011, 0.4},
                                            {0b101, 0.6},
                                            {0b110, 0.6}});
    };
    CHECK(kind_of(build) == ErrorKind::NotMonotone);
    const auto msg = message_of(build);
    CHECK(msg.find("{0}") != std::string::npos);
    CHECK(msg.find("{0,1}") != std::string::npos);
}

TEST_CASE("grounding within tolerance is snapped") {
    const auto m = FuzzyMeasure::from_values({1e-13, 0.3, 0.6, 1.0 - 1e-13});
    CHECK(m.value(0) == 0.0);
    CHECK(m.value(3) == 1.0);
}

TEST_CASE("additive and symmetric measures") {
    const std::vector<double> w = {0.4, 0.27, 0.33};
    const auto a = FuzzyMeasure::additive(w);
    CHECK(a.is_additive());
    CHECK(a.value(0b101) == doctest::Approx(0.73));
    CHECK(a.singleton_values() == std::vector<double>{0.4, 0.27, 0.33});

    const std::vector<double> lambda = {0.4, 0.3, 0.3};
    const auto s = FuzzyMeasure::symmetric(lambda);
    CHECK(s.value(0b010) == doctest::Approx(0.4));
    CHECK(s.value(0b101) == doctest::Approx(0.7));
    CHECK(s.value(0b110) == doctest::Approx(0.7));
    CHECK_FALSE(s.is_additive());
    CHECK_FALSE(supplier_measure().is_additive());

    const std::vector<double> bad_sum = {0.5, 0.6};
    const std::vector<double> negative = {1.2, -0.2};
    CHECK(kind_of([&] { FuzzyMeasure::additive(bad_sum); }) == ErrorKind::WeightSumNotOne);
    CHECK(kind_of([&] { FuzzyMeasure::additive(negative); }) == ErrorKind::NegativeWeight);
}

TEST_CASE("relabeling") {
    const auto m = supplier_measure();
    const Permutation p({2, 0, 1});
    const auto r = m.relabeled(p);
    // r({0}) = m({2}), r({1,2}) = m({0,1})
    CHECK(r.value(0b001) == m.value(0b100));
    CHECK(r.value(0b110) == m.value(0b011));
    CHECK(r.relabeled(p.inverse()) == m);
}

TEST_CASE("chain weights follow the sorted prefix") {
    const auto m = supplier_measure();
    // Order C1, C3, C2: the sort order of row x1 of the supplier example at q = 3.
    const Permutation sigma({0, 2, 1});
    const auto w = chain_weights(m, sigma);
    CHECK(w[0] == doctest::Approx(0.4));
    CHECK(w[1] == doctest::Approx(0.4));
    CHECK(w[2] == doctest::Approx(0.2));
    CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(1.0));

    const auto rw = reverse_chain_weights(m, sigma);
    // suffixes {C2}, {C3,C2}, {C1,C3,C2}
    CHECK(rw[2] == doctest::Approx(0.4));
    CHECK(rw[1] == doctest::Approx(0.4));
    CHECK(rw[0] == doctest::Approx(0.2));
    CHECK(kind_of([&] { chain_weights(m, Permutation::identity(2)); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("BUM functions") {
    CHECK(BumFunction::identity()(0.3) == 0.3);
    CHECK(BumFunction::power(2.0)(0.5) == doctest::Approx(0.25));
    const auto pl = BumFunction::piecewise_linear({{0.0, 0.0}, {0.5, 0.8}, {1.0, 1.0}});
    CHECK(pl(0.25) == doctest::Approx(0.4));
    CHECK(pl(0.75) == doctest::Approx(0.9));
    CHECK(kind_of([] { BumFunction::power(0.0); }) == ErrorKind::InvalidBum);
    CHECK(kind_of([] { BumFunction::piecewise_linear({{0.0, 0.0}, {1.0, 0.9}}); }) ==
          ErrorKind::InvalidBum);
    // Q(0) = 0 and Q(1) = 1 but drops from 1 to 0.5 in the middle.
    const auto dip = [](double x) { return x < 0.5 ? 2.0 * x : (x < 1.0 ? 0.5 : 1.0); };
    CHECK(kind_of([&] { BumFunction(dip, "dip"); }) == ErrorKind::InvalidBum);
    CHECK(kind_of([] { BumFunction([](double x) { return 1.0 - x; }, "reversed"); }) ==
          ErrorKind::InvalidBum);
}

TEST_CASE("BUM order weights") {
    const std::vector<double> uniform = {0.25, 0.25, 0.25, 0.25};
    const auto w = bum_order_weights(BumFunction::power(2.0), uniform, Permutation::identity(4));
    CHECK(w[0] == doctest::Approx(1.0 / 16));
    CHECK(w[1] == doctest::Approx(3.0 / 16));
    CHECK(w[2] == doctest::Approx(5.0 / 16));
    CHECK(w[3] == doctest::Approx(7.0 / 16));

    const std::vector<double> s = {0.5, 0.3, 0.2};
    const auto wi = bum_order_weights(BumFunction::identity(), s, Permutation({2, 0, 1}));
    CHECK(wi[0] == doctest::Approx(0.2));
    CHECK(wi[1] == doctest::Approx(0.5));
    CHECK(wi[2] == doctest::Approx(0.3));
}

TEST_CASE("normalized weights") {
    const std::vector<double> w = {0.2, 0.3, 0.5};
    CHECK(normalized_weights(w) == std::vector<double>{0.2, 0.3, 0.5});
    const std::vector<double> empty;
    CHECK(kind_of([&] { normalized_weights(empty); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("scalar Choquet integral") {
    const auto m = supplier_measure();
    const std::vector<double> f = {0.9, 0.1, 0.5};
    // sorted: C1 (0.9), C3 (0.5), C2 (0.1) -> 0.9*0.4 + 0.5*0.4 + 0.1*0.2
    CHECK(scalar_choquet(f, m) == doctest::Approx(0.58));
    const std::vector<double> flat = {0.7, 0.7, 0.7};
    CHECK(scalar_choquet(flat, m) == doctest::Approx(0.7));
    const std::vector<double> neg = {0.7, -0.1, 0.2};
    CHECK(kind_of([&] { scalar_choquet(neg, m); }) == ErrorKind::NegativeInput);
}

}
