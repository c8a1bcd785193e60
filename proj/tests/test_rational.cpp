#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "dualchoice/error.hpp"
#include "dualchoice/rational.hpp"

using namespace dualchoice;

namespace {

ChoiceSet binary(std::vector<Payoff> l1, std::vector<Payoff> l2) {
    return ChoiceSet("pair", {complete_lottery("L1", std::move(l1)),
                              complete_lottery("L2", std::move(l2))});
}

} // namespace

TEST_CASE("luce weights") {
    const std::vector<double> kt1{2.409, 2.4};
    const RationalFractions f = luce_weights(kt1);
    CHECK(f[0] == doctest::Approx(0.501).epsilon(1e-3));
    CHECK(f[1] == doctest::Approx(0.499).epsilon(1e-3));

    const std::vector<double> even{1.0, 1.0, 1.0};
    for (double w : luce_weights(even)) CHECK(w == doctest::Approx(1.0 / 3).epsilon(1e-15));

    const std::vector<double> zero{0.0, 0.0};
    const RationalFractions uniform = luce_weights(zero);
    CHECK(uniform[0] == 0.5);
    CHECK(uniform[1] == 0.5);

    const std::vector<double> negative{1.0, -0.5};
    CHECK_THROWS_AS(luce_weights(negative), DomainError);
    CHECK_THROWS_AS(luce_weights(std::vector<double>{}), DomainError);
}

TEST_CASE("luce weights are scale invariant") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unit(0.0, 5.0);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> attrs{unit(rng), unit(rng), unit(rng), unit(rng)};
        const double c = scale(rng);
        std::vector<double> scaled = attrs;
        for (double& a : scaled) a *= c;
        const RationalFractions base = luce_weights(attrs);
        const RationalFractions same = luce_weights(scaled);
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(std::abs(base[i] - same[i]) < 1e-12);
        }
    }
}

TEST_CASE("rational fractions for positive utilities") {
    const RationalFractions f = rational_fractions(binary({{4.0, 0.8}}, {{3.0, 1.0}}));
    CHECK(f[0] == doctest::Approx(0.516).epsilon(1e-3));
    CHECK(f[1] == doctest::Approx(0.484).epsilon(1e-3));
}

TEST_CASE("rational fractions for negative utilities invert the ordering") {
    const RationalFractions f = rational_fractions(binary({{-4.0, 0.8}}, {{-3.0, 1.0}}));
    CHECK(f[0] == doctest::Approx(0.484).epsilon(1e-3));
    CHECK(f[1] == doctest::Approx(0.516).epsilon(1e-3));
}

TEST_CASE("equal utilities split evenly") {
    const RationalFractions f = rational_fractions(binary({{6.0, 0.45}}, {{3.0, 0.9}}));
    CHECK(f[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("three positive utilities follow the direct ratio") {
    const ChoiceSet set("triple", {Lottery("A", {{1.0, 1.0}}), Lottery("B", {{2.0, 1.0}}),
                                   Lottery("C", {{3.0, 1.0}})});
    const RationalFractions f = rational_fractions(set);
    CHECK(f[0] == doctest::Approx(1.0 / 6).epsilon(1e-15));
    CHECK(f[1] == doctest::Approx(2.0 / 6).epsilon(1e-15));
    CHECK(f[2] == doctest::Approx(3.0 / 6).epsilon(1e-15));
}

TEST_CASE("mixed signs shift the worst utility to zero") {
    const ChoiceSet set("mixed", {Lottery("A", {{-1.0, 1.0}}), Lottery("B", {{1.0, 1.0}})});
    const RationalFractions f = rational_fractions(set);
    CHECK(f[0] == 0.0);
    CHECK(f[1] == 1.0);
}

TEST_CASE("zero next to negative goes through the shift path") {
    const ChoiceSet set("zn", {Lottery("A", {{0.0, 1.0}}), Lottery("B", {{-2.0, 1.0}})});
    const RationalFractions f = rational_fractions(set);
    CHECK(f[0] == 1.0);
    CHECK(f[1] == 0.0);
}

TEST_CASE("all-zero utilities fall back to uniform") {
    const ChoiceSet set("zz", {Lottery("A", {{0.0, 1.0}}), Lottery("B", {{0.0, 1.0}})});
    const RationalFractions f = rational_fractions(set);
    CHECK(f[0] == 0.5);
    CHECK(f[1] == 0.5);
}

TEST_CASE("explicit wealth shift override") {
    const ChoiceSet set("mixed", {Lottery("A", {{-1.0, 1.0}}), Lottery("B", {{1.0, 1.0}})});
    const RationalFractions f = rational_fractions(set, UtilityFunction{}, 2.0);
    CHECK(f[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(f[1] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(rational_fractions(set, UtilityFunction{}, 0.5), DomainError);
}

TEST_CASE("fractions are normalized and monotone in utility") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double sign = trial % 2 == 0 ? 1.0 : -1.0;
        std::vector<Lottery> lotteries;
        std::vector<double> utilities;
        for (int i = 0; i < 4; ++i) {
            const double value = sign * (unit(rng) * 10.0);
            lotteries.emplace_back("L" + std::to_string(i), std::vector<Payoff>{{value, 1.0}});
            utilities.push_back(value);
        }
        const RationalFractions f = rational_fractions(ChoiceSet("set", lotteries));

        const double sum = std::accumulate(f.begin(), f.end(), 0.0);
        CHECK(std::abs(sum - 1.0) <= kFractionSumTol);
        for (double v : f) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        // higher utility implies a larger fraction, for gains and for losses
        for (std::size_t i = 0; i < utilities.size(); ++i) {
            for (std::size_t j = 0; j < utilities.size(); ++j) {
                if (utilities[i] > utilities[j] + 1e-9) {
                    CHECK(f[i] > f[j]);
                }
            }
        }
    }
}

TEST_CASE("a dominating utility drives its fraction toward one") {
    double previous = 0.0;
    for (double big : {10.0, 100.0, 1000.0, 10000.0}) {
        const ChoiceSet set("lim", {Lottery("A", {{big, 1.0}}), Lottery("B", {{1.0, 1.0}}),
                                    Lottery("C", {{2.0, 1.0}})});
        const double f0 = rational_fractions(set)[0];
        CHECK(f0 > previous);
        previous = f0;
    }
    CHECK(previous > 0.999);
}
