#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "dualchoice/attraction.hpp"
#include "dualchoice/error.hpp"

using namespace dualchoice;

TEST_CASE("quality base") {
    // 10^(40/27), evaluated independently; the canonical default base 30 is
    // this value rounded down to two figures
    CHECK(quality_base(10.0, 0.75) == doctest::Approx(30.30271082866396).epsilon(1e-12));
    CHECK(quality_base(10.0, 0.75) >= 30.0);
    CHECK(quality_base(10.0, 0.75) <= 30.5);
    CHECK(quality_base(2.0, 1.0) == doctest::Approx(4.0).epsilon(1e-15));

    CHECK_THROWS_AS(quality_base(1.0, 0.5), DomainError);
    CHECK_THROWS_AS(quality_base(0.5, 0.5), DomainError);
    CHECK_THROWS_AS(quality_base(10.0, 0.0), DomainError);
    CHECK_THROWS_AS(quality_base(10.0, 1.5), DomainError);
}

TEST_CASE("quality functional of the reference lotteries") {
    CHECK(quality_functional(Lottery("L1", {{2.5, 0.33}, {2.4, 0.66}, {0.0, 0.01}})) ==
          doctest::Approx(30.3).epsilon(2e-3));
    CHECK(quality_functional(Lottery("L2", {{2.4, 1.0}})) == 72.0);
    CHECK(quality_functional(Lottery("L1", {{-4.0, 0.8}, {0.0, 0.2}})) ==
          doctest::Approx(-60.8).epsilon(1e-3));
    CHECK(quality_functional(Lottery("Z", {{0.0, 1.0}}), UtilityFunction{}, 7.0) == 0.0);

    CHECK_THROWS_AS(quality_functional(Lottery("L", {{1.0, 1.0}}), UtilityFunction{}, 1.0),
                    DomainError);
    CHECK_THROWS_AS(quality_functional(Lottery("L", {{1.0, 1.0}}), UtilityFunction{}, 0.5),
                    DomainError);
}

TEST_CASE("quality scales linearly with the payoffs") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    std::uniform_real_distribution<double> scale(0.1, 50.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double p = 0.5 * unit(rng);
        const double v1 = (unit(rng) - 0.5) * 20.0;
        const double v2 = (unit(rng) - 0.5) * 20.0;
        const double c = scale(rng);
        const Lottery base("L", {{v1, p}, {v2, p}, {0.0, 1.0 - 2 * p}});
        const Lottery scaled("S", {{c * v1, p}, {c * v2, p}, {0.0, 1.0 - 2 * p}});
        CHECK(quality_functional(scaled) ==
              doctest::Approx(c * quality_functional(base)).epsilon(1e-12));

        // scaling both lotteries of a pair never flips their ordering
        const double q = 0.5 * unit(rng);
        const Lottery other("O", {{(unit(rng) - 0.5) * 20, q}, {0.0, 1.0 - q}});
        const Lottery other_scaled("OS", {{c * other.outcomes()[0].value, q}, {0.0, 1.0 - q}});
        CHECK(compare_attractiveness(base, other) ==
              compare_attractiveness(scaled, other_scaled));
    }
}

TEST_CASE("equal qualities fall back to the gain-loss count") {
    // 6@0.25 against {4@0.25 | 2@0.25}: equal Q, more gains on the right
    const Lottery one("L1", {{6.0, 0.25}, {0.0, 0.75}});
    const Lottery two("L2", {{4.0, 0.25}, {2.0, 0.25}, {0.0, 0.5}});
    CHECK(compare_attractiveness(one, two) == AttractionOrdering::BMoreAttractive);

    // mirrored with losses: fewer losses on the left
    const Lottery lone("L1", {{-6.0, 0.25}, {0.0, 0.75}});
    const Lottery ltwo("L2", {{-4.0, 0.25}, {-2.0, 0.25}, {0.0, 0.5}});
    CHECK(compare_attractiveness(lone, ltwo) == AttractionOrdering::AMoreAttractive);

    CHECK(compare_attractiveness(one, one) == AttractionOrdering::EquallyAttractive);
}

TEST_CASE("attractiveness comparison is antisymmetric") {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double pa = 0.9 * unit(rng), pb = 0.9 * unit(rng);
        const Lottery a("A", {{(unit(rng) - 0.5) * 10, pa}, {0.0, 1.0 - pa}});
        const Lottery b("B", {{(unit(rng) - 0.5) * 10, pb}, {0.0, 1.0 - pb}});
        const AttractionOrdering ab = compare_attractiveness(a, b);
        const AttractionOrdering ba = compare_attractiveness(b, a);
        if (ab == AttractionOrdering::AMoreAttractive) {
            CHECK(ba == AttractionOrdering::BMoreAttractive);
        } else if (ab == AttractionOrdering::BMoreAttractive) {
            CHECK(ba == AttractionOrdering::AMoreAttractive);
        } else {
            CHECK(ba == AttractionOrdering::EquallyAttractive);
        }
    }
}

TEST_CASE("binary priors carry the quarter law") {
    const Lottery c1a("L1", {{2.5, 0.33}, {2.4, 0.66}, {0.0, 0.01}});
    const Lottery c1b("L2", {{2.4, 1.0}});
    CHECK(binary_priors(c1a, c1b) == std::pair{-0.25, 0.25});

    const Lottery c2a("L1", {{2.5, 0.33}, {0.0, 0.67}});
    const Lottery c2b("L2", {{2.4, 0.34}, {0.0, 0.66}});
    CHECK(binary_priors(c2a, c2b) == std::pair{0.25, -0.25});

    CHECK(binary_priors(c1b, c1b) == std::pair{0.0, 0.0});
}

TEST_CASE("multi priors match the closed forms") {
    const std::vector<double> two = multi_priors(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(two[1] == doctest::Approx(-0.25).epsilon(1e-15));

    const std::vector<double> three = multi_priors(3);
    CHECK(three[0] == doctest::Approx(3.0 / 8).epsilon(1e-15));
    CHECK(three[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(three[2] == doctest::Approx(-3.0 / 8).epsilon(1e-15));

    const std::vector<double> four = multi_priors(4);
    CHECK(four[0] == doctest::Approx(3.0 / 8).epsilon(1e-15));
    CHECK(four[1] == doctest::Approx(1.0 / 8).epsilon(1e-15));
    CHECK(four[2] == doctest::Approx(-1.0 / 8).epsilon(1e-15));
    CHECK(four[3] == doctest::Approx(-3.0 / 8).epsilon(1e-15));

    // odd branch, evaluated by hand: n(n-2k+1)/(2(n^2-1)) for n = 5
    const std::vector<double> five = multi_priors(5);
    CHECK(five[0] == doctest::Approx(5.0 / 12).epsilon(1e-15));
    CHECK(five[1] == doctest::Approx(5.0 / 24).epsilon(1e-15));
    CHECK(five[2] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(five[3] == doctest::Approx(-5.0 / 24).epsilon(1e-15));
    CHECK(five[4] == doctest::Approx(-5.0 / 12).epsilon(1e-15));

    CHECK_THROWS_AS(multi_priors(1), DomainError);
    CHECK_THROWS_AS(multi_priors(0), DomainError);
}

TEST_CASE("multi priors: zero sum, quarter mean, uniform gaps") {
    for (std::size_t n = 2; n <= 20; ++n) {
        const std::vector<double> priors = multi_priors(n);
        const double sum = std::accumulate(priors.begin(), priors.end(), 0.0);
        CHECK(std::abs(sum) < 1e-12);
        double mean_abs = 0.0;
        for (double q : priors) mean_abs += std::abs(q);
        mean_abs /= double(n);
        CHECK(std::abs(mean_abs - 0.25) < 1e-12);
        const double gap = priors[0] - priors[1];
        for (std::size_t k = 0; k + 1 < n; ++k) {
            CHECK(priors[k] - priors[k + 1] == doctest::Approx(gap).epsilon(1e-12));
            CHECK(priors[k] > priors[k + 1]);
        }
    }
}

TEST_CASE("tanh attraction factor") {
    const TanhParams params{1.0, 1.0};
    CHECK(tanh_attraction(3.7, 3.7, params) == std::pair{0.0, 0.0});

    // (1/(1+e)) * tanh(1), evaluated independently
    const auto [qa, qb] = tanh_attraction(1.0, 0.0, params);
    CHECK(qa == doctest::Approx(0.20482421480982513).epsilon(1e-12));
    CHECK(qb == -qa);

    const auto [ra, rb] = tanh_attraction(0.0, 1.0, params);
    CHECK(ra == doctest::Approx(-0.20482421480982513).epsilon(1e-12));
    CHECK(rb == -ra);

    CHECK_THROWS_AS(tanh_attraction(1.0, 0.0, TanhParams{0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(tanh_attraction(1.0, 0.0, TanhParams{1.0, -0.5}), DomainError);
    CHECK_THROWS_AS(tanh_attraction(1.0, 0.0, TanhParams{1.0, INFINITY}), DomainError);
}

TEST_CASE("tanh factor stays antisymmetric and below one half") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> utility(-50.0, 50.0);
    std::uniform_real_distribution<double> positive(0.01, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const TanhParams params{positive(rng), positive(rng)};
        const double ua = utility(rng), ub = utility(rng);
        const auto [qa, qb] = tanh_attraction(ua, ub, params);
        CHECK(qb == -qa);
        CHECK(std::abs(qa) <= 0.5);
        if (ua > ub) CHECK(qa >= 0.0);
        if (ua < ub) CHECK(qa <= 0.0);
        const double phi_min = 1.0 / (1.0 + std::exp(params.beta * std::abs(ua - ub)));
        CHECK(std::abs(qa) <= phi_min + 1e-15);
    }
}

TEST_CASE("huge utilities do not overflow the tanh factor") {
    const auto [qa, qb] = tanh_attraction(1e12, -1e12, TanhParams{2.0, 3.0});
    CHECK(std::isfinite(qa));
    CHECK(qa == -qb);
    CHECK(qa >= 0.0);
    CHECK(qa <= 0.5);
}

TEST_CASE("empirical classification against the noise band") {
    CHECK(classify_empirical(0.50, 0.82) == QualityClass::Positive);
    CHECK(classify_empirical(0.52, 0.58) == QualityClass::Neutral);
    CHECK(classify_empirical(0.5, 0.5) == QualityClass::Neutral);
    CHECK(classify_empirical(0.82, 0.50) == QualityClass::Negative);
    // the band is half-open: a difference equal to the noise already counts
    // (dyadic values so the difference is exact in floating point)
    CHECK(classify_empirical(0.5, 0.625, 0.125) == QualityClass::Positive);
    CHECK(classify_empirical(0.625, 0.5, 0.125) == QualityClass::Negative);

    CHECK_THROWS_AS(classify_empirical(-0.1, 0.5), DomainError);
    CHECK_THROWS_AS(classify_empirical(0.5, 1.2), DomainError);
    CHECK_THROWS_AS(classify_empirical(0.5, 0.5, -0.1), DomainError);
}
