#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "dualchoice/batch.hpp"
#include "dualchoice/error.hpp"

using namespace dualchoice;

namespace {

// Binary records whose observations come straight from the tanh model at
// the given parameters, so a grid containing that point refits it exactly.
std::vector<EmpiricalRecord> synthetic_records(const TanhParams& params, std::size_t count) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> value(0.5, 8.0);
    std::uniform_real_distribution<double> unit(0.2, 1.0);
    std::vector<EmpiricalRecord> records;
    for (std::size_t i = 0; i < count; ++i) {
        const double p1 = unit(rng) * 0.9;
        const Lottery l1("L1", {{value(rng), p1}, {0.0, 1.0 - p1}});
        const Lottery l2("L2", {{value(rng), 1.0}});
        const ChoiceSet set("syn-" + std::to_string(i), {l1, l2});
        const RationalFractions f = rational_fractions(set);
        const auto [qa, qb] =
            tanh_attraction(expected_utility(l1), expected_utility(l2), params);
        const std::vector<double> q{qa, qb};
        const std::vector<double> p = behavioral_probabilities(f, q);
        records.push_back(EmpiricalRecord{set, {p}, "synthetic"});
    }
    return records;
}

} // namespace

TEST_CASE("parallel predictions match the serial reference bitwise") {
    const std::vector<EmpiricalRecord> suite = kt_suite();
    const std::vector<Prediction> parallel = predict_all(suite);
    const std::vector<Prediction> serial = predict_all_serial(suite);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < parallel.size(); ++i) {
        CHECK(parallel[i].f == serial[i].f);
        CHECK(parallel[i].q == serial[i].q);
        CHECK(parallel[i].p == serial[i].p);
        CHECK(parallel[i].optimal_index == serial[i].optimal_index);
    }
}

TEST_CASE("parallel calibration matches the serial reference bitwise") {
    const std::vector<EmpiricalRecord> records = synthetic_records(TanhParams{0.7, 2.0}, 24);
    CalibrationGrid grid;
    for (int i = 0; i <= 20; ++i) {
        grid.a_values.push_back(0.1 + 0.1 * i);
        grid.beta_values.push_back(0.25 * i);
    }
    const CalibrationResult parallel = calibrate_tanh(records, grid, 0);
    const CalibrationResult serial = calibrate_tanh_serial(records, grid, 0);
    CHECK(parallel.params.a == serial.params.a);
    CHECK(parallel.params.beta == serial.params.beta);
    CHECK(parallel.sse == serial.sse);
}

TEST_CASE("calibration recovers the generating grid point") {
    const std::vector<EmpiricalRecord> records = synthetic_records(TanhParams{1.0, 1.0}, 16);
    CalibrationGrid grid;
    for (double a : {0.25, 0.5, 1.0, 2.0, 4.0}) grid.a_values.push_back(a);
    for (double beta : {0.0, 0.5, 1.0, 2.0}) grid.beta_values.push_back(beta);
    const CalibrationResult result = calibrate_tanh_serial(records, grid, 0);
    CHECK(result.params.a == 1.0);
    CHECK(result.params.beta == 1.0);
    CHECK(result.sse < 1e-12);
}

TEST_CASE("flat objectives break ties toward the smallest parameters") {
    // equal utilities: the tanh factor vanishes at every grid point
    std::vector<EmpiricalRecord> records;
    const ChoiceSet set("flat", {Lottery("L1", {{2.0, 0.5}, {0.0, 0.5}}),
                                 Lottery("L2", {{1.0, 1.0}})});
    records.push_back(EmpiricalRecord{set, {{0.5, 0.5}}, ""});
    CalibrationGrid grid;
    for (double a : {0.5, 1.0, 2.0}) grid.a_values.push_back(a);
    for (double beta : {0.0, 1.0, 2.0}) grid.beta_values.push_back(beta);
    const CalibrationResult result = calibrate_tanh_serial(records, grid, 0);
    CHECK(result.params.a == 0.5);
    CHECK(result.params.beta == 0.0);
    CHECK(result.sse < 1e-24);
}

TEST_CASE("observations equal to the fractions drive the fit to the weakest factor") {
    // distinct utilities, but the observed split sits exactly at f: the
    // smallest a with the largest beta minimizes the leftover |q|
    std::vector<EmpiricalRecord> records;
    const ChoiceSet set("zero-q", {Lottery("L1", {{3.0, 1.0}}), Lottery("L2", {{1.0, 1.0}})});
    const RationalFractions f = rational_fractions(set);
    records.push_back(EmpiricalRecord{set, {{f[0], f[1]}}, ""});
    CalibrationGrid grid;
    for (double a : {0.01, 0.1, 1.0}) grid.a_values.push_back(a);
    for (double beta : {0.0, 1.0, 5.0}) grid.beta_values.push_back(beta);
    const CalibrationResult result = calibrate_tanh_serial(records, grid, 0);
    CHECK(result.params.a == 0.01);
    CHECK(result.params.beta == 5.0);
    CHECK(result.sse < 1e-4);
}

TEST_CASE("single record and single grid point") {
    const std::vector<EmpiricalRecord> records = synthetic_records(TanhParams{1.0, 1.0}, 1);
    CalibrationGrid grid;
    grid.a_values.push_back(2.0);
    grid.beta_values.push_back(0.5);
    const CalibrationResult result = calibrate_tanh_serial(records, grid, 0);
    CHECK(result.params.a == 2.0);
    CHECK(result.params.beta == 0.5);
    CHECK(result.sse >= 0.0);
}

TEST_CASE("calibration input validation") {
    const std::vector<EmpiricalRecord> records = synthetic_records(TanhParams{1.0, 1.0}, 2);
    CHECK_THROWS_AS(calibrate_tanh_serial(records, CalibrationGrid{}, 0), DomainError);
    CHECK_THROWS_AS(calibrate_tanh_serial({}, CalibrationGrid::default_grid(), 0), DomainError);
    CHECK_THROWS_AS(calibrate_tanh_serial(records, CalibrationGrid::default_grid(), 3),
                    DomainError);

    std::vector<EmpiricalRecord> ternary;
    ternary.push_back(EmpiricalRecord{
        ChoiceSet("t", {Lottery("A", {{1.0, 1.0}}), Lottery("B", {{2.0, 1.0}}),
                        Lottery("C", {{3.0, 1.0}})}),
        {{0.2, 0.3, 0.5}},
        ""});
    CHECK_THROWS_AS(calibrate_tanh_serial(ternary, CalibrationGrid::default_grid(), 0),
                    DomainError);
}

TEST_CASE("the default grid spans the documented ranges") {
    const CalibrationGrid grid = CalibrationGrid::default_grid();
    REQUIRE(grid.a_values.size() == 100);
    REQUIRE(grid.beta_values.size() == 100);
    CHECK(grid.a_values.front() == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(grid.a_values.back() == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(grid.beta_values.front() == 0.0);
    CHECK(grid.beta_values.back() == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(std::is_sorted(grid.a_values.begin(), grid.a_values.end()));
    CHECK(std::is_sorted(grid.beta_values.begin(), grid.beta_values.end()));
}
