#include "dualchoice/batch.hpp"

#include <cmath>
#include <string>

#include "dualchoice/error.hpp"
#include "dualchoice/rational.hpp"

namespace dualchoice {

namespace {

std::vector<Prediction> run_predictions(std::span<const EmpiricalRecord> records,
                                        const PredictConfig& config, bool parallel) {
    std::vector<Prediction> predictions(records.size());
    if (parallel) {
        const auto count = static_cast<long long>(records.size());
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < count; ++i) {
            predictions[std::size_t(i)] = predict(records[std::size_t(i)].choice_set, config);
        }
    } else {
        for (std::size_t i = 0; i < records.size(); ++i) {
            predictions[i] = predict(records[i].choice_set, config);
        }
    }
    return predictions;
}

// Per-record state reused by every grid point.
struct BinaryCase {
    RationalFractions f;
    double utility_a = 0.0;
    double utility_b = 0.0;
    double observed_a = 0.0;
    double observed_b = 0.0;
};

std::vector<BinaryCase> prepare_cases(std::span<const EmpiricalRecord> records,
                                      std::size_t session, const UtilityFunction& u) {
    if (records.empty()) {
        throw DomainError("calibrate: no records");
    }
    std::vector<BinaryCase> cases;
    cases.reserve(records.size());
    for (const EmpiricalRecord& record : records) {
        if (record.choice_set.size() != 2) {
            throw DomainError("calibrate: record '" + record.choice_set.label() +
                              "' is not binary");
        }
        if (session >= record.sessions.size()) {
            throw DomainError("calibrate: record '" + record.choice_set.label() +
                              "': session index " + std::to_string(session) + " out of range");
        }
        const auto& lotteries = record.choice_set.lotteries();
        cases.push_back(BinaryCase{rational_fractions(record.choice_set, u),
                                   expected_utility(lotteries[0], u),
                                   expected_utility(lotteries[1], u),
                                   record.sessions[session][0], record.sessions[session][1]});
    }
    return cases;
}

double grid_point_sse(const std::vector<BinaryCase>& cases, const TanhParams& params) {
    double sse = 0.0;
    for (const BinaryCase& c : cases) {
        const auto [q_a, q_b] = tanh_attraction(c.utility_a, c.utility_b, params);
        const double q[2] = {q_a, q_b};
        const std::vector<double> p = behavioral_probabilities(c.f, q);
        const double da = p[0] - c.observed_a;
        const double db = p[1] - c.observed_b;
        sse += da * da + db * db;
    }
    return sse;
}

CalibrationResult run_calibration(std::span<const EmpiricalRecord> records,
                                  const CalibrationGrid& grid, std::size_t session,
                                  const UtilityFunction& u, bool parallel) {
    if (grid.a_values.empty() || grid.beta_values.empty()) {
        throw DomainError("calibrate: empty grid");
    }
    for (double a : grid.a_values) {
        TanhParams{a, 0.0}.validate();
    }
    for (double beta : grid.beta_values) {
        TanhParams{1.0, beta}.validate();
    }
    const std::vector<BinaryCase> cases = prepare_cases(records, session, u);

    const std::size_t total = grid.a_values.size() * grid.beta_values.size();
    std::vector<double> sse(total);
    const auto count = static_cast<long long>(total);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long long idx = 0; idx < count; ++idx) {
            const std::size_t ai = std::size_t(idx) / grid.beta_values.size();
            const std::size_t bi = std::size_t(idx) % grid.beta_values.size();
            sse[std::size_t(idx)] =
                grid_point_sse(cases, TanhParams{grid.a_values[ai], grid.beta_values[bi]});
        }
    } else {
        for (long long idx = 0; idx < count; ++idx) {
            const std::size_t ai = std::size_t(idx) / grid.beta_values.size();
            const std::size_t bi = std::size_t(idx) % grid.beta_values.size();
            sse[std::size_t(idx)] =
                grid_point_sse(cases, TanhParams{grid.a_values[ai], grid.beta_values[bi]});
        }
    }

    // Sequential scan in a-major order: on ties the smaller a, then the
    // smaller beta, wins regardless of how the points were computed.
    std::size_t best = 0;
    for (std::size_t idx = 1; idx < total; ++idx) {
        if (sse[idx] < sse[best]) {
            best = idx;
        }
    }
    return CalibrationResult{TanhParams{grid.a_values[best / grid.beta_values.size()],
                                        grid.beta_values[best % grid.beta_values.size()]},
                             sse[best]};
}

} // namespace

std::vector<Prediction> predict_all(std::span<const EmpiricalRecord> records,
                                    const PredictConfig& config) {
    return run_predictions(records, config, true);
}

std::vector<Prediction> predict_all_serial(std::span<const EmpiricalRecord> records,
                                           const PredictConfig& config) {
    return run_predictions(records, config, false);
}

CalibrationGrid CalibrationGrid::default_grid() {
    CalibrationGrid grid;
    const std::size_t points = 100;
    grid.a_values.reserve(points);
    grid.beta_values.reserve(points);
    const double log_min = std::log10(0.01);
    const double log_max = std::log10(10.0);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = double(i) / double(points - 1);
        grid.a_values.push_back(std::pow(10.0, log_min + t * (log_max - log_min)));
        grid.beta_values.push_back(10.0 * t);
    }
    return grid;
}

CalibrationResult calibrate_tanh(std::span<const EmpiricalRecord> records,
                                 const CalibrationGrid& grid, std::size_t session,
                                 const UtilityFunction& u) {
    return run_calibration(records, grid, session, u, true);
}

CalibrationResult calibrate_tanh_serial(std::span<const EmpiricalRecord> records,
                                        const CalibrationGrid& grid, std::size_t session,
                                        const UtilityFunction& u) {
    return run_calibration(records, grid, session, u, false);
}

} // namespace dualchoice
