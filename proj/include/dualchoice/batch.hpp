#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dualchoice/attraction.hpp"
#include "dualchoice/behavior.hpp"
#include "dualchoice/dataset.hpp"

// Data-parallel kernels over record sets. The public entry points run the
// per-record / per-grid-point work under OpenMP; the *_serial twins are the
// plain-loop reference implementations kept for testing and benchmarking.
// Both paths execute identical per-item code in a fixed order, so their
// results are bitwise equal.

namespace dualchoice {

std::vector<Prediction> predict_all(std::span<const EmpiricalRecord> records,
                                    const PredictConfig& config = {});
std::vector<Prediction> predict_all_serial(std::span<const EmpiricalRecord> records,
                                           const PredictConfig& config = {});

/// Cartesian search grid for the tanh parameters.
struct CalibrationGrid {
    std::vector<double> a_values;
    std::vector<double> beta_values;

    /// 100 log-spaced a in [0.01, 10] times 100 linear beta in [0, 10].
    static CalibrationGrid default_grid();
};

struct CalibrationResult {
    TanhParams params;
    double sse = 0.0;
};

/// Exhaustive grid search minimizing the squared error between the tanh
/// model's behavioral probabilities and the observed fractions, summed over
/// all (binary) records. Ties resolve to the smaller a, then the smaller
/// beta.
CalibrationResult calibrate_tanh(std::span<const EmpiricalRecord> records,
                                 const CalibrationGrid& grid, std::size_t session,
                                 const UtilityFunction& u = {});
CalibrationResult calibrate_tanh_serial(std::span<const EmpiricalRecord> records,
                                        const CalibrationGrid& grid, std::size_t session,
                                        const UtilityFunction& u = {});

} // namespace dualchoice
