// Compares the OpenMP batch kernels against their serial reference
// implementations on synthetic workloads and reports the speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dualchoice/batch.hpp"

using namespace dualchoice;

namespace {

std::vector<EmpiricalRecord> synthetic_records(std::size_t count) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> value(0.5, 9.0);
    std::uniform_real_distribution<double> prob(0.05, 0.95);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<EmpiricalRecord> records;
    records.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double p1 = prob(rng);
        const Lottery l1("L1", {{value(rng), p1}, {0.0, 1.0 - p1}});
        const Lottery l2("L2", {{value(rng), 1.0}});
        const double observed = unit(rng);
        records.push_back(EmpiricalRecord{ChoiceSet("bench-" + std::to_string(i), {l1, l2}),
                                          {{observed, 1.0 - observed}},
                                          "bench"});
    }
    return records;
}

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    std::size_t record_count = 200000;
    std::size_t calibration_records = 256;
    if (argc > 1) record_count = std::size_t(std::atoll(argv[1]));
    if (argc > 2) calibration_records = std::size_t(std::atoll(argv[2]));

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

    {
        const std::vector<EmpiricalRecord> records = synthetic_records(record_count);
        std::vector<Prediction> serial, parallel;
        const double serial_ms = time_ms([&] { serial = predict_all_serial(records); });
        const double parallel_ms = time_ms([&] { parallel = predict_all(records); });
        bool identical = serial.size() == parallel.size();
        for (std::size_t i = 0; identical && i < serial.size(); ++i) {
            identical = serial[i].p == parallel[i].p && serial[i].f == parallel[i].f &&
                        serial[i].optimal_index == parallel[i].optimal_index;
        }
        std::printf("predict_all    %9zu records   serial %9.1f ms   parallel %9.1f ms   "
                    "speedup %5.2fx   identical %s\n",
                    record_count, serial_ms, parallel_ms, serial_ms / parallel_ms,
                    identical ? "yes" : "NO");
        if (!identical) return 1;
    }

    {
        const std::vector<EmpiricalRecord> records = synthetic_records(calibration_records);
        const CalibrationGrid grid = CalibrationGrid::default_grid();
        CalibrationResult serial, parallel;
        const double serial_ms =
            time_ms([&] { serial = calibrate_tanh_serial(records, grid, 0); });
        const double parallel_ms = time_ms([&] { parallel = calibrate_tanh(records, grid, 0); });
        const bool identical = serial.params.a == parallel.params.a &&
                               serial.params.beta == parallel.params.beta &&
                               serial.sse == parallel.sse;
        std::printf("calibrate_tanh %9zu records   serial %9.1f ms   parallel %9.1f ms   "
                    "speedup %5.2fx   identical %s\n",
                    calibration_records, serial_ms, parallel_ms, serial_ms / parallel_ms,
                    identical ? "yes" : "NO");
        std::printf("calibrated a = %.4f, beta = %.4f, sse = %.6f\n", serial.params.a,
                    serial.params.beta, serial.sse);
        if (!identical) return 1;
    }
    return 0;
}
