#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualchoice/behavior.hpp"
#include "dualchoice/lottery.hpp"
#include "dualchoice/rational.hpp"

namespace dualchoice {

/// A choice set paired with observed choice fractions. Each session holds
/// one fraction per lottery; the fractions of a session sum to 1 within
/// kProbabilitySumTol.
struct EmpiricalRecord {
    ChoiceSet choice_set;
    std::vector<std::vector<double>> sessions;
    std::string source_tag;

    void validate() const;
};

/// Aggregate statistics over the optimal lotteries of a record set.
struct AggregateReport {
    double mean_f_opt = 0.0;
    double mean_p_pred_opt = 0.0;
    double mean_p_exp_opt = 0.0;
    double mean_abs_q_exp = 0.0;
    std::size_t count = 0;
};

enum class FileFormat { Json, Csv };

/// Reads empirical records from a file.
///
/// JSON: a top-level array of records, each
///   {"label": text,
///    "lotteries": [{"label": text, "outcomes": [[value, probability], ...]}, ...],
///    "sessions": [[fraction, ...], ...]}
///
/// CSV (binary choice sets only): header
///   label,l1_outcomes,l2_outcomes,p_exp_1_s1,p_exp_2_s1[,p_exp_1_s2,p_exp_2_s2]
/// with each outcomes cell written as v1@p1|v2@p2|...
///
/// Numbers use '.' as decimal separator; encoding is UTF-8 with '\n'
/// newlines. Lotteries are completed with a zero-payoff residual outcome on
/// load. Errors carry a line or record locator.
std::vector<EmpiricalRecord> load_records(const std::filesystem::path& path,
                                          FileFormat format);

/// Parses records from JSON text (same schema as load_records).
std::vector<EmpiricalRecord> parse_records_json(std::string_view text);

/// Writes records in the formats accepted by load_records. Numeric fields
/// round-trip exactly. CSV requires binary records with one or two sessions.
void save_records(std::span<const EmpiricalRecord> records,
                  const std::filesystem::path& path, FileFormat format);

/// The embedded Kahneman-Tversky choice suite: 18 binary records (gains
/// 1-10, losses 11-18) with the observed aggregate choice fractions. Stored
/// as decimal text and parsed on first use.
std::vector<EmpiricalRecord> kt_suite();

/// Empirical attraction factors of one session: observed fraction minus
/// rational fraction, per lottery.
std::vector<double> empirical_attraction(const EmpiricalRecord& record,
                                         const RationalFractions& f,
                                         std::size_t session);

/// A single-session copy of a record whose fractions are the mean over the
/// record's sessions.
EmpiricalRecord pool_sessions(const EmpiricalRecord& record);

/// Means of f, predicted p, observed p and |q_exp| over each record's
/// optimal lottery (the max-p lottery of the aligned prediction).
AggregateReport aggregate(std::span<const EmpiricalRecord> records,
                          std::span<const Prediction> predictions,
                          std::size_t session);

/// Fraction of records whose predicted optimal lottery is also the
/// empirical majority choice of the given session.
double hit_rate(std::span<const EmpiricalRecord> records,
                std::span<const Prediction> predictions,
                std::size_t session);

} // namespace dualchoice
