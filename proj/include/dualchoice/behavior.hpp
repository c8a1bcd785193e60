#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dualchoice/attraction.hpp"
#include "dualchoice/lottery.hpp"
#include "dualchoice/rational.hpp"

namespace dualchoice {

/// Tolerance under which two behavioral probabilities count as equal.
inline constexpr double kPreferenceTol = 1e-12;

/// How prior attraction factors are assigned in predict():
///   QuarterLaw  - binary choice sets only; +/-1/4 by quality comparison.
///   MultiPrior  - rank all lotteries by (Q, N), assign multi_priors().
///   Tanh        - binary choice sets only; parametric tanh factor.
enum class PriorMode { QuarterLaw, MultiPrior, Tanh };

struct PredictConfig {
    UtilityFunction utility{};
    double base = kDefaultQualityBase;
    PriorMode prior_mode = PriorMode::QuarterLaw;
    TanhParams tanh{};
    double noise = kDefaultNoise;
};

enum class PreferenceRelation { Preferred, Indifferent, Dispreferred };

/// Full prediction for a choice set: per-lottery rational fraction f,
/// attraction factor q, behavioral probability p and attraction assessment,
/// plus the index of the optimal (max-p) lottery. Ties resolve to the
/// lowest index and are flagged.
struct Prediction {
    std::vector<double> f;
    std::vector<double> q;
    std::vector<double> p;
    std::vector<AttractionAssessment> assessments;
    std::size_t optimal_index = 0;
    bool argmax_tie = false;
};

/// Behavioral probabilities p = f + q with the simplex repair. Each raw sum
/// is clamped to [0, 1]; when nothing clamps the raw vector is returned
/// unchanged, so q = 0 reproduces f exactly. When clamping breaks the
/// normalization, the residual is restored: for two alternatives the
/// partner entry becomes one minus the clamped entry; for more, the
/// residual is spread in equal shares over the entries strictly inside
/// (0, 1), re-clamping and iterating until the sum is 1. Requires q to sum
/// to zero within kFractionSumTol.
std::vector<double> behavioral_probabilities(const RationalFractions& f,
                                             std::span<const double> q);

/// Runs the whole pipeline: rational fractions, quality assessment, prior
/// attraction factors for the configured mode, behavioral probabilities and
/// the optimal index.
Prediction predict(const ChoiceSet& choice_set, const PredictConfig& config = {});

/// Preference of lottery i over lottery j implied by a prediction.
PreferenceRelation preference(const Prediction& prediction, std::size_t i, std::size_t j);

/// Indices of the lotteries sorted from most to least attractive by
/// (Q, then N); ties keep their original order. This n-ary ranking is the
/// deterministic extension of the pairwise quality comparison used by the
/// MultiPrior mode.
std::vector<std::size_t> attractiveness_ranking(const ChoiceSet& choice_set,
                                                const UtilityFunction& u = {},
                                                double base = kDefaultQualityBase);

} // namespace dualchoice
