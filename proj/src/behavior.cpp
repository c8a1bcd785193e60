#include "dualchoice/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dualchoice/error.hpp"

namespace dualchoice {

std::vector<double> behavioral_probabilities(const RationalFractions& f,
                                             std::span<const double> q) {
    const std::size_t n = f.size();
    if (q.size() != n) {
        throw DomainError("behavioral probabilities: got " + std::to_string(q.size()) +
                          " attraction factors for " + std::to_string(n) + " fractions");
    }
    const double q_sum = std::accumulate(q.begin(), q.end(), 0.0);
    if (std::abs(q_sum) > kFractionSumTol) {
        throw DomainError("behavioral probabilities: attraction factors sum to " +
                          std::to_string(q_sum) + ", expected 0");
    }

    std::vector<double> p(n);
    bool clamped = false;
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = f[i] + q[i];
        clamped = clamped || p[i] < 0.0 || p[i] > 1.0;
    }
    if (!clamped) {
        return p; // untouched: q = 0 must reproduce f exactly
    }

    if (n == 2) {
        // The raw vector sums to 1, so a violation pushes one entry below 0
        // and the other above 1 by the same amount.
        const double p0 = std::clamp(p[0], 0.0, 1.0);
        return {p0, 1.0 - p0};
    }

    // Clamp where the retract binds, then restore the normalization by
    // spreading the residual in equal shares over the interior entries,
    // re-clamping until the sum is 1. If no interior entry is left, entries
    // stuck at the helpful bound are released again.
    std::vector<char> frozen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] < 0.0) {
            p[i] = 0.0;
            frozen[i] = 1;
        } else if (p[i] > 1.0) {
            p[i] = 1.0;
            frozen[i] = 1;
        }
    }

    const std::size_t max_rounds = 8 * n + 8;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        const double sum = std::accumulate(p.begin(), p.end(), 0.0);
        const double residual = 1.0 - sum;
        if (std::abs(residual) <= double(n) * 1e-15) {
            break;
        }
        std::vector<std::size_t> interior;
        for (std::size_t i = 0; i < n; ++i) {
            if (!frozen[i] && p[i] > 0.0 && p[i] < 1.0) {
                interior.push_back(i);
            }
        }
        if (interior.empty()) {
            for (std::size_t i = 0; i < n; ++i) {
                if ((residual < 0.0 && p[i] == 1.0) || (residual > 0.0 && p[i] == 0.0)) {
                    frozen[i] = 0;
                    interior.push_back(i);
                }
            }
            if (interior.empty()) {
                break;
            }
        }
        const double share = residual / double(interior.size());
        for (std::size_t i : interior) {
            p[i] += share;
            if (p[i] <= 0.0) {
                p[i] = 0.0;
                frozen[i] = 1;
            } else if (p[i] >= 1.0) {
                p[i] = 1.0;
                frozen[i] = 1;
            }
        }
    }

    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    if (std::abs(sum - 1.0) > kFractionSumTol) {
        throw DomainError("behavioral probabilities: normalization could not be restored, sum " +
                          std::to_string(sum));
    }
    return p;
}

std::vector<std::size_t> attractiveness_ranking(const ChoiceSet& choice_set,
                                                const UtilityFunction& u, double base) {
    const auto& lotteries = choice_set.lotteries();
    std::vector<std::size_t> order(lotteries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Insertion sort with the tolerant pairwise comparison: stable and free
    // of strict-weak-ordering assumptions the tolerance cannot guarantee.
    for (std::size_t i = 1; i < order.size(); ++i) {
        const std::size_t current = order[i];
        std::size_t j = i;
        while (j > 0 &&
               compare_attractiveness(lotteries[current], lotteries[order[j - 1]], u, base) ==
                   AttractionOrdering::AMoreAttractive) {
            order[j] = order[j - 1];
            --j;
        }
        order[j] = current;
    }
    return order;
}

namespace {

std::vector<double> prior_factors(const ChoiceSet& choice_set, const PredictConfig& config) {
    const auto& lotteries = choice_set.lotteries();
    const std::size_t n = lotteries.size();
    std::vector<double> q(n, 0.0);
    if (n < 2) {
        return q; // a lone alternative has zero attraction by the alternation law
    }
    switch (config.prior_mode) {
        case PriorMode::QuarterLaw: {
            if (n != 2) {
                throw DomainError("predict: quarter-law priors need a binary choice set, got " +
                                  std::to_string(n) + " lotteries (use the multi-prior mode)");
            }
            std::tie(q[0], q[1]) =
                binary_priors(lotteries[0], lotteries[1], config.utility, config.base);
            break;
        }
        case PriorMode::MultiPrior: {
            const std::vector<std::size_t> ranking =
                attractiveness_ranking(choice_set, config.utility, config.base);
            const std::vector<double> priors = multi_priors(n);
            for (std::size_t rank = 0; rank < n; ++rank) {
                q[ranking[rank]] = priors[rank];
            }
            break;
        }
        case PriorMode::Tanh: {
            if (n != 2) {
                throw DomainError("predict: tanh priors need a binary choice set, got " +
                                  std::to_string(n) + " lotteries");
            }
            const double u_a = expected_utility(lotteries[0], config.utility);
            const double u_b = expected_utility(lotteries[1], config.utility);
            std::tie(q[0], q[1]) = tanh_attraction(u_a, u_b, config.tanh);
            break;
        }
    }
    return q;
}

} // namespace

Prediction predict(const ChoiceSet& choice_set, const PredictConfig& config) {
    const auto& lotteries = choice_set.lotteries();
    const std::size_t n = lotteries.size();

    Prediction prediction;
    prediction.f = rational_fractions(choice_set, config.utility).values();
    prediction.q = prior_factors(choice_set, config);
    prediction.p = behavioral_probabilities(RationalFractions(prediction.f), prediction.q);

    prediction.assessments.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        AttractionAssessment assessment;
        assessment.quality = quality_functional(lotteries[i], config.utility, config.base);
        assessment.gain_loss = gain_loss_difference(lotteries[i], config.utility);
        assessment.q = prediction.q[i];
        assessment.quality_class = prediction.q[i] > 0.0   ? QualityClass::Positive
                                   : prediction.q[i] < 0.0 ? QualityClass::Negative
                                                           : QualityClass::Neutral;
        prediction.assessments.push_back(assessment);
    }

    prediction.optimal_index = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (prediction.p[i] > prediction.p[prediction.optimal_index]) {
            prediction.optimal_index = i;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i != prediction.optimal_index &&
            std::abs(prediction.p[i] - prediction.p[prediction.optimal_index]) <= kPreferenceTol) {
            prediction.argmax_tie = true;
            break;
        }
    }
    return prediction;
}

PreferenceRelation preference(const Prediction& prediction, std::size_t i, std::size_t j) {
    if (i >= prediction.p.size() || j >= prediction.p.size()) {
        throw DomainError("preference: lottery index out of range");
    }
    const double diff = prediction.p[i] - prediction.p[j];
    if (std::abs(diff) <= kPreferenceTol) return PreferenceRelation::Indifferent;
    return diff > 0.0 ? PreferenceRelation::Preferred : PreferenceRelation::Dispreferred;
}

} // namespace dualchoice
