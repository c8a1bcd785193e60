#include "dualchoice/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "dualchoice/error.hpp"

namespace dualchoice {

RationalFractions::RationalFractions(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.empty()) {
        throw DomainError("rational fractions: empty vector");
    }
    double sum = 0.0;
    for (double v : values_) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DomainError("rational fractions: entry " + std::to_string(v) +
                              " outside [0, 1]");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kFractionSumTol) {
        throw DomainError("rational fractions: entries sum to " + std::to_string(sum) +
                          ", expected 1");
    }
}

RationalFractions luce_weights(std::span<const double> attributes) {
    if (attributes.empty()) {
        throw DomainError("luce weights: empty attribute list");
    }
    double total = 0.0;
    for (double a : attributes) {
        if (a < 0.0) {
            throw DomainError("luce weights: negative attribute " + std::to_string(a));
        }
        total += a;
    }
    std::vector<double> weights(attributes.size());
    if (total == 0.0) {
        std::fill(weights.begin(), weights.end(), 1.0 / double(attributes.size()));
    } else {
        for (std::size_t i = 0; i < attributes.size(); ++i) {
            weights[i] = attributes[i] / total;
        }
    }
    return RationalFractions(std::move(weights));
}

namespace {

std::vector<double> expected_utilities(const ChoiceSet& choice_set, const UtilityFunction& u) {
    std::vector<double> utilities;
    utilities.reserve(choice_set.size());
    for (const Lottery& lottery : choice_set.lotteries()) {
        utilities.push_back(expected_utility(lottery, u));
    }
    return utilities;
}

} // namespace

RationalFractions rational_fractions(const ChoiceSet& choice_set, const UtilityFunction& u) {
    std::vector<double> utilities = expected_utilities(choice_set, u);

    const bool any_negative = std::any_of(utilities.begin(), utilities.end(),
                                          [](double v) { return v < -kUtilitySignTol; });
    if (!any_negative) {
        for (double& v : utilities) {
            if (v < 0.0) v = 0.0; // inside the sign tolerance
        }
        return luce_weights(utilities);
    }

    const bool all_negative = std::all_of(utilities.begin(), utilities.end(),
                                          [](double v) { return v < -kUtilitySignTol; });
    if (all_negative) {
        std::vector<double> inverse(utilities.size());
        for (std::size_t i = 0; i < utilities.size(); ++i) {
            inverse[i] = 1.0 / std::abs(utilities[i]);
        }
        return luce_weights(inverse);
    }

    // Mixed signs, or zero next to negative: shift so the minimum maps to 0.
    const double min_utility = *std::min_element(utilities.begin(), utilities.end());
    for (double& v : utilities) {
        v -= min_utility;
    }
    return luce_weights(utilities);
}

RationalFractions rational_fractions(const ChoiceSet& choice_set, const UtilityFunction& u,
                                     double wealth_shift) {
    std::vector<double> utilities = expected_utilities(choice_set, u);
    for (double& v : utilities) {
        v += wealth_shift;
        if (v < -kUtilitySignTol) {
            throw DomainError("rational fractions: wealth shift " + std::to_string(wealth_shift) +
                              " leaves a negative utility");
        }
        if (v < 0.0) v = 0.0;
    }
    return luce_weights(utilities);
}

} // namespace dualchoice
