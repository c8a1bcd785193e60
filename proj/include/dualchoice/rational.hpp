#pragma once

#include <span>
#include <vector>

#include "dualchoice/lottery.hpp"

namespace dualchoice {

/// Normalization tolerance for probability vectors (fractions sum to 1).
inline constexpr double kFractionSumTol = 1e-9;

/// Absolute tolerance below which a utility counts as zero when deciding
/// between the non-negative and negative Luce attribute rules.
inline constexpr double kUtilitySignTol = 1e-12;

/// Per-lottery probabilities of choice under purely rational deliberation.
/// Entries lie in [0, 1] and sum to 1 within kFractionSumTol.
class RationalFractions {
public:
    explicit RationalFractions(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

private:
    std::vector<double> values_;
};

/// Luce rule: weight n is attribute n divided by the attribute sum.
/// Attributes must be non-negative; an all-zero attribute vector yields the
/// uniform distribution.
RationalFractions luce_weights(std::span<const double> attributes);

/// Rational fractions of a choice set from its expected utilities.
/// All utilities non-negative: Luce weights over the utilities themselves.
/// All strictly negative: Luce weights over the inverse utility magnitudes,
/// so the smaller loss gets the larger fraction. Mixed signs, or a zero
/// utility next to a negative one: every utility is shifted by minus the
/// minimum (the worst alternative maps to zero) and the non-negative rule
/// applies.
RationalFractions rational_fractions(const ChoiceSet& choice_set,
                                     const UtilityFunction& u = {});

/// Same, but with a caller-chosen wealth shift added to every utility
/// before applying the non-negative rule. All shifted utilities must be
/// non-negative.
RationalFractions rational_fractions(const ChoiceSet& choice_set,
                                     const UtilityFunction& u,
                                     double wealth_shift);

} // namespace dualchoice
