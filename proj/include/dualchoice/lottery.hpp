#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dualchoice {

/// One lottery outcome: a monetary payoff and the probability of receiving it.
/// The sign of the value carries the gain/loss meaning.
struct Payoff {
    double value = 0.0;
    double probability = 0.0;
};

/// Tolerance on the probability sum of a lottery. Inputs within this band
/// are renormalized exactly to sum 1.
inline constexpr double kProbabilitySumTol = 1e-6;

/// Maps a payoff value to a utility. Must map 0 to 0 (checked at
/// construction) and be monotone non-decreasing (caller's responsibility).
/// The default is the identity mapping.
class UtilityFunction {
public:
    UtilityFunction();
    UtilityFunction(std::string name, std::function<double(double)> fn);

    double operator()(double x) const { return fn_(x); }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::function<double(double)> fn_;
};

/// A probability distribution over payoffs. Construction validates and
/// canonicalizes the outcomes:
///   - every probability must lie in [0, 1] and every value be finite,
///   - zero-probability outcomes are dropped,
///   - the probability sum must be 1 within kProbabilitySumTol and is then
///     renormalized to sum exactly 1.
/// Immutable after construction.
class Lottery {
public:
    Lottery(std::string label, std::vector<Payoff> outcomes);

    const std::string& label() const { return label_; }
    const std::vector<Payoff>& outcomes() const { return outcomes_; }

private:
    std::string label_;
    std::vector<Payoff> outcomes_;
};

/// An ordered collection of lotteries presented together for one decision.
/// Lottery labels must be unique within the set.
class ChoiceSet {
public:
    ChoiceSet(std::string label, std::vector<Lottery> lotteries);

    const std::string& label() const { return label_; }
    const std::vector<Lottery>& lotteries() const { return lotteries_; }
    std::size_t size() const { return lotteries_.size(); }

private:
    std::string label_;
    std::vector<Lottery> lotteries_;
};

/// Probability-weighted sum of outcome utilities.
double expected_utility(const Lottery& lottery, const UtilityFunction& u = {});

/// Count of gain outcomes minus count of loss outcomes, judged by the sign
/// of the outcome utility. Zero-utility outcomes count as neither.
int gain_loss_difference(const Lottery& lottery, const UtilityFunction& u = {});

/// Builds a lottery from a possibly incomplete outcome list: if the
/// probabilities sum to less than 1, a zero-payoff outcome carrying the
/// residual probability is appended. A sum above 1 + kProbabilitySumTol is
/// a validation error.
Lottery complete_lottery(std::string label, std::vector<Payoff> outcomes);

} // namespace dualchoice
