#include "dualchoice/lottery.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

#include "dualchoice/error.hpp"

namespace dualchoice {

UtilityFunction::UtilityFunction()
    : name_("identity"), fn_([](double x) { return x; }) {}

UtilityFunction::UtilityFunction(std::string name, std::function<double(double)> fn)
    : name_(std::move(name)), fn_(std::move(fn)) {
    if (!fn_) {
        throw DomainError("utility function '" + name_ + "' is empty");
    }
    if (fn_(0.0) != 0.0) {
        throw DomainError("utility function '" + name_ + "' does not map 0 to 0");
    }
}

Lottery::Lottery(std::string label, std::vector<Payoff> outcomes)
    : label_(std::move(label)) {
    if (outcomes.empty()) {
        throw ValidationError("lottery '" + label_ + "': no outcomes");
    }
    double sum = 0.0;
    outcomes_.reserve(outcomes.size());
    for (const Payoff& o : outcomes) {
        if (!std::isfinite(o.value)) {
            throw ValidationError("lottery '" + label_ + "': payoff value is not finite");
        }
        if (!(o.probability >= 0.0 && o.probability <= 1.0)) {
            throw ValidationError("lottery '" + label_ + "': outcome probability " +
                                  std::to_string(o.probability) + " outside [0, 1]");
        }
        sum += o.probability;
        if (o.probability > 0.0) { // impossible outcomes carry no weight anywhere
            outcomes_.push_back(o);
        }
    }
    if (std::abs(sum - 1.0) > kProbabilitySumTol) {
        throw ValidationError("lottery '" + label_ + "': outcome probabilities sum to " +
                              std::to_string(sum) + ", expected 1");
    }
    if (outcomes_.empty()) {
        throw ValidationError("lottery '" + label_ + "': all outcomes have zero probability");
    }
    if (sum != 1.0) {
        for (Payoff& o : outcomes_) {
            o.probability /= sum;
        }
    }
}

ChoiceSet::ChoiceSet(std::string label, std::vector<Lottery> lotteries)
    : label_(std::move(label)), lotteries_(std::move(lotteries)) {
    if (lotteries_.empty()) {
        throw ValidationError("choice set '" + label_ + "': no lotteries");
    }
    std::unordered_set<std::string> seen;
    for (const Lottery& l : lotteries_) {
        if (!seen.insert(l.label()).second) {
            throw ValidationError("choice set '" + label_ + "': duplicate lottery label '" +
                                  l.label() + "'");
        }
    }
}

double expected_utility(const Lottery& lottery, const UtilityFunction& u) {
    double total = 0.0;
    for (const Payoff& o : lottery.outcomes()) {
        total += u(o.value) * o.probability;
    }
    return total;
}

int gain_loss_difference(const Lottery& lottery, const UtilityFunction& u) {
    int diff = 0;
    for (const Payoff& o : lottery.outcomes()) {
        const double util = u(o.value);
        if (util > 0.0) {
            ++diff;
        } else if (util < 0.0) {
            --diff;
        }
    }
    return diff;
}

Lottery complete_lottery(std::string label, std::vector<Payoff> outcomes) {
    double sum = 0.0;
    for (const Payoff& o : outcomes) {
        if (!(o.probability >= 0.0 && o.probability <= 1.0)) {
            throw ValidationError("lottery '" + label + "': outcome probability " +
                                  std::to_string(o.probability) + " outside [0, 1]");
        }
        sum += o.probability;
    }
    if (sum > 1.0 + kProbabilitySumTol) {
        throw ValidationError("lottery '" + label + "': outcome probabilities sum to " +
                              std::to_string(sum) + ", above 1");
    }
    if (sum < 1.0 - kProbabilitySumTol) {
        outcomes.push_back(Payoff{0.0, 1.0 - sum});
    }
    return Lottery(std::move(label), std::move(outcomes));
}

} // namespace dualchoice
