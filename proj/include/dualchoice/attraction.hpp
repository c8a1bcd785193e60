#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dualchoice/lottery.hpp"

namespace dualchoice {

/// Emotional quality class of an alternative. A Positive alternative has an
/// attraction factor in (0, 1], a Negative one in [-1, 0), a Neutral one
/// exactly 0.
enum class QualityClass { Positive, Negative, Neutral };

/// Outcome of comparing the attractiveness of two lotteries.
enum class AttractionOrdering { AMoreAttractive, BMoreAttractive, EquallyAttractive };

/// Per-lottery attraction summary: quality functional value, gain-loss
/// count, quality class and the prior attraction factor.
struct AttractionAssessment {
    double quality = 0.0;
    int gain_loss = 0;
    QualityClass quality_class = QualityClass::Neutral;
    double q = 0.0;
};

/// Parameters of the parametric tanh attraction factor: a scales the
/// utility difference inside the tanh, beta is the softness of the logistic
/// weights (both in inverse-utility units).
struct TanhParams {
    double a = 1.0;
    double beta = 1.0;

    void validate() const; // a > 0, beta finite and >= 0
};

/// Default base of the quality functional.
inline constexpr double kDefaultQualityBase = 30.0;

/// Default width of the neutral band for empirical classification, matching
/// the typical statistical error of aggregate choice experiments.
inline constexpr double kDefaultNoise = 0.1;

/// Relative tolerance under which two quality-functional values are
/// considered equal (absolute when both magnitudes are below 1).
inline constexpr double kQualityEqualityTol = 1e-9;

/// The quality base lambda^(lambda / ((lambda - 1) p)): the payoff scaling
/// at which a lottery whose payoff grows by the factor lambda, while its
/// probability p shrinks by the same factor, becomes equally attractive.
/// Requires lambda > 1 and 0 < p <= 1. At lambda = 10, p = 3/4 this is
/// 10^(40/27), commonly rounded to the default base 30.
double quality_base(double lambda, double p);

/// Quality functional: sum of u(x) * base^p over the outcomes. Payoff
/// utility enters linearly, probability exponentially, reflecting that
/// decision makers attend foremost to the probabilities. Requires base > 1.
double quality_functional(const Lottery& lottery, const UtilityFunction& u = {},
                          double base = kDefaultQualityBase);

/// Ranks two lotteries by quality: higher Q wins; on equal Q (within tol)
/// the larger gain-loss count wins; equal on both counts as equally
/// attractive.
AttractionOrdering compare_attractiveness(const Lottery& a, const Lottery& b,
                                          const UtilityFunction& u = {},
                                          double base = kDefaultQualityBase,
                                          double tol = kQualityEqualityTol);

/// Non-informative prior attraction factors for a binary choice: +1/4 for
/// the more attractive lottery, -1/4 for the other, (0, 0) when they are
/// equally attractive. The pair always sums to zero.
std::pair<double, double> binary_priors(const Lottery& a, const Lottery& b,
                                        const UtilityFunction& u = {},
                                        double base = kDefaultQualityBase);

/// Non-informative prior attraction factors for n >= 2 alternatives already
/// ranked by attractiveness (entry 0 belongs to the most attractive).
/// Entries are strictly decreasing with a uniform gap, sum to zero, and
/// their mean magnitude is exactly 1/4 for every n.
std::vector<double> multi_priors(std::size_t n);

/// Parametric attraction factor for two alternatives with utilities u_a and
/// u_b: the smaller logistic weight times tanh(a * (u_a - u_b)), and its
/// negation for the second alternative. Computed from the utility
/// difference so large utilities cannot overflow the exponentials.
std::pair<double, double> tanh_attraction(double u_a, double u_b,
                                          const TanhParams& params);

/// Classifies an alternative from data: Neutral while |p_exp - f| stays
/// below the noise threshold, otherwise Positive or Negative with the sign
/// of p_exp - f.
QualityClass classify_empirical(double f, double p_exp, double noise = kDefaultNoise);

} // namespace dualchoice
