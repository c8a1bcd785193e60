#include "dualchoice/attraction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dualchoice/error.hpp"

namespace dualchoice {

void TanhParams::validate() const {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError("tanh params: a must be positive and finite, got " + std::to_string(a));
    }
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw DomainError("tanh params: beta must be non-negative and finite, got " +
                          std::to_string(beta));
    }
}

double quality_base(double lambda, double p) {
    if (!(lambda > 1.0) || !std::isfinite(lambda)) {
        throw DomainError("quality base: lambda must be > 1, got " + std::to_string(lambda));
    }
    if (!(p > 0.0 && p <= 1.0)) {
        throw DomainError("quality base: p must be in (0, 1], got " + std::to_string(p));
    }
    return std::pow(lambda, lambda / ((lambda - 1.0) * p));
}

double quality_functional(const Lottery& lottery, const UtilityFunction& u, double base) {
    if (!(base > 1.0) || !std::isfinite(base)) {
        throw DomainError("quality functional: base must be > 1, got " + std::to_string(base));
    }
    double total = 0.0;
    for (const Payoff& o : lottery.outcomes()) {
        total += u(o.value) * std::pow(base, o.probability);
    }
    return total;
}

namespace {

bool qualities_equal(double qa, double qb, double tol) {
    // relative tolerance, falling back to absolute below magnitude 1
    const double scale = std::max({1.0, std::abs(qa), std::abs(qb)});
    return std::abs(qa - qb) <= tol * scale;
}

} // namespace

AttractionOrdering compare_attractiveness(const Lottery& a, const Lottery& b,
                                          const UtilityFunction& u, double base, double tol) {
    if (tol < 0.0) {
        throw DomainError("compare attractiveness: tolerance must be non-negative");
    }
    const double qa = quality_functional(a, u, base);
    const double qb = quality_functional(b, u, base);
    if (!qualities_equal(qa, qb, tol)) {
        return qa > qb ? AttractionOrdering::AMoreAttractive
                       : AttractionOrdering::BMoreAttractive;
    }
    const int na = gain_loss_difference(a, u);
    const int nb = gain_loss_difference(b, u);
    if (na > nb) return AttractionOrdering::AMoreAttractive;
    if (nb > na) return AttractionOrdering::BMoreAttractive;
    return AttractionOrdering::EquallyAttractive;
}

std::pair<double, double> binary_priors(const Lottery& a, const Lottery& b,
                                        const UtilityFunction& u, double base) {
    switch (compare_attractiveness(a, b, u, base)) {
        case AttractionOrdering::AMoreAttractive: return {0.25, -0.25};
        case AttractionOrdering::BMoreAttractive: return {-0.25, 0.25};
        case AttractionOrdering::EquallyAttractive: break;
    }
    return {0.0, 0.0};
}

std::vector<double> multi_priors(std::size_t n) {
    if (n < 2) {
        throw DomainError("multi priors: need at least 2 alternatives, got " + std::to_string(n));
    }
    const auto count = static_cast<long long>(n);
    std::vector<double> priors(n);
    for (long long k = 1; k <= count; ++k) {
        const long long numerator = count - 2 * k + 1;
        if (count % 2 == 0) {
            priors[std::size_t(k - 1)] = double(numerator) / double(2 * count);
        } else {
            priors[std::size_t(k - 1)] =
                double(count * numerator) / double(2 * (count * count - 1));
        }
    }
    return priors;
}

std::pair<double, double> tanh_attraction(double u_a, double u_b, const TanhParams& params) {
    params.validate();
    const double du = u_a - u_b;
    // min of the two logistic weights, written via the utility difference
    const double phi_min = 1.0 / (1.0 + std::exp(params.beta * std::abs(du)));
    const double q_a = phi_min * std::tanh(params.a * du);
    return {q_a, -q_a};
}

QualityClass classify_empirical(double f, double p_exp, double noise) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw DomainError("classify: f must be in [0, 1], got " + std::to_string(f));
    }
    if (!(p_exp >= 0.0 && p_exp <= 1.0)) {
        throw DomainError("classify: p_exp must be in [0, 1], got " + std::to_string(p_exp));
    }
    if (!(noise >= 0.0)) {
        throw DomainError("classify: noise must be non-negative, got " + std::to_string(noise));
    }
    const double diff = p_exp - f;
    if (std::abs(diff) < noise) return QualityClass::Neutral;
    return diff >= noise ? QualityClass::Positive : QualityClass::Negative;
}

} // namespace dualchoice
