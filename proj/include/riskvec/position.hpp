#pragma once

#include <cstddef>
#include <vector>

namespace riskvec {

/// Which of the two canonical alpha-quantiles to use at an atom of the cdf.
/// The two coincide except where the cdf has a flat stretch at exactly
/// 1 - alpha; there `smallest` picks the left end and `largest` the right.
enum class QuantileConvention { smallest, largest };

struct Outcome {
    double payoff = 0.0;
    double probability = 0.0;

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

inline constexpr std::size_t default_convolution_cap = 1'000'000;

/// A finite discrete P&L random variable. Always canonical: outcomes sorted
/// ascending by payoff, payoffs pairwise distinct, probabilities positive
/// and summing to one within 1e-12.
///
/// Construction canonicalizes: duplicate payoffs are merged by summing
/// probability, and total mass is renormalized when it drifts from one by
/// more than 1e-12 (inputs off by more than 1e-9 are rejected).
class Position {
public:
    explicit Position(std::vector<Outcome> outcomes);

    const std::vector<Outcome>& outcomes() const noexcept { return outcomes_; }
    std::size_t size() const noexcept { return outcomes_.size(); }

    double min_payoff() const noexcept { return outcomes_.front().payoff; }
    double max_payoff() const noexcept { return outcomes_.back().payoff; }

    friend bool operator==(const Position&, const Position&) = default;

private:
    std::vector<Outcome> outcomes_;
};

/// P(X <= x).
double cdf(const Position& p, double x);

/// P(X < x).
double cdf_left(const Position& p, double x);

/// The smallest alpha-quantile inf{x : P(X <= x) >= 1 - alpha} or the
/// largest alpha-quantile inf{x : P(X <= x) > 1 - alpha}.
/// Requires 0 < alpha < 1.
double quantile(const Position& p, double alpha, QuantileConvention conv);

/// Payoffs multiplied by lambda >= 0. Scaling by zero collapses to the
/// sure payoff 0.
Position scale(const Position& p, double lambda);

/// Payoffs increased by `offset`; probabilities unchanged.
Position shift(const Position& p, double offset);

/// Distribution of X + Y for independent X, Y: the discrete convolution.
/// Throws SizeError when the pre-merge outcome count would exceed the cap.
Position independent_sum(const Position& a, const Position& b,
                         std::size_t max_outcomes = default_convolution_cap);

} // namespace riskvec
