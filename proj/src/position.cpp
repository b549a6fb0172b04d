#include "riskvec/position.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "riskvec/errors.hpp"

namespace riskvec {

namespace {

// Neumaier-compensated sum; keeps mass checks accurate for large outcome sets.
double stable_sum_of_probabilities(const std::vector<Outcome>& outcomes) {
    double sum = 0.0;
    double compensation = 0.0;
    for (const Outcome& o : outcomes) {
        const double t = sum + o.probability;
        if (std::abs(sum) >= std::abs(o.probability)) {
            compensation += (sum - t) + o.probability;
        } else {
            compensation += (o.probability - t) + sum;
        }
        sum = t;
    }
    return sum + compensation;
}

constexpr double mass_reject_tolerance = 1e-9;
constexpr double mass_renormalize_tolerance = 1e-12;

} // namespace

Position::Position(std::vector<Outcome> outcomes) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) {
        throw ValidationError("position must have at least one outcome");
    }
    for (const Outcome& o : outcomes_) {
        if (!std::isfinite(o.payoff) || !std::isfinite(o.probability)) {
            throw ValidationError("position outcomes must be finite");
        }
        if (o.probability <= 0.0) {
            throw ValidationError("every outcome probability must be positive");
        }
    }

    std::stable_sort(outcomes_.begin(), outcomes_.end(),
                     [](const Outcome& a, const Outcome& b) { return a.payoff < b.payoff; });

    // Merge duplicate payoffs in place.
    std::size_t write = 0;
    for (std::size_t read = 1; read < outcomes_.size(); ++read) {
        if (outcomes_[read].payoff == outcomes_[write].payoff) {
            outcomes_[write].probability += outcomes_[read].probability;
        } else {
            outcomes_[++write] = outcomes_[read];
        }
    }
    outcomes_.resize(write + 1);

    const double mass = stable_sum_of_probabilities(outcomes_);
    const double drift = std::abs(mass - 1.0);
    if (drift > mass_reject_tolerance) {
        throw MassError("outcome probabilities sum to " + std::to_string(mass) +
                        ", not 1 within 1e-9");
    }
    if (drift > mass_renormalize_tolerance) {
        for (Outcome& o : outcomes_) {
            o.probability /= mass;
        }
    }
}

double cdf(const Position& p, double x) {
    double cum = 0.0;
    for (const Outcome& o : p.outcomes()) {
        if (o.payoff > x) {
            break;
        }
        cum += o.probability;
    }
    return cum;
}

double cdf_left(const Position& p, double x) {
    double cum = 0.0;
    for (const Outcome& o : p.outcomes()) {
        if (o.payoff >= x) {
            break;
        }
        cum += o.probability;
    }
    return cum;
}

double quantile(const Position& p, double alpha, QuantileConvention conv) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ValidationError("quantile level must lie strictly inside (0, 1)");
    }
    const double target = 1.0 - alpha;
    const bool strict = conv == QuantileConvention::largest;
    double cum = 0.0;
    for (const Outcome& o : p.outcomes()) {
        cum += o.probability;
        if (strict ? cum > target : cum >= target) {
            return o.payoff;
        }
    }
    throw DegenerateSupportError("no payoff reaches the quantile mass target");
}

Position scale(const Position& p, double lambda) {
    if (lambda < 0.0) {
        throw NegativeScaleError("scale factor must be nonnegative");
    }
    if (lambda == 0.0) {
        return Position({{0.0, 1.0}});
    }
    std::vector<Outcome> scaled = p.outcomes();
    for (Outcome& o : scaled) {
        o.payoff *= lambda;
    }
    return Position(std::move(scaled));
}

Position shift(const Position& p, double offset) {
    std::vector<Outcome> shifted = p.outcomes();
    for (Outcome& o : shifted) {
        o.payoff += offset;
    }
    return Position(std::move(shifted));
}

Position independent_sum(const Position& a, const Position& b, std::size_t max_outcomes) {
    const std::size_t pairs = a.size() * b.size();
    if (pairs > max_outcomes) {
        throw SizeError("convolution would produce " + std::to_string(pairs) +
                        " outcomes, above the cap of " + std::to_string(max_outcomes));
    }
    std::vector<Outcome> combined;
    combined.reserve(pairs);
    for (const Outcome& oa : a.outcomes()) {
        for (const Outcome& ob : b.outcomes()) {
            combined.push_back({oa.payoff + ob.payoff, oa.probability * ob.probability});
        }
    }
    return Position(std::move(combined));
}

} // namespace riskvec
