#include "riskvec/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "riskvec/errors.hpp"

namespace riskvec {

namespace {

// Slack for the var <= tce <= ml consistency check; purely float headroom.
double consistency_slack(double a, double b) {
    return 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<double> validated_levels(std::span<const double> levels) {
    if (levels.empty()) {
        throw ValidationError("at least one level is required");
    }
    std::vector<double> sorted(levels.begin(), levels.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!(sorted[i] > 0.0 && sorted[i] < 1.0)) {
            throw ValidationError("levels must lie strictly inside (0, 1)");
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw ValidationError("levels must be pairwise distinct");
        }
    }
    return sorted;
}

} // namespace

double var(const Position& p, double alpha, QuantileConvention conv) {
    return -quantile(p, alpha, conv);
}

double var(const LossDistribution& l, double alpha, QuantileConvention conv) {
    return -quantile(l, alpha, conv);
}

bool is_var_acceptable(const Position& p, double alpha, QuantileConvention conv) {
    return var(p, alpha, conv) <= 0.0;
}

double tce(const Position& p, double alpha, QuantileConvention conv) {
    const double threshold = quantile(p, alpha, conv); // == -VaR
    double mass = 0.0;
    double sum = 0.0;
    for (const Outcome& o : p.outcomes()) {
        if (o.payoff > threshold) {
            break;
        }
        mass += o.probability;
        sum += o.payoff * o.probability;
    }
    if (mass <= 0.0) {
        throw EmptyTailError("conditioning event {X <= -VaR} has zero probability");
    }
    return -sum / mass;
}

double tce(const LossDistribution& l, double alpha, QuantileConvention conv) {
    const double threshold = loss_quantile(l, alpha, conv); // == VaR
    const PartialExpectation tail =
        partial_expectation(l, threshold, std::numeric_limits<double>::infinity());
    if (tail.mass <= 0.0) {
        throw EmptyTailError("conditioning event {loss >= VaR} has zero probability");
    }
    return tail.first_moment / tail.mass;
}

double max_loss(const Position& p) {
    return -p.min_payoff();
}

double max_loss(const LossDistribution& l) {
    return l.max_support();
}

MeasureVector::MeasureVector(std::vector<MeasureEntry> entries, double max_loss)
    : entries_(std::move(entries)), max_loss_(max_loss) {
    if (entries_.empty()) {
        throw ValidationError("measure vector needs at least one level entry");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const MeasureEntry& e = entries_[i];
        if (!(e.level > 0.0 && e.level < 1.0)) {
            throw ValidationError("measure vector levels must lie strictly inside (0, 1)");
        }
        if (i > 0 && !(e.level > entries_[i - 1].level)) {
            throw ValidationError("measure vector levels must be strictly increasing");
        }
        if (e.tce < e.var - consistency_slack(e.var, e.tce) ||
            max_loss_ < e.tce - consistency_slack(e.tce, max_loss_)) {
            throw ValidationError("measure vector violates var <= tce <= max_loss at level " +
                                  std::to_string(e.level));
        }
    }
}

namespace {

template <typename Dist>
MeasureVector build_measure_vector(const Dist& d, std::span<const double> levels,
                                   QuantileConvention conv) {
    std::vector<MeasureEntry> entries;
    for (double level : validated_levels(levels)) {
        entries.push_back({level, var(d, level, conv), tce(d, level, conv)});
    }
    return MeasureVector(std::move(entries), max_loss(d));
}

} // namespace

MeasureVector measure_vector(const LossDistribution& l, std::span<const double> levels,
                             QuantileConvention conv) {
    return build_measure_vector(l, levels, conv);
}

MeasureVector measure_vector(const Position& p, std::span<const double> levels,
                             QuantileConvention conv) {
    return build_measure_vector(p, levels, conv);
}

ScenarioMeasure::ScenarioMeasure(std::vector<std::vector<double>> scenarios)
    : scenarios_(std::move(scenarios)) {
    if (scenarios_.empty()) {
        throw ValidationError("a scenario measure needs at least one scenario");
    }
    const std::size_t dim = scenarios_.front().size();
    if (dim == 0) {
        throw ValidationError("scenarios must cover at least one outcome");
    }
    for (std::vector<double>& scenario : scenarios_) {
        if (scenario.size() != dim) {
            throw DimensionMismatchError("scenarios must share one outcome index set");
        }
        double sum = 0.0;
        for (double q : scenario) {
            if (!std::isfinite(q) || q < 0.0) {
                throw ValidationError("scenario probabilities must be nonnegative");
            }
            sum += q;
        }
        const double drift = std::abs(sum - 1.0);
        if (drift > 1e-9) {
            throw MassError("scenario probabilities sum to " + std::to_string(sum) +
                            ", not 1 within 1e-9");
        }
        if (drift > 1e-12) {
            for (double& q : scenario) {
                q /= sum;
            }
        }
    }
}

double scenario_measure_eval(const ScenarioMeasure& m, std::span<const double> payoffs) {
    if (payoffs.size() != m.dimension()) {
        throw DimensionMismatchError("payoff vector length does not match the scenario space");
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (const std::vector<double>& scenario : m.scenarios()) {
        double expected_loss = 0.0;
        for (std::size_t i = 0; i < payoffs.size(); ++i) {
            expected_loss += scenario[i] * (-payoffs[i]);
        }
        worst = std::max(worst, expected_loss);
    }
    return worst;
}

} // namespace riskvec
