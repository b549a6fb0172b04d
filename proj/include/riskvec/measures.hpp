#pragma once

#include <span>
#include <vector>

#include "riskvec/loss_distribution.hpp"
#include "riskvec/position.hpp"

namespace riskvec {

/// alpha-Value at Risk: the negated alpha-quantile of the P&L.
///
/// The default convention is `smallest`; at an atom whose tail mass equals
/// exactly 1 - alpha the two conventions diverge, and the smallest one is
/// the convention under which a 96%/4% loan has a 95%-VaR at the loss
/// boundary rather than past it.
double var(const Position& p, double alpha,
           QuantileConvention conv = QuantileConvention::smallest);
double var(const LossDistribution& l, double alpha,
           QuantileConvention conv = QuantileConvention::smallest);

/// True iff var(p, alpha) <= 0: the position needs no extra cash on hand.
bool is_var_acceptable(const Position& p, double alpha,
                       QuantileConvention conv = QuantileConvention::smallest);

/// Tail Conditional Expectation, taken literally: the negated conditional
/// expectation of the P&L over the event {X <= -VaR}, with the full atom
/// mass at the boundary included. On atomic distributions the conditioning
/// mass may therefore exceed 1 - alpha; no atom-splitting correction is
/// applied. Throws EmptyTailError if the event has zero probability.
double tce(const Position& p, double alpha,
           QuantileConvention conv = QuantileConvention::smallest);
double tce(const LossDistribution& l, double alpha,
           QuantileConvention conv = QuantileConvention::smallest);

/// Maximum Loss: the essential supremum of the loss distribution.
double max_loss(const Position& p);
double max_loss(const LossDistribution& l);

struct MeasureEntry {
    double level = 0.0;
    double var = 0.0;
    double tce = 0.0;

    friend bool operator==(const MeasureEntry&, const MeasureEntry&) = default;
};

/// VaR and TCE at several levels plus the Maximum Loss. Levels are strictly
/// increasing inside (0, 1) and each entry satisfies var <= tce <= max_loss.
class MeasureVector {
public:
    MeasureVector(std::vector<MeasureEntry> entries, double max_loss);

    const std::vector<MeasureEntry>& entries() const noexcept { return entries_; }
    double max_loss() const noexcept { return max_loss_; }

    friend bool operator==(const MeasureVector&, const MeasureVector&) = default;

private:
    std::vector<MeasureEntry> entries_;
    double max_loss_ = 0.0;
};

MeasureVector measure_vector(const LossDistribution& l, std::span<const double> levels,
                             QuantileConvention conv = QuantileConvention::smallest);
MeasureVector measure_vector(const Position& p, std::span<const double> levels,
                             QuantileConvention conv = QuantileConvention::smallest);

/// A coherent risk measure given by worst-case expected loss over a finite
/// set of probability vectors ("scenarios") on a shared outcome index set.
class ScenarioMeasure {
public:
    explicit ScenarioMeasure(std::vector<std::vector<double>> scenarios);

    const std::vector<std::vector<double>>& scenarios() const noexcept { return scenarios_; }
    std::size_t dimension() const noexcept { return scenarios_.front().size(); }

    friend bool operator==(const ScenarioMeasure&, const ScenarioMeasure&) = default;

private:
    std::vector<std::vector<double>> scenarios_;
};

/// max over scenarios of the expected negated payoff.
double scenario_measure_eval(const ScenarioMeasure& m, std::span<const double> payoffs);

} // namespace riskvec
