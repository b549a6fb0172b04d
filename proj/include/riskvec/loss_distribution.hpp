#pragma once

#include <vector>

#include "riskvec/position.hpp"

namespace riskvec {

struct LossAtom {
    double loss = 0.0;
    double probability = 0.0;

    friend bool operator==(const LossAtom&, const LossAtom&) = default;
};

/// Linear density on [a, b]: f(a) = f_a, f(b) = f_b, interpolated linearly.
struct DensitySegment {
    double a = 0.0;
    double b = 0.0;
    double f_a = 0.0;
    double f_b = 0.0;

    double width() const noexcept { return b - a; }
    double mass() const noexcept { return 0.5 * (f_a + f_b) * (b - a); }
    double density_at(double x) const noexcept {
        return f_a + (f_b - f_a) * ((x - a) / (b - a));
    }

    friend bool operator==(const DensitySegment&, const DensitySegment&) = default;
};

/// An exactly-represented mixed loss distribution: point masses plus
/// piecewise-linear density segments. Canonical after construction: atoms
/// sorted ascending with duplicates merged, segments sorted with pairwise
/// disjoint interiors, identically-zero segments dropped, total mass one
/// within 1e-12 (renormalized when drift exceeds 1e-12, rejected beyond
/// 1e-9).
class LossDistribution {
public:
    LossDistribution(std::vector<LossAtom> atoms, std::vector<DensitySegment> segments);

    const std::vector<LossAtom>& atoms() const noexcept { return atoms_; }
    const std::vector<DensitySegment>& segments() const noexcept { return segments_; }

    /// Smallest / largest point of the positive-mass support.
    double min_support() const;
    double max_support() const;

    friend bool operator==(const LossDistribution&, const LossDistribution&) = default;

private:
    std::vector<LossAtom> atoms_;
    std::vector<DensitySegment> segments_;
};

/// Loss distribution of a position: an atom at -payoff for every outcome.
LossDistribution to_loss(const Position& p);

/// P(loss <= x), right-continuous; an atom at x contributes fully.
double cdf(const LossDistribution& l, double x);

/// P(loss < x).
double cdf_left(const LossDistribution& l, double x);

struct PartialExpectation {
    double mass = 0.0;
    double first_moment = 0.0;

    friend bool operator==(const PartialExpectation&, const PartialExpectation&) = default;
};

/// Mass and first moment of the loss over [lo, hi], atoms at either
/// boundary included in full. Segment contributions are closed-form
/// (trapezoid mass, exact first moment of a linear density); no numeric
/// quadrature is involved. An empty interval (lo > hi) yields (0, 0).
PartialExpectation partial_expectation(const LossDistribution& l, double lo, double hi);

/// Expected loss.
double mean(const LossDistribution& l);

/// Quantile of the loss itself at level alpha. With the `smallest`
/// convention this is the upper loss quantile inf{y : P(loss <= y) > alpha},
/// with `largest` the lower one inf{y : P(loss <= y) >= alpha}; the naming
/// follows the convention of the implied P&L quantile so that
/// var(l, alpha, conv) == loss_quantile(l, alpha, conv) always holds.
double loss_quantile(const LossDistribution& l, double alpha, QuantileConvention conv);

/// Alpha-quantile of the implied P&L variable X = -loss, under the given
/// convention. Satisfies quantile(to_loss(p), ...) == quantile(p, ...).
double quantile(const LossDistribution& l, double alpha, QuantileConvention conv);

} // namespace riskvec
