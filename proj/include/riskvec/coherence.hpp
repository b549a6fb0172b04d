#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "riskvec/position.hpp"

namespace riskvec::coherence {

enum class Axiom {
    monotonicity,
    positive_homogeneity,
    translation_invariance,
    subadditivity,
};

std::string_view axiom_name(Axiom axiom);

/// One recorded axiom violation. `inputs` are the untransformed vehicles the
/// check ran on; together with `parameter` they are enough to replay the
/// evaluation and reproduce lhs/rhs bit-for-bit (see `replay`).
template <class V>
struct Violation {
    std::vector<V> inputs;
    double parameter = std::numeric_limits<double>::quiet_NaN();
    double lhs = 0.0;
    double rhs = 0.0;
};

template <class V>
struct AxiomReport {
    Axiom axiom{};
    bool passed = false;
    std::vector<Violation<V>> violations;
};

/// The operations a family of risk vehicles must support for axiom checking.
/// Positions combine by independent convolution; payoff vectors over a shared
/// outcome space combine pointwise.
template <class V>
struct VehicleOps {
    std::function<V(const V&, double)> scale;
    std::function<V(const V&, double)> shift;
    std::function<V(const V&, const V&)> add;
    std::function<bool(const V&)> is_nonnegative;
};

VehicleOps<Position> position_ops(std::size_t convolution_cap = default_convolution_cap);
VehicleOps<std::vector<double>> vector_ops();

template <class V>
using MeasureFn = std::function<double(const V&)>;

/// if X >= 0 then rho(X) <= 0; vehicles with negative outcomes are skipped.
template <class V>
AxiomReport<V> check_monotonicity(const MeasureFn<V>& rho, std::span<const V> family,
                                  const VehicleOps<V>& ops, double tolerance = 1e-9) {
    AxiomReport<V> report{Axiom::monotonicity, true, {}};
    for (const V& v : family) {
        if (!ops.is_nonnegative(v)) {
            continue;
        }
        const double lhs = rho(v);
        if (lhs > tolerance) {
            report.violations.push_back({{v}, std::numeric_limits<double>::quiet_NaN(), lhs, 0.0});
        }
    }
    report.passed = report.violations.empty();
    return report;
}

/// rho(lambda X) == lambda rho(X) for every lambda >= 0 supplied.
template <class V>
AxiomReport<V> check_homogeneity(const MeasureFn<V>& rho, std::span<const V> family,
                                 const VehicleOps<V>& ops, std::span<const double> scalars,
                                 double tolerance = 1e-9) {
    AxiomReport<V> report{Axiom::positive_homogeneity, true, {}};
    for (const V& v : family) {
        const double base = rho(v);
        for (double lambda : scalars) {
            const double lhs = rho(ops.scale(v, lambda));
            const double rhs = lambda * base;
            if (std::abs(lhs - rhs) > tolerance) {
                report.violations.push_back({{v}, lambda, lhs, rhs});
            }
        }
    }
    report.passed = report.violations.empty();
    return report;
}

/// rho(X + a) == rho(X) - a for every shift a supplied.
template <class V>
AxiomReport<V> check_translation(const MeasureFn<V>& rho, std::span<const V> family,
                                 const VehicleOps<V>& ops, std::span<const double> shifts,
                                 double tolerance = 1e-9) {
    AxiomReport<V> report{Axiom::translation_invariance, true, {}};
    for (const V& v : family) {
        const double base = rho(v);
        for (double a : shifts) {
            const double lhs = rho(ops.shift(v, a));
            const double rhs = base - a;
            if (std::abs(lhs - rhs) > tolerance) {
                report.violations.push_back({{v}, a, lhs, rhs});
            }
        }
    }
    report.passed = report.violations.empty();
    return report;
}

/// rho(X1 + X2) <= rho(X1) + rho(X2) for every pair supplied.
template <class V>
AxiomReport<V> check_subadditivity(const MeasureFn<V>& rho,
                                   std::span<const std::pair<V, V>> pairs,
                                   const VehicleOps<V>& ops, double tolerance = 1e-9) {
    AxiomReport<V> report{Axiom::subadditivity, true, {}};
    for (const auto& [first, second] : pairs) {
        const double lhs = rho(ops.add(first, second));
        const double rhs = rho(first) + rho(second);
        if (lhs > rhs + tolerance) {
            report.violations.push_back(
                {{first, second}, std::numeric_limits<double>::quiet_NaN(), lhs, rhs});
        }
    }
    report.passed = report.violations.empty();
    return report;
}

/// Runs all four checks with a generated battery of scalars, shifts and
/// pairs. A measure is coherent *on this family* iff every report passes;
/// the harness can prove violations, never coherence in general.
template <class V>
std::vector<AxiomReport<V>> coherence_report(const MeasureFn<V>& rho, std::span<const V> family,
                                             const VehicleOps<V>& ops,
                                             std::span<const double> magnitudes,
                                             double tolerance = 1e-9) {
    std::vector<double> scalars{0.0, 0.5, 1.0, 2.0, 3.0};
    std::vector<double> shifts{0.0, 1.0, -1.0};
    double largest = 0.0;
    for (double m : magnitudes) {
        largest = std::max(largest, std::abs(m));
    }
    if (largest > 0.0 && largest != 1.0) {
        shifts.push_back(largest);
        shifts.push_back(-largest);
    }
    std::vector<std::pair<V, V>> pairs;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i; j < family.size(); ++j) {
            pairs.emplace_back(family[i], family[j]);
        }
    }
    std::vector<AxiomReport<V>> reports;
    reports.push_back(check_monotonicity(rho, family, ops, tolerance));
    reports.push_back(check_homogeneity(rho, family, ops, scalars, tolerance));
    reports.push_back(check_translation(rho, family, ops, shifts, tolerance));
    reports.push_back(check_subadditivity(
        rho, std::span<const std::pair<V, V>>(pairs), ops, tolerance));
    return reports;
}

std::vector<AxiomReport<Position>> coherence_report(const MeasureFn<Position>& rho,
                                                    std::span<const Position> family,
                                                    double tolerance = 1e-9);
std::vector<AxiomReport<std::vector<double>>> coherence_report(
    const MeasureFn<std::vector<double>>& rho, std::span<const std::vector<double>> family,
    double tolerance = 1e-9);

template <class V>
bool coherent_on_family(std::span<const AxiomReport<V>> reports) {
    for (const AxiomReport<V>& r : reports) {
        if (!r.passed) {
            return false;
        }
    }
    return true;
}

/// Re-evaluates rho on a recorded violation, returning (lhs, rhs).
template <class V>
std::pair<double, double> replay(Axiom axiom, const MeasureFn<V>& rho,
                                 const Violation<V>& violation, const VehicleOps<V>& ops) {
    switch (axiom) {
    case Axiom::monotonicity:
        return {rho(violation.inputs.at(0)), 0.0};
    case Axiom::positive_homogeneity: {
        const V& v = violation.inputs.at(0);
        return {rho(ops.scale(v, violation.parameter)), violation.parameter * rho(v)};
    }
    case Axiom::translation_invariance: {
        const V& v = violation.inputs.at(0);
        return {rho(ops.shift(v, violation.parameter)), rho(v) - violation.parameter};
    }
    case Axiom::subadditivity: {
        const V& x = violation.inputs.at(0);
        const V& y = violation.inputs.at(1);
        return {rho(ops.add(x, y)), rho(x) + rho(y)};
    }
    }
    return {0.0, 0.0};
}

} // namespace riskvec::coherence
