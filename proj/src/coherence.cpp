#include "riskvec/coherence.hpp"

#include <algorithm>
#include <cmath>

#include "riskvec/errors.hpp"

namespace riskvec::coherence {

std::string_view axiom_name(Axiom axiom) {
    switch (axiom) {
    case Axiom::monotonicity:
        return "monotonicity";
    case Axiom::positive_homogeneity:
        return "positive_homogeneity";
    case Axiom::translation_invariance:
        return "translation_invariance";
    case Axiom::subadditivity:
        return "subadditivity";
    }
    return "unknown";
}

VehicleOps<Position> position_ops(std::size_t convolution_cap) {
    VehicleOps<Position> ops;
    ops.scale = [](const Position& p, double lambda) { return scale(p, lambda); };
    ops.shift = [](const Position& p, double a) { return shift(p, a); };
    ops.add = [convolution_cap](const Position& a, const Position& b) {
        return independent_sum(a, b, convolution_cap);
    };
    ops.is_nonnegative = [](const Position& p) { return p.min_payoff() >= 0.0; };
    return ops;
}

VehicleOps<std::vector<double>> vector_ops() {
    VehicleOps<std::vector<double>> ops;
    ops.scale = [](const std::vector<double>& v, double lambda) {
        std::vector<double> out = v;
        for (double& x : out) {
            x *= lambda;
        }
        return out;
    };
    ops.shift = [](const std::vector<double>& v, double a) {
        std::vector<double> out = v;
        for (double& x : out) {
            x += a;
        }
        return out;
    };
    ops.add = [](const std::vector<double>& a, const std::vector<double>& b) {
        if (a.size() != b.size()) {
            throw DimensionMismatchError("payoff vectors must share one outcome index set");
        }
        std::vector<double> out = a;
        for (std::size_t i = 0; i < b.size(); ++i) {
            out[i] += b[i];
        }
        return out;
    };
    ops.is_nonnegative = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0; });
    };
    return ops;
}

std::vector<AxiomReport<Position>> coherence_report(const MeasureFn<Position>& rho,
                                                    std::span<const Position> family,
                                                    double tolerance) {
    std::vector<double> magnitudes;
    for (const Position& p : family) {
        magnitudes.push_back(std::max(std::abs(p.min_payoff()), std::abs(p.max_payoff())));
    }
    return coherence_report(rho, family, position_ops(),
                            std::span<const double>(magnitudes), tolerance);
}

std::vector<AxiomReport<std::vector<double>>> coherence_report(
    const MeasureFn<std::vector<double>>& rho, std::span<const std::vector<double>> family,
    double tolerance) {
    std::vector<double> magnitudes;
    for (const std::vector<double>& v : family) {
        double m = 0.0;
        for (double x : v) {
            m = std::max(m, std::abs(x));
        }
        magnitudes.push_back(m);
    }
    return coherence_report(rho, family, vector_ops(),
                            std::span<const double>(magnitudes), tolerance);
}

} // namespace riskvec::coherence
