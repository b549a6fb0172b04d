#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "riskvec/loss_distribution.hpp"
#include "riskvec/measures.hpp"

namespace riskvec::family {

struct InnerTail {
    double level = 0.0; // e.g. 0.99
    double start = 0.0; // where that deeper tail begins

    friend bool operator==(const InnerTail&, const InnerTail&) = default;
};

/// Geometry of the reported loss tail: the final (1 - level) of the loss
/// mass lives on [c, d], optionally with nested deeper tails starting
/// strictly inside. The remaining body mass is a single atom strictly
/// below c (default c - 1).
struct TailSpec {
    double c = 0.0;
    double d = 0.0;
    double level = 0.0;
    std::vector<InnerTail> inner;
    std::optional<double> body_loss;

    friend bool operator==(const TailSpec&, const TailSpec&) = default;
};

/// Throws SpecError on violated invariants; returns the spec with inner
/// tails sorted by level.
TailSpec validated(TailSpec spec);

double resolved_body_loss(const TailSpec& spec);

/// Constant density of mass (1 - level) on [c, d] plus the body atom.
/// At the spec level: var = c, tce = (c + d) / 2, ml = d.
LossDistribution uniform_tail(const TailSpec& spec);

/// Triangular density on [c, d] peaking at `apex` (a one-sided ramp when
/// the apex sits on an endpoint). At the spec level the tail centroid is
/// (c + d + apex) / 3, which is therefore the tce.
LossDistribution triangular_tail(const TailSpec& spec, double apex);

struct FamilyOptions {
    /// Smallest admissible pairwise L1 distance between member densities.
    double min_l1_separation = 0.001;
};

/// n distinct loss distributions sharing the whole measure vector implied
/// by the spec: VaR and TCE at the spec level and at every inner level,
/// plus the Maximum Loss. The first member is the uniform tail; the others
/// add zero-mass piecewise-linear perturbations confined to the band
/// between c and the first inner start (or d), even-symmetric about the
/// band midpoint, leaving every band's mass and first moment unchanged and
/// every density strictly positive. Throws CapacityError when n members
/// cannot be separated by at least the configured L1 distance.
std::vector<LossDistribution> indistinguishable_family(const TailSpec& spec, std::size_t n,
                                                       const FamilyOptions& options = {});

struct MeasureComparison {
    std::string measure; // "var", "tce" or "max_loss"
    std::optional<double> level;
    double first = 0.0;
    double second = 0.0;
    bool equal = false;
};

struct DiscriminationReport {
    std::vector<MeasureComparison> rows;
    double tolerance = 0.0;

    bool all_equal() const {
        for (const MeasureComparison& row : rows) {
            if (!row.equal) {
                return false;
            }
        }
        return true;
    }
};

/// Evaluates the measure vector on both distributions and flags, measure by
/// measure, whether the two values agree within tolerance.
DiscriminationReport discriminate(const LossDistribution& first, const LossDistribution& second,
                                  std::span<const double> levels, double tolerance = 1e-9,
                                  QuantileConvention conv = QuantileConvention::smallest);

/// integral |f1 - f2| over the densities plus the summed absolute atom
/// probability differences.
double density_l1_distance(const LossDistribution& first, const LossDistribution& second);

} // namespace riskvec::family
