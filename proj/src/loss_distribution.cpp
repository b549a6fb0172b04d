#include "riskvec/loss_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "riskvec/errors.hpp"

namespace riskvec {

namespace {

constexpr double mass_reject_tolerance = 1e-9;
constexpr double mass_renormalize_tolerance = 1e-12;

double stable_total_mass(const std::vector<LossAtom>& atoms,
                         const std::vector<DensitySegment>& segments) {
    double sum = 0.0;
    double compensation = 0.0;
    auto add = [&](double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
    };
    for (const LossAtom& a : atoms) {
        add(a.probability);
    }
    for (const DensitySegment& s : segments) {
        add(s.mass());
    }
    return sum + compensation;
}

// Exact first moment of a linear density over [u, v] given endpoint values.
double linear_first_moment(double u, double v, double f_u, double f_v) {
    return (v - u) / 6.0 * (u * (2.0 * f_u + f_v) + v * (f_u + 2.0 * f_v));
}

// Smallest offset t in [0, b-a] with integral_a^{a+t} f = target.
// Solves the quadratic 0.5*slope*t^2 + f_a*t = target in the stable
// "citardauq" form; valid for 0 <= target <= segment mass.
double invert_segment_mass(const DensitySegment& s, double target) {
    if (target <= 0.0) {
        return 0.0;
    }
    const double slope = (s.f_b - s.f_a) / (s.b - s.a);
    double t;
    if (slope == 0.0) {
        t = target / s.f_a;
    } else {
        const double disc = std::max(s.f_a * s.f_a + 2.0 * slope * target, 0.0);
        t = 2.0 * target / (s.f_a + std::sqrt(disc));
    }
    return std::clamp(t, 0.0, s.b - s.a);
}

// A timeline of mass events in ascending coordinate order: atoms and
// segment pieces, with pieces split so no atom lies strictly inside one.
struct MassEvent {
    bool is_atom = false;
    double position = 0.0; // atom location or piece start
    LossAtom atom{};
    DensitySegment piece{};
};

std::vector<MassEvent> make_timeline(const LossDistribution& l) {
    std::vector<MassEvent> events;
    events.reserve(l.atoms().size() + l.segments().size());
    for (const LossAtom& a : l.atoms()) {
        events.push_back({true, a.loss, a, {}});
    }
    for (const DensitySegment& s : l.segments()) {
        double start = s.a;
        for (const LossAtom& a : l.atoms()) {
            if (a.loss > start && a.loss < s.b) {
                DensitySegment piece{start, a.loss, s.density_at(start), s.density_at(a.loss)};
                events.push_back({false, start, {}, piece});
                start = a.loss;
            }
        }
        events.push_back({false, start, {}, {start, s.b, s.density_at(start), s.f_b}});
    }
    std::sort(events.begin(), events.end(), [](const MassEvent& x, const MassEvent& y) {
        if (x.position != y.position) {
            return x.position < y.position;
        }
        return x.is_atom && !y.is_atom; // atom first at a shared coordinate
    });
    return events;
}

} // namespace

LossDistribution::LossDistribution(std::vector<LossAtom> atoms,
                                   std::vector<DensitySegment> segments)
    : atoms_(std::move(atoms)), segments_(std::move(segments)) {
    for (const LossAtom& a : atoms_) {
        if (!std::isfinite(a.loss) || !std::isfinite(a.probability)) {
            throw ValidationError("loss atoms must be finite");
        }
        if (a.probability <= 0.0) {
            throw ValidationError("every atom probability must be positive");
        }
    }
    for (const DensitySegment& s : segments_) {
        if (!std::isfinite(s.a) || !std::isfinite(s.b) || !std::isfinite(s.f_a) ||
            !std::isfinite(s.f_b)) {
            throw ValidationError("density segments must be finite");
        }
        if (!(s.a < s.b)) {
            throw ValidationError("density segment needs a < b");
        }
        if (s.f_a < 0.0 || s.f_b < 0.0) {
            throw ValidationError("density values must be nonnegative");
        }
    }

    std::stable_sort(atoms_.begin(), atoms_.end(),
                     [](const LossAtom& x, const LossAtom& y) { return x.loss < y.loss; });
    if (!atoms_.empty()) {
        std::size_t write = 0;
        for (std::size_t read = 1; read < atoms_.size(); ++read) {
            if (atoms_[read].loss == atoms_[write].loss) {
                atoms_[write].probability += atoms_[read].probability;
            } else {
                atoms_[++write] = atoms_[read];
            }
        }
        atoms_.resize(write + 1);
    }

    // Identically-zero segments carry no mass and no support.
    std::erase_if(segments_, [](const DensitySegment& s) { return s.f_a == 0.0 && s.f_b == 0.0; });
    std::sort(segments_.begin(), segments_.end(),
              [](const DensitySegment& x, const DensitySegment& y) { return x.a < y.a; });
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        if (segments_[i].a < segments_[i - 1].b) {
            throw ValidationError("density segment interiors must be pairwise disjoint");
        }
    }

    if (atoms_.empty() && segments_.empty()) {
        throw ValidationError("loss distribution must carry some mass");
    }

    const double mass = stable_total_mass(atoms_, segments_);
    const double drift = std::abs(mass - 1.0);
    if (drift > mass_reject_tolerance) {
        throw MassError("total mass is " + std::to_string(mass) + ", not 1 within 1e-9");
    }
    if (drift > mass_renormalize_tolerance) {
        for (LossAtom& a : atoms_) {
            a.probability /= mass;
        }
        for (DensitySegment& s : segments_) {
            s.f_a /= mass;
            s.f_b /= mass;
        }
    }
}

double LossDistribution::min_support() const {
    double lo = std::numeric_limits<double>::infinity();
    if (!atoms_.empty()) {
        lo = atoms_.front().loss;
    }
    if (!segments_.empty()) {
        lo = std::min(lo, segments_.front().a);
    }
    return lo;
}

double LossDistribution::max_support() const {
    double hi = -std::numeric_limits<double>::infinity();
    if (!atoms_.empty()) {
        hi = atoms_.back().loss;
    }
    if (!segments_.empty()) {
        hi = std::max(hi, segments_.back().b);
    }
    return hi;
}

LossDistribution to_loss(const Position& p) {
    std::vector<LossAtom> atoms;
    atoms.reserve(p.size());
    for (const Outcome& o : p.outcomes()) {
        atoms.push_back({-o.payoff, o.probability});
    }
    return LossDistribution(std::move(atoms), {});
}

double cdf(const LossDistribution& l, double x) {
    double cum = 0.0;
    for (const LossAtom& a : l.atoms()) {
        if (a.loss > x) {
            break;
        }
        cum += a.probability;
    }
    for (const DensitySegment& s : l.segments()) {
        if (s.a >= x) {
            break;
        }
        if (s.b <= x) {
            cum += s.mass();
        } else {
            cum += 0.5 * (s.f_a + s.density_at(x)) * (x - s.a);
        }
    }
    return cum;
}

double cdf_left(const LossDistribution& l, double x) {
    double cum = cdf(l, x);
    for (const LossAtom& a : l.atoms()) {
        if (a.loss == x) {
            cum -= a.probability;
            break;
        }
        if (a.loss > x) {
            break;
        }
    }
    return cum;
}

PartialExpectation partial_expectation(const LossDistribution& l, double lo, double hi) {
    PartialExpectation result;
    if (lo > hi) {
        return result;
    }
    for (const LossAtom& a : l.atoms()) {
        if (a.loss > hi) {
            break;
        }
        if (a.loss >= lo) {
            result.mass += a.probability;
            result.first_moment += a.loss * a.probability;
        }
    }
    for (const DensitySegment& s : l.segments()) {
        if (s.a >= hi) {
            break;
        }
        const double u = std::max(s.a, lo);
        const double v = std::min(s.b, hi);
        if (u >= v) {
            continue;
        }
        const double f_u = s.density_at(u);
        const double f_v = s.density_at(v);
        result.mass += 0.5 * (f_u + f_v) * (v - u);
        result.first_moment += linear_first_moment(u, v, f_u, f_v);
    }
    return result;
}

double mean(const LossDistribution& l) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return partial_expectation(l, -inf, inf).first_moment;
}

double loss_quantile(const LossDistribution& l, double alpha, QuantileConvention conv) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ValidationError("quantile level must lie strictly inside (0, 1)");
    }
    const bool strict = conv == QuantileConvention::smallest;
    const auto reached = [&](double cum) { return strict ? cum > alpha : cum >= alpha; };

    double cum = 0.0;
    double attained_at = -std::numeric_limits<double>::infinity();
    for (const MassEvent& ev : make_timeline(l)) {
        if (reached(cum)) {
            return attained_at;
        }
        if (ev.is_atom) {
            cum += ev.atom.probability;
            if (reached(cum)) {
                return ev.position;
            }
            attained_at = ev.position;
        } else {
            const double piece_mass = ev.piece.mass();
            if (reached(cum + piece_mass)) {
                return ev.piece.a + invert_segment_mass(ev.piece, alpha - cum);
            }
            cum += piece_mass;
            attained_at = ev.piece.b;
        }
    }
    if (reached(cum)) {
        return attained_at;
    }
    throw DegenerateSupportError("cumulative mass never reaches the quantile level");
}

double quantile(const LossDistribution& l, double alpha, QuantileConvention conv) {
    return -loss_quantile(l, alpha, conv);
}

} // namespace riskvec
