#pragma once

#include <complex>
#include <utility>
#include <variant>
#include <vector>

#include "sliceq/quaternion.hpp"
#include "sliceq/slice_calculus.hpp"

namespace sliceq {

using Complex = std::complex<double>;

// Junction points of N-part paths must be real within this tolerance;
// stricter than arithmetic tolerance since slice crossing happens there.
inline constexpr double kJunctionTol = 1e-9;

struct SegmentLeg {
    Complex from, to;
};

struct ArcLeg {
    Complex center;
    double radius;
    double angle0, angle1;  // radians; sweep may exceed 2*pi
};

struct PolylineLeg {
    std::vector<Complex> points;  // >= 2 vertices, uniform parameter grid
};

using Leg = std::variant<SegmentLeg, ArcLeg, PolylineLeg>;

Complex leg_eval(const Leg& leg, double s);
Complex leg_start(const Leg& leg);
Complex leg_end(const Leg& leg);
double leg_length(const Leg& leg);
Leg leg_prefix(const Leg& leg, double s);  // restriction to [0, s]
Leg leg_reversed(const Leg& leg);
// Parameter at which the prefix of the leg has arclength s.
double leg_param_at_length(const Leg& leg, double s);

/// Piecewise-analytic continuous path [0,1] -> C. Legs carry parameter
/// weights so restriction preserves the parametrization exactly.
class PlanarPath {
public:
    PlanarPath() = default;
    explicit PlanarPath(std::vector<Leg> legs);
    PlanarPath(std::vector<Leg> legs, std::vector<double> breaks);

    static PlanarPath segment(Complex a, Complex b);
    static PlanarPath arc(Complex center, double radius, double angle0,
                          double angle1);
    // Closed counterclockwise loop starting at angle startAngle.
    static PlanarPath circle(Complex center, double radius,
                             double startAngle = 0.0);
    static PlanarPath polyline(std::vector<Complex> points);
    static PlanarPath constant(Complex z);

    Complex eval(double t) const;  // ParameterOutOfRange outside [0,1]
    Complex start() const;
    Complex end() const;

    std::size_t legCount() const { return legs_.size(); }
    const std::vector<Leg>& legs() const { return legs_; }
    const std::vector<double>& breaks() const { return breaks_; }

    double length() const;
    // Parameter t such that the arclength of [0,t] equals s (clamped).
    double paramAtLength(double s) const;

    // Restriction to [0,u], reparametrized so that the result evaluated
    // at s equals this path at u*s. Requires u in (0,1].
    PlanarPath prefix(double u) const;
    PlanarPath reversed() const;
    // Concatenation; endpoints must meet.
    PlanarPath then(const PlanarPath& next) const;

private:
    std::vector<Leg> legs_;
    std::vector<double> breaks_;  // size legCount()+1, 0 = b0 < ... < 1
    mutable std::vector<double> lengthTable_;  // lazily built cumulative lengths

    void validate() const;
    const std::vector<double>& lengths() const;
};

enum class TruncateSide { Closed, Left };

/// N-part path: parts joined at real junction points.
class NPartPath {
public:
    explicit NPartPath(std::vector<PlanarPath> parts);

    int partCount() const { return static_cast<int>(parts_.size()); }
    const PlanarPath& part(int i) const {
        return parts_[static_cast<std::size_t>(i)];
    }
    const std::vector<PlanarPath>& parts() const { return parts_; }

    Complex eval(double t) const;
    Complex start() const { return parts_.front().start(); }
    Complex end() const { return parts_.back().end(); }

    // gamma[t] (Closed keeps the partial last part, rescaled; at exact
    // part boundaries below t=1 it degenerates to a constant part) and
    // gamma[t^-] (Left drops it at exact boundaries). t must be in (0,1].
    NPartPath truncate(double t, TruncateSide side) const;

private:
    std::vector<PlanarPath> parts_;
};

// Composition of planar paths into an N-part path; junctions must be real.
NPartPath compose(std::vector<PlanarPath> parts);

/// Finite-part path in H: leg i lives in the slice of its unit.
class QPath {
public:
    explicit QPath(std::vector<std::pair<PlanarPath, ImaginaryUnitd>> parts);

    int partCount() const { return static_cast<int>(parts_.size()); }
    const std::pair<PlanarPath, ImaginaryUnitd>& part(int i) const {
        return parts_[static_cast<std::size_t>(i)];
    }

    Quaterniond eval(double t) const;
    Quaterniond endpoint() const;

private:
    std::vector<std::pair<PlanarPath, ImaginaryUnitd>> parts_;
};

// The I-lifting of an N-part path: part i embedded by P_{I_i}.
QPath lift(const NPartPath& g, const UnitTupled& units);

}  // namespace sliceq
