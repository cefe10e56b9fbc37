#pragma once

#include <optional>

#include "sliceq/continuation.hpp"
#include "sliceq/sampling.hpp"
#include "sliceq/slice_topology.hpp"

namespace sliceq {

// Evaluation refuses to approach a cut closer than this (slice coordinate).
inline constexpr double kCutClearance = 1e-3;
// Parameter horizon for the unbounded leg of the cut curves.
inline constexpr double kCutHorizon = 0.999;

/// Geometry of one cut gamma_s in slice coordinates: an elliptic arc from
/// the branch point 2i around -1+2i to -2+2i, then a ray to the left along
/// Im = 2. Membership and distance treat the ideal (untruncated) curve.
class CutGeometry {
public:
    CutGeometry(double s, double tMax);

    double s() const { return s_; }

    // gamma_s(t); throws HorizonExceeded past the truncation parameter and
    // ParameterOutOfRange outside [0,1].
    Complex point(double t) const;

    // Euclidean distance from p to the ideal curve.
    double distance(Complex p) const;

    // Does the open segment (a,b) come within `clearance` of the curve?
    bool segmentHits(Complex a, Complex b, double clearance = 0.0) const;

    // Distance from p to a convex over-approximation of the curve's hull.
    double hullDistance(Complex p) const;

private:
    double s_;
    double tMax_;
    Complex arcCenter_{-1.0, 2.0};
    double semiY_;  // signed semi-minor axis 1 - 2s

    double arcDistance(Complex p) const;
    double rayDistance(Complex p) const;
    bool segmentHitsArc(Complex a, Complex b) const;
    bool segmentHitsRay(Complex a, Complex b) const;
};

/// The s-indexed family of cuts in the slice C_I, with the base point
/// 1 + 2I of the logarithm branch they cut for.
class CutFamily {
public:
    explicit CutFamily(ImaginaryUnitd base = unit_i<double>(),
                       double tMax = kCutHorizon);

    const ImaginaryUnitd& baseUnit() const { return base_; }
    double tMax() const { return tMax_; }

    CutGeometry cut(double s) const;

    // gamma_s(t) in slice coordinates / embedded into C_I.
    Complex gammaPlanar(double s, double t) const;
    Quaterniond gamma(double s, double t) const;

    // T(J) = min(|J - I|, 1).
    double cutParameter(const ImaginaryUnitd& J) const;

    // The branch of log(. - 2I) on C_I minus gamma_tcut, normalized to 0 at
    // 1 + 2I, computed by germ continuation along a cut-avoiding route.
    Quaterniond fCut(double tcut, Complex z) const;

    // F_J^+(x + yJ) = (1-JI)/2 f_T(J)(x+yI) + (1+JI)/2 f_T(J)(x-yI).
    Quaterniond fPlus(const ImaginaryUnitd& J, double x, double y) const;

    // Cut-avoiding route from the base point to z (two-segment detour when
    // the straight segment crosses the cut).
    PlanarPath route(const CutGeometry& geom, Complex z) const;

private:
    ImaginaryUnitd base_;
    double tMax_;
    ContinuationOptions engineOpts_;
};

// Free functions mirroring the slice operations.
Quaterniond gamma_s(double s, double t, const ImaginaryUnitd& I);
double t_of(const ImaginaryUnitd& J, const ImaginaryUnitd& I);

// Omega = union of the U_J^+ as a slice set: the trace in C_J is the full
// plane minus the cut of T(J) (upper half) and of T(-J) (mirrored lower
// half). Cuts enter the region algebra as polylines truncated at the
// horizon.
SliceSet omega_slice_set(const CutFamily& family, int cutResolution = 512);

struct CounterexampleConfig {
    int circleSamples = 256;
    int unitSamples = 512;
    SphereScheme unitScheme = SphereScheme::Fibonacci;
    std::uint64_t seed = 0;
    Complex probeCenter{0.0, 2.0};
    double probeRadius = 1.0;
    int opennessUnits = 16;
    int opennessPointsPerSlice = 64;
    double witnessClearance = 0.02;
    double monodromyTol = 1e-4;
};

struct WitnessEntry {
    int index;
    double x, y;  // probe-circle point in slice coordinates
    bool found;
    std::optional<ImaginaryUnitd> witness;
    double cutParam = 0.0;   // T(witness)
    double clearance = 0.0;  // distance of (x,y) to the witness cut
};

struct OpennessEntry {
    ImaginaryUnitd unit;
    double x, y;
    double sliceClearance;      // 2D distance to the slice's own cuts
    double euclideanClearance;  // 4D distance to the sampled cut union
};

struct CounterexampleReport {
    CounterexampleConfig config;
    std::vector<WitnessEntry> witnesses;
    bool coverageComplete = false;
    std::vector<OpennessEntry> openness;
    bool sliceOpen = false;
    double minSliceClearance = 0.0;
    Quaterniond monodromy;
    double monodromyMagnitude = 0.0;
    bool obstructionCertified = false;
};

// Reproduces the extension-theorem counterexample: (a) positive clearance
// of sampled interior points of Omega, (b) a witness slice for every probe
// circle point, placing the circle inside the axially symmetric completion,
// (c) the 2*pi log monodromy around the circle, which rules out any
// single-valued slice regular extension.
CounterexampleReport counterexample_report(
    const CounterexampleConfig& config = {},
    const CutFamily& family = CutFamily());

}  // namespace sliceq
