#pragma once

#include "sliceq/formulas.hpp"
#include "sliceq/paths.hpp"

namespace sliceq {

/// Truncated power series sum_k (z - center)^k a_k with quaternion
/// coefficients; powers of the complex increment act from the left through
/// the slice embedding. A germ with real center restricts holomorphically
/// to every slice.
struct HolomorphicGerm {
    Complex center;
    double radius = 0.0;  // root-test convergence-radius estimate
    std::vector<Quaterniond> coeffs;

    Quaterniond value() const { return coeffs.empty() ? Quaterniond() : coeffs[0]; }

    // Order-M Horner evaluation on the slice of the given unit.
    Quaterniond valueAt(Complex z, const ImaginaryUnitd& unit) const;
    // Same, with the difference between the order-M and order-M/2 partial
    // sums as an error estimate.
    std::pair<Quaterniond, double> valueWithError(
        Complex z, const ImaginaryUnitd& unit) const;

    bool centerIsReal(double tol = kJunctionTol) const {
        return std::abs(center.imag()) <= tol;
    }
};

struct ContinuationOptions {
    int order = 64;             // truncation order M
    double stepFactor = 0.4;    // recentring step = factor * radius estimate
    double radiusSafety = 0.5;  // root-test safety factor
    int radiusWindow = 16;      // trailing coefficients used by the root test
    double rMin = 1e-6;         // SingularityHit below this radius
    double radiusCap = 1e9;     // radius assigned to (near-)polynomial tails
    long maxSteps = 200000;
    ImaginaryUnitd unit = unit_i<double>();  // slice carrying the leg
};

// Root test over the trailing window with safety factor; radiusCap when the
// tail vanishes (polynomials).
double estimate_radius(const std::vector<Quaterniond>& coeffs,
                       const ContinuationOptions& opts = {});

// Taylor-shift the germ to a new center within its disk (single shift; no
// marching). The slice unit in opts fixes the embedding of the increment.
HolomorphicGerm recenter(const HolomorphicGerm& germ, Complex newCenter,
                         const ContinuationOptions& opts = {});

// Disk-chain continuation along the path. Arclength marching keeps every
// step inside the current convergence disk, so branch tracking is exact.
HolomorphicGerm continue_along(const HolomorphicGerm& germ,
                               const PlanarPath& path,
                               const ContinuationOptions& opts = {});

// Continuation along an N-part path lifted by the unit tuple: leg i runs
// in the slice of units[i]; slice crossing happens at the real junctions.
// Returns the value at the lifted endpoint.
Quaterniond continue_npart(const HolomorphicGerm& germ, const NPartPath& g,
                           const UnitTupled& units,
                           const ContinuationOptions& opts = {});

// a0(after) - a0(before) around a closed loop.
Quaterniond monodromy_gap(const HolomorphicGerm& germ, const PlanarPath& loop,
                          const ContinuationOptions& opts = {});

// Germ of the branch of log(z - branchPoint) at the given center whose
// value there is a0 (embedded principal log when omitted).
HolomorphicGerm log_germ(Complex branchPoint, Complex center,
                         const ContinuationOptions& opts = {});
HolomorphicGerm log_germ(Complex branchPoint, Complex center, Quaterniond a0,
                         const ContinuationOptions& opts = {});

// Germ of 1/(z - pole).
HolomorphicGerm reciprocal_germ(Complex pole, Complex center,
                                const ContinuationOptions& opts = {});

// Exact Taylor coefficients of a left-power polynomial at a real center.
HolomorphicGerm polynomial_germ(const SlicePolynomiald& p, double center,
                                const ContinuationOptions& opts = {});

}  // namespace sliceq
