#include "sliceq/continuation.hpp"

#include <algorithm>
#include <cmath>

namespace sliceq {

namespace {

Quaterniond horner(const std::vector<Quaterniond>& coeffs, std::size_t order,
                   const Quaterniond& u) {
    Quaterniond acc;
    const std::size_t top = std::min(order, coeffs.size() - 1);
    for (std::size_t k = top + 1; k-- > 0;) {
        acc = u * acc + coeffs[k];
    }
    return acc;
}

}  // namespace

Quaterniond HolomorphicGerm::valueAt(Complex z,
                                     const ImaginaryUnitd& unit) const {
    const Quaterniond u = embed(z - center, unit);
    return horner(coeffs, coeffs.size() - 1, u);
}

std::pair<Quaterniond, double> HolomorphicGerm::valueWithError(
    Complex z, const ImaginaryUnitd& unit) const {
    const Quaterniond u = embed(z - center, unit);
    const Quaterniond full = horner(coeffs, coeffs.size() - 1, u);
    const Quaterniond half = horner(coeffs, (coeffs.size() - 1) / 2, u);
    return {full, (full - half).norm()};
}

double estimate_radius(const std::vector<Quaterniond>& coeffs,
                       const ContinuationOptions& opts) {
    const std::size_t m = coeffs.size() - 1;
    const std::size_t lo =
        m > static_cast<std::size_t>(opts.radiusWindow)
            ? m - static_cast<std::size_t>(opts.radiusWindow) + 1
            : 1;
    double inv = 0.0;
    for (std::size_t k = lo; k <= m; ++k) {
        const double a = coeffs[k].norm();
        if (a > 0.0) {
            inv = std::max(inv, std::pow(a, 1.0 / double(k)));
        }
    }
    if (inv <= 0.0) return opts.radiusCap;
    return std::min(opts.radiusCap, opts.radiusSafety / inv);
}

namespace {

// In-place Taylor shift by the embedded increment: coefficients of the
// series in (z - center - delta). Scalars act from the left, so the
// classical synthetic-division recurrence applies verbatim.
void shift_coeffs(std::vector<Quaterniond>& c, Complex delta,
                  const ImaginaryUnitd& unit) {
    if (delta == Complex(0.0, 0.0)) return;
    const Quaterniond d = embed(delta, unit);
    const std::size_t m = c.size() - 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = m - 1; k + 1 > i; --k) {
            c[k] += d * c[k + 1];
        }
    }
}

HolomorphicGerm prepared(const HolomorphicGerm& germ,
                         const ContinuationOptions& opts) {
    HolomorphicGerm g = germ;
    g.coeffs.resize(static_cast<std::size_t>(opts.order) + 1);
    g.radius = estimate_radius(g.coeffs, opts);
    return g;
}

// March the germ from its center to the end of the path, recentring every
// stepFactor * radius of arclength.
void march(HolomorphicGerm& g, const PlanarPath& path,
           const ContinuationOptions& opts) {
    const double total = path.length();
    double s = 0.0;
    // Walk-in from the current center to the path start.
    Complex target = path.start();
    long steps = 0;
    while (true) {
        if (g.radius < opts.rMin) {
            throw SingularityHit(
                "convergence radius collapsed during continuation");
        }
        const Complex gap = target - g.center;
        const double dist = std::abs(gap);
        if (dist == 0.0) break;
        if (dist >= g.radius / opts.radiusSafety) {
            throw DomainError("path start lies outside the germ disk");
        }
        const double step = std::min(dist, opts.stepFactor * g.radius);
        const Complex next = g.center + gap * (step / dist);
        shift_coeffs(g.coeffs, next - g.center, opts.unit);
        g.center = next;
        g.radius = estimate_radius(g.coeffs, opts);
        if (++steps > opts.maxSteps) {
            throw TruncationBudgetExceeded("continuation step budget spent");
        }
    }
    while (s < total) {
        if (g.radius < opts.rMin) {
            throw SingularityHit(
                "convergence radius collapsed during continuation");
        }
        const double step = opts.stepFactor * g.radius;
        const double sNext = std::min(total, s + step);
        const double tNext = sNext >= total ? 1.0 : path.paramAtLength(sNext);
        const Complex next = path.eval(tNext);
        shift_coeffs(g.coeffs, next - g.center, opts.unit);
        g.center = next;
        g.radius = estimate_radius(g.coeffs, opts);
        s = sNext;
        if (++steps > opts.maxSteps) {
            throw TruncationBudgetExceeded("continuation step budget spent");
        }
    }
}

}  // namespace

HolomorphicGerm recenter(const HolomorphicGerm& germ, Complex newCenter,
                         const ContinuationOptions& opts) {
    HolomorphicGerm g = prepared(germ, opts);
    if (std::abs(newCenter - g.center) >= g.radius / opts.radiusSafety) {
        throw DomainError("recentring target lies outside the germ disk");
    }
    shift_coeffs(g.coeffs, newCenter - g.center, opts.unit);
    g.center = newCenter;
    g.radius = estimate_radius(g.coeffs, opts);
    return g;
}

HolomorphicGerm continue_along(const HolomorphicGerm& germ,
                               const PlanarPath& path,
                               const ContinuationOptions& opts) {
    HolomorphicGerm g = prepared(germ, opts);
    march(g, path, opts);
    return g;
}

Quaterniond continue_npart(const HolomorphicGerm& germ, const NPartPath& g,
                           const UnitTupled& units,
                           const ContinuationOptions& opts) {
    if (static_cast<int>(units.size()) != g.partCount()) {
        throw LengthMismatch("unit tuple length must equal the part count");
    }
    if (!germ.centerIsReal()) {
        throw DomainError("N-part continuation requires a real germ center");
    }
    HolomorphicGerm current = germ;
    current.center = Complex(germ.center.real(), 0.0);
    for (int i = 0; i < g.partCount(); ++i) {
        ContinuationOptions legOpts = opts;
        legOpts.unit = units[std::size_t(i)];
        current = continue_along(current, g.part(i), legOpts);
        if (i + 1 < g.partCount()) {
            // Real junction: snap the center onto R so the germ becomes
            // slice-agnostic before the next leg.
            ContinuationOptions snapOpts = legOpts;
            current = recenter(
                current, Complex(current.center.real(), 0.0), snapOpts);
        }
    }
    return current.value();
}

Quaterniond monodromy_gap(const HolomorphicGerm& germ, const PlanarPath& loop,
                          const ContinuationOptions& opts) {
    if (std::abs(loop.start() - loop.end()) > kJunctionTol) {
        throw DomainError("monodromy requires a closed loop");
    }
    HolomorphicGerm atStart = recenter(germ, loop.start(), opts);
    const Quaterniond before = atStart.value();
    const HolomorphicGerm after = continue_along(atStart, loop, opts);
    return after.value() - before;
}

HolomorphicGerm log_germ(Complex branchPoint, Complex center,
                         const ContinuationOptions& opts) {
    const Complex d = center - branchPoint;
    return log_germ(branchPoint, center, embed(std::log(d), opts.unit), opts);
}

HolomorphicGerm log_germ(Complex branchPoint, Complex center, Quaterniond a0,
                         const ContinuationOptions& opts) {
    const Complex d = center - branchPoint;
    if (std::abs(d) <= 0.0) {
        throw DomainError("log germ cannot be centered at the branch point");
    }
    HolomorphicGerm g;
    g.center = center;
    g.coeffs.resize(static_cast<std::size_t>(opts.order) + 1);
    g.coeffs[0] = a0;
    // log(d + u) = log d + sum_{k>=1} (-1)^{k+1} u^k / (k d^k).
    Complex dpow = d;
    for (int k = 1; k <= opts.order; ++k) {
        const Complex c = (k % 2 == 1 ? 1.0 : -1.0) / (double(k) * dpow);
        g.coeffs[std::size_t(k)] = embed(c, opts.unit);
        dpow *= d;
    }
    g.radius = estimate_radius(g.coeffs, opts);
    return g;
}

HolomorphicGerm reciprocal_germ(Complex pole, Complex center,
                                const ContinuationOptions& opts) {
    const Complex d = center - pole;
    if (std::abs(d) <= 0.0) {
        throw DomainError("reciprocal germ cannot be centered at the pole");
    }
    HolomorphicGerm g;
    g.center = center;
    g.coeffs.resize(static_cast<std::size_t>(opts.order) + 1);
    // 1/(d + u) = sum_k (-1)^k u^k / d^{k+1}.
    Complex dpow = d;
    for (int k = 0; k <= opts.order; ++k) {
        const Complex c = (k % 2 == 0 ? 1.0 : -1.0) / dpow;
        g.coeffs[std::size_t(k)] = embed(c, opts.unit);
        dpow *= d;
    }
    g.radius = estimate_radius(g.coeffs, opts);
    return g;
}

HolomorphicGerm polynomial_germ(const SlicePolynomiald& p, double center,
                                const ContinuationOptions& opts) {
    HolomorphicGerm g;
    g.center = Complex(center, 0.0);
    const std::size_t size =
        std::max(p.coeffs.size(), static_cast<std::size_t>(opts.order) + 1);
    g.coeffs.assign(size, Quaterniond());
    std::copy(p.coeffs.begin(), p.coeffs.end(), g.coeffs.begin());
    // Real shift: exact and slice-free.
    shift_coeffs(g.coeffs, Complex(center, 0.0), unit_i<double>());
    g.coeffs.resize(static_cast<std::size_t>(opts.order) + 1);
    g.radius = estimate_radius(g.coeffs, opts);
    return g;
}

}  // namespace sliceq
