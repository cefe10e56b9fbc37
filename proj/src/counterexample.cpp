#include "sliceq/counterexample.hpp"

#include <algorithm>
#include <cmath>

namespace sliceq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr Complex kBranchPoint{0.0, 2.0};  // 2I in slice coordinates
constexpr Complex kBasePoint{1.0, 2.0};    // normalization point 1 + 2I
constexpr double kRayFar = -1e6;

// Minimize a smooth functional over [lo, hi]: coarse sampling, then
// golden-section refinement around every sampled local minimum.
template <typename F>
double minimize_scalar(F&& f, double lo, double hi, int samples = 128) {
    std::vector<double> vals(static_cast<std::size_t>(samples) + 1);
    for (int i = 0; i <= samples; ++i) {
        vals[std::size_t(i)] = f(lo + (hi - lo) * double(i) / samples);
    }
    double best = *std::min_element(vals.begin(), vals.end());
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 0; i <= samples; ++i) {
        const bool localMin =
            (i == 0 || vals[std::size_t(i)] <= vals[std::size_t(i - 1)]) &&
            (i == samples ||
             vals[std::size_t(i)] <= vals[std::size_t(i + 1)]);
        if (!localMin) continue;
        double a = lo + (hi - lo) * double(std::max(0, i - 1)) / samples;
        double b = lo + (hi - lo) * double(std::min(samples, i + 1)) / samples;
        double c = b - gr * (b - a);
        double d = a + gr * (b - a);
        for (int it = 0; it < 48; ++it) {
            if (f(c) < f(d)) {
                b = d;
            } else {
                a = c;
            }
            c = b - gr * (b - a);
            d = a + gr * (b - a);
        }
        best = std::min(best, f((a + b) / 2));
    }
    return best;
}

double point_segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 <= 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() +
                (p.imag() - a.imag()) * ab.imag()) /
               len2;
    t = std::min(1.0, std::max(0.0, t));
    return std::abs(p - (a + t * ab));
}

// Convex hull (monotone chain) of a small point set; returns CCW polygon.
std::vector<Complex> convex_hull(std::vector<Complex> pts) {
    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
        return a.real() < b.real() ||
               (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](Complex o, Complex a, Complex b) {
        return (a.real() - o.real()) * (b.imag() - o.imag()) -
               (a.imag() - o.imag()) * (b.real() - o.real());
    };
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k > 1 ? k - 1 : k);
    return hull;
}

double polygon_distance(Complex p, const std::vector<Complex>& poly) {
    if (poly.empty()) return std::numeric_limits<double>::infinity();
    if (poly.size() == 1) return std::abs(p - poly[0]);
    bool inside = poly.size() >= 3;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Complex a = poly[i];
        const Complex b = poly[(i + 1) % poly.size()];
        best = std::min(best, point_segment_distance(p, a, b));
        const double cr = (b.real() - a.real()) * (p.imag() - a.imag()) -
                          (b.imag() - a.imag()) * (p.real() - a.real());
        if (cr < 0) inside = false;
    }
    return inside ? 0.0 : best;
}

}  // namespace

CutGeometry::CutGeometry(double s, double tMax) : s_(s), tMax_(tMax) {
    if (s < 0.0 || s > 1.0) {
        throw ParameterOutOfRange("cut family parameter s must lie in [0,1]");
    }
    semiY_ = 1.0 - 2.0 * s;
}

Complex CutGeometry::point(double t) const {
    if (t < 0.0 || t > 1.0) {
        throw ParameterOutOfRange("cut parameter t must lie in [0,1]");
    }
    if (t > tMax_) {
        throw HorizonExceeded("cut parameter beyond the evaluation horizon");
    }
    if (t <= 0.5) {
        const double a = 2.0 * kPi * t;
        return arcCenter_ + Complex(std::cos(a), semiY_ * std::sin(a));
    }
    return Complex(-1.0 / (1.0 - t), 2.0);
}

double CutGeometry::arcDistance(Complex p) const {
    const double cx = arcCenter_.real();
    const double cy = arcCenter_.imag();
    auto f = [&](double theta) {
        const double dx = p.real() - (cx + std::cos(theta));
        const double dy = p.imag() - (cy + semiY_ * std::sin(theta));
        return dx * dx + dy * dy;
    };
    return std::sqrt(minimize_scalar(f, 0.0, kPi));
}

double CutGeometry::rayDistance(Complex p) const {
    if (p.real() <= -2.0) return std::abs(p.imag() - 2.0);
    return std::hypot(p.real() + 2.0, p.imag() - 2.0);
}

double CutGeometry::distance(Complex p) const {
    return std::min(arcDistance(p), rayDistance(p));
}

bool CutGeometry::segmentHitsArc(Complex a, Complex b) const {
    const double cx = arcCenter_.real();
    const double cy = arcCenter_.imag();
    const double bb = semiY_;
    const double x0 = a.real() - cx, y0 = a.imag() - cy;
    const double dx = b.real() - a.real(), dy = b.imag() - a.imag();
    if (std::abs(bb) < 1e-12) {
        // Degenerate arc: horizontal segment [cx-1, cx+1] at height cy.
        if (std::abs(dy) < 1e-15) {
            if (std::abs(y0) > 1e-12) return false;
            const double xlo = std::min(x0, x0 + dx);
            const double xhi = std::max(x0, x0 + dx);
            return xhi >= -1.0 && xlo <= 1.0;
        }
        const double v = -y0 / dy;
        if (v < 0.0 || v > 1.0) return false;
        const double x = x0 + v * dx;
        return x >= -1.0 && x <= 1.0;
    }
    // Scale y by 1/bb: the arc becomes the upper unit half-circle.
    const double Y0 = y0 / bb, DY = dy / bb;
    const double A = dx * dx + DY * DY;
    const double B = 2.0 * (x0 * dx + Y0 * DY);
    const double C = x0 * x0 + Y0 * Y0 - 1.0;
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0 || A <= 0.0) return false;
    const double root = std::sqrt(disc);
    for (const double v : {(-B - root) / (2.0 * A), (-B + root) / (2.0 * A)}) {
        if (v < 0.0 || v > 1.0) continue;
        const double ys = Y0 + v * DY;  // sin(theta) on the scaled circle
        if (ys >= -1e-12) return true;
    }
    return false;
}

bool CutGeometry::segmentHitsRay(Complex a, Complex b) const {
    const double dy = b.imag() - a.imag();
    if (std::abs(dy) < 1e-15) {
        if (std::abs(a.imag() - 2.0) > 1e-12) return false;
        return std::min(a.real(), b.real()) <= -2.0;
    }
    const double v = (2.0 - a.imag()) / dy;
    if (v < 0.0 || v > 1.0) return false;
    const double x = a.real() + v * (b.real() - a.real());
    return x <= -2.0;
}

bool CutGeometry::segmentHits(Complex a, Complex b, double clearance) const {
    if (segmentHitsArc(a, b) || segmentHitsRay(a, b)) return true;
    if (clearance > 0.0) {
        auto f = [&](double v) {
            const double d = distance(a + v * (b - a));
            return d * d;
        };
        return std::sqrt(minimize_scalar(f, 0.0, 1.0, 64)) < clearance;
    }
    return false;
}

double CutGeometry::hullDistance(Complex p) const {
    const double cx = arcCenter_.real();
    const double cy = arcCenter_.imag();
    const double h = std::abs(semiY_);
    std::vector<Complex> pts = {
        {cx - 1.0, cy - h}, {cx + 1.0, cy - h}, {cx + 1.0, cy + h},
        {cx - 1.0, cy + h}, {kRayFar, 2.0},
    };
    return polygon_distance(p, convex_hull(std::move(pts)));
}

CutFamily::CutFamily(ImaginaryUnitd base, double tMax)
    : base_(base), tMax_(tMax) {
    if (!(tMax > 0.5) || tMax >= 1.0) {
        throw ParameterOutOfRange("cut horizon must lie in (0.5, 1)");
    }
    engineOpts_.unit = base_;
}

CutGeometry CutFamily::cut(double s) const { return CutGeometry(s, tMax_); }

Complex CutFamily::gammaPlanar(double s, double t) const {
    if (s < 0.0 || s > 1.0) {
        throw ParameterOutOfRange("cut family parameter s must lie in [0,1]");
    }
    return cut(s).point(t);
}

Quaterniond CutFamily::gamma(double s, double t) const {
    return embed(gammaPlanar(s, t), base_);
}

double CutFamily::cutParameter(const ImaginaryUnitd& J) const {
    const double dist = (J.quat() - base_.quat()).norm();
    return std::min(dist, 1.0);
}

PlanarPath CutFamily::route(const CutGeometry& geom, Complex z) const {
    const double branchGuard = std::min(0.05, 0.5 * std::abs(z - kBranchPoint));
    auto legOk = [&](Complex a, Complex b) {
        return !geom.segmentHits(a, b) &&
               point_segment_distance(kBranchPoint, a, b) > branchGuard;
    };
    if (legOk(kBasePoint, z)) {
        return PlanarPath::segment(kBasePoint, z);
    }
    for (const double radius : {8.0, 16.0, 32.0}) {
        for (int k = 0; k < 16; ++k) {
            const double ang = -kPi / 2.0 + 2.0 * kPi * double(k) / 16.0;
            const Complex w =
                Complex(-1.0, 2.0) +
                radius * Complex(std::cos(ang), std::sin(ang));
            if (geom.hullDistance(w) < 3.0) continue;
            if (legOk(kBasePoint, w) && legOk(w, z)) {
                return PlanarPath(
                    {Leg(SegmentLeg{kBasePoint, w}), Leg(SegmentLeg{w, z})});
            }
        }
    }
    throw OnCut("no cut-avoiding route to the evaluation point");
}

Quaterniond CutFamily::fCut(double tcut, Complex z) const {
    const CutGeometry geom = cut(tcut);
    if (geom.distance(z) <= kCutClearance) {
        throw OnCut("evaluation point lies on or too close to the cut");
    }
    const HolomorphicGerm germ =
        log_germ(kBranchPoint, kBasePoint, Quaterniond(), engineOpts_);
    const HolomorphicGerm end =
        continue_along(germ, route(geom, z), engineOpts_);
    return end.value();
}

Quaterniond CutFamily::fPlus(const ImaginaryUnitd& J, double x,
                             double y) const {
    if (y < 0.0) {
        throw DomainError("F_J^+ is defined on the closed upper half slice");
    }
    const double tcut = cutParameter(J);
    const Quaterniond up = fCut(tcut, Complex(x, y));
    const Quaterniond dn = fCut(tcut, Complex(x, -y));
    const Quaterniond ji = J.quat() * base_.quat();
    const Quaterniond cUp = (Quaterniond::one() - ji) / 2.0;
    const Quaterniond cDn = (Quaterniond::one() + ji) / 2.0;
    return cUp * up + cDn * dn;
}

Quaterniond gamma_s(double s, double t, const ImaginaryUnitd& I) {
    return CutFamily(I).gamma(s, t);
}

double t_of(const ImaginaryUnitd& J, const ImaginaryUnitd& I) {
    return CutFamily(I).cutParameter(J);
}

namespace {

PlanarPath cut_polyline(const CutGeometry& geom, double tMax, int resolution,
                        bool mirrored) {
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(resolution) + 1);
    for (int i = 0; i <= resolution; ++i) {
        // Spend most samples on the arc; the ray is straight.
        const double u = double(i) / resolution;
        const double t = u <= 0.75 ? (u / 0.75) * 0.5
                                   : 0.5 + (u - 0.75) / 0.25 * (tMax - 0.5);
        const Complex p = geom.point(t);
        pts.push_back(mirrored ? std::conj(p) : p);
    }
    return PlanarPath::polyline(std::move(pts));
}

}  // namespace

SliceSet omega_slice_set(const CutFamily& family, int cutResolution) {
    const double tMax = family.tMax();
    return SliceSet([family, tMax, cutResolution](const ImaginaryUnitd& J) {
        const CutGeometry own = family.cut(family.cutParameter(J));
        const CutGeometry mirror = family.cut(family.cutParameter(-J));
        return Region::pathComplement(
                   cut_polyline(own, tMax, cutResolution, false), 0.0)
            .intersect(Region::pathComplement(
                cut_polyline(mirror, tMax, cutResolution, true), 0.0));
    });
}

namespace {

// Distance from the 4D point x + yJ to the cut transplanted into the slice
// of J', written through c = <J, J'>.
double skew_cut_distance(const CutGeometry& geom, double x, double y,
                         double c) {
    const double floor2 = (1.0 - c * c);  // times y_c^2 >= 1 on the cut
    // Ray part: x_c <= -2, y_c = 2.
    const double xc = std::min(-2.0, x);
    const double ray2 = (x - xc) * (x - xc) + (y - 2.0 * c) * (y - 2.0 * c) +
                        4.0 * floor2;
    // Arc part.
    const double cx = -1.0, cy = 2.0;
    const double bb = 1.0 - 2.0 * geom.s();
    auto f = [&](double theta) {
        const double ax = cx + std::cos(theta);
        const double ay = cy + bb * std::sin(theta);
        const double dx = x - ax;
        const double dy = y - c * ay;
        return dx * dx + dy * dy + floor2 * ay * ay;
    };
    const double arc2 = minimize_scalar(f, 0.0, kPi, 64);
    return std::sqrt(std::min(ray2, arc2));
}

}  // namespace

CounterexampleReport counterexample_report(const CounterexampleConfig& config,
                                           const CutFamily& family) {
    CounterexampleReport report;
    report.config = config;
    const auto units = sample_sphere(
        static_cast<std::size_t>(config.unitSamples), config.unitScheme,
        config.seed);

    // (b) Witness slice for every probe-circle point.
    report.coverageComplete = true;
    for (int k = 0; k < config.circleSamples; ++k) {
        const double ang = 2.0 * kPi * double(k) / config.circleSamples;
        const Complex p = config.probeCenter +
                          config.probeRadius *
                              Complex(std::cos(ang), std::sin(ang));
        WitnessEntry entry;
        entry.index = k;
        entry.x = p.real();
        entry.y = p.imag();
        entry.found = false;
        if (p.imag() >= 0.0) {
            for (const auto& J : units) {
                const double tc = family.cutParameter(J);
                const double d = family.cut(tc).distance(p);
                if (d > config.witnessClearance) {
                    entry.found = true;
                    entry.witness = J;
                    entry.cutParam = tc;
                    entry.clearance = d;
                    break;
                }
            }
        }
        report.coverageComplete = report.coverageComplete && entry.found;
        report.witnesses.push_back(std::move(entry));
    }

    // (a) Slice-openness clearances at sampled interior points of Omega.
    const auto openUnits =
        sample_sphere(static_cast<std::size_t>(config.opennessUnits),
                      SphereScheme::Fibonacci);
    const int grid = std::max(
        2, static_cast<int>(std::sqrt(double(config.opennessPointsPerSlice))));
    double minClear = std::numeric_limits<double>::infinity();
    for (const auto& J : openUnits) {
        const CutGeometry own = family.cut(family.cutParameter(J));
        const CutGeometry mirrored = family.cut(family.cutParameter(-J));
        for (int gy = 0; gy < grid; ++gy) {
            for (int gx = 0; gx < grid; ++gx) {
                const double x = -4.0 + 7.0 * (gx + 0.5) / grid;
                const double y = 0.1 + 3.9 * (gy + 0.5) / grid;
                const double dSelf = own.distance(Complex(x, y));
                const double dMirror = mirrored.distance(Complex(x, -y));
                const double sliceClear = std::min(dSelf, dMirror);
                if (sliceClear <= kCutClearance) continue;  // boundary band
                double euclid = sliceClear;
                for (const auto& Jp : units) {
                    const double c = J.dot(Jp);
                    if (std::sqrt(std::max(0.0, 1.0 - c * c)) >= euclid) {
                        continue;
                    }
                    const CutGeometry other =
                        family.cut(family.cutParameter(Jp));
                    euclid = std::min(
                        euclid, skew_cut_distance(other, x, y, c));
                }
                report.openness.push_back({J, x, y, sliceClear, euclid});
                minClear = std::min(minClear, sliceClear);
            }
        }
    }
    report.sliceOpen = !report.openness.empty() && minClear > 0.0;
    report.minSliceClearance = report.openness.empty() ? 0.0 : minClear;

    // (c) Log monodromy around the probe circle.
    const Complex start = config.probeCenter + config.probeRadius;
    ContinuationOptions opts;
    opts.unit = family.baseUnit();
    const HolomorphicGerm germ = log_germ(kBranchPoint, start, opts);
    const PlanarPath loop =
        PlanarPath::circle(config.probeCenter, config.probeRadius, 0.0);
    report.monodromy = monodromy_gap(germ, loop, opts);
    report.monodromyMagnitude = report.monodromy.norm();
    report.obstructionCertified =
        report.coverageComplete &&
        std::abs(report.monodromyMagnitude - 2.0 * kPi) <= config.monodromyTol;
    return report;
}

}  // namespace sliceq
