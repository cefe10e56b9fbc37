#include "sliceq/paths.hpp"

#include <algorithm>
#include <cmath>

namespace sliceq {

namespace {

constexpr double kContinuityTol = 1e-9;

double clamp01(double s) { return std::min(1.0, std::max(0.0, s)); }

}  // namespace

Complex leg_eval(const Leg& leg, double s) {
    s = clamp01(s);
    if (const auto* seg = std::get_if<SegmentLeg>(&leg)) {
        return seg->from + s * (seg->to - seg->from);
    }
    if (const auto* arc = std::get_if<ArcLeg>(&leg)) {
        const double a = arc->angle0 + s * (arc->angle1 - arc->angle0);
        return arc->center +
               arc->radius * Complex(std::cos(a), std::sin(a));
    }
    const auto& pl = std::get<PolylineLeg>(leg);
    const std::size_t segs = pl.points.size() - 1;
    if (segs == 0) return pl.points.front();
    const double u = s * double(segs);
    std::size_t idx = std::min(segs - 1, static_cast<std::size_t>(u));
    const double frac = u - double(idx);
    return pl.points[idx] + frac * (pl.points[idx + 1] - pl.points[idx]);
}

Complex leg_start(const Leg& leg) { return leg_eval(leg, 0.0); }
Complex leg_end(const Leg& leg) { return leg_eval(leg, 1.0); }

double leg_length(const Leg& leg) {
    if (const auto* seg = std::get_if<SegmentLeg>(&leg)) {
        return std::abs(seg->to - seg->from);
    }
    if (const auto* arc = std::get_if<ArcLeg>(&leg)) {
        return arc->radius * std::abs(arc->angle1 - arc->angle0);
    }
    const auto& pl = std::get<PolylineLeg>(leg);
    double len = 0;
    for (std::size_t i = 0; i + 1 < pl.points.size(); ++i) {
        len += std::abs(pl.points[i + 1] - pl.points[i]);
    }
    return len;
}

Leg leg_prefix(const Leg& leg, double s) {
    s = clamp01(s);
    if (const auto* seg = std::get_if<SegmentLeg>(&leg)) {
        return SegmentLeg{seg->from, leg_eval(leg, s)};
    }
    if (const auto* arc = std::get_if<ArcLeg>(&leg)) {
        return ArcLeg{arc->center, arc->radius, arc->angle0,
                      arc->angle0 + s * (arc->angle1 - arc->angle0)};
    }
    const auto& pl = std::get<PolylineLeg>(leg);
    const std::size_t segs = pl.points.size() - 1;
    if (segs == 0) return pl;
    const double u = s * double(segs);
    const std::size_t idx = std::min(segs - 1, static_cast<std::size_t>(u));
    std::vector<Complex> pts(pl.points.begin(),
                             pl.points.begin() + std::ptrdiff_t(idx) + 1);
    pts.push_back(leg_eval(leg, s));
    // Vertices are no longer equally spaced in the original parameter, but
    // prefix legs only feed geometric queries, not reparametrized eval.
    return PolylineLeg{std::move(pts)};
}

Leg leg_reversed(const Leg& leg) {
    if (const auto* seg = std::get_if<SegmentLeg>(&leg)) {
        return SegmentLeg{seg->to, seg->from};
    }
    if (const auto* arc = std::get_if<ArcLeg>(&leg)) {
        return ArcLeg{arc->center, arc->radius, arc->angle1, arc->angle0};
    }
    auto pl = std::get<PolylineLeg>(leg);
    std::reverse(pl.points.begin(), pl.points.end());
    return pl;
}

double leg_param_at_length(const Leg& leg, double s) {
    const double total = leg_length(leg);
    if (total <= 0) return 1.0;
    if (const auto* pl = std::get_if<PolylineLeg>(&leg)) {
        const std::size_t segs = pl->points.size() - 1;
        double acc = 0;
        for (std::size_t i = 0; i < segs; ++i) {
            const double d = std::abs(pl->points[i + 1] - pl->points[i]);
            if (acc + d >= s) {
                const double frac = d > 0 ? (s - acc) / d : 1.0;
                return (double(i) + frac) / double(segs);
            }
            acc += d;
        }
        return 1.0;
    }
    return clamp01(s / total);  // segment and arc have constant speed
}

PlanarPath::PlanarPath(std::vector<Leg> legs) : legs_(std::move(legs)) {
    if (legs_.empty()) throw DomainError("path must have at least one leg");
    breaks_.resize(legs_.size() + 1);
    for (std::size_t i = 0; i <= legs_.size(); ++i) {
        breaks_[i] = double(i) / double(legs_.size());
    }
    validate();
}

PlanarPath::PlanarPath(std::vector<Leg> legs, std::vector<double> breaks)
    : legs_(std::move(legs)), breaks_(std::move(breaks)) {
    if (legs_.empty()) throw DomainError("path must have at least one leg");
    if (breaks_.size() != legs_.size() + 1 || breaks_.front() != 0.0 ||
        std::abs(breaks_.back() - 1.0) > 1e-15) {
        throw DomainError("path breakpoints must run from 0 to 1");
    }
    breaks_.back() = 1.0;
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        if (!(breaks_[i] < breaks_[i + 1])) {
            throw DomainError("path breakpoints must be strictly increasing");
        }
    }
    validate();
}

void PlanarPath::validate() const {
    for (std::size_t i = 0; i + 1 < legs_.size(); ++i) {
        if (std::abs(leg_end(legs_[i]) - leg_start(legs_[i + 1])) >
            kContinuityTol) {
            throw DomainError("path legs are not continuous");
        }
    }
    for (const Leg& leg : legs_) {
        if (const auto* pl = std::get_if<PolylineLeg>(&leg)) {
            if (pl->points.empty()) {
                throw DomainError("polyline leg needs at least one vertex");
            }
        }
        if (const auto* arc = std::get_if<ArcLeg>(&leg)) {
            if (arc->radius < 0) throw DomainError("arc radius must be >= 0");
        }
    }
}

PlanarPath PlanarPath::segment(Complex a, Complex b) {
    return PlanarPath({Leg(SegmentLeg{a, b})});
}

PlanarPath PlanarPath::arc(Complex center, double radius, double angle0,
                           double angle1) {
    return PlanarPath({Leg(ArcLeg{center, radius, angle0, angle1})});
}

PlanarPath PlanarPath::circle(Complex center, double radius,
                              double startAngle) {
    return arc(center, radius, startAngle,
               startAngle + 2.0 * 3.14159265358979323846);
}

PlanarPath PlanarPath::polyline(std::vector<Complex> points) {
    return PlanarPath({Leg(PolylineLeg{std::move(points)})});
}

PlanarPath PlanarPath::constant(Complex z) { return segment(z, z); }

Complex PlanarPath::eval(double t) const {
    if (t < -1e-15 || t > 1.0 + 1e-15) {
        throw ParameterOutOfRange("path parameter outside [0,1]");
    }
    t = clamp01(t);
    // Locate the leg whose parameter interval contains t.
    std::size_t idx =
        static_cast<std::size_t>(std::upper_bound(breaks_.begin(),
                                                  breaks_.end(), t) -
                                 breaks_.begin());
    if (idx > 0) --idx;
    if (idx >= legs_.size()) idx = legs_.size() - 1;
    const double lo = breaks_[idx], hi = breaks_[idx + 1];
    return leg_eval(legs_[idx], (t - lo) / (hi - lo));
}

Complex PlanarPath::start() const { return leg_start(legs_.front()); }
Complex PlanarPath::end() const { return leg_end(legs_.back()); }

const std::vector<double>& PlanarPath::lengths() const {
    if (lengthTable_.empty()) {
        lengthTable_.resize(legs_.size() + 1, 0.0);
        for (std::size_t i = 0; i < legs_.size(); ++i) {
            lengthTable_[i + 1] = lengthTable_[i] + leg_length(legs_[i]);
        }
    }
    return lengthTable_;
}

double PlanarPath::length() const { return lengths().back(); }

double PlanarPath::paramAtLength(double s) const {
    const auto& table = lengths();
    if (s <= 0) return 0.0;
    if (s >= table.back()) return 1.0;
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(table.begin(), table.end(), s) - table.begin());
    if (idx > 0) --idx;
    if (idx >= legs_.size()) idx = legs_.size() - 1;
    const double local = leg_param_at_length(legs_[idx], s - table[idx]);
    return breaks_[idx] + local * (breaks_[idx + 1] - breaks_[idx]);
}

PlanarPath PlanarPath::prefix(double u) const {
    if (u <= 0 || u > 1.0 + 1e-15) {
        throw ParameterOutOfRange("prefix parameter must lie in (0,1]");
    }
    u = clamp01(u);
    std::size_t idx =
        static_cast<std::size_t>(std::upper_bound(breaks_.begin(),
                                                  breaks_.end(), u) -
                                 breaks_.begin());
    if (idx > 0) --idx;
    if (idx >= legs_.size()) idx = legs_.size() - 1;
    const double lo = breaks_[idx], hi = breaks_[idx + 1];
    const double local = (u - lo) / (hi - lo);

    std::vector<Leg> legs(legs_.begin(), legs_.begin() + std::ptrdiff_t(idx));
    std::vector<double> breaks;
    for (std::size_t i = 0; i <= idx; ++i) breaks.push_back(breaks_[i] / u);
    if (local > 1e-15) {
        if (const auto* pl = std::get_if<PolylineLeg>(&legs_[idx]);
            pl != nullptr && pl->points.size() > 2) {
            // Expand the partial polyline into segment legs with exact
            // breakpoints so the restriction preserves the parametrization.
            const std::size_t segs = pl->points.size() - 1;
            const double lo = breaks_[idx];
            const double span = breaks_[idx + 1] - breaks_[idx];
            const double uu = local * double(segs);
            std::size_t vidx = std::min(segs - 1,
                                        static_cast<std::size_t>(uu));
            double vfrac = uu - double(vidx);
            if (vfrac < 1e-12 && vidx > 0) {
                --vidx;
                vfrac = 1.0;
            }
            for (std::size_t v = 0; v < vidx; ++v) {
                legs.push_back(
                    Leg(SegmentLeg{pl->points[v], pl->points[v + 1]}));
                breaks.push_back((lo + span * double(v + 1) / double(segs)) /
                                 u);
            }
            legs.push_back(Leg(SegmentLeg{pl->points[vidx],
                                          leg_eval(legs_[idx], local)}));
            breaks.push_back(1.0);
        } else {
            legs.push_back(leg_prefix(legs_[idx], local));
            breaks.push_back(1.0);
        }
    } else if (legs.empty()) {
        legs.push_back(leg_prefix(legs_[idx], 0.0));
        breaks.push_back(1.0);
    } else {
        breaks.back() = 1.0;
    }
    return PlanarPath(std::move(legs), std::move(breaks));
}

PlanarPath PlanarPath::reversed() const {
    std::vector<Leg> legs;
    std::vector<double> breaks;
    legs.reserve(legs_.size());
    breaks.push_back(0.0);
    for (std::size_t i = legs_.size(); i-- > 0;) {
        legs.push_back(leg_reversed(legs_[i]));
        breaks.push_back(1.0 - breaks_[i]);
    }
    return PlanarPath(std::move(legs), std::move(breaks));
}

PlanarPath PlanarPath::then(const PlanarPath& next) const {
    if (std::abs(end() - next.start()) > kContinuityTol) {
        throw DomainError("concatenated paths must share an endpoint");
    }
    std::vector<Leg> legs = legs_;
    legs.insert(legs.end(), next.legs_.begin(), next.legs_.end());
    std::vector<double> breaks;
    for (double b : breaks_) breaks.push_back(0.5 * b);
    for (std::size_t i = 1; i < next.breaks_.size(); ++i) {
        breaks.push_back(0.5 + 0.5 * next.breaks_[i]);
    }
    return PlanarPath(std::move(legs), std::move(breaks));
}

NPartPath::NPartPath(std::vector<PlanarPath> parts)
    : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw DomainError("an N-part path needs at least one part");
    }
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        const Complex e = parts_[i].end();
        const Complex s = parts_[i + 1].start();
        if (std::abs(e.imag()) > kJunctionTol ||
            std::abs(e - s) > kJunctionTol) {
            throw BrokenJunction(
                "junction points must be real and shared by adjacent parts");
        }
    }
}

Complex NPartPath::eval(double t) const {
    if (t < -1e-15 || t > 1.0 + 1e-15) {
        throw ParameterOutOfRange("path parameter outside [0,1]");
    }
    t = clamp01(t);
    const int n = partCount();
    if (t >= 1.0) return parts_.back().eval(1.0);
    const double u = t * n;
    const int idx = std::min(n - 1, static_cast<int>(u));
    return parts_[std::size_t(idx)].eval(u - double(idx));
}

NPartPath NPartPath::truncate(double t, TruncateSide side) const {
    if (!(t > 0.0) || t > 1.0 + 1e-15) {
        throw ParameterOutOfRange("truncate parameter must lie in (0,1]");
    }
    t = clamp01(t);
    if (t >= 1.0) return *this;
    const int n = partCount();
    const double u = t * n;
    int m = static_cast<int>(u);
    double frac = u - double(m);
    // Snap to exact part boundaries.
    if (frac < 1e-12 * n) {
        frac = 0.0;
    } else if (frac > 1.0 - 1e-12 * n) {
        frac = 0.0;
        ++m;
    }

    std::vector<PlanarPath> parts(parts_.begin(),
                                  parts_.begin() + std::ptrdiff_t(m));
    if (frac > 0.0) {
        parts.push_back(parts_[std::size_t(m)].prefix(frac));
    } else if (side == TruncateSide::Closed) {
        // gamma[m/N] ends in the degenerate constant part at gamma(t).
        parts.push_back(PlanarPath::constant(eval(t)));
    }
    if (parts.empty()) {
        throw ParameterOutOfRange(
            "left truncation below the first part boundary is empty");
    }
    return NPartPath(std::move(parts));
}

NPartPath compose(std::vector<PlanarPath> parts) {
    return NPartPath(std::move(parts));
}

QPath::QPath(std::vector<std::pair<PlanarPath, ImaginaryUnitd>> parts)
    : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw DomainError("a finite-part path needs at least one part");
    }
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        const Quaterniond e = embed(parts_[i].first.end(), parts_[i].second);
        const Quaterniond s =
            embed(parts_[i + 1].first.start(), parts_[i + 1].second);
        if (e.imag().norm() > kJunctionTol || (e - s).norm() > kJunctionTol) {
            throw BrokenJunction("lifted junction points must be real");
        }
    }
}

Quaterniond QPath::eval(double t) const {
    if (t < -1e-15 || t > 1.0 + 1e-15) {
        throw ParameterOutOfRange("path parameter outside [0,1]");
    }
    t = std::min(1.0, std::max(0.0, t));
    const int n = partCount();
    if (t >= 1.0) {
        return embed(parts_.back().first.eval(1.0), parts_.back().second);
    }
    const double u = t * n;
    const int idx = std::min(n - 1, static_cast<int>(u));
    const auto& [path, unit] = parts_[std::size_t(idx)];
    return embed(path.eval(u - double(idx)), unit);
}

Quaterniond QPath::endpoint() const { return eval(1.0); }

QPath lift(const NPartPath& g, const UnitTupled& units) {
    if (static_cast<int>(units.size()) != g.partCount()) {
        throw LengthMismatch("unit tuple length must equal the part count");
    }
    std::vector<std::pair<PlanarPath, ImaginaryUnitd>> parts;
    parts.reserve(units.size());
    for (int i = 0; i < g.partCount(); ++i) {
        parts.emplace_back(g.part(i), units[std::size_t(i)]);
    }
    return QPath(std::move(parts));
}

}  // namespace sliceq
