#include "sliceq/slice_topology.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <variant>

namespace sliceq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBoxClip = 64.0;  // clip for unbounded bounding boxes
constexpr double kBigClearance = 1e30;

// Refined distance from a point to a planar path (per-leg sampling plus
// golden-section polish).
double path_distance(const PlanarPath& path, Complex p) {
    double best = std::numeric_limits<double>::infinity();
    const int coarse = 96;
    double bestT = 0.0;
    for (int i = 0; i <= coarse; ++i) {
        const double t = double(i) / coarse;
        const double d = std::abs(path.eval(t) - p);
        if (d < best) {
            best = d;
            bestT = t;
        }
    }
    double a = std::max(0.0, bestT - 1.5 / coarse);
    double b = std::min(1.0, bestT + 1.5 / coarse);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    for (int it = 0; it < 40; ++it) {
        if (std::abs(path.eval(c) - p) < std::abs(path.eval(d) - p)) {
            b = d;
        } else {
            a = c;
        }
        c = b - gr * (b - a);
        d = a + gr * (b - a);
    }
    return std::min(best, std::abs(path.eval((a + b) / 2) - p));
}

}  // namespace

struct Region::Node {
    struct Empty {};
    struct Full {};
    struct Disk {
        Complex center;
        double radius;
        bool closed;
    };
    struct Ellipse {
        Complex center;
        double semiX, semiY;
    };
    struct HalfPlane {
        Complex normal;
        double offset;
    };
    struct PathComplement {
        PlanarPath path;
        double clearance;
    };
    struct Union {
        std::shared_ptr<const Node> lhs, rhs;
    };
    struct Intersection {
        std::shared_ptr<const Node> lhs, rhs;
    };

    std::variant<Empty, Full, Disk, Ellipse, HalfPlane, PathComplement, Union,
                 Intersection>
        data;
};

Region::Region(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Region Region::empty() {
    auto n = std::make_shared<Node>();
    n->data = Node::Empty{};
    return Region(n);
}

Region Region::full() {
    auto n = std::make_shared<Node>();
    n->data = Node::Full{};
    return Region(n);
}

Region Region::disk(Complex center, double radius, bool closed) {
    if (radius < 0) throw DomainError("disk radius must be >= 0");
    auto n = std::make_shared<Node>();
    n->data = Node::Disk{center, radius, closed};
    return Region(n);
}

Region Region::ellipse(Complex center, double semiX, double semiY) {
    if (semiX <= 0 || semiY <= 0) {
        throw DomainError("ellipse semi-axes must be positive");
    }
    auto n = std::make_shared<Node>();
    n->data = Node::Ellipse{center, semiX, semiY};
    return Region(n);
}

Region Region::halfPlane(Complex normal, double offset) {
    auto n = std::make_shared<Node>();
    n->data = Node::HalfPlane{normal, offset};
    return Region(n);
}

Region Region::pathComplement(PlanarPath path, double clearance) {
    if (clearance < 0) throw DomainError("clearance must be >= 0");
    auto n = std::make_shared<Node>();
    n->data = Node::PathComplement{std::move(path), clearance};
    return Region(n);
}

Region Region::unite(const Region& other) const {
    auto n = std::make_shared<Node>();
    n->data = Node::Union{node_, other.node_};
    return Region(n);
}

Region Region::intersect(const Region& other) const {
    auto n = std::make_shared<Node>();
    n->data = Node::Intersection{node_, other.node_};
    return Region(n);
}

namespace {

bool node_contains(const Region::Node& n, Complex p);
double node_clearance(const Region::Node& n, Complex p);

bool node_contains(const Region::Node& n, Complex p) {
    using N = Region::Node;
    if (std::holds_alternative<N::Empty>(n.data)) return false;
    if (std::holds_alternative<N::Full>(n.data)) return true;
    if (const auto* d = std::get_if<N::Disk>(&n.data)) {
        const double dist = std::abs(p - d->center);
        return d->closed ? dist <= d->radius : dist < d->radius;
    }
    if (const auto* e = std::get_if<N::Ellipse>(&n.data)) {
        const double qx = (p.real() - e->center.real()) / e->semiX;
        const double qy = (p.imag() - e->center.imag()) / e->semiY;
        return qx * qx + qy * qy < 1.0;
    }
    if (const auto* h = std::get_if<N::HalfPlane>(&n.data)) {
        return p.real() * h->normal.real() + p.imag() * h->normal.imag() <
               h->offset;
    }
    if (const auto* pc = std::get_if<N::PathComplement>(&n.data)) {
        return path_distance(pc->path, p) > pc->clearance;
    }
    if (const auto* u = std::get_if<N::Union>(&n.data)) {
        return node_contains(*u->lhs, p) || node_contains(*u->rhs, p);
    }
    const auto& i = std::get<N::Intersection>(n.data);
    return node_contains(*i.lhs, p) && node_contains(*i.rhs, p);
}

double node_clearance(const Region::Node& n, Complex p) {
    using N = Region::Node;
    if (std::holds_alternative<N::Empty>(n.data)) return -kBigClearance;
    if (std::holds_alternative<N::Full>(n.data)) return kBigClearance;
    if (const auto* d = std::get_if<N::Disk>(&n.data)) {
        return d->radius - std::abs(p - d->center);
    }
    if (const auto* e = std::get_if<N::Ellipse>(&n.data)) {
        const double qx = (p.real() - e->center.real()) / e->semiX;
        const double qy = (p.imag() - e->center.imag()) / e->semiY;
        const double q = std::sqrt(qx * qx + qy * qy);
        // Moving distance t changes q by at most t / min(a,b).
        return (1.0 - q) * std::min(e->semiX, e->semiY);
    }
    if (const auto* h = std::get_if<N::HalfPlane>(&n.data)) {
        const double nn = std::hypot(h->normal.real(), h->normal.imag());
        if (nn <= 0) return -kBigClearance;
        return (h->offset - (p.real() * h->normal.real() +
                             p.imag() * h->normal.imag())) /
               nn;
    }
    if (const auto* pc = std::get_if<N::PathComplement>(&n.data)) {
        return path_distance(pc->path, p) - pc->clearance;
    }
    if (const auto* u = std::get_if<N::Union>(&n.data)) {
        return std::max(node_clearance(*u->lhs, p),
                        node_clearance(*u->rhs, p));
    }
    const auto& i = std::get<N::Intersection>(n.data);
    return std::min(node_clearance(*i.lhs, p), node_clearance(*i.rhs, p));
}

void node_box(const Region::Node& n, double& xlo, double& xhi, double& ylo,
              double& yhi) {
    using N = Region::Node;
    xlo = -kBoxClip;
    xhi = kBoxClip;
    ylo = -kBoxClip;
    yhi = kBoxClip;
    if (const auto* d = std::get_if<N::Disk>(&n.data)) {
        xlo = d->center.real() - d->radius;
        xhi = d->center.real() + d->radius;
        ylo = d->center.imag() - d->radius;
        yhi = d->center.imag() + d->radius;
        return;
    }
    if (const auto* e = std::get_if<N::Ellipse>(&n.data)) {
        xlo = e->center.real() - e->semiX;
        xhi = e->center.real() + e->semiX;
        ylo = e->center.imag() - e->semiY;
        yhi = e->center.imag() + e->semiY;
        return;
    }
    if (const auto* u = std::get_if<N::Union>(&n.data)) {
        double a, b, c, d2;
        node_box(*u->lhs, xlo, xhi, ylo, yhi);
        node_box(*u->rhs, a, b, c, d2);
        xlo = std::min(xlo, a);
        xhi = std::max(xhi, b);
        ylo = std::min(ylo, c);
        yhi = std::max(yhi, d2);
        return;
    }
    if (const auto* i = std::get_if<N::Intersection>(&n.data)) {
        double a, b, c, d2;
        node_box(*i->lhs, xlo, xhi, ylo, yhi);
        node_box(*i->rhs, a, b, c, d2);
        xlo = std::max(xlo, a);
        xhi = std::min(xhi, b);
        ylo = std::max(ylo, c);
        yhi = std::min(yhi, d2);
        return;
    }
}

void node_candidates(const Region::Node& n, int density,
                     std::vector<Complex>& out) {
    using N = Region::Node;
    if (const auto* d = std::get_if<N::Disk>(&n.data)) {
        out.push_back(d->center);
        const int rings = std::max(2, density / 8);
        for (int r = 1; r <= rings; ++r) {
            double frac = double(r) / rings;
            if (!d->closed && r == rings) frac = 0.97;
            if (d->closed && r == rings) frac = 1.0;  // boundary samples
            for (int m = 0; m < 16; ++m) {
                const double ang = 2.0 * kPi * m / 16.0;
                out.push_back(d->center +
                              d->radius * frac *
                                  Complex(std::cos(ang), std::sin(ang)));
            }
        }
        return;
    }
    if (const auto* e = std::get_if<N::Ellipse>(&n.data)) {
        out.push_back(e->center);
        const int rings = std::max(2, density / 8);
        for (int r = 1; r <= rings; ++r) {
            const double frac = r == rings ? 0.97 : double(r) / rings;
            for (int m = 0; m < 16; ++m) {
                const double ang = 2.0 * kPi * m / 16.0;
                out.push_back(e->center +
                              Complex(e->semiX * frac * std::cos(ang),
                                      e->semiY * frac * std::sin(ang)));
            }
        }
        return;
    }
    if (const auto* u = std::get_if<N::Union>(&n.data)) {
        node_candidates(*u->lhs, density, out);
        node_candidates(*u->rhs, density, out);
        return;
    }
    if (const auto* i = std::get_if<N::Intersection>(&n.data)) {
        node_candidates(*i->lhs, density, out);
        node_candidates(*i->rhs, density, out);
        return;
    }
    // Fallback: grid over the (clipped) bounding box.
    double xlo, xhi, ylo, yhi;
    node_box(n, xlo, xhi, ylo, yhi);
    const int g = std::max(2, static_cast<int>(std::sqrt(double(density))));
    for (int gy = 0; gy < g; ++gy) {
        for (int gx = 0; gx < g; ++gx) {
            out.emplace_back(xlo + (xhi - xlo) * (gx + 0.5) / g,
                             ylo + (yhi - ylo) * (gy + 0.5) / g);
        }
    }
}

}  // namespace

bool Region::contains(Complex p) const { return node_contains(*node_, p); }

double Region::interiorClearance(Complex p) const {
    return node_clearance(*node_, p);
}

std::vector<Complex> Region::sampleCandidates(int density) const {
    std::vector<Complex> out;
    node_candidates(*node_, density, out);
    return out;
}

void Region::boundingBox(double& xlo, double& xhi, double& ylo,
                         double& yhi) const {
    node_box(*node_, xlo, xhi, ylo, yhi);
}

SliceSet::SliceSet(std::function<Region(const ImaginaryUnitd&)> regionOf)
    : regionOf_(std::move(regionOf)) {}

bool SliceSet::contains(const Quaterniond& q) const {
    const SlicePointd p = decompose(q);
    const ImaginaryUnitd unit = p.isReal() ? unit_i<double>() : *p.unit;
    return regionOf_(unit).contains(Complex(p.x, p.y));
}

double SliceSet::interiorClearance(const Quaterniond& q) const {
    const SlicePointd p = decompose(q);
    const ImaginaryUnitd unit = p.isReal() ? unit_i<double>() : *p.unit;
    return regionOf_(unit).interiorClearance(Complex(p.x, p.y));
}

// Below this slice distance a unit counts as +-I itself. Kept well under
// the 2^-43 distances probed by the Euclidean-ball witness at r = 2^-20.
inline constexpr double kSliceIdentityTol = 1e-14;

SliceSet ellipse_union(const ImaginaryUnitd& I) {
    return SliceSet([I](const ImaginaryUnitd& J) {
        const double d = dist_to_slice(J, I);
        if (d <= kSliceIdentityTol) {
            return Region::disk(Complex(0, 0), 1.0);
        }
        return Region::ellipse(Complex(0, 0), 1.0, std::sqrt(d));
    });
}

SliceSet ball_slice_set(const Quaterniond& center, double radius,
                        bool closed) {
    const SlicePointd c = decompose(center);
    return SliceSet([c, radius, closed](const ImaginaryUnitd& J) {
        // Trace of the 4D ball in C_J: a disk around (x0, y0 <J, I0>) of
        // squared radius r^2 - y0^2 (1 - <J, I0>^2).
        const double align = c.isReal() ? 0.0 : c.unit->dot(J);
        const double rhs =
            radius * radius - c.y * c.y * (1.0 - align * align);
        if (rhs <= 0 && !(closed && rhs == 0)) return Region::empty();
        return Region::disk(Complex(c.x, c.y * align), std::sqrt(std::max(
                                                           0.0, rhs)),
                            closed);
    });
}

SliceSet axially_symmetric_completion(
    const SliceSet& S, const std::vector<ImaginaryUnitd>& units) {
    // The witness union is slice-independent by construction; sampled
    // unit families should cover antipodal pairs.
    Region merged = Region::empty();
    for (const auto& I : units) {
        merged = merged.unite(S.regionOf(I));
    }
    return SliceSet([merged](const ImaginaryUnitd&) { return merged; });
}

SliceOpennessReport is_slice_open_sampled(
    const SliceSet& S, const std::vector<ImaginaryUnitd>& units,
    int pointsPerSlice) {
    SliceOpennessReport report;
    report.pass = true;
    for (const auto& I : units) {
        const Region region = S.regionOf(I);
        SliceOpennessEntry entry;
        entry.unit = I;
        entry.minClearance = std::numeric_limits<double>::infinity();
        int taken = 0;
        for (const Complex& p : region.sampleCandidates(pointsPerSlice)) {
            if (!region.contains(p)) continue;
            if (taken >= pointsPerSlice) break;
            ++taken;
            const double c = region.interiorClearance(p);
            if (c < entry.minClearance) {
                entry.minClearance = c;
                entry.worstPoint = p;
            }
        }
        entry.memberSamples = taken;
        entry.pass = taken == 0 || entry.minClearance > 0.0;
        if (taken == 0) entry.minClearance = 0.0;
        report.pass = report.pass && entry.pass;
        report.slices.push_back(std::move(entry));
    }
    return report;
}

RealConnectednessReport is_real_connected(const SliceSet& S, double xlo,
                                          double xhi, int resolution) {
    RealConnectednessReport report;
    bool prev = false;
    for (int i = 0; i <= resolution; ++i) {
        const double x = xlo + (xhi - xlo) * double(i) / resolution;
        const bool member = S.contains(Quaterniond(x, 0, 0, 0));
        if (member && !prev) ++report.componentCount;
        prev = member;
    }
    report.connected = report.componentCount <= 1;
    return report;
}

std::vector<SliceComponentEntry> slice_components(
    const SliceSet& S, const std::vector<ImaginaryUnitd>& units,
    int resolution, double xlo, double xhi, double ylo, double yhi) {
    std::vector<SliceComponentEntry> out;
    for (const auto& I : units) {
        const Region upper = S.regionOf(I);
        const Region lower = S.regionOf(-I);
        std::vector<char> mask(static_cast<std::size_t>(resolution) *
                               resolution);
        auto at = [&](int gx, int gy) -> char& {
            return mask[static_cast<std::size_t>(gy) * resolution + gx];
        };
        for (int gy = 0; gy < resolution; ++gy) {
            for (int gx = 0; gx < resolution; ++gx) {
                const double x = xlo + (xhi - xlo) * (gx + 0.5) / resolution;
                const double y = ylo + (yhi - ylo) * (gy + 0.5) / resolution;
                // Full-plane trace: y >= 0 through I, y < 0 through -I.
                const bool member = y >= 0 ? upper.contains(Complex(x, y))
                                           : lower.contains(Complex(x, -y));
                at(gx, gy) = member ? 1 : 0;
            }
        }
        int components = 0;
        for (int gy = 0; gy < resolution; ++gy) {
            for (int gx = 0; gx < resolution; ++gx) {
                if (at(gx, gy) != 1) continue;
                ++components;
                std::queue<std::pair<int, int>> frontier;
                frontier.emplace(gx, gy);
                at(gx, gy) = 2;
                while (!frontier.empty()) {
                    const auto [cx, cy] = frontier.front();
                    frontier.pop();
                    const int dx[] = {1, -1, 0, 0};
                    const int dy[] = {0, 0, 1, -1};
                    for (int d = 0; d < 4; ++d) {
                        const int nx = cx + dx[d], ny = cy + dy[d];
                        if (nx < 0 || ny < 0 || nx >= resolution ||
                            ny >= resolution) {
                            continue;
                        }
                        if (at(nx, ny) == 1) {
                            at(nx, ny) = 2;
                            frontier.emplace(nx, ny);
                        }
                    }
                }
            }
        }
        out.push_back({I, components});
    }
    return out;
}

BallWitness euclidean_ball_witness(const SliceSet& S, const ImaginaryUnitd& I,
                                   double r) {
    if (!(r > 0)) throw ParameterOutOfRange("ball radius must be positive");
    BallWitness w;
    w.radius = r;
    // A slice this close to C_I has semi-minor axis below r/2 in the
    // ellipse-union construction; the probe r/2 along its unit falls out.
    const double d = std::min(0.5, r * r / 8.0);
    w.unit = unit_at_distance(I, d);
    w.point = w.unit.quat() * (r / 2.0);
    w.excluded = !S.contains(w.point);
    return w;
}

}  // namespace sliceq
