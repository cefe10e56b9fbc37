#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "sliceq/paths.hpp"
#include "sliceq/sampling.hpp"

namespace sliceq {

/// Planar region in slice coordinates, built from a closed algebra of
/// primitives. Membership is exact; interiorClearance is a conservative
/// lower bound on the distance to the complement (<= 0 outside the
/// interior).
class Region {
public:
    static Region empty();
    static Region full();
    static Region disk(Complex center, double radius, bool closed = false);
    static Region ellipse(Complex center, double semiX, double semiY);
    // {p : dot(p, normal) < offset}
    static Region halfPlane(Complex normal, double offset);
    // {p : dist(p, path) > clearance}
    static Region pathComplement(PlanarPath path, double clearance);

    Region unite(const Region& other) const;
    Region intersect(const Region& other) const;

    bool contains(Complex p) const;
    double interiorClearance(Complex p) const;

    // Deterministic candidate points for openness sampling; includes
    // boundary points of closed primitives. Callers filter by contains().
    std::vector<Complex> sampleCandidates(int density) const;

    // Conservative bounding box (clipped for unbounded regions).
    void boundingBox(double& xlo, double& xhi, double& ylo,
                     double& yhi) const;

private:
    struct Node;
    explicit Region(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// A set in H described slice-by-slice: unit I maps to the planar region
/// of its slice trace. Membership of a quaternion goes through decompose;
/// real points are answered through the canonical slice.
class SliceSet {
public:
    explicit SliceSet(std::function<Region(const ImaginaryUnitd&)> regionOf);

    Region regionOf(const ImaginaryUnitd& I) const { return regionOf_(I); }

    bool contains(const Quaterniond& q) const;
    double interiorClearance(const Quaterniond& q) const;

private:
    std::function<Region(const ImaginaryUnitd&)> regionOf_;
};

// The union-of-ellipses witness that the slice topology is strictly finer
// than the Euclidean one: in the slice of J the trace is
// x^2 + y^2 / dist(J, C_I) < 1, a disk at J = +-I.
SliceSet ellipse_union(const ImaginaryUnitd& I);

// Euclidean ball B_H(center, radius) as a slice set (open or closed).
SliceSet ball_slice_set(const Quaterniond& center, double radius,
                        bool closed = false);

// Axially symmetric completion over the sampled witness units: membership
// of x + yJ is membership of x + yI in S for some sampled I.
SliceSet axially_symmetric_completion(const SliceSet& S,
                                      const std::vector<ImaginaryUnitd>& units);

struct SliceOpennessEntry {
    ImaginaryUnitd unit;
    int memberSamples = 0;
    double minClearance = 0.0;
    bool pass = false;
    std::optional<Complex> worstPoint;
};

struct SliceOpennessReport {
    std::vector<SliceOpennessEntry> slices;
    bool pass = false;
};

// For each unit, sample member points of the slice trace and report the
// smallest interior clearance; passes iff every sampled member point has
// positive clearance.
SliceOpennessReport is_slice_open_sampled(
    const SliceSet& S, const std::vector<ImaginaryUnitd>& units,
    int pointsPerSlice);

struct RealConnectednessReport {
    bool connected = false;
    int componentCount = 0;
};

// Scans S on the real axis over [xlo, xhi]; at most one run of member
// samples passes (the empty trace counts as connected).
RealConnectednessReport is_real_connected(const SliceSet& S, double xlo,
                                          double xhi, int resolution);

struct SliceComponentEntry {
    ImaginaryUnitd unit;
    int components = 0;
};

// Connected-component counts of the slice traces on a pixel grid over the
// full plane box [xlo,xhi] x [ylo,yhi] (y < 0 reached through -I).
std::vector<SliceComponentEntry> slice_components(
    const SliceSet& S, const std::vector<ImaginaryUnitd>& units,
    int resolution, double xlo, double xhi, double ylo, double yhi);

struct BallWitness {
    double radius;          // Euclidean ball radius r around 0
    ImaginaryUnitd unit;    // slice whose thin axis excludes the point
    Quaterniond point;      // the excluded point (r/2 along the unit)
    bool excluded = false;  // point in B(0,r) but outside the set
};

// Witness that no Euclidean ball B(0,r) fits inside S: probes r/2 along
// the thin axis of a slice at distance < r^2/4 from C_I.
BallWitness euclidean_ball_witness(const SliceSet& S, const ImaginaryUnitd& I,
                                   double r);

}  // namespace sliceq
