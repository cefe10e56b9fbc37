#include "sliceq/sampling.hpp"

#include <cmath>

namespace sliceq {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<ImaginaryUnitd> grid_samples(std::size_t n) {
    std::vector<ImaginaryUnitd> out;
    out.reserve(n);
    out.push_back(unit_i<double>());
    if (n == 1) return out;
    // Latitude rings around the i axis, poles first; azimuth sweeps (j,k).
    const std::size_t rings =
        std::max<std::size_t>(1, static_cast<std::size_t>(
                                     std::ceil(std::sqrt(double(n)))));
    const std::size_t perRing = (n - 1 + rings - 1) / rings;
    for (std::size_t r = 0; r < rings && out.size() < n; ++r) {
        const double colat = kPi * double(r + 1) / double(rings + 1);
        const double c = std::cos(colat);
        const double s = std::sin(colat);
        for (std::size_t m = 0; m < perRing && out.size() < n; ++m) {
            const double phi = 2.0 * kPi * double(m) / double(perRing);
            out.push_back(ImaginaryUnitd::normalized(c, s * std::cos(phi),
                                                     s * std::sin(phi)));
        }
    }
    while (out.size() < n) out.push_back(-unit_i<double>());
    return out;
}

std::vector<ImaginaryUnitd> fibonacci_samples(std::size_t n) {
    // Offset golden-angle spiral along the i axis.
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    std::vector<ImaginaryUnitd> out;
    out.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double xc = 1.0 - 2.0 * (double(m) + 0.5) / double(n);
        const double rho = std::sqrt(std::max(0.0, 1.0 - xc * xc));
        const double ang = golden * double(m);
        out.push_back(ImaginaryUnitd::normalized(xc, rho * std::cos(ang),
                                                 rho * std::sin(ang)));
    }
    return out;
}

}  // namespace

ImaginaryUnitd random_unit(std::mt19937_64& rng) {
    const double c = 2.0 * uniform01(rng) - 1.0;
    const double phi = 2.0 * kPi * uniform01(rng);
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    return ImaginaryUnitd::normalized(c, s * std::cos(phi), s * std::sin(phi));
}

Quaterniond random_quaternion(std::mt19937_64& rng, double amplitude) {
    auto u = [&] { return amplitude * (2.0 * uniform01(rng) - 1.0); };
    return {u(), u(), u(), u()};
}

std::vector<ImaginaryUnitd> sample_sphere(std::size_t n, SphereScheme scheme,
                                          std::uint64_t seed) {
    if (n < 1) throw DomainError("sample_sphere requires n >= 1");
    switch (scheme) {
        case SphereScheme::Grid:
            return grid_samples(n);
        case SphereScheme::Fibonacci:
            return fibonacci_samples(n);
        case SphereScheme::Random: {
            std::mt19937_64 rng(seed);
            std::vector<ImaginaryUnitd> out;
            out.reserve(n);
            for (std::size_t m = 0; m < n; ++m) out.push_back(random_unit(rng));
            return out;
        }
    }
    throw DomainError("unknown sphere sampling scheme");
}

ImaginaryUnitd unit_at_distance(const ImaginaryUnitd& I, double d) {
    if (d < 0.0 || d > 1.0) {
        throw ParameterOutOfRange("unit_at_distance requires d in [0,1]");
    }
    const ImaginaryUnitd perp = orthogonal_unit(I);
    const double c = std::sqrt(std::max(0.0, 1.0 - d * d));
    return ImaginaryUnitd::normalized(c * I.x() + d * perp.x(),
                                      c * I.y() + d * perp.y(),
                                      c * I.z() + d * perp.z());
}

}  // namespace sliceq
