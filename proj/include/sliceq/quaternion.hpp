#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <ostream>

#include "sliceq/errors.hpp"

namespace sliceq {

// Tolerance for unit-norm and purity checks on imaginary units.
inline constexpr double kUnitTol = 1e-12;
// A quaternion below this norm is treated as zero for inversion.
inline constexpr double kZeroTol = 1e-150;

/// Element of the skew field of quaternions over basis (1, i, j, k).
/// Immutable value type; all operations are pure.
template <typename Scalar = double>
class Quaternion {
public:
    using value_type = Scalar;

    constexpr Quaternion() : w_(0), x_(0), y_(0), z_(0) {}
    constexpr Quaternion(Scalar w, Scalar x, Scalar y, Scalar z)
        : w_(w), x_(x), y_(y), z_(z) {}

    static constexpr Quaternion zero() { return {0, 0, 0, 0}; }
    static constexpr Quaternion one() { return {1, 0, 0, 0}; }

    constexpr Scalar w() const { return w_; }
    constexpr Scalar x() const { return x_; }
    constexpr Scalar y() const { return y_; }
    constexpr Scalar z() const { return z_; }

    constexpr Scalar real() const { return w_; }
    constexpr Quaternion imag() const { return {0, x_, y_, z_}; }

    constexpr Quaternion operator-() const { return {-w_, -x_, -y_, -z_}; }

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w_ + o.w_, x_ + o.x_, y_ + o.y_, z_ + o.z_};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w_ - o.w_, x_ - o.x_, y_ - o.y_, z_ - o.z_};
    }

    // Hamilton product; order matters.
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {w_ * o.w_ - x_ * o.x_ - y_ * o.y_ - z_ * o.z_,
                w_ * o.x_ + x_ * o.w_ + y_ * o.z_ - z_ * o.y_,
                w_ * o.y_ - x_ * o.z_ + y_ * o.w_ + z_ * o.x_,
                w_ * o.z_ + x_ * o.y_ - y_ * o.x_ + z_ * o.w_};
    }

    constexpr Quaternion operator*(Scalar s) const {
        return {w_ * s, x_ * s, y_ * s, z_ * s};
    }
    constexpr Quaternion operator/(Scalar s) const {
        return {w_ / s, x_ / s, y_ / s, z_ / s};
    }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    constexpr bool operator==(const Quaternion& o) const = default;

    constexpr Quaternion conjugate() const { return {w_, -x_, -y_, -z_}; }

    constexpr Scalar squaredNorm() const {
        return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_;
    }
    Scalar norm() const { return std::sqrt(squaredNorm()); }

    // Euclidean inner product on R^4.
    constexpr Scalar dot(const Quaternion& o) const {
        return w_ * o.w_ + x_ * o.x_ + y_ * o.y_ + z_ * o.z_;
    }

    Quaternion inverse() const {
        const Scalar n2 = squaredNorm();
        if (!(n2 > kZeroTol)) {
            throw ZeroDivision("quaternion inverse of (near-)zero value");
        }
        return conjugate() / n2;
    }

    Quaternion normalized() const {
        const Scalar n = norm();
        if (!(n > kZeroTol)) {
            throw ZeroDivision("cannot normalize (near-)zero quaternion");
        }
        return *this / n;
    }

    bool isApprox(const Quaternion& o, Scalar tol = Scalar(1e-12)) const {
        return (*this - o).norm() <= tol;
    }

    std::array<Scalar, 4> toArray() const { return {w_, x_, y_, z_}; }

private:
    Scalar w_, x_, y_, z_;
};

template <typename Scalar>
constexpr Quaternion<Scalar> operator*(Scalar s, const Quaternion<Scalar>& q) {
    return q * s;
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Quaternion<Scalar>& q) {
    return os << "(" << q.w() << ", " << q.x() << ", " << q.y() << ", "
              << q.z() << ")";
}

/// A point of the 2-sphere S of imaginary units: q with q^2 = -1.
template <typename Scalar = double>
class ImaginaryUnit {
public:
    // Validating factory: rejects quaternions that are not pure imaginary
    // unit vectors within kUnitTol.
    static ImaginaryUnit from(const Quaternion<Scalar>& q) {
        if (std::abs(q.w()) > kUnitTol) {
            throw DomainError("imaginary unit has nonzero real part");
        }
        if (std::abs(q.norm() - Scalar(1)) > kUnitTol) {
            throw DomainError("imaginary unit is not of unit norm");
        }
        return ImaginaryUnit(Quaternion<Scalar>(0, q.x(), q.y(), q.z()).normalized());
    }

    // Snap a direction in Im(H) onto the sphere.
    static ImaginaryUnit normalized(Scalar x, Scalar y, Scalar z) {
        return ImaginaryUnit(Quaternion<Scalar>(0, x, y, z).normalized());
    }

    const Quaternion<Scalar>& quat() const { return q_; }
    Scalar x() const { return q_.x(); }
    Scalar y() const { return q_.y(); }
    Scalar z() const { return q_.z(); }

    ImaginaryUnit operator-() const { return ImaginaryUnit(-q_); }

    // Inner product of the imaginary 3-vectors.
    Scalar dot(const ImaginaryUnit& o) const { return q_.dot(o.q_); }

    bool isApprox(const ImaginaryUnit& o, Scalar tol = Scalar(1e-12)) const {
        return q_.isApprox(o.q_, tol);
    }

private:
    explicit ImaginaryUnit(const Quaternion<Scalar>& q) : q_(q) {}
    Quaternion<Scalar> q_;
};

template <typename Scalar = double>
ImaginaryUnit<Scalar> unit_i() {
    return ImaginaryUnit<Scalar>::normalized(1, 0, 0);
}
template <typename Scalar = double>
ImaginaryUnit<Scalar> unit_j() {
    return ImaginaryUnit<Scalar>::normalized(0, 1, 0);
}
template <typename Scalar = double>
ImaginaryUnit<Scalar> unit_k() {
    return ImaginaryUnit<Scalar>::normalized(0, 0, 1);
}

// Deterministic unit orthogonal to I.
template <typename Scalar>
ImaginaryUnit<Scalar> orthogonal_unit(const ImaginaryUnit<Scalar>& I) {
    // Cross the weakest coordinate axis against I.
    const Scalar ax = std::abs(I.x());
    const Scalar ay = std::abs(I.y());
    const Scalar az = std::abs(I.z());
    Scalar ex = 0, ey = 0, ez = 0;
    if (ax <= ay && ax <= az) {
        ex = 1;
    } else if (ay <= az) {
        ey = 1;
    } else {
        ez = 1;
    }
    const Scalar cx = ey * I.z() - ez * I.y();
    const Scalar cy = ez * I.x() - ex * I.z();
    const Scalar cz = ex * I.y() - ey * I.x();
    return ImaginaryUnit<Scalar>::normalized(cx, cy, cz);
}

/// Slice coordinates of a quaternion: q = x + y*unit with y >= 0.
/// Real quaternions carry no unit (the REAL marker).
template <typename Scalar = double>
struct SlicePoint {
    Scalar x = 0;
    Scalar y = 0;  // >= 0
    std::optional<ImaginaryUnit<Scalar>> unit;

    bool isReal() const { return !unit.has_value(); }

    Quaternion<Scalar> reassemble() const {
        if (isReal()) return {x, 0, 0, 0};
        return Quaternion<Scalar>(x, 0, 0, 0) + unit->quat() * y;
    }
};

// P_I: C -> C_I, x + yi |-> x + yI.
template <typename Scalar>
Quaternion<Scalar> embed(const std::complex<Scalar>& z,
                         const ImaginaryUnit<Scalar>& I) {
    return Quaternion<Scalar>(z.real(), 0, 0, 0) + I.quat() * z.imag();
}

template <typename Scalar>
SlicePoint<Scalar> decompose(const Quaternion<Scalar>& q) {
    const Quaternion<Scalar> im = q.imag();
    const Scalar y = im.norm();
    SlicePoint<Scalar> p;
    p.x = q.real();
    if (y <= kUnitTol) {
        p.y = 0;
        return p;
    }
    p.y = y;
    p.unit = ImaginaryUnit<Scalar>::normalized(im.x() / y, im.y() / y,
                                               im.z() / y);
    return p;
}

// Euclidean distance from J (as a point of R^4) to the plane C_I.
template <typename Scalar>
Scalar dist_to_slice(const ImaginaryUnit<Scalar>& J,
                     const ImaginaryUnit<Scalar>& I) {
    const Scalar c = J.dot(I);
    const Scalar rx = J.x() - c * I.x();
    const Scalar ry = J.y() - c * I.y();
    const Scalar rz = J.z() - c * I.z();
    return std::sqrt(rx * rx + ry * ry + rz * rz);
}

using Quaterniond = Quaternion<double>;
using ImaginaryUnitd = ImaginaryUnit<double>;
using SlicePointd = SlicePoint<double>;

}  // namespace sliceq
