#pragma once

#include <functional>
#include <utility>

#include "sliceq/slice_calculus.hpp"

namespace sliceq {

// Terms kept in the exponential oracle series.
inline constexpr int kExpSeriesTerms = 40;

// Two-slice extension formula: with holomorphic data v1 = f(x+yI1) and
// v2 = f(x+yI2), y >= 0, the value of the slice regular extension at x+yJ is
//   ((I1-I2)^{-1}I1 + J(I1-I2)^{-1}) v1 + ((I2-I1)^{-1}I2 + J(I2-I1)^{-1}) v2.
template <typename Scalar>
Quaternion<Scalar> extend_two_slices(const Quaternion<Scalar>& v1,
                                     const Quaternion<Scalar>& v2,
                                     const ImaginaryUnit<Scalar>& I1,
                                     const ImaginaryUnit<Scalar>& I2,
                                     const ImaginaryUnit<Scalar>& J) {
    const Quaternion<Scalar> d = I1.quat() - I2.quat();
    if (d.norm() <= kUnitTol) {
        throw DegenerateSlices("extension requires two distinct slices");
    }
    const Quaternion<Scalar> dinv = d.inverse();
    const Quaternion<Scalar> einv = -dinv;  // (I2 - I1)^{-1}
    const Quaternion<Scalar> c1 = dinv * I1.quat() + J.quat() * dinv;
    const Quaternion<Scalar> c2 = einv * I2.quat() + J.quat() * einv;
    return c1 * v1 + c2 * v2;
}

// Classical two-point representation formula:
//   (J1-J2)^{-1}[J1 v1 - J2 v2] + K (J1-J2)^{-1}[v1 - v2].
template <typename Scalar>
Quaternion<Scalar> classical_repr(const ImaginaryUnit<Scalar>& K,
                                  const ImaginaryUnit<Scalar>& J1,
                                  const ImaginaryUnit<Scalar>& J2,
                                  const Quaternion<Scalar>& v1,
                                  const Quaternion<Scalar>& v2) {
    const Quaternion<Scalar> d = J1.quat() - J2.quat();
    if (d.norm() <= kUnitTol) {
        throw DegenerateSlices("classical formula requires distinct slices");
    }
    const Quaternion<Scalar> dinv = d.inverse();
    return dinv * (J1.quat() * v1 - J2.quat() * v2) +
           K.quat() * (dinv * (v1 - v2));
}

/// The 2^N function values at the lifted endpoints, value i paired with
/// row J_i of the unit matrix.
template <typename Scalar = double>
struct SliceValueVector {
    int order = 0;
    std::vector<Quaternion<Scalar>> values;

    static SliceValueVector fromValues(std::vector<Quaternion<Scalar>> v) {
        SliceValueVector out;
        int n = 0;
        while ((std::size_t(1) << n) < v.size() && n <= kMaxOrder) ++n;
        out.order = n;
        out.values = std::move(v);
        if (out.values.size() != (std::size_t(1) << out.order)) {
            throw ShapeMismatch("value vector length must be 2^N");
        }
        return out;
    }
};

using SliceValueVectord = SliceValueVector<double>;

namespace detail {

template <typename Scalar>
QMatrix<Scalar> as_column(const SliceValueVector<Scalar>& F) {
    QMatrix<Scalar> col(Eigen::Index(F.values.size()), 1);
    for (std::size_t i = 0; i < F.values.size(); ++i) {
        col(Eigen::Index(i), 0) = F.values[i];
    }
    return col;
}

template <typename Scalar>
Quaternion<Scalar> zeta_dot(const std::vector<Quaternion<Scalar>>& z,
                            const QMatrix<Scalar>& col) {
    Quaternion<Scalar> acc;
    for (std::size_t m = 0; m < z.size(); ++m) {
        acc += z[m] * col(Eigen::Index(m), 0);
    }
    return acc;
}

}  // namespace detail

// Representation formula zeta(K) M(J)^{-1} F, evaluated by solving
// M(J) X = F and then taking the zeta(K) dot product.
template <typename Scalar>
Quaternion<Scalar> represent(const UnitTuple<Scalar>& K,
                             const UnitMatrix<Scalar>& J,
                             const SliceValueVector<Scalar>& F) {
    if (static_cast<int>(K.size()) != J.order()) {
        throw ShapeMismatch("K length must equal the order of J");
    }
    if (F.values.size() != J.rowCount()) {
        throw ShapeMismatch("value vector length must match J");
    }
    const auto rank = full_slice_rank(J);
    if (!rank.full) {
        throw NotFullSliceRank("unit matrix lacks full slice-rank",
                               rank.firstFailingLevel());
    }
    const QMatrix<Scalar> X = solve(mmat(J), detail::as_column(F));
    return detail::zeta_dot(zeta(K), X);
}

/// Precomputes M(J)^{-1} once for sweeps over many K.
template <typename Scalar = double>
class ReprEngine {
public:
    explicit ReprEngine(UnitMatrix<Scalar> J)
        : J_(std::move(J)), rank_(full_slice_rank(J_)) {
        if (!rank_.full) {
            throw NotFullSliceRank("unit matrix lacks full slice-rank",
                                   rank_.firstFailingLevel());
        }
        minv_ = inverse(mmat(J_));
    }

    const UnitMatrix<Scalar>& unitMatrix() const { return J_; }
    const QMatrix<Scalar>& minv() const { return minv_; }
    const SliceRankReport& rank() const { return rank_; }

    Quaternion<Scalar> value(const UnitTuple<Scalar>& K,
                             const SliceValueVector<Scalar>& F) const {
        if (static_cast<int>(K.size()) != J_.order()) {
            throw ShapeMismatch("K length must equal the order of J");
        }
        if (F.values.size() != J_.rowCount()) {
            throw ShapeMismatch("value vector length must match J");
        }
        return detail::zeta_dot(zeta(K), minv_ * detail::as_column(F));
    }

private:
    UnitMatrix<Scalar> J_;
    SliceRankReport rank_;
    QMatrix<Scalar> minv_;
};

// Splitting of a value: q = F + G * Jp with F, G in C_I, for I orthogonal
// to Jp. Returns (F, G), both as elements of C_I.
template <typename Scalar>
std::pair<Quaternion<Scalar>, Quaternion<Scalar>> split_value(
    const Quaternion<Scalar>& q, const ImaginaryUnit<Scalar>& I,
    const ImaginaryUnit<Scalar>& Jp) {
    if (std::abs(I.dot(Jp)) > kUnitTol) {
        throw NotOrthogonal("splitting requires I perpendicular to Jp");
    }
    const Quaternion<Scalar> one = Quaternion<Scalar>::one();
    const Quaternion<Scalar> iq = I.quat();
    const Quaternion<Scalar> jq = Jp.quat();
    const Quaternion<Scalar> ij = iq * jq;
    const Quaternion<Scalar> F = one * q.dot(one) + iq * q.dot(iq);
    const Quaternion<Scalar> G = one * q.dot(jq) + iq * q.dot(ij);
    return {F, G};
}

/// Left-power polynomial q |-> sum_k q^k a_k; globally slice regular.
template <typename Scalar = double>
struct SlicePolynomial {
    std::vector<Quaternion<Scalar>> coeffs;  // a_0 .. a_d

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Quaternion<Scalar> eval(const Quaternion<Scalar>& q) const {
        Quaternion<Scalar> acc;
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            acc = q * acc + coeffs[k];
        }
        return acc;
    }
};

using SlicePolynomiald = SlicePolynomial<double>;

template <typename Scalar>
Quaternion<Scalar> eval_slice_polynomial(const SlicePolynomial<Scalar>& p,
                                         const Quaternion<Scalar>& q) {
    return p.eval(q);
}

// Exponential oracle: truncated power series with real coefficients.
template <typename Scalar>
Quaternion<Scalar> exp_oracle(const Quaternion<Scalar>& q) {
    Quaternion<Scalar> term = Quaternion<Scalar>::one();
    Quaternion<Scalar> acc = term;
    for (int k = 1; k < kExpSeriesTerms; ++k) {
        term = q * term / Scalar(k);
        acc += term;
    }
    return acc;
}

// Central-difference estimate of |dbar_I f| at x + yI, with
// dbar_I = (d/dx + I d/dy) / 2. The sampler receives quaternions on C_I
// and may throw EvaluationOutsideDomain.
template <typename Scalar, typename Sampler>
Scalar cr_residual(Sampler&& f, const ImaginaryUnit<Scalar>& I,
                   const std::complex<Scalar>& z, Scalar h) {
    if (!(h > 0)) throw ParameterOutOfRange("cr_residual requires h > 0");
    const Scalar x = z.real();
    const Scalar y = z.imag();
    const Quaternion<Scalar> fxp = f(embed({x + h, y}, I));
    const Quaternion<Scalar> fxm = f(embed({x - h, y}, I));
    const Quaternion<Scalar> fyp = f(embed({x, y + h}, I));
    const Quaternion<Scalar> fym = f(embed({x, y - h}, I));
    const Quaternion<Scalar> dx = (fxp - fxm) / (2 * h);
    const Quaternion<Scalar> dy = (fyp - fym) / (2 * h);
    return ((dx + I.quat() * dy) / Scalar(2)).norm();
}

}  // namespace sliceq
