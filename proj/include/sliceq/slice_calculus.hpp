#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sliceq/qmatrix.hpp"
#include "sliceq/quaternion.hpp"

namespace sliceq {

// Largest supported tuple length in the zeta calculus (2^12 = 4096).
inline constexpr int kMaxOrder = 12;

template <typename Scalar = double>
using UnitTuple = std::vector<ImaginaryUnit<Scalar>>;

using UnitTupled = UnitTuple<double>;

namespace detail {

// Unit products are renormalized after every 64 factor multiplications to
// keep long chains on the sphere.
inline constexpr int kRenormInterval = 64;

inline void check_order(int n) {
    if (n < 1) throw DomainError("tuple length must be >= 1");
    if (n > kMaxOrder) {
        throw SizeCap("tuple length exceeds the N = 12 cap");
    }
}

}  // namespace detail

/// The 2^N x N array of imaginary units feeding the representation formula.
template <typename Scalar = double>
class UnitMatrix {
public:
    UnitMatrix(int order, std::vector<UnitTuple<Scalar>> rows)
        : order_(order), rows_(std::move(rows)) {
        detail::check_order(order_);
        if (rows_.size() != (std::size_t(1) << order_)) {
            throw ShapeMismatch("unit matrix must have 2^N rows");
        }
        for (const auto& row : rows_) {
            if (row.size() != static_cast<std::size_t>(order_)) {
                throw ShapeMismatch("unit matrix row length must equal N");
            }
        }
    }

    static UnitMatrix fromRows(std::vector<UnitTuple<Scalar>> rows) {
        int n = 0;
        while ((std::size_t(1) << n) < rows.size() && n <= kMaxOrder) ++n;
        return UnitMatrix(n, std::move(rows));
    }

    int order() const { return order_; }
    std::size_t rowCount() const { return rows_.size(); }
    const UnitTuple<Scalar>& row(std::size_t i) const { return rows_[i]; }
    const ImaginaryUnit<Scalar>& at(std::size_t i, int j) const {
        return rows_[i][static_cast<std::size_t>(j)];
    }

    // J^(l): first 2^l rows, first l columns.
    UnitMatrix level(int l) const {
        if (l < 1 || l > order_) {
            throw ParameterOutOfRange("level must lie in 1..N");
        }
        std::vector<UnitTuple<Scalar>> rows;
        rows.reserve(std::size_t(1) << l);
        for (std::size_t i = 0; i < (std::size_t(1) << l); ++i) {
            rows.emplace_back(rows_[i].begin(), rows_[i].begin() + l);
        }
        return UnitMatrix(l, std::move(rows));
    }

    std::vector<ImaginaryUnit<Scalar>> lastColumn() const {
        std::vector<ImaginaryUnit<Scalar>> col;
        col.reserve(rows_.size());
        for (const auto& row : rows_) col.push_back(row.back());
        return col;
    }

private:
    int order_;
    std::vector<UnitTuple<Scalar>> rows_;
};

using UnitMatrixd = UnitMatrix<double>;

// zeta(K): the row of 2^N signed unit products. Component m is
// prod_{i=N..1} (K_i K_{i-1})^{m_i} with K_0 = 1 and (m_N ... m_1)_2 the
// binary digits of m-1. Built by doubling: the second half of zeta_N is
// (K_N K_{N-1}) times the first half.
template <typename Scalar>
std::vector<Quaternion<Scalar>> zeta(const UnitTuple<Scalar>& K) {
    detail::check_order(static_cast<int>(K.size()));
    std::vector<Quaternion<Scalar>> comp;
    std::vector<int> factors;  // unit factors multiplied into each component
    comp.reserve(std::size_t(1) << K.size());
    factors.reserve(std::size_t(1) << K.size());
    comp.push_back(Quaternion<Scalar>::one());
    factors.push_back(0);
    for (std::size_t n = 0; n < K.size(); ++n) {
        const int prefixFactors = n == 0 ? 1 : 2;
        const Quaternion<Scalar> prefix =
            n == 0 ? K[0].quat() : K[n].quat() * K[n - 1].quat();
        const std::size_t half = comp.size();
        for (std::size_t m = 0; m < half; ++m) {
            Quaternion<Scalar> v = prefix * comp[m];
            const int count = factors[m] + prefixFactors;
            if (count / detail::kRenormInterval >
                factors[m] / detail::kRenormInterval) {
                v = v.normalized();
            }
            comp.push_back(v);
            factors.push_back(count);
        }
    }
    return comp;
}

// sigma_N entry (1-based indices): (-1)^(N+j) on the antidiagonal
// i + j = 2^N + 1, zero elsewhere.
inline int sigma_sign(int order, std::int64_t i, std::int64_t j) {
    const std::int64_t size = std::int64_t(1) << order;
    if (i + j != size + 1) return 0;
    return ((order + j) % 2 == 0) ? 1 : -1;
}

// Dense integer sigma_N (exact arithmetic).
inline Eigen::MatrixXi sigma(int order) {
    detail::check_order(order);
    const std::int64_t size = std::int64_t(1) << order;
    Eigen::MatrixXi s = Eigen::MatrixXi::Zero(size, size);
    for (std::int64_t j = 1; j <= size; ++j) {
        s(size - j, j - 1) = sigma_sign(order, size + 1 - j, j);
    }
    return s;
}

// Row vector times sigma_N by index arithmetic: (v sigma)_j =
// v_{2^N+1-j} * (-1)^(N+j).
template <typename Scalar>
std::vector<Quaternion<Scalar>> apply_sigma_right(
    int order, const std::vector<Quaternion<Scalar>>& v) {
    const std::size_t size = std::size_t(1) << order;
    if (v.size() != size) {
        throw ShapeMismatch("apply_sigma_right: vector length is not 2^N");
    }
    std::vector<Quaternion<Scalar>> out(size);
    for (std::size_t j = 1; j <= size; ++j) {
        const int sgn = sigma_sign(order, std::int64_t(size + 1 - j),
                                   std::int64_t(j));
        out[j - 1] = v[size - j] * Scalar(sgn);
    }
    return out;
}

// sigma_N times a quaternionic matrix: row i of the result is
// (-1)^(N + 2^N + 1 - i) times row 2^N+1-i of M.
template <typename Scalar>
QMatrix<Scalar> apply_sigma_left(int order, const QMatrix<Scalar>& M) {
    const Eigen::Index size = Eigen::Index(1) << order;
    if (M.rows() != size) {
        throw ShapeMismatch("apply_sigma_left: row count is not 2^N");
    }
    QMatrix<Scalar> out(M.rows(), M.cols());
    for (Eigen::Index i = 1; i <= size; ++i) {
        const int sgn = sigma_sign(order, i, size + 1 - i);
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            out(i - 1, c) = M(size - i, c) * Scalar(sgn);
        }
    }
    return out;
}

// M(J): row i is zeta(J_i).
template <typename Scalar>
QMatrix<Scalar> mmat(const UnitMatrix<Scalar>& J) {
    const auto size = Eigen::Index(J.rowCount());
    QMatrix<Scalar> M(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        const auto row = zeta(J.row(static_cast<std::size_t>(i)));
        for (Eigen::Index c = 0; c < size; ++c) {
            M(i, c) = row[static_cast<std::size_t>(c)];
        }
    }
    return M;
}

// D_N(J) = diag of the last column of J.
template <typename Scalar>
QMatrix<Scalar> dmat(const UnitMatrix<Scalar>& J) {
    const auto size = Eigen::Index(J.rowCount());
    QMatrix<Scalar> D(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        D(i, i) = J.at(static_cast<std::size_t>(i), J.order() - 1).quat();
    }
    return D;
}

struct SliceRankLevel {
    int level;
    double logAbsDet;
    double logScale;
    bool invertible;
};

struct SliceRankReport {
    bool full = true;
    std::vector<SliceRankLevel> levels;

    int firstFailingLevel() const {
        for (const auto& l : levels) {
            if (!l.invertible) return l.level;
        }
        return 0;
    }
};

// Full slice-rank: M(J^(l)) invertible for every l = 1..N. The report
// carries per-level determinant magnitudes for diagnosing near-singular
// configurations.
template <typename Scalar>
SliceRankReport full_slice_rank(const UnitMatrix<Scalar>& J) {
    SliceRankReport report;
    for (int l = 1; l <= J.order(); ++l) {
        const auto info = invertibility(mmat(J.level(l)));
        report.levels.push_back({l, double(info.logAbsDet),
                                 double(info.logScale), info.invertible});
        report.full = report.full && info.invertible;
    }
    return report;
}

// Residual of the intertwining identity K_N zeta(K) = zeta(K) sigma_N.
template <typename Scalar>
Scalar verify_intertwine(const UnitTuple<Scalar>& K) {
    const auto z = zeta(K);
    const auto rhs = apply_sigma_right(static_cast<int>(K.size()), z);
    const Quaternion<Scalar> kn = K.back().quat();
    Scalar residual = 0;
    for (std::size_t m = 0; m < z.size(); ++m) {
        residual = std::max(residual, (kn * z[m] - rhs[m]).norm());
    }
    return residual;
}

// Residual of the conjugation identity
// sigma_N M(J)^{-1} = M(J)^{-1} D_N(J). Throws Singular when M(J) is not
// invertible.
template <typename Scalar>
Scalar verify_conjugation(const UnitMatrix<Scalar>& J) {
    const QMatrix<Scalar> Minv = inverse(mmat(J));
    const QMatrix<Scalar> lhs = apply_sigma_left(J.order(), Minv);
    const QMatrix<Scalar> rhs = Minv * dmat(J);
    return (lhs - rhs).maxAbs();
}

}  // namespace sliceq
