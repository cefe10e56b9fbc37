#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sliceq/quaternion.hpp"

namespace sliceq {

// Relative determinant threshold for invertibility of the complex adjoint.
inline constexpr double kDetTol = 1e-10;
// Hard cap on matrix dimensions (N <= 12 in the zeta calculus).
inline constexpr Eigen::Index kMaxMatrixDim = 4096;

/// Dense matrix over H, row-major. Inversion goes through the complex
/// adjoint representation; see adjoint_complex below.
template <typename Scalar = double>
class QMatrix {
public:
    using Quat = Quaternion<Scalar>;
    using Complex = std::complex<Scalar>;
    using ComplexMatrix =
        Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
    using Index = Eigen::Index;

    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(Index rows, Index cols)
        : rows_(rows), cols_(cols), entries_(checkedSize(rows, cols)) {}

    static QMatrix identity(Index n) {
        QMatrix m(n, n);
        for (Index i = 0; i < n; ++i) m(i, i) = Quat::one();
        return m;
    }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    const Quat& operator()(Index r, Index c) const {
        return entries_[static_cast<std::size_t>(r * cols_ + c)];
    }
    Quat& operator()(Index r, Index c) {
        return entries_[static_cast<std::size_t>(r * cols_ + c)];
    }

    QMatrix operator*(const QMatrix& o) const {
        if (cols_ != o.rows_) {
            throw ShapeMismatch("matmul: inner dimensions disagree");
        }
        QMatrix out(rows_, o.cols_);
        for (Index i = 0; i < rows_; ++i) {
            for (Index k = 0; k < cols_; ++k) {
                const Quat& a = (*this)(i, k);
                for (Index j = 0; j < o.cols_; ++j) {
                    out(i, j) += a * o(k, j);
                }
            }
        }
        return out;
    }

    QMatrix operator+(const QMatrix& o) const {
        requireSameShape(o, "matrix sum");
        QMatrix out(rows_, cols_);
        for (std::size_t n = 0; n < entries_.size(); ++n) {
            out.entries_[n] = entries_[n] + o.entries_[n];
        }
        return out;
    }

    QMatrix operator-(const QMatrix& o) const {
        requireSameShape(o, "matrix difference");
        QMatrix out(rows_, cols_);
        for (std::size_t n = 0; n < entries_.size(); ++n) {
            out.entries_[n] = entries_[n] - o.entries_[n];
        }
        return out;
    }

    // qA and Aq in the paper's notation: entrywise one-sided products.
    QMatrix leftScaled(const Quat& q) const {
        QMatrix out(rows_, cols_);
        for (std::size_t n = 0; n < entries_.size(); ++n) {
            out.entries_[n] = q * entries_[n];
        }
        return out;
    }
    QMatrix rightScaled(const Quat& q) const {
        QMatrix out(rows_, cols_);
        for (std::size_t n = 0; n < entries_.size(); ++n) {
            out.entries_[n] = entries_[n] * q;
        }
        return out;
    }

    Scalar maxAbs() const {
        Scalar m = 0;
        for (const Quat& q : entries_) m = std::max(m, q.norm());
        return m;
    }

    bool isApprox(const QMatrix& o, Scalar tol = Scalar(1e-12)) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        return (*this - o).maxAbs() <= tol;
    }

private:
    static std::size_t checkedSize(Index rows, Index cols) {
        if (rows < 0 || cols < 0) {
            throw ShapeMismatch("negative matrix dimension");
        }
        if (rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
            throw SizeCap("matrix dimension exceeds the 4096 cap");
        }
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    void requireSameShape(const QMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw ShapeMismatch(std::string(op) + ": shapes disagree");
        }
    }

    Index rows_, cols_;
    std::vector<Quat> entries_;
};

// Complex adjoint: with q = a + j*b (a = w + x*i, b = y - z*i, entrywise)
// the block matrix [[A1, -conj(A2)], [A2, conj(A1)]] satisfies
// chi(AB) = chi(A) chi(B) and chi(I) = I.
template <typename Scalar>
typename QMatrix<Scalar>::ComplexMatrix adjoint_complex(
    const QMatrix<Scalar>& A) {
    using CM = typename QMatrix<Scalar>::ComplexMatrix;
    using Complex = std::complex<Scalar>;
    const auto r = A.rows(), c = A.cols();
    CM chi(2 * r, 2 * c);
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < c; ++j) {
            const auto& q = A(i, j);
            const Complex a(q.w(), q.x());
            const Complex b(q.y(), -q.z());
            chi(i, j) = a;
            chi(i, j + c) = -std::conj(b);
            chi(i + r, j) = b;
            chi(i + r, j + c) = std::conj(a);
        }
    }
    return chi;
}

// Inverse of adjoint_complex; averages the two redundant blocks.
template <typename Scalar>
QMatrix<Scalar> from_complex_adjoint(
    const typename QMatrix<Scalar>::ComplexMatrix& X) {
    if (X.rows() % 2 != 0 || X.cols() % 2 != 0) {
        throw ShapeMismatch("complex adjoint must have even dimensions");
    }
    const auto r = X.rows() / 2, c = X.cols() / 2;
    QMatrix<Scalar> A(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < c; ++j) {
            const auto a = (X(i, j) + std::conj(X(i + r, j + c))) / Scalar(2);
            const auto b = (X(i + r, j) - std::conj(X(i, j + c))) / Scalar(2);
            A(i, j) = Quaternion<Scalar>(a.real(), a.imag(), b.real(),
                                         -b.imag());
        }
    }
    return A;
}

template <typename Scalar>
struct InvertibilityInfo {
    Scalar logAbsDet;  // log |det chi(A)|, -inf when exactly singular
    Scalar logScale;   // log of the product of row max-norms of chi(A)
    bool invertible;   // |det| > kDetTol * scale
};

template <typename Scalar>
InvertibilityInfo<Scalar> invertibility(const QMatrix<Scalar>& A) {
    if (A.rows() != A.cols()) {
        throw ShapeMismatch("invertibility requires a square matrix");
    }
    const auto chi = adjoint_complex(A);
    Eigen::PartialPivLU<typename QMatrix<Scalar>::ComplexMatrix> lu(chi);

    Scalar logDet = 0;
    bool singular = false;
    const auto diag = lu.matrixLU().diagonal();
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        const Scalar m = std::abs(diag(i));
        if (m <= Scalar(0)) {
            singular = true;
            break;
        }
        logDet += std::log(m);
    }

    Scalar logScale = 0;
    for (Eigen::Index i = 0; i < chi.rows(); ++i) {
        const Scalar rowMax =
            std::max(chi.row(i).cwiseAbs().maxCoeff(), Scalar(1e-300));
        logScale += std::log(rowMax);
    }

    InvertibilityInfo<Scalar> info;
    info.logAbsDet = singular ? -std::numeric_limits<Scalar>::infinity()
                              : logDet;
    info.logScale = logScale;
    info.invertible =
        !singular && info.logAbsDet > std::log(kDetTol) + logScale;
    return info;
}

template <typename Scalar>
bool is_invertible(const QMatrix<Scalar>& A) {
    return invertibility(A).invertible;
}

// Solve A X = B over H through the complex adjoint (LU with partial
// pivoting). Throws Singular when |det chi(A)| <= kDetTol * scale.
template <typename Scalar>
QMatrix<Scalar> solve(const QMatrix<Scalar>& A, const QMatrix<Scalar>& B) {
    if (A.rows() != A.cols()) {
        throw ShapeMismatch("solve requires a square system");
    }
    if (A.cols() != B.rows()) {
        throw ShapeMismatch("solve: right-hand side has wrong row count");
    }
    if (!is_invertible(A)) {
        throw Singular("quaternionic system is numerically singular");
    }
    const auto chiA = adjoint_complex(A);
    Eigen::PartialPivLU<typename QMatrix<Scalar>::ComplexMatrix> lu(chiA);
    const auto chiB = adjoint_complex(B);
    return from_complex_adjoint<Scalar>(lu.solve(chiB));
}

// Two-sided inverse. AB = I is solved for; BA = I then follows (one-sided
// inverses over H are two-sided) and is asserted on the way out.
template <typename Scalar>
QMatrix<Scalar> inverse(const QMatrix<Scalar>& A) {
    QMatrix<Scalar> B = solve(A, QMatrix<Scalar>::identity(A.rows()));
    const Scalar rAB = (A * B - QMatrix<Scalar>::identity(A.rows())).maxAbs();
    const Scalar rBA = (B * A - QMatrix<Scalar>::identity(A.rows())).maxAbs();
    if (rBA > std::max(Scalar(1e-9), Scalar(1e3) * rAB)) {
        throw NumericalError(
            "inverse: left residual inconsistent with right residual");
    }
    return B;
}

using QMatrixd = QMatrix<double>;

}  // namespace sliceq
