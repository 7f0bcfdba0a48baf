#ifndef TSL_MATRIX_HPP
#define TSL_MATRIX_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "tsl/arith.hpp"

namespace tsl {

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Generators = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>;

using Mat3 = Matrix3<Int>;
using Vec3 = Vector3<Int>;

/// Cofactor expansion; exact for integer scalars.
template <typename Derived>
typename Derived::Scalar det3(const Eigen::MatrixBase<Derived>& m)
{
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <typename Derived>
Matrix3<typename Derived::Scalar> adjugate3(const Eigen::MatrixBase<Derived>& m)
{
    Matrix3<typename Derived::Scalar> adj;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    }
    return adj;
}

/// Inverse of a matrix with determinant +-1.
template <typename Derived>
Matrix3<typename Derived::Scalar> unimodular_inverse(const Eigen::MatrixBase<Derived>& m)
{
    return adjugate3(m) * det3(m);
}

/// Quadratic form value x^T G x / 2 for a doubled Gram matrix G.
template <typename DerivedG, typename DerivedX>
typename DerivedG::Scalar norm_of(const Eigen::MatrixBase<DerivedG>& g, const Eigen::MatrixBase<DerivedX>& x)
{
    return (x.transpose() * g * x)(0, 0) / 2;
}

/// Lower-triangular basis (columns) of the full-rank lattice spanned by the columns of `gens`.
/// Pivots are positive and entries left of each pivot are reduced into [0, pivot).
template <typename Derived>
Matrix3<typename Derived::Scalar> hermite_basis(const Eigen::MatrixBase<Derived>& gens)
{
    using Scalar = typename Derived::Scalar;
    Generators<Scalar> w = gens;
    const Eigen::Index n = w.cols();
    for (int row = 0; row < 3; ++row) {
        for (;;) {
            Eigen::Index pivot = -1;
            for (Eigen::Index j = row; j < n; ++j)
                if (w(row, j) != 0 && (pivot < 0 || std::abs(w(row, j)) < std::abs(w(row, pivot)))) pivot = j;
            if (pivot < 0) break;
            bool cleared = true;
            for (Eigen::Index j = row; j < n; ++j) {
                if (j == pivot || w(row, j) == 0) continue;
                const Scalar q = w(row, j) / w(row, pivot);
                w.col(j) -= q * w.col(pivot);
                if (w(row, j) != 0) cleared = false;
            }
            if (cleared) {
                w.col(row).swap(w.col(pivot));
                break;
            }
        }
        if (w(row, row) < 0) w.col(row) = -w.col(row);
    }
    Matrix3<Scalar> basis = w.leftCols(3);
    for (int row = 1; row < 3; ++row) {
        for (int col = 0; col < row; ++col) {
            const Scalar q = static_cast<Scalar>(floor_div(basis(row, col), basis(row, row)));
            basis.col(col) -= q * basis.col(row);
        }
    }
    return basis;
}

} // namespace tsl

#endif
