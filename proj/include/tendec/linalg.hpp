// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <limits>

#include "tendec/errors.hpp"

namespace tendec {

/// Default singular-value cutoff: max(rows, cols) * eps * sigma_max.
inline double default_sv_cutoff(Eigen::Index rows, Eigen::Index cols, double sigma_max) {
    const double eps = std::numeric_limits<double>::epsilon();
    return static_cast<double>(std::max(rows, cols)) * eps * sigma_max;
}

/// Moore-Penrose pseudo-inverse via SVD. Singular values at or below
/// `cutoff` are treated as zero; a negative cutoff selects the default rule.
inline Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m, double cutoff = -1.0) {
    if (m.size() == 0) return Eigen::MatrixXd(m.cols(), m.rows());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (cutoff < 0.0) cutoff = default_sv_cutoff(m.rows(), m.cols(), sv.size() ? sv[0] : 0.0);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > cutoff) inv[i] = 1.0 / sv[i];
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

/// Numerical rank at the given absolute singular-value tolerance
/// (negative selects the default cutoff rule).
inline int numerical_rank(const Eigen::MatrixXd& m, double tol = -1.0) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (tol < 0.0) tol = default_sv_cutoff(m.rows(), m.cols(), sv.size() ? sv[0] : 0.0);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > tol) ++r;
    return r;
}

/// Flip each column so its largest-magnitude entry is positive (ties break
/// to the lowest row index). Returns the sign applied per column so the
/// caller can compensate elsewhere.
inline Eigen::VectorXd fix_column_signs(Eigen::MatrixXd& m) {
    Eigen::VectorXd signs = Eigen::VectorXd::Ones(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        Eigen::Index imax = 0;
        for (Eigen::Index i = 1; i < m.rows(); ++i)
            if (std::abs(m(i, j)) > std::abs(m(imax, j))) imax = i;
        if (m.rows() > 0 && m(imax, j) < 0.0) {
            m.col(j) = -m.col(j);
            signs[j] = -1.0;
        }
    }
    return signs;
}

/// The first `r` left singular vectors, sign-gauged for determinism.
/// Requires r <= rows; when r exceeds the thin-SVD width the full U is
/// used so the result still has orthonormal columns.
inline Eigen::MatrixXd leading_left_singular_vectors(const Eigen::MatrixXd& m, Eigen::Index r) {
    if (r < 1 || r > m.rows())
        throw DimensionError("requested " + std::to_string(r) + " left singular vectors from a matrix with " +
                             std::to_string(m.rows()) + " rows");
    const bool need_full = r > std::min(m.rows(), m.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, need_full ? Eigen::ComputeFullU : Eigen::ComputeThinU);
    Eigen::MatrixXd u = svd.matrixU().leftCols(r);
    fix_column_signs(u);
    return u;
}

}  // namespace tendec
