// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tendec/errors.hpp"
#include "tendec/linalg.hpp"
#include "tendec/tensor.hpp"

namespace tendec {

/// Kruskal (CP) form: weights lambda plus one I_n x R factor matrix per
/// mode. The represented tensor is sum_r lambda_r a_r^(1) o ... o a_r^(N).
struct KruskalTensor {
    Eigen::VectorXd weights;
    std::vector<Eigen::MatrixXd> factors;

    Eigen::Index rank() const { return weights.size(); }
    int order() const { return static_cast<int>(factors.size()); }

    std::vector<Eigen::Index> shape() const {
        std::vector<Eigen::Index> s;
        s.reserve(factors.size());
        for (const auto& f : factors) s.push_back(f.rows());
        return s;
    }

    void validate() const {
        if (factors.empty()) throw DimensionError("Kruskal tensor needs at least one factor matrix");
        if (weights.size() < 1) throw DimensionError("Kruskal rank must be at least 1");
        for (std::size_t n = 0; n < factors.size(); ++n)
            if (factors[n].cols() != weights.size())
                throw DimensionError("factor matrix for mode " + std::to_string(n + 1) + " has " +
                                     std::to_string(factors[n].cols()) + " columns, expected rank " +
                                     std::to_string(weights.size()));
    }
};

/// Materialize the represented tensor entry by entry.
inline DenseTensor kruskal_to_dense(const KruskalTensor& k) {
    k.validate();
    DenseTensor out(k.shape());
    const int n = k.order();
    const Eigen::Index r = k.rank();
    std::vector<Eigen::Index> idx(n, 0);  // 0-based counters
    const auto& shape = out.shape();
    for (Eigen::Index f = 0; f < out.size(); ++f) {
        double v = 0.0;
        for (Eigen::Index c = 0; c < r; ++c) {
            double term = k.weights[c];
            for (int m = 0; m < n; ++m) term *= k.factors[m](idx[m], c);
            v += term;
        }
        out.data()[f] = v;
        for (int m = 0; m < n; ++m) {
            if (++idx[m] < shape[m]) break;
            idx[m] = 0;
        }
    }
    return out;
}

/// Canonical gauge: every factor column scaled to unit norm with the
/// scale absorbed into the weights, and column signs fixed so each
/// column's largest-magnitude entry is positive (sign also absorbed into
/// the weights). A zero column is replaced by the first basis vector and
/// its weight set to zero.
inline KruskalTensor normalized(const KruskalTensor& k) {
    k.validate();
    KruskalTensor out = k;
    for (auto& f : out.factors) {
        for (Eigen::Index c = 0; c < f.cols(); ++c) {
            const double norm = f.col(c).norm();
            if (norm > 0.0) {
                f.col(c) /= norm;
                out.weights[c] *= norm;
            } else {
                f.col(c).setZero();
                f(0, c) = 1.0;
                out.weights[c] = 0.0;
            }
        }
        out.weights = out.weights.cwiseProduct(fix_column_signs(f));
    }
    return out;
}

}  // namespace tendec
