// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "tendec/errors.hpp"
#include "tendec/kruskal.hpp"
#include "tendec/tensor.hpp"

namespace tendec {

/// Kronecker product: (IK) x (JL) block matrix [a_ij * B].
inline Eigen::MatrixXd kronecker(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Khatri-Rao product: column-wise Kronecker, (IJ) x K.
inline Eigen::MatrixXd khatri_rao(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.cols() != b.cols())
        throw DimensionError("Khatri-Rao needs equal column counts, got " + std::to_string(a.cols()) +
                             " and " + std::to_string(b.cols()));
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols());
    for (Eigen::Index c = 0; c < a.cols(); ++c)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            out.col(c).segment(i * b.rows(), b.rows()) = a(i, c) * b.col(c);
    return out;
}

/// Element-wise (Hadamard) matrix product.
inline Eigen::MatrixXd hadamard(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("Hadamard product needs equal shapes");
    return a.cwiseProduct(b);
}

/// Khatri-Rao chain over the factors in descending mode order
/// (A^(N) kr ... kr A^(1)), optionally skipping one 0-based entry. This is
/// the ordering under which unfold(kruskal_to_dense(k), n) equals
/// A^(n) Diag(lambda) chain^T.
inline Eigen::MatrixXd khatri_rao_chain(const std::vector<Eigen::MatrixXd>& factors, int skip = -1) {
    Eigen::MatrixXd chain;
    bool first = true;
    for (int m = static_cast<int>(factors.size()) - 1; m >= 0; --m) {
        if (m == skip) continue;
        chain = first ? factors[m] : khatri_rao(chain, factors[m]);
        first = false;
    }
    if (first) throw DimensionError("Khatri-Rao chain over an empty factor list");
    return chain;
}

/// Hadamard chain of the Gram matrices A^(m)^T A^(m), optionally skipping
/// one 0-based entry.
inline Eigen::MatrixXd gram_hadamard_chain(const std::vector<Eigen::MatrixXd>& factors, int skip = -1) {
    Eigen::MatrixXd chain;
    bool first = true;
    for (int m = 0; m < static_cast<int>(factors.size()); ++m) {
        if (m == skip) continue;
        const Eigen::MatrixXd gram = factors[m].transpose() * factors[m];
        chain = first ? gram : hadamard(chain, gram);
        first = false;
    }
    if (first) throw DimensionError("Gram chain over an empty factor list");
    return chain;
}

/// Mode-n product with a J x I_n matrix: every mode-n fiber is multiplied
/// by M, so the result replaces extent I_n with J and satisfies
/// Y_(n) = M X_(n).
inline DenseTensor mode_n_matrix_product(const DenseTensor& t, const Eigen::MatrixXd& m, int mode) {
    if (mode < 1 || mode > t.order()) throw DimensionError("mode product mode out of range");
    if (m.cols() != t.extent(mode))
        throw DimensionError("mode-" + std::to_string(mode) + " product needs " +
                             std::to_string(t.extent(mode)) + " matrix columns, got " +
                             std::to_string(m.cols()));
    std::vector<Eigen::Index> new_shape = t.shape();
    new_shape[mode - 1] = m.rows();
    return fold(m * unfold(t, mode), mode, new_shape);
}

/// Mode-n contraction with a length-I_n vector; the result drops mode n
/// and has order N-1 (hence N >= 2 is required).
inline DenseTensor mode_n_vector_product(const DenseTensor& t, const Eigen::VectorXd& v, int mode) {
    if (t.order() < 2) throw DimensionError("mode-n vector product needs order >= 2");
    if (mode < 1 || mode > t.order()) throw DimensionError("mode product mode out of range");
    if (v.size() != t.extent(mode))
        throw DimensionError("mode-" + std::to_string(mode) + " contraction needs a length-" +
                             std::to_string(t.extent(mode)) + " vector, got " + std::to_string(v.size()));
    const Eigen::VectorXd fibers = unfold(t, mode).transpose() * v;
    std::vector<Eigen::Index> new_shape;
    for (int k = 1; k <= t.order(); ++k)
        if (k != mode) new_shape.push_back(t.extent(k));
    // Column j of the unfolding is the fiber at the j-th surviving
    // multi-index, which is exactly the flat order of the reduced shape.
    std::vector<double> data(fibers.data(), fibers.data() + fibers.size());
    return DenseTensor(new_shape, std::move(data));
}

/// Placeholder for an untouched mode in a multilinear transformation;
/// avoids materializing identity matrices on large modes.
struct IdentityMap {};

/// Per-mode map for multilinear_transform: leave the mode alone, hit it
/// with a matrix (applied as M^T from the left), or contract it away with
/// a vector.
using MultilinearMap = std::variant<IdentityMap, Eigen::MatrixXd, Eigen::VectorXd>;

/// Multilinear transformation of a dense tensor: mode i is transformed by
/// M_i^T (matrix map) or contracted by inner product (vector map).
/// Contracted modes are removed from the result; if every mode is
/// contracted the result is a single-entry tensor of shape {1}.
inline DenseTensor multilinear_transform(const DenseTensor& t, const std::vector<MultilinearMap>& maps) {
    if (static_cast<int>(maps.size()) != t.order())
        throw DimensionError("multilinear transform needs one map per mode");
    DenseTensor cur = t;
    for (int n = 1; n <= t.order(); ++n)
        if (const auto* m = std::get_if<Eigen::MatrixXd>(&maps[n - 1]))
            cur = mode_n_matrix_product(cur, m->transpose(), n);
    // Contract from the highest mode down so lower mode numbers stay valid.
    for (int n = t.order(); n >= 1; --n) {
        if (const auto* v = std::get_if<Eigen::VectorXd>(&maps[n - 1])) {
            if (cur.order() == 1) {
                if (v->size() != cur.extent(1)) throw DimensionError("vector map does not conform");
                const Eigen::VectorXd last = Eigen::Map<const Eigen::VectorXd>(cur.data().data(), cur.size());
                return DenseTensor({1}, {last.dot(*v)});
            }
            cur = mode_n_vector_product(cur, *v, n);
        }
    }
    return cur;
}

/// Multilinear transformation in Kruskal form: factor columns are hit by
/// M^T, vector maps contract a mode away and fold the inner products into
/// the weights. At least one mode must remain untransformed by a vector.
inline KruskalTensor multilinear_transform(const KruskalTensor& k, const std::vector<MultilinearMap>& maps) {
    k.validate();
    if (static_cast<int>(maps.size()) != k.order())
        throw DimensionError("multilinear transform needs one map per mode");
    KruskalTensor out;
    out.weights = k.weights;
    for (int n = 0; n < k.order(); ++n) {
        if (std::holds_alternative<IdentityMap>(maps[n])) {
            out.factors.push_back(k.factors[n]);
        } else if (const auto* m = std::get_if<Eigen::MatrixXd>(&maps[n])) {
            if (m->rows() != k.factors[n].rows()) throw DimensionError("matrix map does not conform");
            out.factors.push_back(m->transpose() * k.factors[n]);
        } else {
            const auto& v = std::get<Eigen::VectorXd>(maps[n]);
            if (v.size() != k.factors[n].rows()) throw DimensionError("vector map does not conform");
            out.weights = out.weights.cwiseProduct((k.factors[n].transpose() * v).eval());
        }
    }
    if (out.factors.empty())
        throw DimensionError("Kruskal multilinear transform would contract every mode; use the dense overload");
    return out;
}

}  // namespace tendec
