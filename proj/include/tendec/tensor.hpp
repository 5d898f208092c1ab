// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tendec/errors.hpp"

namespace tendec {

/// Dense order-N tensor with value semantics.
///
/// Storage is a flat double buffer in first-index-fastest order, the
/// generalization of column-major layout: entry (i1,...,iN), 1-based,
/// lives at flat offset sum_k (ik - 1) * prod_{m<k} I_m. All public
/// indices and modes are 1-based; the minimum order is 1 and every
/// extent must be at least 1 (scalars are not representable).
class DenseTensor {
public:
    explicit DenseTensor(std::vector<Eigen::Index> shape)
        : shape_(std::move(shape)), data_(checked_size(shape_), 0.0) {}

    DenseTensor(std::vector<Eigen::Index> shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (static_cast<Eigen::Index>(data_.size()) != checked_size(shape_))
            throw DimensionError("tensor data length " + std::to_string(data_.size()) +
                                 " does not match the shape product " + std::to_string(checked_size(shape_)));
    }

    static DenseTensor zeros(std::vector<Eigen::Index> shape) { return DenseTensor(std::move(shape)); }

    int order() const { return static_cast<int>(shape_.size()); }
    const std::vector<Eigen::Index>& shape() const { return shape_; }
    Eigen::Index size() const { return static_cast<Eigen::Index>(data_.size()); }

    /// Extent of the given mode (1-based).
    Eigen::Index extent(int mode) const {
        check_mode(mode);
        return shape_[mode - 1];
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    /// Flat offset of a 1-based multi-index.
    Eigen::Index offset(std::span<const Eigen::Index> idx) const {
        if (static_cast<int>(idx.size()) != order())
            throw DimensionError("index of length " + std::to_string(idx.size()) +
                                 " into an order-" + std::to_string(order()) + " tensor");
        Eigen::Index off = 0;
        Eigen::Index stride = 1;
        for (int k = 0; k < order(); ++k) {
            if (idx[k] < 1 || idx[k] > shape_[k])
                throw DimensionError("index " + std::to_string(idx[k]) + " out of range [1, " +
                                     std::to_string(shape_[k]) + "] in mode " + std::to_string(k + 1));
            off += (idx[k] - 1) * stride;
            stride *= shape_[k];
        }
        return off;
    }

    double at(std::span<const Eigen::Index> idx) const { return data_[offset(idx)]; }
    double& at(std::span<const Eigen::Index> idx) { return data_[offset(idx)]; }

    /// Convenience 1-based element access: t(i, j, k).
    template <typename... Ix>
    double operator()(Ix... ix) const {
        const Eigen::Index idx[] = {static_cast<Eigen::Index>(ix)...};
        return at(std::span<const Eigen::Index>(idx, sizeof...(ix)));
    }

    template <typename... Ix>
    double& operator()(Ix... ix) {
        const Eigen::Index idx[] = {static_cast<Eigen::Index>(ix)...};
        return at(std::span<const Eigen::Index>(idx, sizeof...(ix)));
    }

    bool operator==(const DenseTensor& other) const {
        return shape_ == other.shape_ && data_ == other.data_;
    }

    DenseTensor& operator+=(const DenseTensor& other) {
        check_same_shape(other);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
        return *this;
    }

    DenseTensor& operator-=(const DenseTensor& other) {
        check_same_shape(other);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
        return *this;
    }

    DenseTensor& operator*=(double s) {
        for (double& v : data_) v *= s;
        return *this;
    }

    friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
    friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
    friend DenseTensor operator*(DenseTensor a, double s) { return a *= s; }
    friend DenseTensor operator*(double s, DenseTensor a) { return a *= s; }

private:
    static Eigen::Index checked_size(const std::vector<Eigen::Index>& shape) {
        if (shape.empty()) throw DimensionError("tensor order must be at least 1");
        Eigen::Index n = 1;
        for (Eigen::Index e : shape) {
            if (e < 1) throw DimensionError("tensor extents must be positive");
            n *= e;
        }
        return n;
    }

    void check_mode(int mode) const {
        if (mode < 1 || mode > order())
            throw DimensionError("mode " + std::to_string(mode) + " out of range [1, " +
                                 std::to_string(order()) + "]");
    }

    void check_same_shape(const DenseTensor& other) const {
        if (shape_ != other.shape_) throw DimensionError("tensor shapes do not match");
    }

    std::vector<Eigen::Index> shape_;
    std::vector<double> data_;
};

/// Scalar at a 1-based multi-index.
inline double element(const DenseTensor& t, std::span<const Eigen::Index> idx) {
    return t.at(idx);
}

inline bool all_finite(const DenseTensor& t) {
    for (double v : t.data())
        if (!std::isfinite(v)) return false;
    return true;
}

inline double frobenius_norm(const DenseTensor& t) {
    double s = 0.0;
    for (double v : t.data()) s += v * v;
    return std::sqrt(s);
}

/// Mode-n fiber: all indices fixed except mode n. `fixed` lists the other
/// modes' 1-based indices in increasing mode order (length N-1).
inline Eigen::VectorXd fiber(const DenseTensor& t, int mode, std::span<const Eigen::Index> fixed) {
    const int n = t.order();
    if (mode < 1 || mode > n) throw DimensionError("fiber mode out of range");
    if (static_cast<int>(fixed.size()) != n - 1)
        throw DimensionError("fiber needs " + std::to_string(n - 1) + " fixed indices, got " +
                             std::to_string(fixed.size()));
    std::vector<Eigen::Index> idx(n);
    int f = 0;
    for (int k = 1; k <= n; ++k)
        if (k != mode) idx[k - 1] = fixed[f++];
    Eigen::VectorXd out(t.extent(mode));
    for (Eigen::Index i = 1; i <= t.extent(mode); ++i) {
        idx[mode - 1] = i;
        out[i - 1] = t.at(idx);
    }
    return out;
}

/// Sub-tensor obtained by pinning one mode to a 1-based index; the result
/// has order N-1 (frontal/lateral/horizontal slices in the order-3 case).
/// Order-1 tensors cannot be sliced since the output order would drop
/// below 1.
inline DenseTensor slice(const DenseTensor& t, int fixed_mode, Eigen::Index index) {
    const int n = t.order();
    if (n < 2) throw DimensionError("cannot slice an order-1 tensor");
    if (fixed_mode < 1 || fixed_mode > n) throw DimensionError("slice mode out of range");
    if (index < 1 || index > t.extent(fixed_mode))
        throw DimensionError("slice index " + std::to_string(index) + " out of range [1, " +
                             std::to_string(t.extent(fixed_mode)) + "]");

    std::vector<Eigen::Index> out_shape;
    out_shape.reserve(n - 1);
    for (int k = 1; k <= n; ++k)
        if (k != fixed_mode) out_shape.push_back(t.extent(k));
    DenseTensor out(out_shape);

    // Walk the output in flat order; P/Q are the strides around the
    // pinned mode in the input layout.
    Eigen::Index p_size = 1;
    for (int k = 1; k < fixed_mode; ++k) p_size *= t.extent(k);
    const Eigen::Index in_n = t.extent(fixed_mode);
    const Eigen::Index q_size = t.size() / (p_size * in_n);
    Eigen::Index o = 0;
    for (Eigen::Index q = 0; q < q_size; ++q)
        for (Eigen::Index p = 0; p < p_size; ++p)
            out.data()[o++] = t.data()[p + (index - 1) * p_size + q * p_size * in_n];
    return out;
}

/// Stack matrix columns top to bottom into one vector.
inline Eigen::VectorXd vectorize(const Eigen::MatrixXd& m) {
    return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

/// Mode-n matricization: the I_n x (prod of the other extents) matrix
/// whose columns are the mode-n fibers, ordered with lower modes varying
/// fastest.
inline Eigen::MatrixXd unfold(const DenseTensor& t, int mode) {
    const int n = t.order();
    if (mode < 1 || mode > n) throw DimensionError("unfold mode out of range");
    Eigen::Index p_size = 1;
    for (int k = 1; k < mode; ++k) p_size *= t.extent(k);
    const Eigen::Index rows = t.extent(mode);
    const Eigen::Index q_size = t.size() / (p_size * rows);

    Eigen::MatrixXd out(rows, p_size * q_size);
    const double* src = t.data().data();
    for (Eigen::Index q = 0; q < q_size; ++q)
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index p = 0; p < p_size; ++p)
                out(i, p + q * p_size) = src[p + i * p_size + q * p_size * rows];
    return out;
}

/// Inverse of unfold: reassemble the tensor of the given shape from its
/// mode-n matricization.
inline DenseTensor fold(const Eigen::MatrixXd& m, int mode, const std::vector<Eigen::Index>& shape) {
    DenseTensor out(shape);
    const int n = out.order();
    if (mode < 1 || mode > n) throw DimensionError("fold mode out of range");
    Eigen::Index p_size = 1;
    for (int k = 1; k < mode; ++k) p_size *= out.extent(k);
    const Eigen::Index rows = out.extent(mode);
    const Eigen::Index q_size = out.size() / (p_size * rows);
    if (m.rows() != rows || m.cols() != p_size * q_size)
        throw DimensionError("matrix of size " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " cannot fold into the requested shape at mode " + std::to_string(mode));

    double* dst = out.data().data();
    for (Eigen::Index q = 0; q < q_size; ++q)
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index p = 0; p < p_size; ++p)
                dst[p + i * p_size + q * p_size * rows] = m(i, p + q * p_size);
    return out;
}

/// Order-2 tensor viewed as a matrix (the layout is already column-major).
inline Eigen::MatrixXd as_matrix(const DenseTensor& t) {
    if (t.order() != 2) throw DimensionError("as_matrix requires an order-2 tensor");
    return Eigen::Map<const Eigen::MatrixXd>(t.data().data(), t.extent(1), t.extent(2));
}

inline DenseTensor from_matrix(const Eigen::MatrixXd& m) {
    std::vector<double> data(m.data(), m.data() + m.size());
    return DenseTensor({m.rows(), m.cols()}, std::move(data));
}

/// Rank-1 tensor from N >= 2 vectors: entry (i1,...,iN) is the product of
/// the vectors' entries.
inline DenseTensor outer(const std::vector<Eigen::VectorXd>& vectors) {
    if (vectors.size() < 2) throw DimensionError("outer product needs at least two vectors");
    std::vector<Eigen::Index> shape;
    shape.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() == 0) throw DimensionError("outer product of an empty vector");
        shape.push_back(v.size());
    }
    DenseTensor out(shape);
    std::vector<Eigen::Index> idx(vectors.size(), 0);  // 0-based counters
    for (Eigen::Index f = 0; f < out.size(); ++f) {
        double v = 1.0;
        for (std::size_t k = 0; k < vectors.size(); ++k) v *= vectors[k][idx[k]];
        out.data()[f] = v;
        for (std::size_t k = 0; k < vectors.size(); ++k) {
            if (++idx[k] < shape[k]) break;
            idx[k] = 0;
        }
    }
    return out;
}

inline double inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size())
        throw DimensionError("inner product of vectors with lengths " + std::to_string(a.size()) +
                             " and " + std::to_string(b.size()));
    return a.dot(b);
}

}  // namespace tendec
