// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "tendec/errors.hpp"

namespace tendec {

/// Seedable random source used everywhere in the library.
///
/// The engine is std::mt19937_64, whose output sequence is pinned by the
/// C++ standard, and all distributions are implemented here explicitly
/// (53-bit uniforms, Box-Muller normals, CDF-walk categorical draws).
/// Identical seeds therefore reproduce identical streams across standard
/// library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller. No spare caching, so one draw
    /// always consumes exactly two engine outputs.
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Index draw from a finite distribution (0-based). Weights must be
    /// nonnegative; they are normalized by their sum.
    int categorical(const Eigen::VectorXd& weights) {
        const double total = weights.sum();
        if (!(total > 0.0)) throw DataError("categorical draw from all-zero weights");
        double u = uniform() * total;
        for (int i = 0; i < weights.size(); ++i) {
            u -= weights[i];
            if (u < 0.0) return i;
        }
        return static_cast<int>(weights.size()) - 1;
    }

    Eigen::VectorXd gaussian_vector(Eigen::Index d) {
        Eigen::VectorXd v(d);
        for (Eigen::Index i = 0; i < d; ++i) v[i] = normal();
        return v;
    }

    /// Column-major fill order (entry (0,0), (1,0), ... then next column).
    Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXd m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal();
        return m;
    }

    /// Uniformly distributed point on the unit sphere.
    Eigen::VectorXd unit_vector(Eigen::Index d) {
        for (;;) {
            Eigen::VectorXd v = gaussian_vector(d);
            const double n = v.norm();
            if (n > 1e-12) return v / n;
        }
    }

    /// Uniform point on the probability simplex (flat Dirichlet), via
    /// normalized exponential draws.
    Eigen::VectorXd simplex_vector(Eigen::Index d) {
        Eigen::VectorXd v(d);
        for (Eigen::Index i = 0; i < d; ++i) v[i] = -std::log(uniform_pos());
        return v / v.sum();
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace tendec
