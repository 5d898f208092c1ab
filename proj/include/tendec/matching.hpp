// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "tendec/errors.hpp"
#include "tendec/kruskal.hpp"

namespace tendec {

/// Result of matching candidate columns against reference columns.
/// permutation[i] is the candidate column assigned to reference column i.
struct ColumnMatch {
    std::vector<int> permutation;
    std::vector<double> cosines;  // |cos| of each matched pair
};

/// Greedy assignment by largest absolute cosine. Recovery from a
/// decomposition is defined only up to column permutation and sign, so
/// evaluations run through this matching first. Greedy (not optimal
/// assignment) is enough at the column counts used here.
inline ColumnMatch greedy_match_columns(const Eigen::MatrixXd& reference, const Eigen::MatrixXd& candidate) {
    if (reference.rows() != candidate.rows() || reference.cols() != candidate.cols())
        throw DimensionError("column matching needs matrices of equal shape");
    const Eigen::Index k = reference.cols();
    Eigen::MatrixXd score(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) {
            const double denom = reference.col(i).norm() * candidate.col(j).norm();
            score(i, j) = denom > 0.0 ? std::abs(reference.col(i).dot(candidate.col(j))) / denom : 0.0;
        }

    ColumnMatch match;
    match.permutation.assign(k, -1);
    match.cosines.assign(k, 0.0);
    std::vector<bool> ref_used(k, false), cand_used(k, false);
    for (Eigen::Index step = 0; step < k; ++step) {
        double best = -1.0;
        Eigen::Index bi = 0, bj = 0;
        for (Eigen::Index i = 0; i < k; ++i) {
            if (ref_used[i]) continue;
            for (Eigen::Index j = 0; j < k; ++j) {
                if (cand_used[j]) continue;
                if (score(i, j) > best) {
                    best = score(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        ref_used[bi] = cand_used[bj] = true;
        match.permutation[bi] = static_cast<int>(bj);
        match.cosines[bi] = best;
    }
    return match;
}

/// Total variation distance between two finite distributions.
inline double total_variation(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    if (p.size() != q.size()) throw DimensionError("total variation needs equal lengths");
    return 0.5 * (p - q).cwiseAbs().sum();
}

/// Outcome of matching two Kruskal models component by component.
struct KruskalMatch {
    std::vector<int> permutation;               // candidate component per reference component
    std::vector<std::vector<double>> cosines;   // [mode][component] |cos| after matching
    std::vector<double> weight_ratio;           // candidate weight / reference weight per component
    double min_cosine = 0.0;
};

/// Match components of two Kruskal tensors of the same shape and rank.
/// Both are brought to the canonical normalized gauge first; components
/// are paired greedily by the mean absolute cosine across modes.
inline KruskalMatch match_kruskal(const KruskalTensor& reference, const KruskalTensor& candidate) {
    const KruskalTensor ref = normalized(reference);
    const KruskalTensor cand = normalized(candidate);
    if (ref.order() != cand.order() || ref.rank() != cand.rank())
        throw DimensionError("Kruskal matching needs equal order and rank");
    const int n = ref.order();
    const Eigen::Index r = ref.rank();

    Eigen::MatrixXd score = Eigen::MatrixXd::Zero(r, r);
    for (int m = 0; m < n; ++m)
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < r; ++j)
                score(i, j) += std::abs(ref.factors[m].col(i).dot(cand.factors[m].col(j))) / n;

    KruskalMatch match;
    match.permutation.assign(r, -1);
    std::vector<bool> ref_used(r, false), cand_used(r, false);
    for (Eigen::Index step = 0; step < r; ++step) {
        double best = -1.0;
        Eigen::Index bi = 0, bj = 0;
        for (Eigen::Index i = 0; i < r; ++i) {
            if (ref_used[i]) continue;
            for (Eigen::Index j = 0; j < r; ++j) {
                if (cand_used[j]) continue;
                if (score(i, j) > best) {
                    best = score(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        ref_used[bi] = cand_used[bj] = true;
        match.permutation[bi] = static_cast<int>(bj);
    }

    match.cosines.assign(n, std::vector<double>(r, 0.0));
    match.weight_ratio.assign(r, 0.0);
    match.min_cosine = 1.0;
    for (Eigen::Index i = 0; i < r; ++i) {
        const int j = match.permutation[i];
        for (int m = 0; m < n; ++m) {
            const double c = std::abs(ref.factors[m].col(i).dot(cand.factors[m].col(j)));
            match.cosines[m][i] = c;
            match.min_cosine = std::min(match.min_cosine, c);
        }
        match.weight_ratio[i] = ref.weights[i] != 0.0 ? cand.weights[j] / ref.weights[i]
                                                      : (cand.weights[j] == 0.0 ? 1.0 : 0.0);
    }
    return match;
}

}  // namespace tendec
