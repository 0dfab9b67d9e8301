#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <string>

#include "sbmds/errors.hpp"

namespace sbmds {

// Row-major so that object rows (coordinates, dissimilarity rows) are
// contiguous; banded access walks a contiguous slice of a row.
using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

// N x D matrix of latent coordinates, row n = location of object n.
struct LatentConfig {
    RowMatrix coords;

    LatentConfig() = default;
    explicit LatentConfig(RowMatrix c) : coords(std::move(c)) {}

    Index n_objects() const { return coords.rows(); }
    Index dim() const { return coords.cols(); }

    void validate() const {
        if (n_objects() < 2) throw ValidationError("LatentConfig: need at least 2 objects");
        if (dim() < 1) throw ValidationError("LatentConfig: dimension must be >= 1");
        if (!coords.allFinite()) throw ValidationError("LatentConfig: non-finite coordinate");
    }
};

// Symmetric N x N observed dissimilarities with zero diagonal.
struct DissimMatrix {
    RowMatrix values;

    DissimMatrix() = default;
    explicit DissimMatrix(RowMatrix v) : values(std::move(v)) {}

    Index n_objects() const { return values.rows(); }

    // tol is the allowed asymmetry before the matrix is rejected. Throws
    // ValidationError naming the first offending entry.
    void validate(double tol = 1e-8) const {
        const Index n = values.rows();
        if (n < 2) throw ValidationError("DissimMatrix: need at least 2 objects");
        if (values.cols() != n)
            throw ValidationError("DissimMatrix: matrix is not square (" +
                                  std::to_string(n) + "x" + std::to_string(values.cols()) + ")");
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) {
                const double v = values(i, j);
                if (!std::isfinite(v))
                    throw ValidationError("DissimMatrix: non-finite entry at (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                if (v < 0.0)
                    throw ValidationError("DissimMatrix: negative entry at (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
            if (values(i, i) != 0.0)
                throw ValidationError("DissimMatrix: nonzero diagonal at (" +
                                      std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
            for (Index j = i + 1; j < n; ++j) {
                if (std::abs(values(i, j) - values(j, i)) > tol)
                    throw ValidationError("DissimMatrix: asymmetric at (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          "): " + std::to_string(values(i, j)) + " vs " +
                                          std::to_string(values(j, i)));
            }
        }
    }
};

inline double euclidean_distance(Eigen::Ref<const Eigen::RowVectorXd> a,
                                 Eigen::Ref<const Eigen::RowVectorXd> b) {
    if (a.size() != b.size())
        throw DimensionError("euclidean_distance: vectors of length " +
                             std::to_string(a.size()) + " and " + std::to_string(b.size()));
    double sum = 0.0;
    for (Index d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

// Pairwise latent distances of a configuration (zero diagonal, symmetric).
inline DissimMatrix pairwise_distances(const LatentConfig& config) {
    const Index n = config.n_objects();
    RowMatrix out = RowMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const double d = euclidean_distance(config.coords.row(i), config.coords.row(j));
            out(i, j) = d;
            out(j, i) = d;
        }
    }
    return DissimMatrix(std::move(out));
}

}  // namespace sbmds
