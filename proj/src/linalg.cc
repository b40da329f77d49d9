// Copyright 2026 The spectrakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spectrakit/linalg.h"

#include <algorithm>
#include <limits>
#include <string>

#include "spectrakit/errors.h"

namespace spectrakit::linalg {

HermitianEigen hermitian_eigen(const Matrix &m) {
    Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const Matrix &m) {
    Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron(const Vector &a, const Vector &b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

double trace_norm(const Matrix &hermitian) {
    return hermitian_eigenvalues(hermitian).cwiseAbs().sum();
}

Matrix polar_isometry(const Matrix &m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

Matrix identity(int d) {
    return Matrix::Identity(d, d);
}

int total_dim(std::span<const int> dims) {
    long long total = 1;
    for (int d : dims) {
        if (d < 1) {
            throw DomainError("subsystem dimensions must be positive");
        }
        total *= d;
        if (total > std::numeric_limits<int>::max() / 2) {
            throw ResourceError("total dimension overflow");
        }
    }
    return static_cast<int>(total);
}

namespace {

std::vector<int> strides_of(std::span<const int> dims) {
    std::vector<int> strides(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    return strides;
}

/// Maps each flat index of the permuted space to its index in the original.
std::vector<int> permutation_map(std::span<const int> dims, std::span<const int> order) {
    std::size_t n = dims.size();
    if (order.size() != n) {
        throw DomainError("subsystem order has the wrong length");
    }
    std::vector<int> seen(n, 0);
    std::vector<int> new_dims(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= static_cast<int>(n) || seen[order[i]]++) {
            throw DomainError("subsystem order is not a permutation");
        }
        new_dims[i] = dims[order[i]];
    }
    std::vector<int> old_strides = strides_of(dims);
    int total = total_dim(dims);
    std::vector<int> map(total);
    std::vector<int> digits(n, 0);
    for (int flat = 0; flat < total; ++flat) {
        int old_index = 0;
        for (std::size_t i = 0; i < n; ++i) {
            old_index += digits[i] * old_strides[order[i]];
        }
        map[flat] = old_index;
        for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
            if (++digits[i] < new_dims[i]) {
                break;
            }
            digits[i] = 0;
        }
    }
    return map;
}

}  // namespace

Matrix partial_trace(const Matrix &m, std::span<const int> dims, std::span<const int> keep) {
    int total = total_dim(dims);
    if (m.rows() != total || m.cols() != total) {
        throw DomainError("matrix size does not match subsystem dimensions");
    }
    std::size_t n = dims.size();
    std::vector<int> is_kept(n, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int k = keep[i];
        if (k < 0 || k >= static_cast<int>(n) || is_kept[k]) {
            throw DomainError("bad subsystem index " + std::to_string(k));
        }
        if (i > 0 && keep[i] < keep[i - 1]) {
            throw DomainError("kept subsystems must be listed in ascending order");
        }
        is_kept[k] = 1;
    }
    // Bring kept factors to the front, then sum the traced block diagonal.
    std::vector<int> order(keep.begin(), keep.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_kept[i]) {
            order.push_back(static_cast<int>(i));
        }
    }
    Matrix permuted = permute_subsystems(m, dims, order);
    int kept_dim = 1;
    for (int k : keep) {
        kept_dim *= dims[k];
    }
    int traced_dim = total / kept_dim;
    Matrix out = Matrix::Zero(kept_dim, kept_dim);
    for (int t = 0; t < traced_dim; ++t) {
        for (int i = 0; i < kept_dim; ++i) {
            for (int j = 0; j < kept_dim; ++j) {
                out(i, j) += permuted(i * traced_dim + t, j * traced_dim + t);
            }
        }
    }
    return out;
}

Matrix permute_subsystems(const Matrix &m, std::span<const int> dims, std::span<const int> order) {
    std::vector<int> map = permutation_map(dims, order);
    int total = static_cast<int>(map.size());
    Matrix out(total, total);
    for (int i = 0; i < total; ++i) {
        for (int j = 0; j < total; ++j) {
            out(i, j) = m(map[i], map[j]);
        }
    }
    return out;
}

Vector permute_subsystems(const Vector &v, std::span<const int> dims, std::span<const int> order) {
    std::vector<int> map = permutation_map(dims, order);
    Vector out(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        out(i) = v(map[i]);
    }
    return out;
}

Matrix ginibre(int rows, int cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    Matrix g(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            double re = normal(rng);
            double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

Matrix haar_isometry(int rows, int cols, Rng &rng) {
    if (rows < cols) {
        throw DomainError("isometry needs rows >= cols");
    }
    Matrix g = ginibre(rows, cols, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
    Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    for (int j = 0; j < cols; ++j) {
        Complex diag = r(j, j);
        double mag = std::abs(diag);
        if (mag > 0) {
            q.col(j) *= diag / mag;
        }
    }
    return q;
}

Matrix haar_unitary(int d, Rng &rng) {
    return haar_isometry(d, d, rng);
}

}  // namespace spectrakit::linalg
