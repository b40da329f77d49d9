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

#include "spectrakit/qstate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "spectrakit/errors.h"

namespace spectrakit {

namespace {

constexpr double kClamp = 1e-12;

void require_same_dims(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dims() != b.dims()) {
        throw DomainError("states have different subsystem dimensions");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(std::vector<int> dims, Matrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    int total = linalg::total_dim(dims_);
    if (matrix_.rows() != total || matrix_.cols() != total) {
        throw DomainError("matrix is " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + " but dims give " +
                          std::to_string(total));
    }
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kTolerance) {
        throw DomainError("density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex(1.0)) > kTolerance) {
        throw DomainError("density matrix trace is not 1");
    }
    if (linalg::hermitian_eigenvalues(matrix_).minCoeff() < -kTolerance) {
        throw DomainError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::unchecked(std::vector<int> dims, Matrix matrix) {
    DensityMatrix out;
    out.dims_ = std::move(dims);
    out.matrix_ = std::move(matrix);
    return out;
}

DensityMatrix DensityMatrix::pure(std::vector<int> dims, const Vector &psi) {
    double norm = psi.norm();
    if (norm == 0) {
        throw DomainError("zero state vector");
    }
    if (psi.size() != linalg::total_dim(dims)) {
        throw DomainError("state vector length does not match dims");
    }
    Vector v = psi / norm;
    return unchecked(std::move(dims), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::vector<int> dims) {
    int d = linalg::total_dim(dims);
    return unchecked(std::move(dims), linalg::identity(d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::diagonal(std::vector<int> dims, std::span<const double> probabilities) {
    Matrix m = Matrix::Zero(probabilities.size(), probabilities.size());
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        m(i, i) = probabilities[i];
    }
    return DensityMatrix(std::move(dims), std::move(m));
}

std::vector<double> DensityMatrix::spectrum() const {
    RealVector ev = linalg::hermitian_eigenvalues(matrix_);
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    for (double &x : out) {
        if (x < kClamp) {
            x = 0;
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int DensityMatrix::rank(double tolerance) const {
    RealVector ev = linalg::hermitian_eigenvalues(matrix_);
    return static_cast<int>((ev.array() > tolerance).count());
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return DensityMatrix::unchecked(std::move(dims), linalg::kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep) {
    if (keep.empty()) {
        throw DomainError("partial trace must keep at least one subsystem");
    }
    std::vector<int> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> dims;
    for (int k : sorted) {
        if (k < 0 || k >= rho.parts()) {
            throw DomainError("bad subsystem index " + std::to_string(k));
        }
        dims.push_back(rho.dims()[k]);
    }
    return DensityMatrix::unchecked(std::move(dims),
                                    linalg::partial_trace(rho.matrix(), rho.dims(), sorted));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<int> keep) {
    return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix regroup(const DensityMatrix &rho, const std::vector<std::vector<int>> &groups) {
    std::vector<int> dims;
    int next = 0;
    for (const auto &group : groups) {
        if (group.empty()) {
            throw DomainError("empty subsystem group");
        }
        int d = 1;
        for (int part : group) {
            if (part != next++ || part >= rho.parts()) {
                throw DomainError("groups must list every subsystem once, in order");
            }
            d *= rho.dims()[part];
        }
        dims.push_back(d);
    }
    if (next != rho.parts()) {
        throw DomainError("groups must list every subsystem once, in order");
    }
    return DensityMatrix::unchecked(std::move(dims), rho.matrix());
}

Ensemble::Ensemble(std::vector<double> p, std::vector<DensityMatrix> s)
    : probabilities(std::move(p)), states(std::move(s)) {
    if (probabilities.size() != states.size() || states.empty()) {
        throw DomainError("ensemble needs one probability per state");
    }
    double total = 0;
    for (double x : probabilities) {
        if (x < 0) {
            throw DomainError("negative ensemble probability");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > DensityMatrix::kTolerance) {
        throw DomainError("ensemble probabilities do not sum to 1");
    }
    for (const auto &state : states) {
        if (state.dims() != states.front().dims()) {
            throw DomainError("ensemble states have different dims");
        }
    }
}

DensityMatrix Ensemble::average() const {
    Matrix m = Matrix::Zero(states.front().dim(), states.front().dim());
    for (std::size_t i = 0; i < states.size(); ++i) {
        m += probabilities[i] * states[i].matrix();
    }
    return DensityMatrix::unchecked(states.front().dims(), std::move(m));
}

PureState purify(const DensityMatrix &rho) {
    linalg::HermitianEigen eig = linalg::hermitian_eigen(rho.matrix());
    int d = rho.dim();
    std::vector<int> support;
    for (int i = d - 1; i >= 0; --i) {
        if (eig.values(i) > kClamp) {
            support.push_back(i);
        }
    }
    int r = static_cast<int>(support.size());
    Vector psi = Vector::Zero(static_cast<Eigen::Index>(d) * r);
    for (int j = 0; j < r; ++j) {
        double w = std::sqrt(eig.values(support[j]));
        for (int i = 0; i < d; ++i) {
            psi(static_cast<Eigen::Index>(i) * r + j) = w * eig.vectors(i, support[j]);
        }
    }
    std::vector<int> dims = rho.dims();
    dims.push_back(r);
    return PureState{std::move(dims), psi / psi.norm()};
}

double fannes_mu(double x) {
    double value = x > 0 ? -x * std::log2(x) : 0.0;
    return std::min(value, 1.0 / std::numbers::e);
}

double binary_entropy(double p) {
    double q = 1.0 - p;
    double h = 0;
    if (p > 0) {
        h -= p * std::log2(p);
    }
    if (q > 0) {
        h -= q * std::log2(q);
    }
    return h;
}

double shannon_entropy(std::span<const double> probabilities) {
    double h = 0;
    for (double p : probabilities) {
        if (p > kClamp) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

double matrix_entropy(const Matrix &m) {
    RealVector ev = linalg::hermitian_eigenvalues(m);
    return shannon_entropy(std::span<const double>(ev.data(), ev.size()));
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return matrix_entropy(rho.matrix());
}

double conditional_entropy(const DensityMatrix &rho) {
    if (rho.parts() != 2) {
        throw DomainError("conditional entropy needs exactly two parts");
    }
    return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, {1}));
}

double mutual_information(const DensityMatrix &rho) {
    if (rho.parts() != 2) {
        throw DomainError("mutual information needs exactly two parts");
    }
    return von_neumann_entropy(partial_trace(rho, {0})) +
           von_neumann_entropy(partial_trace(rho, {1})) - von_neumann_entropy(rho);
}

double conditional_mutual_information(const DensityMatrix &rho) {
    if (rho.parts() != 3) {
        throw DomainError("conditional mutual information needs exactly three parts");
    }
    return von_neumann_entropy(partial_trace(rho, {0, 2})) +
           von_neumann_entropy(partial_trace(rho, {1, 2})) - von_neumann_entropy(rho) -
           von_neumann_entropy(partial_trace(rho, {2}));
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
    require_same_dims(rho, sigma);
    return std::clamp(0.5 * linalg::trace_norm(rho.matrix() - sigma.matrix()), 0.0, 1.0);
}

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    require_same_dims(rho, sigma);
    linalg::HermitianEigen eig = linalg::hermitian_eigen(rho.matrix());
    RealVector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
    Matrix sqrt_rho = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
    RealVector ev = linalg::hermitian_eigenvalues(sqrt_rho * sigma.matrix() * sqrt_rho);
    double root_fidelity = ev.cwiseMax(0.0).cwiseSqrt().sum();
    return std::clamp(root_fidelity * root_fidelity, 0.0, 1.0);
}

double relative_entropy(const DensityMatrix &rho, const DensityMatrix &sigma) {
    require_same_dims(rho, sigma);
    linalg::HermitianEigen eig = linalg::hermitian_eigen(sigma.matrix());
    double cross = 0;
    for (Eigen::Index j = 0; j < eig.values.size(); ++j) {
        double weight = (eig.vectors.col(j).adjoint() * rho.matrix() * eig.vectors.col(j))(0).real();
        if (eig.values(j) > kClamp) {
            cross += weight * std::log2(eig.values(j));
        } else if (weight > kClamp) {
            return std::numeric_limits<double>::infinity();
        }
    }
    return std::max(0.0, -von_neumann_entropy(rho) - cross);
}

double holevo_chi(const Ensemble &ensemble) {
    double chi = von_neumann_entropy(ensemble.average());
    for (std::size_t i = 0; i < ensemble.states.size(); ++i) {
        chi -= ensemble.probabilities[i] * von_neumann_entropy(ensemble.states[i]);
    }
    return std::max(0.0, chi);
}

Matrix partial_transpose(const DensityMatrix &rho, int part) {
    if (part < 0 || part >= rho.parts()) {
        throw DomainError("bad subsystem index " + std::to_string(part));
    }
    int stride = 1;
    for (int i = rho.parts() - 1; i > part; --i) {
        stride *= rho.dims()[i];
    }
    int d = rho.dims()[part];
    int n = rho.dim();
    Matrix out(n, n);
    for (int x = 0; x < n; ++x) {
        int dx = (x / stride) % d;
        for (int y = 0; y < n; ++y) {
            int dy = (y / stride) % d;
            out(x, y) = rho.matrix()(x + (dy - dx) * stride, y + (dx - dy) * stride);
        }
    }
    return out;
}

Matrix random_unitary(int d, std::uint64_t seed) {
    Rng rng(seed);
    return linalg::haar_unitary(d, rng);
}

DensityMatrix random_density(std::vector<int> dims, int rank, Rng &rng) {
    int d = linalg::total_dim(dims);
    if (rank < 1 || rank > d) {
        throw DomainError("rank must lie in [1, d]");
    }
    Matrix g = linalg::ginibre(d, rank, rng);
    Matrix m = g * g.adjoint();
    m /= m.trace().real();
    m = (m + m.adjoint()) / 2.0;
    return DensityMatrix::unchecked(std::move(dims), std::move(m));
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(std::vector<int>{d}, rank, rng);
}

Vector random_pure_vector(int d, Rng &rng) {
    Vector v = linalg::ginibre(d, 1, rng).col(0);
    return v / v.norm();
}

PureState random_pure(std::vector<int> dims, std::uint64_t seed) {
    Rng rng(seed);
    int d = linalg::total_dim(dims);
    return PureState{std::move(dims), random_pure_vector(d, rng)};
}

}  // namespace spectrakit
