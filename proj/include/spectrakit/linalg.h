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

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spectrakit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

namespace linalg {

/// Eigenvalues (ascending) and eigenvectors of (m + m^dagger)/2.
struct HermitianEigen {
    RealVector values;
    Matrix vectors;
};
HermitianEigen hermitian_eigen(const Matrix &m);
RealVector hermitian_eigenvalues(const Matrix &m);

/// Kronecker product a (x) b.
Matrix kron(const Matrix &a, const Matrix &b);
Vector kron(const Vector &a, const Vector &b);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const Matrix &hermitian);

/// Closest isometry (polar factor) to a full-column-rank matrix.
Matrix polar_isometry(const Matrix &m);

Matrix identity(int d);

/// Product of dims, with an overflow guard.
int total_dim(std::span<const int> dims);

/// Reduced operator on the listed subsystems (ascending, unique indices).
Matrix partial_trace(const Matrix &m, std::span<const int> dims, std::span<const int> keep);

/// Reorders tensor factors: output factor i is input factor order[i].
Matrix permute_subsystems(const Matrix &m, std::span<const int> dims, std::span<const int> order);
Vector permute_subsystems(const Vector &v, std::span<const int> dims, std::span<const int> order);

/// i.i.d. standard complex Gaussian entries (real and imaginary parts N(0, 1/2)).
Matrix ginibre(int rows, int cols, Rng &rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal moved into Q.
Matrix haar_unitary(int d, Rng &rng);

/// Haar-distributed isometry with the given shape (rows >= cols).
Matrix haar_isometry(int rows, int cols, Rng &rng);

}  // namespace linalg
}  // namespace spectrakit
