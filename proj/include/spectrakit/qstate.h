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

#include <cstdint>
#include <span>
#include <vector>

#include "spectrakit/linalg.h"

namespace spectrakit {

/// A complex Hermitian, positive semidefinite, unit-trace matrix together with
/// the dimensions of its tensor factors.
class DensityMatrix {
   public:
    static constexpr double kTolerance = 1e-10;

    /// Validates Hermiticity, positivity and trace within kTolerance.
    DensityMatrix(std::vector<int> dims, Matrix matrix);

    /// Skips validation. For states produced internally from valid inputs.
    static DensityMatrix unchecked(std::vector<int> dims, Matrix matrix);

    /// |psi><psi| after normalizing psi.
    static DensityMatrix pure(std::vector<int> dims, const Vector &psi);
    static DensityMatrix maximally_mixed(std::vector<int> dims);
    static DensityMatrix diagonal(std::vector<int> dims, std::span<const double> probabilities);

    const std::vector<int> &dims() const {
        return dims_;
    }
    const Matrix &matrix() const {
        return matrix_;
    }
    int dim() const {
        return static_cast<int>(matrix_.rows());
    }
    int parts() const {
        return static_cast<int>(dims_.size());
    }

    /// Eigenvalues sorted descending, tiny negatives clamped to zero.
    std::vector<double> spectrum() const;
    int rank(double tolerance = 1e-12) const;

   private:
    DensityMatrix() = default;
    std::vector<int> dims_;
    Matrix matrix_;
};

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// Reduced state on the listed subsystems (any order; output keeps the
/// original factor order).
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<int> keep);

/// Regroups the factors into blocks: groups {{0,1},{2}} turns ABC into (AB)C.
/// Every factor must appear once, in order.
DensityMatrix regroup(const DensityMatrix &rho, const std::vector<std::vector<int>> &groups);

struct Ensemble {
    std::vector<double> probabilities;
    std::vector<DensityMatrix> states;

    Ensemble() = default;
    Ensemble(std::vector<double> probabilities, std::vector<DensityMatrix> states);

    DensityMatrix average() const;
};

struct PureState {
    std::vector<int> dims;
    Vector amplitudes;
};

/// Purification on H (x) H' with dim H' = rank(rho).
PureState purify(const DensityMatrix &rho);

/// min{-x log2 x, 1/e}.
double fannes_mu(double x);
/// Binary entropy in bits.
double binary_entropy(double p);
/// Shannon entropy in bits; zero probabilities contribute nothing.
double shannon_entropy(std::span<const double> probabilities);
/// Entropy of the eigenvalues of a Hermitian matrix.
double matrix_entropy(const Matrix &m);

double von_neumann_entropy(const DensityMatrix &rho);
/// S(A|B) = S(AB) - S(B) for a two-part state.
double conditional_entropy(const DensityMatrix &rho);
/// I(A;B) for a two-part state.
double mutual_information(const DensityMatrix &rho);
/// I(A;B|E) = S(AE) + S(BE) - S(ABE) - S(E) for a three-part state.
double conditional_mutual_information(const DensityMatrix &rho);

/// Half the trace norm of the difference.
double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);
/// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);
/// Bits; +infinity when supp rho is not inside supp sigma.
double relative_entropy(const DensityMatrix &rho, const DensityMatrix &sigma);
double holevo_chi(const Ensemble &ensemble);

/// Transpose on one tensor factor.
Matrix partial_transpose(const DensityMatrix &rho, int part);

/// Haar unitary, deterministic in the seed.
Matrix random_unitary(int d, std::uint64_t seed);
/// Induced-measure state G G^dagger / Tr with G a d x rank Ginibre matrix.
DensityMatrix random_density(int d, int rank, std::uint64_t seed);
DensityMatrix random_density(std::vector<int> dims, int rank, Rng &rng);
/// Haar-random pure state vector on the given factors.
PureState random_pure(std::vector<int> dims, std::uint64_t seed);
Vector random_pure_vector(int d, Rng &rng);

}  // namespace spectrakit
