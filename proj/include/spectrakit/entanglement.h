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
#include <optional>
#include <string>
#include <vector>

#include "spectrakit/qstate.h"

namespace spectrakit {

/// A channel C -> E given by an isometry V: C -> E (x) F; the environment F
/// is traced out. Row index of V is e * environment_dim + f.
class ExtensionChannel {
   public:
    static constexpr double kTolerance = 1e-8;

    /// Validates V^dagger V = I within kTolerance.
    ExtensionChannel(Matrix isometry, int output_dim);

    /// Discards the input and prepares |0>.
    static ExtensionChannel trivial(int input_dim, int output_dim, int environment_dim);
    /// Measures the input in its computational basis and writes the outcome
    /// into E (outcomes beyond output_dim are merged into the last one).
    static ExtensionChannel dephasing(int input_dim, int output_dim);
    static ExtensionChannel identity(int d);
    static ExtensionChannel random(int input_dim, int output_dim, int environment_dim, Rng &rng);

    int input_dim() const {
        return static_cast<int>(isometry_.cols());
    }
    int output_dim() const {
        return output_dim_;
    }
    int environment_dim() const {
        return static_cast<int>(isometry_.rows()) / output_dim_;
    }
    const Matrix &isometry() const {
        return isometry_;
    }

    /// Lambda(x) for an operator on C.
    Matrix apply(const Matrix &x) const;

   private:
    Matrix isometry_;
    int output_dim_;
};

/// Applies the channel to the last factor of a pure state, giving a mixed
/// state on the remaining factors plus E.
DensityMatrix extend(const PureState &state, const ExtensionChannel &channel);

enum class MeasureKind { Exact, UpperBound };

const char *to_string(MeasureKind kind);

struct MeasureReport {
    double value = 0;
    MeasureKind kind = MeasureKind::UpperBound;
    /// Decomposition witness (eof_bruteforce).
    std::optional<Ensemble> ensemble;
    /// Extension witness (squashed_upper_bound) and the purification it acts on.
    std::optional<ExtensionChannel> extension;
    std::optional<PureState> purification;

    /// Hex digest of the witness data, stable across runs.
    std::string witness_digest() const;
};

/// Two-qubit concurrence max{0, l1 - l2 - l3 - l4}.
double concurrence(const DensityMatrix &rho);
/// h((1 + sqrt(1 - C^2)) / 2).
double eof_wootters(const DensityMatrix &rho);

/// S(A) of a pure state on the given two factors.
double entanglement_entropy(const Vector &psi, int dim_a, int dim_b);

/// sum_i p_i S(A)_i for an ensemble of pure two-part states.
double eof_ensemble_value(const Ensemble &ensemble);

struct EofOptions {
    int ensemble_size = 4;
    int restarts = 32;
    std::uint64_t seed = 1;
    /// Stops a restart when a full sweep gains less than this.
    double tolerance = 1e-7;
    int max_sweeps = 500;
};

/// Minimizes sum_i p_i S(A)_i over decompositions psi_i ~ sum_j W_ij
/// sqrt(l_j) e_j with W an ensemble_size x rank isometry, by line searches
/// along Givens rotations of W.
MeasureReport eof_bruteforce(const DensityMatrix &rho, const EofOptions &options = {});

/// log2 || rho^Gamma ||_1 with the transpose on the second part.
double log_negativity(const DensityMatrix &rho);

/// Half the conditional mutual information of the extension of a bipartite
/// state reached by applying the channel to the purifying factor.
double squashed_extension_value(const PureState &purification, const ExtensionChannel &channel);

struct SquashedOptions {
    /// Dimension of E; 0 means the rank of rho.
    int env_dim = 0;
    /// Dimension of the traced environment F; 0 means max(env_dim, rank).
    /// Must be at least the rank so the trivial extension is reachable.
    int environment_dim = 0;
    int restarts = 32;
    std::uint64_t seed = 1;
    double tolerance = 1e-7;
    int max_evaluations = 4000;
};

/// Upper bound on squashed entanglement of a two-part state. The trivial
/// extension and the eigenbasis-dephasing extension are always tried, then
/// Nelder-Mead restarts over V = polar(V0 + Delta).
MeasureReport squashed_upper_bound(const DensityMatrix &rho, const SquashedOptions &options = {});

/// d-dimensional Fourier transform, or H^(x)l when hadamard is set (d = 2^l).
Matrix fourier_matrix(int d, bool hadamard = false);

struct FlowerState {
    /// Parts A, A', B, B' with dims d, 2, d, 2.
    DensityMatrix rho;
    /// Parts A, A', B, B', C.
    PureState purification;
};

FlowerState flower_state(int d, bool hadamard = false);

/// Normalized projector onto the antisymmetric subspace of C^d (x) C^d.
DensityMatrix antisymmetric_state(int d);

struct UncertaintyCheck {
    double chi0 = 0;
    double chi1 = 0;
    double mutual = 0;
    bool holds = false;
};

/// chi(Lambda(E0)) + chi(Lambda(E1)) <= I(tau; Lambda) for the computational
/// and Fourier-conjugate ensembles.
UncertaintyCheck channel_uncertainty_check(const ExtensionChannel &channel, int d,
                                           bool hadamard = false, double tolerance = 1e-8);

struct TradeoffCheck {
    double epsilon = 0;
    /// I(A;E) with A purifying the signal system.
    double info = 0;
    /// chi of the ensemble Eve holds.
    double chi = 0;
    double info_bound = 0;
    double chi_bound = 0;
    bool holds = false;
};

/// Eve's isometry S -> S~ (x) E (row index s * dim_e + e) on the combined
/// ensemble {1/2d, U^r |i>}.
TradeoffCheck tradeoff_check(const Matrix &eavesdrop_isometry, int d, bool hadamard = false,
                             double tolerance = 1e-8);

}  // namespace spectrakit
