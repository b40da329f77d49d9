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

#include <span>
#include <vector>

#include "spectrakit/characters.h"
#include "spectrakit/partition.h"
#include "spectrakit/qstate.h"

namespace spectrakit {

struct DenseCaps {
    /// Largest d^k for a dense operator on (C^d)^(x)k.
    int max_dim = 4096;
    /// Largest k! * d^k for operators that sum over every permutation.
    double max_work = 2.5e7;
};

/// An operator on (C^d)^(x)k.
struct TensorOperator {
    int d = 0;
    int k = 0;
    Matrix matrix;

    bool is_projector(double tolerance = 1e-10) const;
};

/// V(pi) for a permutation given as 0-based images, perm[i] = pi(i): the
/// tensor factor in position i moves to position pi(i). V(pi)V(sigma) =
/// V(pi o sigma).
TensorOperator permutation_operator(std::span<const int> perm, int d,
                                    const DenseCaps &caps = {});

/// Cycle type of a permutation given as 0-based images.
Partition cycle_type(std::span<const int> perm);

/// P_lambda = (f^lambda / k!) sum_pi chi_lambda(pi) V(pi). The zero operator
/// when lambda has more than d rows.
TensorOperator central_young_projector(const Partition &lambda, int d, int k,
                                       const DenseCaps &caps = {});

/// rho^(x)k as a dense matrix.
Matrix tensor_power(const Matrix &rho, int k, const DenseCaps &caps = {});

/// Tr P_lambda rho^(x)k by the cycle-trace identity
/// (f^lambda/k!) sum_classes |C| chi_lambda(C) prod_i Tr rho^{c_i}.
/// Zero when lambda has more rows than rho's dimension.
double spectrum_estimation_prob(const DensityMatrix &rho, const Partition &lambda, int k,
                                const CharacterCaps &caps = {});

/// Same quantity from a dense projector; a test oracle for small d^k.
double dense_spectrum_estimation_prob(const DensityMatrix &rho, const Partition &lambda, int k,
                                      const DenseCaps &caps = {});

enum class BallMetric {
    /// Half the l1 distance.
    TotalVariation,
    L1,
};

struct FrameProbability {
    Partition frame;
    /// lambda / k, padded to the state's dimension.
    std::vector<double> normalized;
    double prob = 0;
};

struct SpectrumDistribution {
    int k = 0;
    std::vector<double> spectrum;
    std::vector<FrameProbability> frames;
    double total = 0;
    double eps = 0;
    BallMetric metric = BallMetric::TotalVariation;
    /// Probability of frames whose normalized form is strictly closer than
    /// eps to the sorted spectrum.
    double mass_within = 0;
};

/// Full distribution over frames with at most d rows.
SpectrumDistribution estimate_spectrum(const DensityMatrix &rho, int k, double eps = 0.1,
                                       BallMetric metric = BallMetric::TotalVariation,
                                       const CharacterCaps &caps = {});

/// Kullback-Leibler divergence in nats; +infinity if p has mass where q has
/// none.
double kl_divergence_nats(std::span<const double> p, std::span<const double> q);

/// (k+1)^{d(d-1)/2} exp(-k D(lambda/k || spectrum)), spectrum sorted
/// descending with d entries.
double keyl_werner_bound(const Partition &lambda, std::span<const double> spectrum);

/// prob <= keyl_werner_bound + tolerance; true outright when the divergence
/// is infinite.
bool keyl_werner_holds(double prob, const Partition &lambda, std::span<const double> spectrum,
                       double tolerance = 1e-12);

}  // namespace spectrakit
