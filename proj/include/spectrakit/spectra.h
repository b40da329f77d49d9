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

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spectrakit/bigint.h"
#include "spectrakit/partition.h"
#include "spectrakit/qstate.h"

namespace spectrakit {

/// Spectra of rho^A, rho^B and rho^AB, each sorted descending.
struct SpectralTriple {
    std::vector<double> rA;
    std::vector<double> rB;
    std::vector<double> rAB;

    /// Sorts each vector and validates sums (1 +- 1e-10), signs and
    /// len(rAB) <= len(rA) * len(rB).
    static SpectralTriple make(std::vector<double> rA, std::vector<double> rB,
                               std::vector<double> rAB);
};

/// Spectral triple of a two-part state.
SpectralTriple local_spectra(const DensityMatrix &rho);

struct BravyiReport {
    /// Smaller local eigenvalues.
    double a = 0;
    double b = 0;
    /// Joint spectrum padded to four entries.
    std::array<double, 4> r{};
    /// LHS - RHS of a >= r3+r4, b >= r3+r4, a+b >= r2+r3+2r4 and
    /// min(r1-r3, r2-r4) - |a-b| >= 0.
    std::array<double, 4> slack{};
    bool admissible = false;
};

constexpr double kBravyiSlack = 1e-9;

/// Two-qubit marginal inequalities; boundary points are admissible.
BravyiReport bravyi_check(const SpectralTriple &triple);
/// Same with a, b given directly as local eigenvalues (either one of each pair).
BravyiReport bravyi_check(double a, double b, std::span<const double> rAB);

enum class BravyiVertex { A, B, C, D };

BravyiVertex parse_bravyi_vertex(const std::string &name);

/// Two-qubit state with joint spectrum rAB whose local spectra sit on the
/// named vertex of the admissible region:
///   A: a = b = 1/2
///   B: a = 1/2, a - b = min(r2, r1 - r3)
///   C: a - b = min(r2, r1 - r3), b = r3
///   D: b = r3, a + b = r2 + r3
/// B, C and D need r4 = 0.
DensityMatrix bravyi_vertex_state(BravyiVertex vertex, std::span<const double> rAB);

struct ScanCell {
    Partition mu;
    Partition nu;
    BigInt g;
    bool admissible = false;
};

/// Every pair of partitions mu, nu of |lambda| with at most two rows: the
/// Kronecker coefficient and the two-qubit verdict on the normalized triple.
/// Ordered by (mu1 - mu2, nu1 - nu2) ascending.
std::vector<ScanCell> kron_scan(const Partition &lambda);

struct HornResult {
    double residual = 0;
    /// Witnesses A = U diag(mu) U^dagger and B = V diag(nu) V^dagger.
    Matrix a;
    Matrix b;
    std::vector<double> achieved;
    int restarts = 0;
};

struct HornOptions {
    int restarts = 64;
    std::uint64_t seed = 1;
    double initial_step = 0.5;
    double min_step = 1e-9;
    double target = 1e-12;
};

/// Searches unitary orbits for ||sort Spec(pA + (1-p)B) - lambda||_2 -> 0.
HornResult horn_oracle(std::span<const double> mu, std::span<const double> nu,
                       std::span<const double> lambda, double p, const HornOptions &options = {});

/// Hermitian Horn instance mapped to normalized quantum states.
struct HornInstance {
    double shift_mu = 0;
    double shift_nu = 0;
    double trace_a = 0;
    double trace_b = 0;
    /// Spectra of A'' = A'/Tr A' and B'' = B'/Tr B'.
    std::vector<double> mu_state;
    std::vector<double> nu_state;
    double p = 0;

    /// Hermitian spectrum of A + B from the spectrum of pA'' + (1-p)B''.
    std::vector<double> to_hermitian(std::span<const double> lambda_state) const;
    /// Spectrum of pA'' + (1-p)B'' from a Hermitian spectrum of A + B.
    std::vector<double> to_state(std::span<const double> lambda_hermitian) const;
};

/// Shifts negative spectra up to zero (R = max(0, -min mu), likewise S),
/// normalizes, and returns p = Tr A' / Tr C'. Domain error if Tr C' = 0.
HornInstance horn_shift_rescale(std::span<const double> mu, std::span<const double> nu);

/// (mu + R tau, nu + S tau, lambda + (R+S) tau) for integer spectra of length
/// d, with tau = (1,...,1) and R, S the smallest shifts making mu, nu
/// nonnegative; lambda must then be nonnegative as well.
FrameTriple horn_shift_frames(std::span<const int> mu, std::span<const int> nu,
                              std::span<const int> lambda);

}  // namespace spectrakit
