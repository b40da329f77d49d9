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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spectrakit/errors.h"
#include "spectrakit/linalg.h"
#include "spectrakit/qstate.h"

namespace spectrakit {
namespace {

constexpr double kLn2 = std::numbers::ln2;

DensityMatrix bell() {
    Vector psi = Vector::Zero(4);
    psi(0) = psi(3) = 1;
    return DensityMatrix::pure({2, 2}, psi);
}

DensityMatrix ket(int d, int i) {
    Vector psi = Vector::Zero(d);
    psi(i) = 1;
    return DensityMatrix::pure({d}, psi);
}

DensityMatrix mix(const DensityMatrix &a, const DensityMatrix &b, double t) {
    return DensityMatrix(a.dims(), (1 - t) * a.matrix() + t * b.matrix());
}

std::vector<double> spec(std::initializer_list<double> v) {
    return v;
}

TEST(DensityMatrix, Validation) {
    Matrix m = Matrix::Identity(2, 2);
    EXPECT_THROW(DensityMatrix({2}, m), DomainError);
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix({2}, m), DomainError);
    Matrix h = Matrix::Identity(2, 2) * 0.5;
    h(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix({2}, h), DomainError);
    EXPECT_THROW(DensityMatrix({3}, Matrix::Identity(2, 2) * 0.5), DomainError);
}

TEST(PartialTrace, Examples) {
    auto rho = random_density(2, 2, 1);
    auto sigma = random_density(3, 3, 2);
    auto prod = tensor(rho, sigma);
    EXPECT_LT((partial_trace(prod, {0}).matrix() - rho.matrix()).norm(), 1e-14);
    EXPECT_LT((partial_trace(prod, {1}).matrix() - sigma.matrix()).norm(), 1e-14);

    auto a = partial_trace(bell(), {0});
    EXPECT_LT((a.matrix() - 0.5 * Matrix::Identity(2, 2)).norm(), 1e-15);

    // r1|00> + r2|10> + r3|01>.
    auto d = DensityMatrix::diagonal({2, 2}, spec({0.5, 0.2, 0.3, 0.0}));
    auto da = partial_trace(d, {0}).matrix();
    auto db = partial_trace(d, {1}).matrix();
    EXPECT_NEAR(da(0, 0).real(), 0.5 + 0.2, 1e-15);
    EXPECT_NEAR(da(1, 1).real(), 0.3, 1e-15);
    EXPECT_NEAR(db(0, 0).real(), 0.5 + 0.3, 1e-15);
    EXPECT_NEAR(db(1, 1).real(), 0.2, 1e-15);
    EXPECT_THROW(partial_trace(d, {2}), DomainError);
}

TEST(PartialTrace, RegroupAndOrder) {
    Rng rng(3);
    auto rho = random_density({2, 3, 2}, 4, rng);
    auto ac = partial_trace(rho, {0, 2});
    EXPECT_EQ(ac.dims(), (std::vector<int>{2, 2}));
    auto b = partial_trace(rho, {1});
    // Complementary marginals of a pure state share their spectrum.
    auto psi = purify(rho);
    auto whole = DensityMatrix::pure({2, 3, 2, psi.dims.back()}, psi.amplitudes);
    EXPECT_NEAR(von_neumann_entropy(partial_trace(whole, {0, 2, 3})), von_neumann_entropy(b),
                1e-10);
    EXPECT_THROW(regroup(rho, {{2}, {0, 1}}), DomainError);
    auto merged = regroup(rho, {{0, 1}, {2}});
    EXPECT_EQ(merged.dims(), (std::vector<int>{6, 2}));
    EXPECT_LT((merged.matrix() - rho.matrix()).norm(), 1e-15);
}

TEST(Purify, Examples) {
    auto pure = random_density(3, 1, 5);
    auto p = purify(pure);
    EXPECT_EQ(p.dims, (std::vector<int>{3, 1}));
    auto back = partial_trace(DensityMatrix::pure(p.dims, p.amplitudes), {0});
    EXPECT_LT((back.matrix() - pure.matrix()).norm(), 1e-12);

    auto half = purify(DensityMatrix::maximally_mixed({2}));
    EXPECT_EQ(half.dims, (std::vector<int>{2, 2}));
    auto psi = DensityMatrix::pure(half.dims, half.amplitudes);
    EXPECT_LT((partial_trace(psi, {1}).matrix() - 0.5 * Matrix::Identity(2, 2)).norm(), 1e-12);
    EXPECT_NEAR(von_neumann_entropy(partial_trace(psi, {0})), 1.0, 1e-12);

    auto rank3 = random_density(3, 3, 6);
    auto q = purify(rank3);
    EXPECT_EQ(q.dims, (std::vector<int>{3, 3}));
    auto round = partial_trace(DensityMatrix::pure(q.dims, q.amplitudes), {0});
    EXPECT_LT((round.matrix() - rank3.matrix()).norm(), 1e-10);
}

TEST(Entropy, Examples) {
    EXPECT_NEAR(von_neumann_entropy(random_density(4, 1, 7)), 0.0, 1e-12);
    for (int d = 1; d <= 6; ++d) {
        EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed({d})), std::log2(d), 1e-12);
    }
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::diagonal({2}, spec({0.75, 0.25}))), 0.811278,
                1e-6);
    EXPECT_NEAR(binary_entropy(0.25), 0.8112781244591328, 1e-15);
    EXPECT_NEAR(fannes_mu(0.5), 1 / std::numbers::e, 1e-15);
    EXPECT_NEAR(fannes_mu(0.01), -0.01 * std::log2(0.01), 1e-15);
    EXPECT_NEAR(fannes_mu(0.05), -0.05 * std::log2(0.05), 1e-15);
}

TEST(ConditionalMutualInformation, Examples) {
    Rng rng(8);
    auto ab = random_density({2, 2}, 3, rng);
    auto e = random_density({3}, 2, rng);
    EXPECT_NEAR(conditional_mutual_information(tensor(ab, e)), mutual_information(ab), 1e-12);
    EXPECT_NEAR(conditional_mutual_information(tensor(bell(), ket(2, 0))), 2.0, 1e-12);

    // sum_i p_i rho_i^A (x) rho_i^B (x) |i><i|.
    std::vector<double> p{0.2, 0.5, 0.3};
    Matrix flagged = Matrix::Zero(2 * 2 * 3, 2 * 2 * 3);
    for (int i = 0; i < 3; ++i) {
        auto a = random_density({2}, 2, rng);
        auto b = random_density({2}, 2, rng);
        flagged += p[i] * tensor(tensor(a, b), ket(3, i)).matrix();
    }
    DensityMatrix sep({2, 2, 3}, flagged);
    EXPECT_NEAR(conditional_mutual_information(sep), 0.0, 1e-9);
    EXPECT_THROW(conditional_mutual_information(ab), DomainError);
}

TEST(Distances, Examples) {
    auto rho = random_density(3, 3, 9);
    EXPECT_NEAR(trace_distance(rho, rho), 0.0, 1e-12);
    EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-10);
    EXPECT_NEAR(trace_distance(ket(2, 0), ket(2, 1)), 1.0, 1e-15);
    EXPECT_NEAR(fidelity(ket(2, 0), ket(2, 1)), 0.0, 1e-15);
    auto zero = DensityMatrix::diagonal({2}, spec({1, 0}));
    auto half = DensityMatrix::maximally_mixed({2});
    EXPECT_NEAR(trace_distance(zero, half), 0.5, 1e-15);
    EXPECT_NEAR(fidelity(zero, half), 0.5, 1e-15);
    EXPECT_THROW(trace_distance(zero, rho), DomainError);
}

TEST(RelativeEntropy, Examples) {
    auto rho = random_density(3, 3, 10);
    EXPECT_NEAR(relative_entropy(rho, rho), 0.0, 1e-10);
    auto zero = DensityMatrix::diagonal({2}, spec({1, 0}));
    auto half = DensityMatrix::maximally_mixed({2});
    EXPECT_NEAR(relative_entropy(zero, half), 1.0, 1e-12);
    EXPECT_TRUE(std::isinf(relative_entropy(half, zero)));
}

TEST(PartialTranspose, BellSpectrum) {
    Matrix t = partial_transpose(bell(), 1);
    auto ev = linalg::hermitian_eigenvalues(t);
    std::vector<double> sorted(ev.data(), ev.data() + ev.size());
    std::sort(sorted.begin(), sorted.end());
    EXPECT_NEAR(sorted[0], -0.5, 1e-14);
    for (int i = 1; i < 4; ++i) {
        EXPECT_NEAR(sorted[i], 0.5, 1e-14);
    }
}

TEST(Holevo, Examples) {
    Ensemble one({1.0}, {random_density(2, 2, 11)});
    EXPECT_NEAR(holevo_chi(one), 0.0, 1e-12);
    for (int d = 2; d <= 5; ++d) {
        std::vector<double> p(d, 1.0 / d);
        std::vector<DensityMatrix> states;
        for (int i = 0; i < d; ++i) {
            states.push_back(ket(d, i));
        }
        EXPECT_NEAR(holevo_chi(Ensemble(p, states)), std::log2(d), 1e-12);
    }
    Vector plus(2);
    plus << 1, 1;
    Ensemble zp({0.5, 0.5}, {ket(2, 0), DensityMatrix::pure({2}, plus)});
    double c2 = std::pow(std::cos(std::numbers::pi / 8), 2);
    // Both members are pure, so chi is the entropy of the average.
    EXPECT_NEAR(holevo_chi(zp), binary_entropy(c2), 1e-12);
    EXPECT_NEAR(holevo_chi(zp), 0.6009, 1e-4);
}

TEST(RandomStates, SeededAndValid) {
    EXPECT_EQ(random_density(3, 2, 42).matrix(), random_density(3, 2, 42).matrix());
    EXPECT_NE(random_density(3, 2, 42).matrix(), random_density(3, 2, 43).matrix());
    EXPECT_EQ(random_density(3, 2, 42).rank(), 2);
    Matrix u = random_unitary(4, 1);
    EXPECT_LT((u.adjoint() * u - Matrix::Identity(4, 4)).norm(), 1e-12);
    auto psi = random_pure({2, 3}, 3);
    EXPECT_NEAR(psi.amplitudes.norm(), 1.0, 1e-12);
}

TEST(EntropyProperties, StrongSubadditivity) {
    Rng rng(100);
    for (int s = 0; s < 500; ++s) {
        std::vector<int> dims{2 + s % 2, 2, 2 + (s / 2) % 2};
        std::uniform_int_distribution<int> rank(1, dims[0] * dims[1] * dims[2]);
        auto rho = random_density(dims, rank(rng), rng);
        EXPECT_GE(conditional_mutual_information(rho), -1e-8);
    }
}

TEST(EntropyProperties, SubadditivityAndTriangle) {
    Rng rng(101);
    for (int s = 0; s < 200; ++s) {
        std::uniform_int_distribution<int> rank(1, 6);
        auto rho = random_density({2, 3}, rank(rng), rng);
        double sab = von_neumann_entropy(rho);
        double sa = von_neumann_entropy(partial_trace(rho, {0}));
        double sb = von_neumann_entropy(partial_trace(rho, {1}));
        EXPECT_LE(sab, sa + sb + 1e-10);
        EXPECT_GE(sab, std::abs(sa - sb) - 1e-10);
    }
}

TEST(EntropyProperties, Pinsker) {
    Rng rng(102);
    for (int s = 0; s < 500; ++s) {
        int d = 2 + s % 3;
        auto rho = random_density({d}, d, rng);
        auto sigma = random_density({d}, d, rng);
        double delta = trace_distance(rho, sigma);
        EXPECT_LE(delta * delta, kLn2 / 2 * relative_entropy(rho, sigma) + 1e-12);
    }
}

TEST(EntropyProperties, Fannes) {
    Rng rng(103);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int s = 0; s < 500; ++s) {
        int d = 2 + s % 4;
        std::uniform_int_distribution<int> rank(1, d);
        auto rho = random_density({d}, rank(rng), rng);
        auto tau = random_density({d}, rank(rng), rng);
        auto sigma = s % 2 ? tau : mix(rho, tau, std::pow(unit(rng), 3));
        double eps = trace_distance(rho, sigma);
        double gap = std::abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma));
        EXPECT_LE(gap, 2 * eps * std::log2(d) + fannes_mu(eps) + 1e-10) << "eps=" << eps;
    }
}

TEST(EntropyProperties, ConditionalFannes) {
    Rng rng(104);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int s = 0; s < 500; ++s) {
        std::vector<int> dims{2 + s % 2, 2 + (s / 2) % 3};
        int n = dims[0] * dims[1];
        std::uniform_int_distribution<int> rank(1, n);
        auto rho = random_density(dims, rank(rng), rng);
        auto tau = random_density(dims, rank(rng), rng);
        auto sigma = mix(rho, tau, 0.5 * unit(rng));
        // Full trace norm, kept at most 1.
        double eps = 2 * trace_distance(rho, sigma);
        ASSERT_LE(eps, 1.0 + 1e-12);
        double gap = std::abs(conditional_entropy(rho) - conditional_entropy(sigma));
        EXPECT_LE(gap, 4 * eps * std::log2(dims[0]) + 2 * binary_entropy(std::min(eps, 1.0)) + 1e-10);
    }
}

TEST(EntropyProperties, MonotonicityUnderPartialTrace) {
    Rng rng(105);
    for (int s = 0; s < 200; ++s) {
        auto rho = random_density({2, 3}, 6, rng);
        auto sigma = random_density({2, 3}, 6, rng);
        for (int keep = 0; keep < 2; ++keep) {
            auto r = partial_trace(rho, {keep});
            auto q = partial_trace(sigma, {keep});
            EXPECT_LE(trace_distance(r, q), trace_distance(rho, sigma) + 1e-12);
            EXPECT_LE(relative_entropy(r, q), relative_entropy(rho, sigma) + 1e-10);
        }
    }
}

TEST(EntropyProperties, HolevoBoundsMeasuredInformation) {
    Rng rng(106);
    for (int s = 0; s < 200; ++s) {
        int d = 2 + s % 3;
        int n = 2 + s % 4;
        std::vector<double> p(n);
        std::vector<DensityMatrix> states;
        std::uniform_real_distribution<double> unit(0.05, 1);
        double total = 0;
        for (int i = 0; i < n; ++i) {
            p[i] = unit(rng);
            total += p[i];
            std::uniform_int_distribution<int> rank(1, d);
            states.push_back(random_density({d}, rank(rng), rng));
        }
        for (double &x : p) {
            x /= total;
        }
        Ensemble ens(p, states);
        Matrix basis = linalg::haar_unitary(d, rng);
        // Joint distribution of (X, Y) for a projective measurement in `basis`.
        std::vector<double> py(d, 0.0);
        std::vector<std::vector<double>> pxy(n, std::vector<double>(d));
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < d; ++y) {
                Vector b = basis.col(y);
                double q = std::max(0.0, (b.adjoint() * states[x].matrix() * b)(0, 0).real());
                pxy[x][y] = p[x] * q;
                py[y] += pxy[x][y];
            }
        }
        double info = 0;
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < d; ++y) {
                if (pxy[x][y] > 0) {
                    info += pxy[x][y] * std::log2(pxy[x][y] / (p[x] * py[y]));
                }
            }
        }
        EXPECT_LE(info, holevo_chi(ens) + 1e-8);
    }
}

}  // namespace
}  // namespace spectrakit
