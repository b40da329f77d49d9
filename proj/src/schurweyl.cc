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

#include "spectrakit/schurweyl.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "spectrakit/errors.h"
#include "spectrakit/parallel.h"

namespace spectrakit {

namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;

int dense_dim(int d, int k, const DenseCaps &caps) {
    if (d < 1 || k < 0) {
        throw DomainError("need d >= 1 and k >= 0");
    }
    double size = std::pow(static_cast<double>(d), k);
    if (size > caps.max_dim) {
        throw ResourceError("d^k = " + std::to_string(static_cast<long long>(size)) +
                            " exceeds the dense cap " + std::to_string(caps.max_dim));
    }
    return static_cast<int>(size);
}

/// Images of every basis index under V(perm).
std::vector<int> permuted_indices(std::span<const int> perm, int d, int dim) {
    int k = static_cast<int>(perm.size());
    std::vector<int> weight(k, 1);
    for (int p = k - 2; p >= 0; --p) {
        weight[p] = weight[p + 1] * d;
    }
    std::vector<int> image(dim);
    for (int in = 0; in < dim; ++in) {
        int out = 0;
        int rest = in;
        for (int p = k - 1; p >= 0; --p) {
            out += (rest % d) * weight[perm[p]];
            rest /= d;
        }
        image[in] = out;
    }
    return image;
}

void check_permutation(std::span<const int> perm) {
    std::vector<char> seen(perm.size(), 0);
    for (int x : perm) {
        if (x < 0 || x >= static_cast<int>(perm.size()) || seen[x]++) {
            throw DomainError("not a permutation");
        }
    }
}

struct ClassData {
    std::vector<ConjugacyClass> classes;
    std::vector<std::int64_t> chi;
};

ClassData class_data(const Partition &lambda, const CharacterCaps &caps) {
    int k = lambda.size();
    if (k > caps.coefficient_max_k) {
        throw ResourceError("k = " + std::to_string(k) + " exceeds the character cap");
    }
    if (k <= caps.table_max_k) {
        const CharacterTable &table = shared_character_table(k, caps);
        auto row = table.row(table.index_of(lambda));
        return {table.classes(), std::vector<std::int64_t>(row.begin(), row.end())};
    }
    return {conjugacy_classes(k), character_row(lambda)};
}

/// |C| * prod_i Tr rho^{c_i} for every class of S_k.
std::vector<Real50> class_weights(const std::vector<ConjugacyClass> &classes,
                                  std::span<const double> eigenvalues, int k) {
    std::vector<Real50> power_trace(k + 1, 0);
    for (double x : eigenvalues) {
        Real50 p = x;
        Real50 acc = 1;
        for (int j = 1; j <= k; ++j) {
            acc *= p;
            power_trace[j] += acc;
        }
    }
    std::vector<Real50> weights;
    weights.reserve(classes.size());
    for (const auto &cls : classes) {
        Real50 w = Real50(cls.size);
        for (int c : cls.cycle_type.rows()) {
            w *= power_trace[c];
        }
        weights.push_back(w);
    }
    return weights;
}

double frame_probability(const Partition &lambda, std::span<const std::int64_t> chi,
                         const std::vector<Real50> &weights) {
    Real50 sum = 0;
    for (std::size_t c = 0; c < weights.size(); ++c) {
        if (chi[c] != 0) {
            sum += weights[c] * chi[c];
        }
    }
    sum *= Real50(dim_symmetric(lambda));
    sum /= Real50(factorial(lambda.size()));
    return static_cast<double>(sum);
}

}  // namespace

bool TensorOperator::is_projector(double tolerance) const {
    return (matrix * matrix - matrix).cwiseAbs().maxCoeff() <= tolerance &&
           (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

Partition cycle_type(std::span<const int> perm) {
    check_permutation(perm);
    std::vector<char> seen(perm.size(), 0);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        int len = 0;
        for (std::size_t x = start; !seen[x]; x = perm[x]) {
            seen[x] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

TensorOperator permutation_operator(std::span<const int> perm, int d, const DenseCaps &caps) {
    check_permutation(perm);
    int k = static_cast<int>(perm.size());
    int dim = dense_dim(d, k, caps);
    std::vector<int> image = permuted_indices(perm, d, dim);
    Matrix m = Matrix::Zero(dim, dim);
    for (int in = 0; in < dim; ++in) {
        m(image[in], in) = 1.0;
    }
    return TensorOperator{d, k, std::move(m)};
}

TensorOperator central_young_projector(const Partition &lambda, int d, int k,
                                       const DenseCaps &caps) {
    if (lambda.size() != k) {
        throw DomainError("frame " + lambda.str() + " is not a partition of " + std::to_string(k));
    }
    int dim = dense_dim(d, k, caps);
    Matrix m = Matrix::Zero(dim, dim);
    if (lambda.depth() > d) {
        return TensorOperator{d, k, std::move(m)};
    }
    double k_factorial = static_cast<double>(factorial(k));
    if (k_factorial * dim > caps.max_work) {
        throw ResourceError("k! * d^k exceeds the dense work cap");
    }
    const CharacterTable &table = shared_character_table(std::max(k, 1));
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        double chi = static_cast<double>(table.at(lambda, cycle_type(perm)));
        if (chi == 0) {
            continue;
        }
        std::vector<int> image = permuted_indices(perm, d, dim);
        for (int in = 0; in < dim; ++in) {
            m(image[in], in) += chi;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    m *= static_cast<double>(dim_symmetric(lambda)) / k_factorial;
    return TensorOperator{d, k, std::move(m)};
}

Matrix tensor_power(const Matrix &rho, int k, const DenseCaps &caps) {
    dense_dim(static_cast<int>(rho.rows()), k, caps);
    Matrix out = Matrix::Identity(1, 1);
    for (int i = 0; i < k; ++i) {
        out = linalg::kron(out, rho);
    }
    return out;
}

double spectrum_estimation_prob(const DensityMatrix &rho, const Partition &lambda, int k,
                                const CharacterCaps &caps) {
    if (lambda.size() != k) {
        throw DomainError("frame " + lambda.str() + " is not a partition of " + std::to_string(k));
    }
    if (lambda.depth() > rho.dim()) {
        return 0.0;
    }
    if (k == 0) {
        return 1.0;
    }
    ClassData data = class_data(lambda, caps);
    std::vector<double> ev = rho.spectrum();
    return frame_probability(lambda, data.chi, class_weights(data.classes, ev, k));
}

double dense_spectrum_estimation_prob(const DensityMatrix &rho, const Partition &lambda, int k,
                                      const DenseCaps &caps) {
    TensorOperator p = central_young_projector(lambda, rho.dim(), k, caps);
    return (p.matrix * tensor_power(rho.matrix(), k, caps)).trace().real();
}

SpectrumDistribution estimate_spectrum(const DensityMatrix &rho, int k, double eps,
                                       BallMetric metric, const CharacterCaps &caps) {
    if (k < 1) {
        throw DomainError("need k >= 1 copies");
    }
    if (k > caps.table_max_k) {
        throw ResourceError("k = " + std::to_string(k) + " exceeds the character table cap");
    }
    SpectrumDistribution out;
    out.k = k;
    out.eps = eps;
    out.metric = metric;
    out.spectrum = rho.spectrum();
    int d = rho.dim();
    const CharacterTable &table = shared_character_table(k, caps);
    std::vector<Real50> weights = class_weights(table.classes(), out.spectrum, k);
    std::vector<Partition> frames = enumerate_partitions(k, d);
    out.frames.resize(frames.size());
    parallel_for(frames.size(), [&](std::size_t i) {
        const Partition &lambda = frames[i];
        FrameProbability &fp = out.frames[i];
        fp.frame = lambda;
        fp.normalized = lambda.normalized(d);
        fp.prob = frame_probability(lambda, table.row(table.index_of(lambda)), weights);
    });
    for (const auto &fp : out.frames) {
        out.total += fp.prob;
        double l1 = 0;
        for (int i = 0; i < d; ++i) {
            l1 += std::abs(fp.normalized[i] - out.spectrum[i]);
        }
        double distance = metric == BallMetric::TotalVariation ? 0.5 * l1 : l1;
        if (distance < eps - 1e-12) {
            out.mass_within += fp.prob;
        }
    }
    return out;
}

double kl_divergence_nats(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw DomainError("distributions have different lengths");
    }
    double d = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) {
            continue;
        }
        if (q[i] <= 0) {
            return std::numeric_limits<double>::infinity();
        }
        d += p[i] * std::log(p[i] / q[i]);
    }
    return d;
}

double keyl_werner_bound(const Partition &lambda, std::span<const double> spectrum) {
    int d = static_cast<int>(spectrum.size());
    int k = lambda.size();
    if (lambda.depth() > d) {
        return 0.0;
    }
    std::vector<double> bar = lambda.normalized(d);
    double divergence = kl_divergence_nats(bar, spectrum);
    if (std::isinf(divergence)) {
        return 0.0;
    }
    return std::pow(k + 1.0, d * (d - 1) / 2.0) * std::exp(-k * divergence);
}

bool keyl_werner_holds(double prob, const Partition &lambda, std::span<const double> spectrum,
                       double tolerance) {
    std::vector<double> bar = lambda.normalized(static_cast<int>(spectrum.size()));
    if (lambda.depth() > static_cast<int>(spectrum.size()) ||
        std::isinf(kl_divergence_nats(bar, spectrum))) {
        return true;
    }
    return prob <= keyl_werner_bound(lambda, spectrum) + tolerance;
}

}  // namespace spectrakit
