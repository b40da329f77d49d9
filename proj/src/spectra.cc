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

#include "spectrakit/spectra.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>

#include "spectrakit/characters.h"
#include "spectrakit/errors.h"
#include "spectrakit/optimize.h"
#include "spectrakit/parallel.h"

namespace spectrakit {

namespace {

void check_distribution(std::vector<double> &r, const char *name) {
    if (r.empty()) {
        throw DomainError(std::string(name) + " is empty");
    }
    double total = 0;
    for (double x : r) {
        if (x < -DensityMatrix::kTolerance || !std::isfinite(x)) {
            throw DomainError(std::string(name) + " has a negative or non-finite entry");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > DensityMatrix::kTolerance) {
        throw DomainError(std::string(name) + " does not sum to 1");
    }
    std::sort(r.begin(), r.end(), std::greater<>());
}

std::vector<double> descending_eigenvalues(const Matrix &m) {
    RealVector ev = linalg::hermitian_eigenvalues(m);
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

SpectralTriple SpectralTriple::make(std::vector<double> rA, std::vector<double> rB,
                                    std::vector<double> rAB) {
    check_distribution(rA, "rA");
    check_distribution(rB, "rB");
    check_distribution(rAB, "rAB");
    if (rAB.size() > rA.size() * rB.size()) {
        throw DomainError("rAB has more entries than dim A * dim B");
    }
    return SpectralTriple{std::move(rA), std::move(rB), std::move(rAB)};
}

SpectralTriple local_spectra(const DensityMatrix &rho) {
    if (rho.parts() != 2) {
        throw DomainError("local spectra need exactly two parts");
    }
    return SpectralTriple{partial_trace(rho, {0}).spectrum(), partial_trace(rho, {1}).spectrum(),
                          rho.spectrum()};
}

BravyiReport bravyi_check(double a, double b, std::span<const double> rAB) {
    if (rAB.size() > 4 || rAB.empty()) {
        throw DomainError("two-qubit joint spectrum needs at most 4 entries");
    }
    if (a < -kBravyiSlack || a > 1 + kBravyiSlack || b < -kBravyiSlack || b > 1 + kBravyiSlack) {
        throw DomainError("local eigenvalues must lie in [0, 1]");
    }
    BravyiReport report;
    report.a = std::min(a, 1.0 - a);
    report.b = std::min(b, 1.0 - b);
    std::vector<double> sorted(rAB.begin(), rAB.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::copy(sorted.begin(), sorted.end(), report.r.begin());
    const auto &r = report.r;
    double ra = report.a;
    double rb = report.b;
    report.slack[0] = ra - (r[2] + r[3]);
    report.slack[1] = rb - (r[2] + r[3]);
    report.slack[2] = ra + rb - (r[1] + r[2] + 2 * r[3]);
    report.slack[3] = std::min(r[0] - r[2], r[1] - r[3]) - std::abs(ra - rb);
    report.admissible = std::all_of(report.slack.begin(), report.slack.end(),
                                    [](double s) { return s >= -kBravyiSlack; });
    return report;
}

BravyiReport bravyi_check(const SpectralTriple &triple) {
    if (triple.rA.size() != 2 || triple.rB.size() != 2) {
        throw DomainError("local spectra must have two entries");
    }
    return bravyi_check(triple.rA[1], triple.rB[1], triple.rAB);
}

BravyiVertex parse_bravyi_vertex(const std::string &name) {
    if (name == "A" || name == "a") {
        return BravyiVertex::A;
    }
    if (name == "B" || name == "b") {
        return BravyiVertex::B;
    }
    if (name == "C" || name == "c") {
        return BravyiVertex::C;
    }
    if (name == "D" || name == "d") {
        return BravyiVertex::D;
    }
    throw DomainError("unknown vertex '" + name + "' (expected A, B, C or D)");
}

DensityMatrix bravyi_vertex_state(BravyiVertex vertex, std::span<const double> rAB) {
    std::vector<double> r(rAB.begin(), rAB.end());
    if (r.size() > 4) {
        throw DomainError("two-qubit joint spectrum needs at most 4 entries");
    }
    r.resize(4, 0.0);
    check_distribution(r, "rAB");
    if (vertex != BravyiVertex::A && r[3] > DensityMatrix::kTolerance) {
        throw DomainError("vertices B, C and D need r4 = 0");
    }
    // Basis order |00>, |01>, |10>, |11>.
    auto ket = [](std::initializer_list<double> amplitudes) {
        Vector v(4);
        int i = 0;
        for (double x : amplitudes) {
            v(i++) = x;
        }
        return v;
    };
    std::vector<Vector> states;
    switch (vertex) {
        case BravyiVertex::A: {
            double s = 1.0 / std::sqrt(2.0);
            states = {ket({s, 0, 0, s}), ket({s, 0, 0, -s}), ket({0, s, s, 0}), ket({0, s, -s, 0})};
            break;
        }
        case BravyiVertex::B: {
            double alpha2;
            double beta2;
            if (r[1] <= r[0] - r[2]) {
                beta2 = 1.0;
                alpha2 = (0.5 - r[1] - r[2]) / (r[0] - r[2]);
            } else {
                alpha2 = 0.0;
                beta2 = (0.5 - r[2]) / r[1];
            }
            double alpha = std::sqrt(std::clamp(alpha2, 0.0, 1.0));
            double alpha_c = std::sqrt(std::clamp(1.0 - alpha2, 0.0, 1.0));
            double beta = std::sqrt(std::clamp(beta2, 0.0, 1.0));
            double beta_c = std::sqrt(std::clamp(1.0 - beta2, 0.0, 1.0));
            states = {ket({alpha, 0, 0, alpha_c}), ket({0, beta, beta_c, 0}),
                      ket({alpha_c, 0, 0, -alpha}), ket({0, beta_c, -beta, 0})};
            break;
        }
        case BravyiVertex::C:
            if (r[1] <= r[0] - r[2]) {
                states = {ket({1, 0, 0, 0}), ket({0, 0, 1, 0}), ket({0, 0, 0, 1}),
                          ket({0, 1, 0, 0})};
            } else {
                states = {ket({0, 0, 1, 0}), ket({1, 0, 0, 0}), ket({0, 1, 0, 0}),
                          ket({0, 0, 0, 1})};
            }
            break;
        case BravyiVertex::D:
            states = {ket({1, 0, 0, 0}), ket({0, 0, 1, 0}), ket({0, 1, 0, 0}), ket({0, 0, 0, 1})};
            break;
    }
    Matrix m = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        m += r[i] * states[i] * states[i].adjoint();
    }
    return DensityMatrix({2, 2}, std::move(m));
}

std::vector<ScanCell> kron_scan(const Partition &lambda) {
    if (lambda.depth() > 4) {
        throw DomainError("scan frame must have at most 4 rows");
    }
    int k = lambda.size();
    std::vector<Partition> rows;
    for (int j = k / 2; j >= 0; --j) {
        rows.push_back(Partition{k - j, j});
    }
    std::vector<ScanCell> cells(rows.size() * rows.size());
    std::vector<double> r = lambda.normalized(4);
    if (k > 0) {
        shared_character_table(k);
    }
    parallel_for(cells.size(), [&](std::size_t i) {
        ScanCell &cell = cells[i];
        cell.mu = rows[i / rows.size()];
        cell.nu = rows[i % rows.size()];
        cell.g = kronecker(cell.mu, cell.nu, lambda);
        std::vector<double> a = cell.mu.normalized(2);
        std::vector<double> b = cell.nu.normalized(2);
        cell.admissible = bravyi_check(a[1], b[1], r).admissible;
    });
    return cells;
}

namespace {

struct HornProblem {
    Matrix a;
    RealVector nu;
    std::vector<double> target;
    double p;

    std::vector<double> achieved(const Matrix &v) const {
        Matrix b = v * nu.asDiagonal() * v.adjoint();
        return descending_eigenvalues(p * a + (1 - p) * b);
    }

    double residual(const Matrix &v) const {
        std::vector<double> ev = achieved(v);
        double sum = 0;
        for (std::size_t i = 0; i < ev.size(); ++i) {
            double diff = ev[i] - target[i];
            sum += diff * diff;
        }
        return std::sqrt(sum);
    }
};

HornResult horn_restart(const HornProblem &problem, Rng &rng, const HornOptions &options) {
    int d = static_cast<int>(problem.a.rows());
    PatternSearchOptions search;
    search.initial_step = options.initial_step;
    search.min_step = options.min_step;
    search.target = options.target;
    PatternSearchResult found = unitary_pattern_search(
        [&](const Matrix &v) { return problem.residual(v); }, linalg::haar_unitary(d, rng), search);
    HornResult result;
    result.residual = found.value;
    result.a = problem.a;
    result.b = found.w * problem.nu.asDiagonal() * found.w.adjoint();
    result.achieved = problem.achieved(found.w);
    return result;
}

std::vector<double> padded_sorted(std::span<const double> x, std::size_t d) {
    std::vector<double> out(x.begin(), x.end());
    out.resize(d, 0.0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

HornResult horn_oracle(std::span<const double> mu, std::span<const double> nu,
                       std::span<const double> lambda, double p, const HornOptions &options) {
    if (p < 0 || p > 1) {
        throw DomainError("weight p must lie in [0, 1]");
    }
    if (options.restarts < 1) {
        throw DomainError("need at least one restart");
    }
    std::size_t d = std::max({mu.size(), nu.size(), lambda.size()});
    if (d == 0) {
        throw DomainError("empty spectra");
    }
    HornProblem problem;
    std::vector<double> m = padded_sorted(mu, d);
    std::vector<double> n = padded_sorted(nu, d);
    problem.target = padded_sorted(lambda, d);
    problem.a = Matrix::Zero(d, d);
    problem.nu = RealVector(d);
    for (std::size_t i = 0; i < d; ++i) {
        problem.a(i, i) = m[i];
        problem.nu(i) = n[i];
    }
    problem.p = p;

    std::vector<HornResult> results(options.restarts);
    std::vector<char> ran(options.restarts, 0);
    std::atomic<int> first_hit{std::numeric_limits<int>::max()};
    parallel_for(results.size(), [&](std::size_t r) {
        if (static_cast<int>(r) > first_hit.load()) {
            return;
        }
        std::seed_seq seq{static_cast<std::uint64_t>(options.seed), static_cast<std::uint64_t>(r)};
        Rng rng(seq);
        results[r] = horn_restart(problem, rng, options);
        ran[r] = 1;
        if (results[r].residual <= options.target) {
            int current = first_hit.load();
            while (static_cast<int>(r) < current &&
                   !first_hit.compare_exchange_weak(current, static_cast<int>(r))) {
            }
        }
    });
    int hit = first_hit.load();
    std::size_t best = 0;
    if (hit != std::numeric_limits<int>::max()) {
        best = hit;
    } else {
        for (std::size_t r = 1; r < results.size(); ++r) {
            if (results[r].residual < results[best].residual) {
                best = r;
            }
        }
    }
    HornResult out = std::move(results[best]);
    out.restarts = static_cast<int>(best) + 1;
    return out;
}

std::vector<double> HornInstance::to_hermitian(std::span<const double> lambda_state) const {
    std::vector<double> out;
    for (double x : lambda_state) {
        out.push_back((trace_a + trace_b) * x - (shift_mu + shift_nu));
    }
    return out;
}

std::vector<double> HornInstance::to_state(std::span<const double> lambda_hermitian) const {
    std::vector<double> out;
    for (double x : lambda_hermitian) {
        out.push_back((x + shift_mu + shift_nu) / (trace_a + trace_b));
    }
    return out;
}

HornInstance horn_shift_rescale(std::span<const double> mu, std::span<const double> nu) {
    if (mu.empty() || nu.empty() || mu.size() != nu.size()) {
        throw DomainError("Hermitian spectra must be nonempty and of equal length");
    }
    for (double x : mu) {
        if (!std::isfinite(x)) {
            throw DomainError("spectra must be finite");
        }
    }
    for (double x : nu) {
        if (!std::isfinite(x)) {
            throw DomainError("spectra must be finite");
        }
    }
    HornInstance h;
    h.shift_mu = std::max(0.0, -*std::min_element(mu.begin(), mu.end()));
    h.shift_nu = std::max(0.0, -*std::min_element(nu.begin(), nu.end()));
    std::vector<double> a = padded_sorted(mu, mu.size());
    std::vector<double> b = padded_sorted(nu, nu.size());
    for (double &x : a) {
        x += h.shift_mu;
        h.trace_a += x;
    }
    for (double &x : b) {
        x += h.shift_nu;
        h.trace_b += x;
    }
    double trace_c = h.trace_a + h.trace_b;
    if (trace_c <= 0) {
        throw DomainError("shifted spectra have zero total trace");
    }
    auto normalize = [](std::vector<double> v, double trace) {
        for (double &x : v) {
            x = trace > 0 ? x / trace : 1.0 / static_cast<double>(v.size());
        }
        return v;
    };
    h.mu_state = normalize(a, h.trace_a);
    h.nu_state = normalize(b, h.trace_b);
    h.p = h.trace_a / trace_c;
    return h;
}

FrameTriple horn_shift_frames(std::span<const int> mu, std::span<const int> nu,
                              std::span<const int> lambda) {
    if (mu.empty() || mu.size() != nu.size() || mu.size() != lambda.size()) {
        throw DomainError("integer spectra must be nonempty and of equal length");
    }
    int r = std::max(0, -*std::min_element(mu.begin(), mu.end()));
    int s = std::max(0, -*std::min_element(nu.begin(), nu.end()));
    auto shifted = [](std::span<const int> x, int by) {
        std::vector<int> out(x.begin(), x.end());
        for (int &v : out) {
            v += by;
            if (v < 0) {
                throw DomainError("shifted spectrum is still negative");
            }
        }
        std::sort(out.begin(), out.end(), std::greater<>());
        return Partition(std::move(out));
    };
    return FrameTriple{shifted(mu, r), shifted(nu, s), shifted(lambda, r + s)};
}

}  // namespace spectrakit
