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

#include "spectrakit/entanglement.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "spectrakit/errors.h"
#include "spectrakit/optimize.h"
#include "spectrakit/parallel.h"

namespace spectrakit {

namespace {

void require_two_qubits(const DensityMatrix &rho) {
    if (rho.dims() != std::vector<int>{2, 2}) {
        throw DomainError("expected a two-qubit state with dims (2,2)");
    }
}

void require_bipartite(const DensityMatrix &rho) {
    if (rho.parts() != 2) {
        throw DomainError("expected a state with exactly two parts");
    }
}

double entropy_from_concurrence(double c) {
    c = std::clamp(c, 0.0, 1.0);
    return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

/// FNV-1a over text.
struct Digest {
    std::uint64_t h = 1469598103934665603ULL;

    void add(const std::string &text) {
        for (unsigned char c : text) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    }

    void add(double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g;", x);
        add(std::string(buf));
    }

    void add(const Matrix &m) {
        add(std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":");
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                add(m(i, j).real());
                add(m(i, j).imag());
            }
        }
    }

    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
};

/// p S(A) of an unnormalized member stored contiguously.
double member_contribution(const Complex *psi, int da, int db) {
    if (da == 2 && db == 2) {
        double p = std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]) + std::norm(psi[3]);
        if (p <= 1e-15) {
            return 0.0;
        }
        double c = 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]) / p;
        return p * entropy_from_concurrence(c);
    }
    Eigen::Map<const Vector> v(psi, static_cast<Eigen::Index>(da) * db);
    double p = v.squaredNorm();
    return p > 1e-15 ? p * entanglement_entropy(v, da, db) : 0.0;
}

/// Jacobi-style sweeps over decompositions: for each plane (i, j) of the
/// mixing isometry, minimize along the real and the imaginary Givens angle.
/// Such a move only changes members i and j, so each trial costs two member
/// entropies. Returns the value and the final members (columns).
std::pair<double, Matrix> eof_search(Matrix members, int da, int db, double tolerance,
                                     int max_sweeps) {
    int n = static_cast<int>(members.cols());
    int len = static_cast<int>(members.rows());
    std::vector<double> contribution(n);
    double total = 0;
    for (int i = 0; i < n; ++i) {
        contribution[i] = member_contribution(members.col(i).data(), da, db);
        total += contribution[i];
    }
    std::vector<Complex> new_i(len);
    std::vector<Complex> new_j(len);
    auto rotate = [&](int i, int j, bool imaginary, double t) {
        double c = std::cos(t);
        double s = std::sin(t);
        Complex to_i = imaginary ? Complex(0, s) : Complex(-s, 0);
        Complex to_j = imaginary ? Complex(0, s) : Complex(s, 0);
        const Complex *a = members.col(i).data();
        const Complex *b = members.col(j).data();
        for (int k = 0; k < len; ++k) {
            new_i[k] = c * a[k] + to_i * b[k];
            new_j[k] = to_j * a[k] + c * b[k];
        }
        return member_contribution(new_i.data(), da, db) +
               member_contribution(new_j.data(), da, db);
    };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double before = total;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (bool imaginary : {false, true}) {
                    double current = contribution[i] + contribution[j];
                    auto [t, value] = boost::math::tools::brent_find_minima(
                        [&](double t) { return rotate(i, j, imaginary, t); },
                        -std::numbers::pi / 2, std::numbers::pi / 2, 16);
                    if (value < current) {
                        rotate(i, j, imaginary, t);
                        std::copy(new_i.begin(), new_i.end(), members.col(i).data());
                        std::copy(new_j.begin(), new_j.end(), members.col(j).data());
                        contribution[i] = member_contribution(new_i.data(), da, db);
                        contribution[j] = member_contribution(new_j.data(), da, db);
                        total += contribution[i] + contribution[j] - current;
                    }
                }
            }
        }
        if (before - total < tolerance) {
            break;
        }
    }
    total = 0;
    for (int i = 0; i < n; ++i) {
        total += member_contribution(members.col(i).data(), da, db);
    }
    return {total, std::move(members)};
}

}  // namespace

ExtensionChannel::ExtensionChannel(Matrix isometry, int output_dim)
    : isometry_(std::move(isometry)), output_dim_(output_dim) {
    if (output_dim_ < 1 || isometry_.cols() < 1 || isometry_.rows() % output_dim_ != 0) {
        throw DomainError("isometry rows must be a multiple of the output dimension");
    }
    Matrix gram = isometry_.adjoint() * isometry_;
    if ((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > kTolerance) {
        throw DomainError("channel matrix is not an isometry");
    }
}

ExtensionChannel ExtensionChannel::trivial(int input_dim, int output_dim, int environment_dim) {
    if (environment_dim < input_dim) {
        throw DomainError("trivial channel needs environment_dim >= input_dim");
    }
    Matrix v = Matrix::Zero(static_cast<Eigen::Index>(output_dim) * environment_dim, input_dim);
    for (int c = 0; c < input_dim; ++c) {
        v(c, c) = 1.0;
    }
    return ExtensionChannel(std::move(v), output_dim);
}

ExtensionChannel ExtensionChannel::dephasing(int input_dim, int output_dim) {
    int environment_dim = input_dim;
    Matrix v = Matrix::Zero(static_cast<Eigen::Index>(output_dim) * environment_dim, input_dim);
    for (int c = 0; c < input_dim; ++c) {
        int e = std::min(c, output_dim - 1);
        v(static_cast<Eigen::Index>(e) * environment_dim + c, c) = 1.0;
    }
    return ExtensionChannel(std::move(v), output_dim);
}

ExtensionChannel ExtensionChannel::identity(int d) {
    return ExtensionChannel(Matrix::Identity(d, d), d);
}

ExtensionChannel ExtensionChannel::random(int input_dim, int output_dim, int environment_dim,
                                          Rng &rng) {
    int rows = output_dim * environment_dim;
    if (rows < input_dim) {
        throw DomainError("output_dim * environment_dim must be at least input_dim");
    }
    return ExtensionChannel(linalg::haar_isometry(rows, input_dim, rng), output_dim);
}

Matrix ExtensionChannel::apply(const Matrix &x) const {
    if (x.rows() != input_dim() || x.cols() != input_dim()) {
        throw DomainError("operator does not match the channel input");
    }
    Matrix full = isometry_ * x * isometry_.adjoint();
    std::vector<int> dims{output_dim_, environment_dim()};
    std::vector<int> keep{0};
    return linalg::partial_trace(full, dims, keep);
}

DensityMatrix extend(const PureState &state, const ExtensionChannel &channel) {
    if (state.dims.empty() || state.dims.back() != channel.input_dim()) {
        throw DomainError("purifying factor does not match the channel input");
    }
    int dc = channel.input_dim();
    int de = channel.output_dim();
    int df = channel.environment_dim();
    Eigen::Index dx = state.amplitudes.size() / dc;
    const Matrix &v = channel.isometry();
    // y(x*de + e, f) = sum_c V(e*df + f, c) psi(x*dc + c)
    Matrix y = Matrix::Zero(dx * de, df);
    for (Eigen::Index x = 0; x < dx; ++x) {
        for (int c = 0; c < dc; ++c) {
            Complex amp = state.amplitudes(x * dc + c);
            if (amp == Complex(0)) {
                continue;
            }
            for (int e = 0; e < de; ++e) {
                for (int f = 0; f < df; ++f) {
                    y(x * de + e, f) += v(static_cast<Eigen::Index>(e) * df + f, c) * amp;
                }
            }
        }
    }
    std::vector<int> dims(state.dims.begin(), state.dims.end() - 1);
    dims.push_back(de);
    return DensityMatrix::unchecked(std::move(dims), y * y.adjoint());
}

const char *to_string(MeasureKind kind) {
    return kind == MeasureKind::Exact ? "exact" : "upper-bound";
}

std::string MeasureReport::witness_digest() const {
    Digest digest;
    if (ensemble) {
        digest.add("ensemble");
        for (std::size_t i = 0; i < ensemble->states.size(); ++i) {
            digest.add(ensemble->probabilities[i]);
            digest.add(ensemble->states[i].matrix());
        }
    }
    if (extension) {
        digest.add("extension");
        digest.add(std::to_string(extension->output_dim()));
        digest.add(extension->isometry());
    }
    if (purification) {
        digest.add("purification");
        digest.add(Matrix(purification->amplitudes));
    }
    return digest.hex();
}

double concurrence(const DensityMatrix &rho) {
    require_two_qubits(rho);
    Matrix yy = Matrix::Zero(4, 4);
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;
    Matrix flipped = yy * rho.matrix().conjugate() * yy;
    linalg::HermitianEigen eig = linalg::hermitian_eigen(rho.matrix());
    Matrix root = eig.vectors * eig.values.cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                  eig.vectors.adjoint();
    RealVector ev = linalg::hermitian_eigenvalues(root * flipped * root);
    std::vector<double> l;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        l.push_back(std::sqrt(std::max(0.0, ev(i))));
    }
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double eof_wootters(const DensityMatrix &rho) {
    return entropy_from_concurrence(concurrence(rho));
}

double entanglement_entropy(const Vector &psi, int dim_a, int dim_b) {
    if (psi.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
        throw DomainError("state length does not match dim_a * dim_b");
    }
    double norm2 = psi.squaredNorm();
    if (norm2 <= 0) {
        throw DomainError("zero state vector");
    }
    if (dim_a == 2 && dim_b == 2) {
        double c = 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2)) / norm2;
        return entropy_from_concurrence(c);
    }
    Matrix m(dim_a, dim_b);
    for (int a = 0; a < dim_a; ++a) {
        for (int b = 0; b < dim_b; ++b) {
            m(a, b) = psi(static_cast<Eigen::Index>(a) * dim_b + b);
        }
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    std::vector<double> p;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        double s = svd.singularValues()(i);
        p.push_back(s * s / norm2);
    }
    return shannon_entropy(p);
}

double eof_ensemble_value(const Ensemble &ensemble) {
    double value = 0;
    for (std::size_t i = 0; i < ensemble.states.size(); ++i) {
        const DensityMatrix &s = ensemble.states[i];
        require_bipartite(s);
        DensityMatrix a = partial_trace(s, {0});
        value += ensemble.probabilities[i] * von_neumann_entropy(a);
    }
    return value;
}

MeasureReport eof_bruteforce(const DensityMatrix &rho, const EofOptions &options) {
    require_bipartite(rho);
    int da = rho.dims()[0];
    int db = rho.dims()[1];
    linalg::HermitianEigen eig = linalg::hermitian_eigen(rho.matrix());
    std::vector<int> support;
    for (Eigen::Index j = eig.values.size() - 1; j >= 0; --j) {
        if (eig.values(j) > 1e-12) {
            support.push_back(static_cast<int>(j));
        }
    }
    int r = static_cast<int>(support.size());
    int n = options.ensemble_size;
    if (n < r) {
        throw DomainError("ensemble size " + std::to_string(n) + " is below the rank " +
                          std::to_string(r));
    }
    if (options.restarts < 1) {
        throw DomainError("need at least one restart");
    }
    // Columns sqrt(l_j) e_j; member i of the ensemble is basis * W.row(i)^T.
    Matrix basis(rho.dim(), r);
    for (int j = 0; j < r; ++j) {
        basis.col(j) = std::sqrt(eig.values(support[j])) * eig.vectors.col(support[j]);
    }
    std::vector<std::pair<double, Matrix>> results(options.restarts);
    parallel_for(results.size(), [&](std::size_t restart) {
        Matrix w0;
        if (restart == 0) {
            w0 = Matrix::Identity(n, r);
        } else {
            std::seed_seq seq{static_cast<std::uint64_t>(options.seed),
                              static_cast<std::uint64_t>(restart)};
            Rng rng(seq);
            w0 = linalg::haar_isometry(n, r, rng);
        }
        results[restart] =
            eof_search(basis * w0.transpose(), da, db, options.tolerance, options.max_sweeps);
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].first < results[best].first) {
            best = i;
        }
    }
    const Matrix &members = results[best].second;
    std::vector<double> probabilities;
    std::vector<DensityMatrix> states;
    double total = 0;
    for (int i = 0; i < n; ++i) {
        Vector psi = members.col(i);
        double p = psi.squaredNorm();
        if (p > 1e-15) {
            probabilities.push_back(p);
            states.push_back(DensityMatrix::pure(rho.dims(), psi));
            total += p;
        }
    }
    for (double &p : probabilities) {
        p /= total;
    }
    MeasureReport report;
    report.ensemble = Ensemble(std::move(probabilities), std::move(states));
    report.value = eof_ensemble_value(*report.ensemble);
    report.kind = r == 1 ? MeasureKind::Exact : MeasureKind::UpperBound;
    return report;
}

double log_negativity(const DensityMatrix &rho) {
    require_bipartite(rho);
    return std::max(0.0, std::log2(linalg::trace_norm(partial_transpose(rho, 1))));
}

double squashed_extension_value(const PureState &purification, const ExtensionChannel &channel) {
    if (purification.dims.size() != 3) {
        throw DomainError("expected a purification with parts A, B and C");
    }
    return 0.5 * conditional_mutual_information(extend(purification, channel));
}

MeasureReport squashed_upper_bound(const DensityMatrix &rho, const SquashedOptions &options) {
    require_bipartite(rho);
    if (options.env_dim < 0 || options.environment_dim < 0 || options.restarts < 0) {
        throw DomainError("dimensions and restarts must be nonnegative");
    }
    PureState psi = purify(rho);
    int dc = psi.dims.back();
    int de = options.env_dim > 0 ? options.env_dim : dc;
    int df = options.environment_dim > 0 ? options.environment_dim : std::max(de, dc);
    if (df < dc) {
        throw DomainError("environment_dim must be at least the rank of rho");
    }
    auto value_of = [&](const ExtensionChannel &channel) {
        return squashed_extension_value(psi, channel);
    };

    std::vector<ExtensionChannel> seeds;
    auto pad_environment = [&](const ExtensionChannel &channel) {
        // Same channel with the environment enlarged to df.
        int have = channel.environment_dim();
        Matrix v = Matrix::Zero(static_cast<Eigen::Index>(de) * df, dc);
        for (int e = 0; e < de; ++e) {
            for (int f = 0; f < have; ++f) {
                v.row(static_cast<Eigen::Index>(e) * df + f) =
                    channel.isometry().row(static_cast<Eigen::Index>(e) * have + f);
            }
        }
        return ExtensionChannel(std::move(v), de);
    };
    // Trivial extension: E is |0>, everything goes to F.
    seeds.push_back(ExtensionChannel::trivial(dc, de, df));
    seeds.push_back(pad_environment(ExtensionChannel::dephasing(dc, de)));

    MeasureReport report;
    report.purification = psi;
    double best_value = std::numeric_limits<double>::infinity();
    for (const auto &seed : seeds) {
        double v = value_of(seed);
        if (v < best_value) {
            best_value = v;
            report.extension = seed;
        }
    }
    if (dc > 1 && options.restarts > 0) {
        int rows = de * df;
        std::vector<std::pair<double, Matrix>> results(options.restarts);
        const Matrix best_seed = report.extension->isometry();
        parallel_for(results.size(), [&](std::size_t restart) {
            Matrix v0;
            if (restart == 0) {
                v0 = best_seed;
            } else {
                std::seed_seq seq{static_cast<std::uint64_t>(options.seed),
                                  static_cast<std::uint64_t>(restart)};
                Rng rng(seq);
                v0 = linalg::haar_isometry(rows, dc, rng);
            }
            auto to_isometry = [&](const std::vector<double> &x) {
                Matrix m = v0;
                std::size_t k = 0;
                for (Eigen::Index j = 0; j < m.cols(); ++j) {
                    for (Eigen::Index i = 0; i < m.rows(); ++i, k += 2) {
                        m(i, j) += Complex(x[k], x[k + 1]);
                    }
                }
                return linalg::polar_isometry(m);
            };
            auto f = [&](const std::vector<double> &x) {
                return value_of(ExtensionChannel(to_isometry(x), de));
            };
            NelderMeadOptions nm;
            nm.tolerance = options.tolerance;
            nm.max_evaluations = options.max_evaluations;
            nm.initial_step = restart == 0 ? 0.05 : 0.2;
            NelderMeadResult found =
                nelder_mead(f, std::vector<double>(2 * static_cast<std::size_t>(rows) * dc, 0.0), nm);
            results[restart] = {found.value, to_isometry(found.x)};
        });
        for (auto &[value, v] : results) {
            if (value < best_value) {
                best_value = value;
                report.extension = ExtensionChannel(std::move(v), de);
            }
        }
    }
    report.value = value_of(*report.extension);
    report.kind = dc == 1 ? MeasureKind::Exact : MeasureKind::UpperBound;
    return report;
}

Matrix fourier_matrix(int d, bool hadamard) {
    if (d < 1) {
        throw DomainError("dimension must be positive");
    }
    if (hadamard) {
        if ((d & (d - 1)) != 0) {
            throw DomainError("Hadamard transform needs d = 2^l");
        }
        Matrix h(2, 2);
        h << 1, 1, 1, -1;
        h /= std::sqrt(2.0);
        Matrix out = Matrix::Identity(1, 1);
        for (int n = 1; n < d; n *= 2) {
            out = linalg::kron(out, h);
        }
        return out;
    }
    Matrix u(d, d);
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            u(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                                 2.0 * std::numbers::pi * j * k / d);
        }
    }
    return u;
}

FlowerState flower_state(int d, bool hadamard) {
    if (d < 2) {
        throw DomainError("flower state needs d >= 2");
    }
    Matrix u = fourier_matrix(d, hadamard);
    std::vector<int> dims{d, 2, d, 2, d};
    Vector psi = Vector::Zero(linalg::total_dim(dims));
    double norm = 1.0 / std::sqrt(2.0 * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < 2; ++j) {
            Eigen::Index base = ((static_cast<Eigen::Index>(i) * 2 + j) * d + i) * 2 + j;
            for (int c = 0; c < d; ++c) {
                Complex amp = j == 0 ? Complex(c == i ? 1.0 : 0.0) : u(c, i);
                psi(base * d + c) += norm * amp;
            }
        }
    }
    DensityMatrix full = DensityMatrix::pure(dims, psi);
    return FlowerState{partial_trace(full, {0, 1, 2, 3}), PureState{dims, psi}};
}

DensityMatrix antisymmetric_state(int d) {
    if (d < 2) {
        throw DomainError("antisymmetric subspace needs d >= 2");
    }
    int n = d * d;
    Matrix m = Matrix::Identity(n, n);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            m(a * d + b, b * d + a) -= 1.0;
        }
    }
    m /= static_cast<double>(d * (d - 1));
    return DensityMatrix({d, d}, std::move(m));
}

UncertaintyCheck channel_uncertainty_check(const ExtensionChannel &channel, int d,
                                           bool hadamard, double tolerance) {
    if (channel.input_dim() != d) {
        throw DomainError("channel input dimension must equal d");
    }
    Matrix u = fourier_matrix(d, hadamard);
    Matrix tau_out = channel.apply(linalg::identity(d) / static_cast<double>(d));
    double s_out = matrix_entropy(tau_out);
    UncertaintyCheck check;
    for (int basis = 0; basis < 2; ++basis) {
        double chi = s_out;
        for (int i = 0; i < d; ++i) {
            Vector v = basis == 0 ? Vector(Matrix::Identity(d, d).col(i)) : Vector(u.col(i));
            chi -= matrix_entropy(channel.apply(v * v.adjoint())) / d;
        }
        (basis == 0 ? check.chi0 : check.chi1) = std::max(0.0, chi);
    }
    Vector phi = Vector::Zero(static_cast<Eigen::Index>(d) * d);
    for (int i = 0; i < d; ++i) {
        phi(static_cast<Eigen::Index>(i) * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    }
    DensityMatrix joint = extend(PureState{{d, d}, phi}, channel);
    check.mutual = std::log2(static_cast<double>(d)) + s_out - von_neumann_entropy(joint);
    check.holds = check.chi0 + check.chi1 <= check.mutual + tolerance;
    return check;
}

TradeoffCheck tradeoff_check(const Matrix &w, int d, bool hadamard, double tolerance) {
    if (d < 2 || w.cols() != d || w.rows() % d != 0) {
        throw DomainError("eavesdropping isometry must map C^d to C^d (x) C^e");
    }
    if ((w.adjoint() * w - linalg::identity(d)).cwiseAbs().maxCoeff() > ExtensionChannel::kTolerance) {
        throw DomainError("eavesdropping map is not an isometry");
    }
    int de = static_cast<int>(w.rows()) / d;
    std::vector<int> dims{d, de};
    std::vector<int> keep_s{0};
    std::vector<int> keep_e{1};
    Matrix u = fourier_matrix(d, hadamard);
    TradeoffCheck check;
    double fidelity_sum = 0;
    std::vector<double> probabilities;
    std::vector<DensityMatrix> eve_states;
    for (int r = 0; r < 2; ++r) {
        for (int i = 0; i < d; ++i) {
            Vector psi = r == 0 ? Vector(Matrix::Identity(d, d).col(i)) : Vector(u.col(i));
            Vector out = w * psi;
            Matrix full = out * out.adjoint();
            Matrix forwarded = linalg::partial_trace(full, dims, keep_s);
            fidelity_sum += (psi.adjoint() * forwarded * psi)(0).real() / (2.0 * d);
            eve_states.push_back(
                DensityMatrix::unchecked({de}, linalg::partial_trace(full, dims, keep_e)));
            probabilities.push_back(1.0 / (2.0 * d));
        }
    }
    check.epsilon = std::max(0.0, 1.0 - fidelity_sum);
    check.chi = holevo_chi(Ensemble(std::move(probabilities), std::move(eve_states)));

    Vector joint = Vector::Zero(static_cast<Eigen::Index>(d) * d * de);
    for (int a = 0; a < d; ++a) {
        joint.segment(static_cast<Eigen::Index>(a) * d * de, d * de) =
            w.col(a) / std::sqrt(static_cast<double>(d));
    }
    DensityMatrix ase = DensityMatrix::pure({d, d, de}, joint);
    check.info = std::max(0.0, mutual_information(partial_trace(ase, {0, 2})));

    double root = std::sqrt(check.epsilon);
    double log_d = std::log2(static_cast<double>(d));
    check.info_bound = 8 * root * log_d + 4 * fannes_mu(2 * root);
    check.chi_bound = 4 * root * log_d + 2 * fannes_mu(2 * root);
    check.holds = check.info <= check.info_bound + tolerance && check.chi <= check.chi_bound + tolerance;
    return check;
}

}  // namespace spectrakit
