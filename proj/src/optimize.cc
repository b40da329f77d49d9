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

#include "spectrakit/optimize.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spectrakit/errors.h"

namespace spectrakit {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                             std::vector<double> x0, const NelderMeadOptions &options) {
    std::size_t n = x0.size();
    if (n == 0) {
        return NelderMeadResult{x0, f(x0), 1};
    }
    double dn = static_cast<double>(n);
    double alpha = 1.0;
    double beta = 1.0 + 2.0 / dn;
    double gamma = 0.75 - 1.0 / (2.0 * dn);
    double delta = 1.0 - 1.0 / dn;

    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) {
        simplex[i + 1][i] += options.initial_step;
    }
    std::vector<double> values(n + 1);
    int evaluations = 0;
    auto eval = [&](const std::vector<double> &x) {
        ++evaluations;
        double v = f(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };
    for (std::size_t i = 0; i <= n; ++i) {
        values[i] = eval(simplex[i]);
    }
    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n);
    std::vector<double> trial(n);
    auto point = [&](double t, const std::vector<double> &worst) {
        std::vector<double> out(n);
        for (std::size_t j = 0; j < n; ++j) {
            out[j] = centroid[j] + t * (worst[j] - centroid[j]);
        }
        return out;
    };
    while (evaluations < options.max_evaluations) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::size_t best = order.front();
        std::size_t worst = order.back();
        std::size_t second = order[n - 1];
        if (values[worst] - values[best] <= options.tolerance) {
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i : order) {
            if (i == worst) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                centroid[j] += simplex[i][j] / dn;
            }
        }
        std::vector<double> reflected = point(-alpha, simplex[worst]);
        double fr = eval(reflected);
        if (fr < values[best]) {
            std::vector<double> expanded = point(-alpha * beta, simplex[worst]);
            double fe = eval(expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second]) {
            simplex[worst] = std::move(reflected);
            values[worst] = fr;
            continue;
        }
        bool outside = fr < values[worst];
        std::vector<double> contracted =
            outside ? point(-alpha * gamma, simplex[worst]) : point(gamma, simplex[worst]);
        double fc = eval(contracted);
        if (fc < std::min(fr, values[worst])) {
            simplex[worst] = std::move(contracted);
            values[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                simplex[i][j] = simplex[best][j] + delta * (simplex[i][j] - simplex[best][j]);
            }
            values[i] = eval(simplex[i]);
        }
    }
    std::size_t best = std::min_element(values.begin(), values.end()) - values.begin();
    return NelderMeadResult{simplex[best], values[best], evaluations};
}

int unitary_generator_count(int n) {
    return n * (n - 1) + n;
}

void apply_unitary_generator(Matrix &w, int index, double t) {
    int n = static_cast<int>(w.rows());
    int rotations = n * (n - 1);
    if (index < 0 || index >= rotations + n) {
        throw DomainError("generator index out of range");
    }
    if (index >= rotations) {
        w.row(index - rotations) *= std::polar(1.0, t);
        return;
    }
    int pair = index / 2;
    bool imaginary = index % 2 == 1;
    int i = 0;
    int offset = pair;
    while (offset >= n - 1 - i) {
        offset -= n - 1 - i;
        ++i;
    }
    int j = i + 1 + offset;
    double c = std::cos(t);
    double s = std::sin(t);
    Complex to_i = imaginary ? Complex(0, s) : Complex(-s, 0);
    Complex to_j = imaginary ? Complex(0, s) : Complex(s, 0);
    for (Eigen::Index col = 0; col < w.cols(); ++col) {
        Complex a = w(i, col);
        Complex b = w(j, col);
        w(i, col) = c * a + to_i * b;
        w(j, col) = to_j * a + c * b;
    }
}

PatternSearchResult unitary_pattern_search(const std::function<double(const Matrix &)> &f,
                                           Matrix w0, const PatternSearchOptions &options) {
    int n = static_cast<int>(w0.rows());
    int generators = options.skip_phases ? n * (n - 1) : unitary_generator_count(n);
    PatternSearchResult out;
    out.w = std::move(w0);
    out.value = f(out.w);
    out.evaluations = 1;
    double step = options.initial_step;
    Matrix trial;
    while (step >= options.min_step && out.value > options.target) {
        bool improved = false;
        for (int g = 0; g < generators && out.value > options.target; ++g) {
            for (double sign : {1.0, -1.0}) {
                trial = out.w;
                apply_unitary_generator(trial, g, sign * step);
                double value = f(trial);
                ++out.evaluations;
                if (value < out.value) {
                    out.value = value;
                    std::swap(out.w, trial);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            step *= 0.5;
        }
    }
    return out;
}

}  // namespace spectrakit
