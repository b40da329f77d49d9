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

#include <functional>
#include <vector>

#include "spectrakit/linalg.h"

namespace spectrakit {

struct NelderMeadOptions {
    double initial_step = 0.1;
    /// Stops when the spread of simplex values falls below this.
    double tolerance = 1e-7;
    int max_evaluations = 20000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int evaluations = 0;
};

/// Downhill simplex with dimension-adapted coefficients (Gao and Han).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                             std::vector<double> x0, const NelderMeadOptions &options = {});

/// Elementary generators of U(n): for each plane (i, j) a real and an
/// imaginary rotation, then one phase per coordinate.
int unitary_generator_count(int n);
/// Left-multiplies w by exp(t * generator[index]), acting on rows.
void apply_unitary_generator(Matrix &w, int index, double t);

struct PatternSearchOptions {
    double initial_step = 0.5;
    double min_step = 1e-9;
    /// Stops as soon as the objective reaches this value.
    double target = -1e300;
    /// Skip the per-coordinate phases (when the objective ignores them).
    bool skip_phases = false;
};

struct PatternSearchResult {
    Matrix w;
    double value = 0;
    int evaluations = 0;
};

/// Derivative-free descent on the unitary group: tries +-step along each
/// generator, keeps improvements, halves the step after a sweep without one.
PatternSearchResult unitary_pattern_search(const std::function<double(const Matrix &)> &f,
                                           Matrix w0, const PatternSearchOptions &options = {});

}  // namespace spectrakit
