// Copyright 2026 The QSL Authors
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
#include <functional>
#include <map>

#include "qsl/tomo/counts.hpp"
#include "qsl/tomo/metrics.hpp"

namespace qsl::tomo {

/**
 * Constrained least-squares state reconstruction: minimizes the squared
 * residual between predicted and observed outcome frequencies over the set
 * of Hermitian, PSD, trace-one matrices (accelerated projected gradient with
 * eigenvalue simplex projection). Deterministic. Requires the complete
 * 36-setting two-qubit set.
 */
DensityMatrix state_tomography(const std::vector<CountRecord>& records);

/// Same solver for arbitrary settings/qubit counts (used internally and in
/// tests); `dim` is the Hilbert-space dimension.
DensityMatrix state_tomography_general(const std::vector<CountRecord>& records, long dim);

struct ProcessMatrix {
    Matrix chi;               // trace-normalized, PSD, Pauli basis
    double success_probability = 1.0;  // discarded heralding weight, reported
};

/**
 * Process tomography from the 16 two-qubit product preparations
 * {H,V,D,R}x{H,V,D,R}: per-preparation output states (from state tomography
 * or given directly) are linearly inverted to chi in the Pauli basis and
 * projected to the PSD cone, trace-normalized.
 */
ProcessMatrix process_tomography(const std::vector<Matrix>& outputs_per_prep);

/// The fixed preparation list, pairs of Proj6, row-major over {H,V,D,R}^2.
std::vector<std::pair<Proj6, Proj6>> process_preparations();

struct MonteCarloResult {
    std::vector<double> mean;
    std::vector<double> std_dev;
    int n_samples = 0;
    int failures = 0;
};

/**
 * Poissonian resampling error analysis: each count is resampled as
 * Poisson(count), the estimator re-run, and the sample mean/standard
 * deviation of every derived quantity reported. Per-sample seeds derive
 * from the master seed by counter; the reduction order is fixed by sample
 * index, so results are schedule independent.
 */
MonteCarloResult monte_carlo_errors(
    const std::vector<CountRecord>& records,
    const std::function<std::vector<double>(const std::vector<CountRecord>&)>& estimator,
    int n_samples, uint64_t seed);

}  // namespace qsl::tomo
