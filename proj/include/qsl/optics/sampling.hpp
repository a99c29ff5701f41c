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

#include "qsl/optics/experiment.hpp"
#include "qsl/tomo/counts.hpp"

namespace qsl::optics {

/**
 * Click-level outcome probabilities for one product input and one analysis
 * setting: per output rail the analyzer plate maps the selected projector
 * onto the V port; an outcome pattern requires at least one photon at every
 * selected port (threshold counting, as in coincidence logic) together with
 * the non-analyzed herald detectors.
 */
Eigen::VectorXd outcome_probabilities(const OpticalExperiment& exp,
                                      const std::vector<Vector>& preps,
                                      const tomo::MeasurementSetting& setting);

/// Heralded distribution over computational-basis outcomes for a logical
/// basis input (convenience for truth tables).
Eigen::VectorXd logical_outcome_probabilities(const OpticalExperiment& exp, long input);

/**
 * Poisson photon-counting statistics: per setting and outcome, counts are
 * drawn with mean shots x probability (reproducible given seed). With
 * poisson = false the rounded expectations are returned instead. With
 * normalize_per_setting the outcome probabilities are normalized within each
 * setting first, i.e. shots counts collected coincidences rather than source
 * pulses (the practical mode for heralded runs at low absolute rates).
 */
std::vector<tomo::CountRecord> sample_counts(const OpticalExperiment& exp,
                                             const std::vector<Vector>& preps,
                                             const std::vector<tomo::MeasurementSetting>& settings,
                                             long shots, uint64_t seed, bool poisson = true,
                                             bool normalize_per_setting = false);

/// Counts for a known density matrix (no optics), same record format.
std::vector<tomo::CountRecord> sample_counts_from_state(
    const Matrix& rho, const std::vector<tomo::MeasurementSetting>& settings, long shots,
    uint64_t seed, bool poisson = true);

/// Basis preparation vectors for a logical input index (msb first).
std::vector<Vector> basis_preps(int carriers, long input);

/// Preparation vectors for a tomography product input.
std::vector<Vector> proj_preps(const std::vector<tomo::Proj6>& states);

}  // namespace qsl::optics
