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

#include "qsl/core/register_shape.hpp"

#include <stdexcept>

namespace qsl::core {

RegisterShape::RegisterShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("RegisterShape: no carriers");
    for (int d : dims_) {
        if (d < 2) throw std::invalid_argument("RegisterShape: every dimension must be >= 2");
    }
    strides_.assign(dims_.size(), 1);
    for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i) {
        strides_[static_cast<size_t>(i)] =
            strides_[static_cast<size_t>(i) + 1] * dims_[static_cast<size_t>(i) + 1];
    }
    total_ = strides_[0] * dims_[0];
}

long RegisterShape::to_index(std::span<const int> levels) const {
    if (static_cast<int>(levels.size()) != num_carriers())
        throw std::invalid_argument("to_index: wrong number of levels");
    long idx = 0;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 0 || levels[i] >= dims_[i])
            throw std::invalid_argument("to_index: level out of range");
        idx += strides_[i] * levels[i];
    }
    return idx;
}

std::vector<int> RegisterShape::to_levels(long index) const {
    if (index < 0 || index >= total_) throw std::invalid_argument("to_levels: index out of range");
    std::vector<int> levels(dims_.size());
    for (size_t i = 0; i < dims_.size(); ++i) {
        levels[i] = static_cast<int>(index / strides_[i]);
        index %= strides_[i];
    }
    return levels;
}

StateVector::StateVector(RegisterShape shape, Vector amplitudes, Norm norm)
    : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)), norm_(norm) {
    if (amplitudes_.size() != shape_.total_dimension())
        throw std::invalid_argument("StateVector: amplitude length does not match shape");
    if (norm_ == Norm::Enforced) {
        double n2 = amplitudes_.squaredNorm();
        if (std::abs(n2 - 1.0) > 1e-9)
            throw std::invalid_argument("StateVector: state not normalized");
    }
}

StateVector StateVector::basis(RegisterShape shape, std::span<const int> levels) {
    Vector amps = Vector::Zero(shape.total_dimension());
    amps(shape.to_index(levels)) = 1.0;
    return StateVector(std::move(shape), std::move(amps));
}

}  // namespace qsl::core
