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

#include "qsl/tomo/counts.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qsl::tomo {

char proj6_char(Proj6 p) {
    switch (p) {
        case Proj6::H: return 'H';
        case Proj6::V: return 'V';
        case Proj6::D: return 'D';
        case Proj6::A: return 'A';
        case Proj6::R: return 'R';
        case Proj6::L: return 'L';
    }
    throw std::invalid_argument("proj6_char: bad projector");
}

Proj6 proj6_from_char(char c) {
    switch (c) {
        case 'H': return Proj6::H;
        case 'V': return Proj6::V;
        case 'D': return Proj6::D;
        case 'A': return Proj6::A;
        case 'R': return Proj6::R;
        case 'L': return Proj6::L;
    }
    throw std::invalid_argument(std::string("proj6_from_char: bad projector '") + c + "'");
}

Vector proj6_state(Proj6 p) {
    Vector v(2);
    const double s = 1.0 / std::numbers::sqrt2;
    switch (p) {
        case Proj6::H: v << 1, 0; break;
        case Proj6::V: v << 0, 1; break;
        case Proj6::D: v << s, s; break;
        case Proj6::A: v << s, -s; break;
        case Proj6::R: v << s, cdouble(0, s); break;
        case Proj6::L: v << s, cdouble(0, -s); break;
    }
    return v;
}

std::string MeasurementSetting::label() const {
    std::string out;
    for (Proj6 p : projectors) out.push_back(proj6_char(p));
    return out;
}

Matrix MeasurementSetting::outcome_projector(long pattern) const {
    Matrix acc = Matrix::Identity(1, 1);
    for (size_t i = 0; i < projectors.size(); ++i) {
        Vector s = proj6_state(projectors[i]);
        int bit = static_cast<int>((pattern >> (projectors.size() - 1 - i)) & 1);
        Vector v(2);
        if (bit == 0) {
            v = s;
        } else {
            v << -std::conj(s(1)), std::conj(s(0));  // orthogonal port
        }
        Matrix p1 = v * v.adjoint();
        Matrix next(acc.rows() * 2, acc.cols() * 2);
        for (long r = 0; r < acc.rows(); ++r)
            for (long c = 0; c < acc.cols(); ++c) next.block(r * 2, c * 2, 2, 2) = acc(r, c) * p1;
        acc = std::move(next);
    }
    return acc;
}

std::vector<MeasurementSetting> all_two_qubit_settings() {
    std::vector<MeasurementSetting> out;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            out.push_back({{static_cast<Proj6>(a), static_cast<Proj6>(b)}});
    return out;
}

std::string counts_to_csv(const std::vector<CountRecord>& records) {
    std::ostringstream out;
    out << "# qsl counts v1\n";
    out << "setting_id,projector_spec,shots,counts\n";
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (static_cast<int>(r.counts.size()) != r.setting.outcomes())
            throw std::invalid_argument("counts_to_csv: outcome count mismatch");
        for (long pat = 0; pat < r.setting.outcomes(); ++pat) {
            std::string ports;
            for (int q = r.setting.qubits() - 1; q >= 0; --q)
                ports.push_back(((pat >> q) & 1) ? '-' : '+');
            out << i << "," << r.setting.label() << ":" << ports << "," << r.shots << ","
                << r.counts[static_cast<size_t>(pat)] << "\n";
        }
    }
    return out.str();
}

std::vector<CountRecord> counts_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<CountRecord> records;
    long current_id = -1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("setting_id", 0) == 0) continue;
        std::istringstream row(line);
        std::string id_s, spec, shots_s, counts_s;
        if (!std::getline(row, id_s, ',') || !std::getline(row, spec, ',') ||
            !std::getline(row, shots_s, ',') || !std::getline(row, counts_s, ','))
            throw std::invalid_argument("counts_from_csv: malformed row: " + line);
        long id = std::stol(id_s);
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("counts_from_csv: bad projector_spec: " + spec);
        std::string basis = spec.substr(0, colon);
        std::string ports = spec.substr(colon + 1);
        if (basis.size() != ports.size())
            throw std::invalid_argument("counts_from_csv: basis/ports length mismatch: " + spec);
        if (id != current_id) {
            CountRecord r;
            for (char c : basis) r.setting.projectors.push_back(proj6_from_char(c));
            r.shots = std::stol(shots_s);
            r.counts.assign(static_cast<size_t>(r.setting.outcomes()), 0);
            records.push_back(std::move(r));
            current_id = id;
        }
        CountRecord& r = records.back();
        if (r.setting.label() != basis)
            throw std::invalid_argument("counts_from_csv: inconsistent setting block: " + spec);
        long pat = 0;
        for (char c : ports) {
            if (c != '+' && c != '-')
                throw std::invalid_argument("counts_from_csv: bad port char in " + spec);
            pat = (pat << 1) | (c == '-' ? 1 : 0);
        }
        r.counts[static_cast<size_t>(pat)] = std::stol(counts_s);
    }
    return records;
}

}  // namespace qsl::tomo
