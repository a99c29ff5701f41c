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

#include "qsl/tomo/reconstruction.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qsl::tomo {

namespace {

// Euclidean projection of a Hermitian matrix onto {rho >= 0, Tr rho = 1}:
// eigenvalues projected onto the probability simplex.
Matrix project_to_states(const Matrix& herm) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    Eigen::VectorXd ev = es.eigenvalues();
    const long n = ev.size();
    std::vector<double> sorted(ev.data(), ev.data() + n);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double cum = 0;
    double tau = 0;
    int k = 0;
    for (long i = 0; i < n; ++i) {
        cum += sorted[static_cast<size_t>(i)];
        double t = (cum - 1.0) / static_cast<double>(i + 1);
        if (sorted[static_cast<size_t>(i)] - t > 0) {
            tau = t;
            k = static_cast<int>(i + 1);
        }
    }
    (void)k;
    Eigen::VectorXd proj = (ev.array() - tau).cwiseMax(0.0);
    return es.eigenvectors() * proj.asDiagonal() * es.eigenvectors().adjoint();
}

struct LsqProblem {
    std::vector<Matrix> projectors;
    std::vector<double> frequencies;
};

LsqProblem build_problem(const std::vector<CountRecord>& records) {
    LsqProblem prob;
    for (const auto& r : records) {
        double total = 0;
        for (long c : r.counts) total += static_cast<double>(c);
        if (total <= 0) throw std::invalid_argument("state_tomography: all-zero counts in a setting");
        for (long pat = 0; pat < r.setting.outcomes(); ++pat) {
            prob.projectors.push_back(r.setting.outcome_projector(pat));
            prob.frequencies.push_back(static_cast<double>(r.counts[static_cast<size_t>(pat)]) / total);
        }
    }
    return prob;
}

DensityMatrix solve_lsq(const LsqProblem& prob, long dim) {
    // FISTA on f(rho) = sum_j (Tr(P_j rho) - f_j)^2 with simplex projection.
    const size_t m = prob.projectors.size();
    double lipschitz = 0;
    for (const auto& p : prob.projectors) lipschitz += p.squaredNorm();
    lipschitz *= 2.0;
    const double step = 1.0 / lipschitz;

    Matrix rho = Matrix::Identity(dim, dim) / static_cast<double>(dim);
    Matrix y = rho;
    double t_acc = 1.0;
    Matrix prev = rho;
    for (int it = 0; it < 600; ++it) {
        Matrix grad = Matrix::Zero(dim, dim);
        for (size_t j = 0; j < m; ++j) {
            double resid = (prob.projectors[j] * y).trace().real() - prob.frequencies[j];
            grad += 2.0 * resid * prob.projectors[j];
        }
        prev = rho;
        rho = project_to_states(y - step * grad);
        double t_next = (1.0 + std::sqrt(1.0 + 4.0 * t_acc * t_acc)) / 2.0;
        y = rho + ((t_acc - 1.0) / t_next) * (rho - prev);
        t_acc = t_next;
        if ((rho - prev).norm() < 1e-12 && it > 20) break;
    }
    return DensityMatrix(project_to_states(rho));
}

}  // namespace

DensityMatrix state_tomography_general(const std::vector<CountRecord>& records, long dim) {
    if (records.empty()) throw std::invalid_argument("state_tomography: no records");
    return solve_lsq(build_problem(records), dim);
}

DensityMatrix state_tomography(const std::vector<CountRecord>& records) {
    std::set<std::string> seen;
    for (const auto& r : records) {
        if (r.setting.qubits() != 2)
            throw std::invalid_argument("state_tomography: two-qubit settings required");
        seen.insert(r.setting.label());
    }
    if (seen.size() != 36)
        throw std::invalid_argument("state_tomography: all 36 settings required, got " +
                                    std::to_string(seen.size()));
    return state_tomography_general(records, 4);
}

std::vector<std::pair<Proj6, Proj6>> process_preparations() {
    const Proj6 set[4] = {Proj6::H, Proj6::V, Proj6::D, Proj6::R};
    std::vector<std::pair<Proj6, Proj6>> out;
    for (auto a : set)
        for (auto b : set) out.push_back({a, b});
    return out;
}

ProcessMatrix process_tomography(const std::vector<Matrix>& outputs_per_prep) {
    const auto preps = process_preparations();
    if (outputs_per_prep.size() != preps.size())
        throw std::invalid_argument("process_tomography: 16 output states required");
    const long d = 4;
    const auto basis = pauli_basis(2);
    const long nb = static_cast<long>(basis.size());

    // Input density matrices of the preparation set.
    std::vector<Matrix> rho_in;
    for (const auto& [a, b] : preps) {
        Vector sa = proj6_state(a), sb = proj6_state(b);
        Vector s(4);
        s << sa(0) * sb(0), sa(0) * sb(1), sa(1) * sb(0), sa(1) * sb(1);
        rho_in.push_back(s * s.adjoint());
    }

    // Linear system A vec(chi) = vec(outputs), A[(prep,entry), (m,n)] =
    // (P_m rho_in P_n^dag)[entry].
    const long rows = static_cast<long>(rho_in.size()) * d * d;
    Matrix a = Matrix::Zero(rows, nb * nb);
    Vector b = Vector::Zero(rows);
    for (size_t k = 0; k < rho_in.size(); ++k) {
        for (long m = 0; m < nb; ++m) {
            for (long n = 0; n < nb; ++n) {
                Matrix block = basis[static_cast<size_t>(m)] * rho_in[k] *
                               basis[static_cast<size_t>(n)].adjoint();
                for (long r = 0; r < d; ++r)
                    for (long c = 0; c < d; ++c)
                        a(static_cast<long>(k) * d * d + r * d + c, m * nb + n) = block(r, c);
            }
        }
        for (long r = 0; r < d; ++r)
            for (long c = 0; c < d; ++c)
                b(static_cast<long>(k) * d * d + r * d + c) = outputs_per_prep[k](r, c);
    }
    Vector chi_vec = a.colPivHouseholderQr().solve(b);
    Matrix chi(nb, nb);
    for (long m = 0; m < nb; ++m)
        for (long n = 0; n < nb; ++n) chi(m, n) = chi_vec(m * nb + n);

    ProcessMatrix out;
    double weight = chi.trace().real();
    out.success_probability = weight;
    chi = (chi + Matrix(chi.adjoint())) / 2.0;
    // PSD projection, then trace normalization.
    Eigen::SelfAdjointEigenSolver<Matrix> es(chi);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    chi = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
    double tr = chi.trace().real();
    if (tr <= 0) throw std::invalid_argument("process_tomography: degenerate process");
    out.chi = chi / tr;
    return out;
}

MonteCarloResult monte_carlo_errors(
    const std::vector<CountRecord>& records,
    const std::function<std::vector<double>(const std::vector<CountRecord>&)>& estimator,
    int n_samples, uint64_t seed) {
    if (n_samples < 2) throw std::invalid_argument("monte_carlo_errors: n_samples must be >= 2");
    std::vector<std::vector<double>> samples;
    int failures = 0;
    for (int s = 0; s < n_samples; ++s) {
        // Counter-derived substream per sample: schedule independent.
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(s + 1));
        std::vector<CountRecord> resampled = records;
        for (auto& r : resampled) {
            for (auto& c : r.counts) {
                if (c > 0) {
                    std::poisson_distribution<long> dist(static_cast<double>(c));
                    c = dist(rng);
                }
            }
        }
        try {
            samples.push_back(estimator(resampled));
        } catch (const std::exception&) {
            ++failures;
        }
    }
    if (samples.empty()) throw std::runtime_error("monte_carlo_errors: estimator failed on every resample");
    const size_t q = samples.front().size();
    MonteCarloResult res;
    res.n_samples = static_cast<int>(samples.size());
    res.failures = failures;
    res.mean.assign(q, 0.0);
    res.std_dev.assign(q, 0.0);
    for (const auto& s : samples)
        for (size_t i = 0; i < q; ++i) res.mean[i] += s[i];
    for (auto& m : res.mean) m /= static_cast<double>(samples.size());
    for (const auto& s : samples)
        for (size_t i = 0; i < q; ++i) res.std_dev[i] += (s[i] - res.mean[i]) * (s[i] - res.mean[i]);
    for (auto& v : res.std_dev) v = std::sqrt(v / static_cast<double>(samples.size() - 1));
    return res;
}

}  // namespace qsl::tomo
