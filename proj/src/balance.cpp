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

#include <cmath>
#include <random>
#include <stdexcept>

#include "qsl/optics/experiment.hpp"

namespace qsl::optics {

namespace {

// Proportionality deviation of the heralded map to the target, scale and
// phase invariant; infinite for a vanishing map.
double proportionality_deviation(const Matrix& raw, const Matrix& target) {
    double m = raw.cwiseAbs().maxCoeff();
    if (m <= 1e-300) return 1e6;
    long ri = 0, ci = 0;
    double best = -1;
    for (long r = 0; r < raw.rows(); ++r)
        for (long c = 0; c < raw.cols(); ++c) {
            double w = std::min(std::abs(raw(r, c)), std::abs(target(r, c)));
            if (w > best) {
                best = w;
                ri = r;
                ci = c;
            }
        }
    if (best <= 0) return 1e6;
    cdouble scale = raw(ri, ci) / target(ri, ci);
    return (raw - scale * target).cwiseAbs().maxCoeff() / std::abs(scale);
}

double evaluate(OpticalExperiment& exp, const Matrix& target, double* success_out) {
    HeraldedMapResult res = heralded_map(exp);
    if (success_out) *success_out = res.success;
    return proportionality_deviation(res.raw, target);
}

}  // namespace

BalanceResult balance_attenuations(OpticalExperiment& exp, const Matrix& target, unsigned seed,
                                   double tol) {
    if (exp.slots.empty()) throw std::invalid_argument("balance_attenuations: no adjustable slots");
    const long d = 1L << exp.num_outputs();
    if (target.rows() != d || target.cols() != d)
        throw std::invalid_argument("balance_attenuations: target dimension mismatch");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(0.3, 1.0);
    std::vector<std::string> names;
    for (const auto& s : exp.slots) names.push_back(s.name);

    auto score = [&](double* success_out) {
        double succ = 0;
        double dev = evaluate(exp, target, &succ);
        if (success_out) *success_out = succ;
        // Ties between exactly balanced settings break toward higher
        // success, with a weight small enough not to trade against balance.
        return dev + 1e-3 * (1.0 - succ);
    };

    double best_score = 1e18, best_dev = 1e18, best_succ = 0;
    std::vector<double> best_amps;
    for (int attempt = 0; attempt < 3; ++attempt) {
        if (attempt == 0) {
            for (const auto& n : names) exp.set_slot(n, 1.0);
        } else {
            for (const auto& n : names) exp.set_slot(n, jitter(rng));
        }
        // Cyclic coordinate descent with a golden-section line search.
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int sweep = 0; sweep < 60; ++sweep) {
            double moved = 0;
            for (const auto& n : names) {
                double lo = 0.0, hi = 1.0;
                double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
                exp.set_slot(n, x1);
                double f1 = score(nullptr);
                exp.set_slot(n, x2);
                double f2 = score(nullptr);
                for (int it = 0; it < 48; ++it) {
                    if (f1 < f2) {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - gr * (hi - lo);
                        exp.set_slot(n, x1);
                        f1 = score(nullptr);
                    } else {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + gr * (hi - lo);
                        exp.set_slot(n, x2);
                        f2 = score(nullptr);
                    }
                }
                double x = (f1 < f2) ? x1 : x2;
                double before = exp.slot_value(n);
                exp.set_slot(n, x);
                moved = std::max(moved, std::abs(before - x));
            }
            if (moved < 1e-12) break;
        }
        double succ = 0;
        double dev = evaluate(exp, target, &succ);
        double sc = dev + 1e-3 * (1.0 - succ);
        if (sc < best_score) {
            best_score = sc;
            best_dev = dev;
            best_succ = succ;
            best_amps.clear();
            for (const auto& n : names) best_amps.push_back(exp.slot_value(n));
        }
        if (best_dev <= tol * 1e-3) break;  // already essentially exact
    }
    for (size_t i = 0; i < names.size(); ++i) exp.set_slot(names[i], best_amps[i]);
    BalanceResult res;
    res.amplitudes = best_amps;
    res.deviation = best_dev;
    res.success = best_succ;
    res.converged = best_dev <= tol;
    return res;
}

}  // namespace qsl::optics
