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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsl/build/shortcut.hpp"
#include "qsl/optics/experiment_text.hpp"
#include "qsl/optics/sampling.hpp"
#include "qsl/reference_values.hpp"
#include "qsl/tomo/reconstruction.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace qsl;
using namespace qsl::core;

namespace {

constexpr int kSchemaVersion = 1;

// Exit codes: 0 success, 1 verification failure, 2 input error.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (long r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (long c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

uint64_t require_seed(const std::optional<uint64_t>& seed) {
    if (seed) return *seed;
    if (const char* env = std::getenv("QSL_SEED")) return std::stoull(env);
    throw InputError("a seed is required for stochastic commands (--seed or QSL_SEED)");
}

tomo::Proj6 proj_of_char(char c) {
    if (c == '0') return tomo::Proj6::H;
    if (c == '1') return tomo::Proj6::V;
    return tomo::proj6_from_char(c);
}

std::vector<Vector> preps_from_string(const std::string& s) {
    std::vector<Vector> preps;
    for (char c : s) preps.push_back(tomo::proj6_state(proj_of_char(c)));
    return preps;
}

// ---------------------------------------------------------------- circuits

struct CircuitsArgs {
    std::string kind;
    int n = 2;
    std::string pattern;
    double theta = std::numbers::pi;
    std::string u_name = "x";
    int k = 1;
    std::string flip = "00";
    std::string out;
    std::string costs;
    bool verify = false;
};

build::FirePattern parse_pattern(const std::string& s, int n) {
    build::FirePattern p;
    if (s.empty()) {
        p.assign(static_cast<size_t>(n), 1);
        return p;
    }
    for (char c : s) {
        if (c != '0' && c != '1') throw InputError("pattern must be a 0/1 string");
        p.push_back(c - '0');
    }
    if (static_cast<int>(p.size()) != n)
        throw InputError("pattern length must equal the number of controls");
    return p;
}

Matrix named_unitary(const std::string& name, double theta) {
    if (name == "x") return gate::x().matrix;
    if (name == "z") return gate::z().matrix;
    if (name == "h") return gate::h().matrix;
    if (name == "t") return gate::t().matrix;
    if (name == "zrot") return gate::z_theta(theta).matrix;
    throw InputError("unknown unitary '" + name + "' (use x|z|h|t|zrot)");
}

Circuit addcontrols_fixture(int k) {
    if (k == 1) {
        Circuit inner(RegisterShape({2, 2}));
        inner.add(gate::cz(0, 1));
        return inner;
    }
    if (k == 2) {
        Matrix cz4 = Matrix::Identity(4, 4);
        cz4(3, 3) = -1;
        Circuit inner(RegisterShape({2, 2, 2}));
        inner.add(PlacedGate{GateMatrix(cz4, "CZ2Q"), {1, 2}, {{0, 1}}});
        return inner;
    }
    throw InputError("addcontrols fixture supports k = 1 or 2");
}

int cmd_circuits(const CircuitsArgs& a) {
    Circuit circ(RegisterShape({2}));
    Matrix oracle;
    bool compare_restricted = true;
    double residual_alpha = 0.0;
    std::string kind = a.kind;
    json extra;

    Matrix zz = gate::z().matrix;
    if (kind == "ts") {
        circ = build::build_ts();
        oracle = build::ideal_multi_controlled(2, zz, {0, 1});
    } else if (kind == "toffoli") {
        if (a.flip.size() != 2 || a.flip.find_first_not_of("01") != std::string::npos)
            throw InputError("--flip must be two bits");
        std::pair<int, int> fp{a.flip[0] - '0', a.flip[1] - '0'};
        circ = build::toffoli_from_ts(fp);
        Matrix x2 = gate::x().matrix;
        oracle = build::ideal_multi_controlled(2, x2, {fp.second, fp.first});
    } else if (kind == "ntoffoli") {
        auto p = parse_pattern(a.pattern, a.n);
        circ = build::build_n_toffoli_sign(a.n, p);
        oracle = build::ideal_multi_controlled(a.n, zz, p);
    } else if (kind == "cnz") {
        auto p = parse_pattern(a.pattern, a.n);
        circ = build::build_cn_z_theta(a.n, a.theta, p);
        oracle = build::ideal_multi_controlled(a.n, gate::z_theta(a.theta).matrix, p);
    } else if (kind == "cnu") {
        auto p = parse_pattern(a.pattern, a.n);
        Matrix u = named_unitary(a.u_name, a.theta);
        auto [c, alpha] = build::build_cn_u(a.n, u, p);
        circ = c;
        residual_alpha = alpha;
        oracle = build::ideal_multi_controlled(a.n, Matrix(std::polar(1.0, -alpha) * u), p);
        extra["residual_phase"] = alpha;
    } else if (kind == "textbook6") {
        circ = build::textbook_toffoli_6cnot();
        Matrix x2 = gate::x().matrix;
        oracle = build::ideal_multi_controlled(2, x2, {1, 1});
        compare_restricted = false;
    } else if (kind == "addcontrols") {
        auto q = parse_pattern(a.pattern, a.n);
        Circuit inner = addcontrols_fixture(a.k);
        circ = build::add_controls(inner, a.n, q);
        Matrix uk = a.k == 1 ? zz : [] {
            Matrix m = Matrix::Identity(4, 4);
            m(3, 3) = -1;
            return m;
        }();
        build::FirePattern full = {1};
        for (int v : q) full.push_back(v);
        oracle = build::ideal_multi_controlled(a.n + 1, uk, full);
    } else {
        throw InputError("unknown kind '" + kind +
                         "' (ts|toffoli|ntoffoli|cnz|cnu|textbook6|addcontrols)");
    }

    if (!a.out.empty()) write_file(a.out, serialize_circuit(circ));
    build::CostReport cost = build::cost_report(circ);
    json costs;
    costs["schema_version"] = kSchemaVersion;
    costs["kind"] = kind;
    costs["n"] = a.n;
    costs["pattern"] = a.pattern;
    costs["two_qubit_gates"] = cost.two_qubit_gate_count;
    costs["single_carrier_gates"] = cost.single_carrier_gate_count;
    costs["dims"] = circ.shape.dims();
    costs["ancillas"] = cost.ancilla_count;
    for (auto& [k2, v] : extra.items()) costs[k2] = v;
    if (kind == "ntoffoli" || kind == "cnu") {
        auto qcost = build::qubit_only_cost(
            kind == "ntoffoli" ? build::QubitOnlyKind::NToffoli : build::QubitOnlyKind::CnU,
            std::max(a.n, 2));
        costs["qubit_only_two_qubit_gates"] = qcost.two_qubit_gate_count;
        costs["qubit_only_ancillas"] = qcost.ancilla_count;
        if (!qcost.footnote.empty()) costs["footnote"] = qcost.footnote;
    }
    if (!a.costs.empty()) write_file(a.costs, costs.dump(2) + "\n");
    std::cout << costs.dump(2) << "\n";

    if (a.verify) {
        Matrix u = unitary_of(circ);
        double dev;
        if (compare_restricted) {
            Matrix r = restrict_to_qubit_subspace(u, circ.shape);
            dev = max_abs_diff(r, oracle);
            if (!qubit_block_closed(u, circ.shape)) dev = std::max(dev, 1.0);
        } else {
            dev = equal_up_to_global_phase(u, oracle, 1e-9) ? 0.0 : max_abs_diff(u, oracle);
        }
        if (dev <= 1e-9) {
            std::cout << "VERIFY PASS max_dev=" << dev << "\n";
        } else {
            std::cout << "VERIFY FAIL max_dev=" << dev << "\n";
            return 1;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- optics

struct OpticsArgs {
    std::string layout;
    double theta = std::numbers::pi;
    double power = 0.0;  // 0: ideal source
    double epsilon_full = 0.2;
    double xi = 0.92;
    long shots = 10000;
    std::optional<uint64_t> seed;
    std::string outdir = ".";
    std::string mode = "map";
    std::string input;
    bool exact = false;
    bool prebias = false;
    std::string emit_experiment;
};

optics::OpticalExperiment make_layout(const OpticsArgs& a, bool noisy) {
    double eps = a.epsilon_full * std::sqrt(std::max(0.0, a.power));
    if (a.layout == "cz") {
        if (noisy) throw InputError("cz layout has no photon-pair source model; use power 0");
        return optics::ppbs_cz_layout();
    }
    if (a.layout == "cu")
        return noisy ? optics::cu_layout_spdc(a.theta, eps, a.xi) : optics::cu_layout(a.theta, a.prebias);
    if (a.layout == "toffoli")
        return noisy ? optics::toffoli_layout_spdc(eps, a.xi) : optics::toffoli_layout();
    throw InputError("unknown layout '" + a.layout + "' (cz|cu|toffoli)");
}

Matrix circuit_ideal_for_layout(const OpticsArgs& a) {
    if (a.layout == "cz") {
        Matrix m = Matrix::Identity(4, 4);
        m(3, 3) = -1;
        return m;
    }
    if (a.layout == "cu") {
        Circuit c = build::build_cu_theta(a.theta, 0);
        return restrict_to_qubit_subspace(unitary_of(c), c.shape);
    }
    Circuit c = build::toffoli_from_ts({0, 0});
    return restrict_to_qubit_subspace(unitary_of(c), c.shape);
}

int cmd_optics(const OpticsArgs& a) {
    fs::create_directories(a.outdir);
    const bool noisy = a.power > 0.0;
    optics::OpticalExperiment exp = make_layout(a, noisy);
    const int k = exp.num_outputs();

    if (!a.emit_experiment.empty()) write_file(a.emit_experiment, serialize_experiment(exp));

    json report;
    report["schema_version"] = kSchemaVersion;
    report["layout"] = a.layout;
    report["mode"] = a.mode;
    report["theta"] = a.theta;
    report["power"] = a.power;
    report["xi"] = a.xi;
    json slots = json::object();
    for (const auto& s : exp.slots) slots[s.name] = s.amplitude;
    report["attenuation_slots"] = slots;

    // The ideal-limit heralded map is always reported.
    optics::OpticalExperiment ideal_exp = make_layout(a, false);
    auto hm = optics::heralded_map(ideal_exp);
    report["success_probability"] = hm.success;
    report["per_input_success"] = hm.per_input_success;
    Matrix ideal = circuit_ideal_for_layout(a);
    Matrix target = ideal / std::sqrt(static_cast<double>(ideal.rows()));
    Matrix got = hm.map / std::sqrt(static_cast<double>(ideal.rows()));
    double fid = tomo::process_fidelity(tomo::chi_of_unitary(hm.map), tomo::chi_of_unitary(ideal));
    (void)target;
    (void)got;
    report["map"] = matrix_to_json(hm.map);
    report["process_fidelity_vs_circuit"] = fid;

    uint64_t seed = a.exact ? 0 : require_seed(a.seed);
    report["seed"] = seed;
    report["shots"] = a.shots;

    if (a.mode == "map") {
        // nothing further
    } else if (a.mode == "truthtable") {
        for (long in = 0; in < (1L << k); ++in) {
            Eigen::VectorXd p;
            if (noisy) {
                p = optics::logical_outcome_probabilities(exp, in);
                // Collected-coincidence semantics: shots counts heralded
                // events, not source pulses.
                if (p.sum() > 0) p /= p.sum();
            } else {
                p = Eigen::VectorXd::Zero(1L << k);
                for (long out = 0; out < (1L << k); ++out) p(out) = std::norm(hm.raw(out, in));
            }
            tomo::CountRecord rec;
            rec.setting.projectors.assign(static_cast<size_t>(k), tomo::Proj6::V);
            rec.shots = a.shots;
            std::mt19937_64 rng(seed + static_cast<uint64_t>(in) * 977);
            const long mask = (1L << k) - 1;
            for (long pat = 0; pat < (1L << k); ++pat) {
                // Port pattern "+"=V: reorder so row index is the logical outcome.
                double mean = static_cast<double>(a.shots) * std::max(0.0, p(pat ^ mask));
                long cnt;
                if (a.exact || mean <= 0) {
                    cnt = std::llround(mean);
                } else {
                    std::poisson_distribution<long> dist(mean);
                    cnt = dist(rng);
                }
                rec.counts.push_back(cnt);
            }
            std::string name = a.outdir + "/tt_in";
            for (int b = k - 1; b >= 0; --b) name.push_back(((in >> b) & 1) ? '1' : '0');
            write_file(name + ".csv", tomo::counts_to_csv({rec}));
        }
        report["files"] = "tt_in*.csv";
    } else if (a.mode == "state") {
        if (a.input.empty()) throw InputError("--input required for state mode");
        if (static_cast<int>(a.input.size()) != exp.num_inputs())
            throw InputError("--input length must match the number of input carriers");
        auto preps = preps_from_string(a.input);
        std::vector<tomo::CountRecord> records;
        if (k == 2) {
            records = optics::sample_counts(exp, preps, tomo::all_two_qubit_settings(), a.shots,
                                            seed, !a.exact, noisy);
        } else if (k == 3) {
            // Two-qubit tomography of (C1, T) with C2 analyzed in H/V and
            // post-selected on its ideal port.
            int c2_port = (a.input[0] == '1' || a.input[0] == 'V') ? 1 : 0;
            for (const auto& s2 : tomo::all_two_qubit_settings()) {
                tomo::MeasurementSetting s3;
                s3.projectors = {c2_port == 0 ? tomo::Proj6::H : tomo::Proj6::V, s2.projectors[0],
                                 s2.projectors[1]};
                Eigen::VectorXd p8 = optics::outcome_probabilities(exp, preps, s3);
                if (noisy && p8.sum() > 0) p8 /= p8.sum();
                tomo::CountRecord rec;
                rec.setting = s2;
                rec.shots = a.shots;
                std::mt19937_64 rng(seed ^ std::hash<std::string>{}(s2.label()));
                for (long pat = 0; pat < 4; ++pat) {
                    double mean = static_cast<double>(a.shots) * std::max(0.0, p8(pat));  // C2 "+"
                    long cnt;
                    if (a.exact || mean <= 0) {
                        cnt = std::llround(mean);
                    } else {
                        std::poisson_distribution<long> dist(mean);
                        cnt = dist(rng);
                    }
                    rec.counts.push_back(cnt);
                }
                records.push_back(std::move(rec));
            }
        } else {
            throw InputError("state mode supports 2- or 3-output layouts");
        }
        write_file(a.outdir + "/state_counts.csv", tomo::counts_to_csv(records));
        report["files"] = "state_counts.csv";
    } else if (a.mode == "process") {
        if (k != 2) throw InputError("process mode needs a two-qubit layout (cz or cu)");
        auto preps_list = tomo::process_preparations();
        for (const auto& [pa, pb] : preps_list) {
            std::vector<Vector> preps = {tomo::proj6_state(pa), tomo::proj6_state(pb)};
            auto records = optics::sample_counts(exp, preps, tomo::all_two_qubit_settings(),
                                                 a.shots, seed ^ (static_cast<uint64_t>(pa) << 8 ^
                                                                  static_cast<uint64_t>(pb)),
                                                 !a.exact);
            std::string name = a.outdir + "/prep_";
            name.push_back(tomo::proj6_char(pa));
            name.push_back(tomo::proj6_char(pb));
            write_file(name + ".csv", tomo::counts_to_csv(records));
        }
        report["files"] = "prep_??.csv";
    } else {
        throw InputError("unknown mode '" + a.mode + "' (map|truthtable|state|process)");
    }

    write_file(a.outdir + "/optics_report.json", report.dump(2) + "\n");
    std::cout << report.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------- tomo

struct TomoArgs {
    std::string mode;
    std::vector<std::string> inputs;
    std::string out;
    std::string target = "bell";
    std::string gate = "toffoli00";
    double theta = std::numbers::pi;
    int mc = 50;
    std::optional<uint64_t> seed;
};

Vector bell_state() {
    Vector psi = Vector::Zero(4);
    psi(0) = 1.0 / std::numbers::sqrt2;
    psi(3) = 1.0 / std::numbers::sqrt2;
    return psi;
}

int cmd_tomo(const TomoArgs& a) {
    json report;
    report["schema_version"] = kSchemaVersion;
    report["mode"] = a.mode;
    uint64_t seed = a.mc > 0 ? require_seed(a.seed) : (a.seed ? *a.seed : 0);
    report["seed"] = seed;
    report["n_samples"] = a.mc;

    if (a.mode == "state") {
        if (a.inputs.size() != 1) throw InputError("state mode expects one counts CSV");
        auto records = tomo::counts_from_csv(read_file(a.inputs[0]));
        auto rho = tomo::state_tomography(records);
        Matrix target;
        if (a.target == "bell") {
            Vector psi = bell_state();
            target = psi * psi.adjoint();
        } else if (a.target == "mixed") {
            target = Matrix::Identity(4, 4) / 4.0;
        } else {
            throw InputError("unknown state target '" + a.target + "' (bell|mixed)");
        }
        double f = tomo::fidelity(rho.matrix(), target);
        double sl = tomo::linear_entropy(rho.matrix());
        double tg = tomo::tangle(rho.matrix());
        report["rho"] = matrix_to_json(rho.matrix());
        report["fidelity"] = f;
        report["linear_entropy"] = sl;
        report["tangle"] = tg;
        if (a.mc > 0) {
            auto est = [&](const std::vector<tomo::CountRecord>& rs) {
                auto r = tomo::state_tomography(rs);
                return std::vector<double>{tomo::fidelity(r.matrix(), target),
                                           tomo::linear_entropy(r.matrix()),
                                           tomo::tangle(r.matrix())};
            };
            auto mc = tomo::monte_carlo_errors(records, est, a.mc, seed);
            report["error_bars"] = {{"fidelity", mc.std_dev[0]},
                                    {"linear_entropy", mc.std_dev[1]},
                                    {"tangle", mc.std_dev[2]}};
            report["mc_failures"] = mc.failures;
        }
    } else if (a.mode == "process") {
        if (a.inputs.size() != 16) throw InputError("process mode expects 16 preparation CSVs");
        auto prep_order = tomo::process_preparations();
        std::vector<Matrix> outputs(16);
        std::vector<std::vector<tomo::CountRecord>> all_records(16);
        for (const auto& path : a.inputs) {
            auto base = fs::path(path).stem().string();
            if (base.size() < 2) throw InputError("cannot infer preparation from " + path);
            std::string tag = base.substr(base.size() - 2);
            auto pa = tomo::proj6_from_char(tag[0]);
            auto pb = tomo::proj6_from_char(tag[1]);
            size_t idx = 0;
            bool found = false;
            for (size_t i = 0; i < prep_order.size(); ++i) {
                if (prep_order[i].first == pa && prep_order[i].second == pb) {
                    idx = i;
                    found = true;
                }
            }
            if (!found) throw InputError("file " + path + " is not one of the 16 preparations");
            all_records[idx] = tomo::counts_from_csv(read_file(path));
            auto rho = tomo::state_tomography(all_records[idx]);
            outputs[idx] = rho.matrix();
        }
        for (const auto& r : all_records)
            if (r.empty()) throw InputError("missing preparation CSVs");
        auto chi = tomo::process_tomography(outputs);
        Matrix ideal_u;
        if (a.target == "ct") ideal_u = unitary_of(build::build_cu_theta(std::numbers::pi / 4, 0));
        else if (a.target == "cj") ideal_u = unitary_of(build::build_cu_theta(std::numbers::pi / 2, 0));
        else if (a.target == "cl") ideal_u = unitary_of(build::build_cu_theta(3 * std::numbers::pi / 4, 0));
        else if (a.target == "cz") ideal_u = unitary_of(build::build_cu_theta(std::numbers::pi, 0));
        else ideal_u = unitary_of(build::build_cu_theta(a.theta, 0));
        Matrix ideal_r = restrict_to_qubit_subspace(
            ideal_u, RegisterShape({2, 3}));
        Matrix chi_ideal = tomo::chi_of_unitary(ideal_r);
        double fp = tomo::process_fidelity(chi.chi, chi_ideal);
        double mean_sl = 0;
        for (const auto& rho : outputs) mean_sl += tomo::linear_entropy(rho);
        mean_sl /= static_cast<double>(outputs.size());
        report["chi"] = matrix_to_json(chi.chi);
        report["process_fidelity"] = fp;
        report["mean_output_linear_entropy"] = mean_sl;
        report["success_probability"] = chi.success_probability;
    } else if (a.mode == "truthtable") {
        if (a.inputs.empty()) throw InputError("truthtable mode expects per-input CSVs");
        std::map<long, tomo::CountRecord> rows;
        int k = 0;
        for (const auto& path : a.inputs) {
            auto base = fs::path(path).stem().string();
            auto pos = base.rfind("_in");
            if (pos == std::string::npos) throw InputError("cannot infer input from " + path);
            std::string bits = base.substr(pos + 3);
            long in = 0;
            for (char c : bits) in = (in << 1) | (c - '0');
            k = static_cast<int>(bits.size());
            auto records = tomo::counts_from_csv(read_file(path));
            if (records.size() != 1) throw InputError("truthtable CSV must hold one setting");
            rows[in] = records[0];
        }
        const long d = 1L << k;
        if (static_cast<long>(rows.size()) != d) throw InputError("missing truth-table inputs");
        Eigen::MatrixXd p(d, d);
        for (auto& [in, rec] : rows) {
            double tot = 0;
            for (long c : rec.counts) tot += static_cast<double>(c);
            for (long out = 0; out < d; ++out)
                p(in, out) = static_cast<double>(rec.counts[static_cast<size_t>(out)]) /
                             std::max(1.0, tot);
        }
        tomo::TruthTable table(p);
        Eigen::MatrixXd ideal_p = Eigen::MatrixXd::Zero(d, d);
        if (a.gate == "toffoli00") {
            for (long in = 0; in < d; ++in) {
                long out = ((in >> 1) == 0) ? (in ^ 1) : in;
                ideal_p(in, out) = 1;
            }
        } else if (a.gate == "identity") {
            ideal_p.setIdentity();
        } else {
            throw InputError("unknown gate '" + a.gate + "' (toffoli00|identity)");
        }
        tomo::TruthTable ideal_t(ideal_p);
        report["table"] = std::vector<std::vector<double>>{};
        for (long r = 0; r < d; ++r) {
            std::vector<double> row;
            for (long c = 0; c < d; ++c) row.push_back(table.p(r, c));
            report["table"].push_back(row);
        }
        report["inquisition"] = tomo::inquisition(table, ideal_t);
        if (a.gate == "toffoli00" && k == 3) {
            json contrasts = json::object();
            for (int c2 = 0; c2 < 2; ++c2) {
                for (int c1 = 0; c1 < 2; ++c1) {
                    double acc = 0;
                    for (int t = 0; t < 2; ++t) {
                        long in = (c2 << 2) | (c1 << 1) | t;
                        long ideal_out = (c2 == 0 && c1 == 0) ? (in ^ 1) : in;
                        acc += tomo::flipping_contrast(table.p(in, ideal_out),
                                                       table.p(in, ideal_out ^ 1));
                    }
                    contrasts["C" + std::to_string(c2) + std::to_string(c1)] = acc / 2;
                }
            }
            report["contrasts"] = contrasts;
        }
        if (a.mc > 0) {
            std::vector<tomo::CountRecord> flat;
            for (auto& [in, rec] : rows) flat.push_back(rec);
            auto est = [&](const std::vector<tomo::CountRecord>& rs) {
                Eigen::MatrixXd q(d, d);
                for (long in = 0; in < d; ++in) {
                    double tot = 0;
                    for (long c : rs[static_cast<size_t>(in)].counts) tot += static_cast<double>(c);
                    for (long out = 0; out < d; ++out)
                        q(in, out) =
                            static_cast<double>(rs[static_cast<size_t>(in)].counts[static_cast<size_t>(out)]) /
                            std::max(1.0, tot);
                }
                return std::vector<double>{tomo::inquisition(tomo::TruthTable(q), ideal_t)};
            };
            auto mc = tomo::monte_carlo_errors(flat, est, a.mc, seed);
            report["error_bars"] = {{"inquisition", mc.std_dev[0]}};
        }
    } else {
        throw InputError("unknown mode '" + a.mode + "' (state|process|truthtable)");
    }

    if (!a.out.empty()) write_file(a.out, report.dump(2) + "\n");
    std::cout << report.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------- report

struct ReportArgs {
    std::string figure;
    std::vector<std::string> inputs;
    std::string out;
};

json ref_json(const reference::ValueWithError& v) {
    return {{"value", v.value}, {"error", v.error}};
}

int cmd_report(const ReportArgs& a) {
    json report;
    report["schema_version"] = kSchemaVersion;
    report["figure"] = a.figure;
    if (a.figure == "fig2") {
        if (a.inputs.size() != 1) throw InputError("fig2 expects one truth-table report");
        json in = json::parse(read_file(a.inputs[0]));
        report["truth_table"] = in["table"];
        report["inquisition"] = in["inquisition"];
        if (in.contains("error_bars")) report["error_bars"] = in["error_bars"];
        if (in.contains("contrasts")) report["contrasts"] = in["contrasts"];
        json ref;
        ref["inquisition"] = ref_json(reference::toffoli_inquisition());
        for (const auto& c : reference::toffoli_contrasts()) ref[c.label] = ref_json(c);
        ref["contrast_11_quarter_power"] = ref_json(reference::toffoli_contrast_low_power());
        report["published_reference"] = ref;
    } else if (a.figure == "fig3") {
        json cases = json::array();
        for (const auto& path : a.inputs) {
            json in = json::parse(read_file(path));
            json c;
            c["source"] = fs::path(path).filename().string();
            c["fidelity"] = in["fidelity"];
            c["linear_entropy"] = in["linear_entropy"];
            c["tangle"] = in["tangle"];
            if (in.contains("error_bars")) c["error_bars"] = in["error_bars"];
            cases.push_back(c);
        }
        report["cases"] = cases;
        json ref = json::array();
        for (const auto& triple : reference::bell_triples()) {
            json t;
            for (const auto& v : triple) t[v.label] = ref_json(v);
            ref.push_back(t);
        }
        report["published_reference"] = ref;
    } else if (a.figure == "fig4") {
        json gates = json::array();
        for (const auto& path : a.inputs) {
            json in = json::parse(read_file(path));
            json g;
            g["source"] = fs::path(path).filename().string();
            g["process_fidelity"] = in["process_fidelity"];
            g["mean_output_linear_entropy"] = in["mean_output_linear_entropy"];
            gates.push_back(g);
        }
        report["gates"] = gates;
        json ref = json::object();
        for (const auto& v : reference::cu_process_fidelities()) ref[v.label] = ref_json(v);
        for (const auto& v : reference::cu_linear_entropies()) ref[v.label] = ref_json(v);
        for (const auto& v : reference::interference_visibilities()) ref[v.label] = ref_json(v);
        report["published_reference"] = ref;
    } else {
        throw InputError("unknown figure '" + a.figure + "' (fig2|fig3|fig4)");
    }
    if (!a.out.empty()) write_file(a.out, report.dump(2) + "\n");
    std::cout << report.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsl: qudit shortcut circuits, heralded linear optics, and tomography"};
    app.require_subcommand(1);

    CircuitsArgs ca;
    auto* circuits = app.add_subcommand("circuits", "synthesize shortcut circuits and cost reports");
    circuits->add_option("--kind", ca.kind, "ts|toffoli|ntoffoli|cnz|cnu|textbook6|addcontrols")
        ->required();
    circuits->add_option("--n", ca.n, "number of controls / added controls");
    circuits->add_option("--pattern", ca.pattern, "fire pattern bits C_1..C_n (default all 1)");
    circuits->add_option("--theta", ca.theta, "phase angle");
    circuits->add_option("--u", ca.u_name, "unitary for cnu: x|z|h|t|zrot");
    circuits->add_option("--k", ca.k, "addcontrols fixture target qubits (1|2)");
    circuits->add_option("--flip", ca.flip, "toffoli flip pattern (two bits)");
    circuits->add_option("--out", ca.out, "circuit file path");
    circuits->add_option("--costs", ca.costs, "cost report JSON path");
    circuits->add_flag("--verify", ca.verify, "check against the dense oracle");

    OpticsArgs oa;
    auto* optics_cmd = app.add_subcommand("optics", "heralded linear-optics simulation");
    optics_cmd->add_option("--layout", oa.layout, "cz|cu|toffoli")->required();
    optics_cmd->add_option("--theta", oa.theta, "Z_theta angle for the cu layout");
    optics_cmd->add_option("--power", oa.power, "pump power scale (0 = ideal single photons)");
    optics_cmd->add_option("--epsilon", oa.epsilon_full, "pair amplitude at power 1");
    optics_cmd->add_option("--xi", oa.xi, "independent-photon mode overlap");
    optics_cmd->add_option("--shots", oa.shots, "shots per setting");
    std::optional<uint64_t> oseed;
    optics_cmd->add_option("--seed", oseed, "RNG seed (or QSL_SEED)");
    optics_cmd->add_option("--outdir", oa.outdir, "output directory");
    optics_cmd->add_option("--mode", oa.mode, "map|truthtable|state|process");
    optics_cmd->add_option("--input", oa.input, "input preparation, e.g. 0D0 or HV");
    optics_cmd->add_flag("--exact", oa.exact, "emit expected counts instead of Poisson samples");
    optics_cmd->add_flag("--prebias", oa.prebias, "remove L1 and pre-bias the C1 input");
    optics_cmd->add_option("--emit-experiment", oa.emit_experiment, "write experiment description");

    TomoArgs ta;
    auto* tomo_cmd = app.add_subcommand("tomo", "reconstruction and metrics");
    tomo_cmd->add_option("--mode", ta.mode, "state|process|truthtable")->required();
    tomo_cmd->add_option("--in", ta.inputs, "input counts CSV files")->required();
    tomo_cmd->add_option("--out", ta.out, "report JSON path");
    tomo_cmd->add_option("--target", ta.target, "state: bell|mixed; process: ct|cj|cl|cz|theta");
    tomo_cmd->add_option("--gate", ta.gate, "truthtable ideal gate: toffoli00|identity");
    tomo_cmd->add_option("--theta", ta.theta, "process target angle when --target=theta");
    tomo_cmd->add_option("--mc", ta.mc, "Monte-Carlo resamples (0 disables)");
    std::optional<uint64_t> tseed;
    tomo_cmd->add_option("--seed", tseed, "RNG seed (or QSL_SEED)");

    ReportArgs ra;
    auto* report_cmd = app.add_subcommand("report", "figure-style consolidated reports");
    report_cmd->add_option("--figure", ra.figure, "fig2|fig3|fig4")->required();
    report_cmd->add_option("--in", ra.inputs, "input report JSONs")->required();
    report_cmd->add_option("--out", ra.out, "output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (circuits->parsed()) return cmd_circuits(ca);
        if (optics_cmd->parsed()) {
            oa.seed = oseed;
            return cmd_optics(oa);
        }
        if (tomo_cmd->parsed()) {
            ta.seed = tseed;
            return cmd_tomo(ta);
        }
        if (report_cmd->parsed()) return cmd_report(ra);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
