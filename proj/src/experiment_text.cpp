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

#include "qsl/optics/experiment_text.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qsl::optics {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::string bracket_body(const std::string& s) {
    auto a = s.find('[');
    auto b = s.rfind(']');
    if (a == std::string::npos || b == std::string::npos || b < a)
        throw std::invalid_argument("experiment parse: expected [...] in " + s);
    return s.substr(a + 1, b - a - 1);
}

}  // namespace

std::string serialize_experiment(const OpticalExperiment& exp) {
    std::ostringstream out;
    out << "# qsl experiment v1\n";
    out << "name=" << exp.name << "\n";
    out << "rails=[";
    for (int r = 0; r < exp.table.rail_count(); ++r) {
        if (r) out << ",";
        out << exp.table.rail_name(r);
    }
    out << "]\n";
    out << "labels=" << exp.table.n_labels() << "\n";
    out << "sinks=" << exp.table.total_channels() - exp.table.physical_channels() << "\n";
    if (exp.spdc) {
        out << "source=spdc xi=" << fmt(exp.spdc->xi) << " truncation=" << exp.spdc->truncation
            << " nmax=" << exp.spdc->n_max << " passes=[";
        for (size_t i = 0; i < exp.spdc->passes.size(); ++i) {
            if (i) out << ",";
            const auto& p = exp.spdc->passes[i];
            out << "(" << p.rail_a << "," << p.rail_b << "," << fmt(p.epsilon) << ")";
        }
        out << "]\n";
    } else {
        out << "source=ideal extra=[";
        for (size_t i = 0; i < exp.ideal.extra_photons.size(); ++i) {
            if (i) out << ",";
            out << "(" << exp.ideal.extra_photons[i].first << ","
                << (exp.ideal.extra_photons[i].second == Pol::H ? "H" : "V") << ")";
        }
        out << "]\n";
    }
    auto rail_list = [&](const std::vector<int>& rails) {
        std::string s = "[";
        for (size_t i = 0; i < rails.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(rails[i]);
        }
        return s + "]";
    };
    out << "inputs=" << rail_list(exp.encoding.input_rails) << "\n";
    out << "outputs=" << rail_list(exp.encoding.output_rails) << "\n";
    for (const auto& d : exp.herald.detectors) {
        out << "detector name=" << d.name << " rail=" << d.rail << " count=" << d.count
            << " mode=" << (d.threshold ? "threshold" : "exact") << " analyzed=" << (d.analyzed ? 1 : 0)
            << "\n";
    }
    for (const auto& l : exp.layers) {
        out << "layer name=" << l.name << " entries=[";
        bool first = true;
        for (long r = 0; r < l.m.rows(); ++r) {
            for (long c = 0; c < l.m.cols(); ++c) {
                cdouble v = l.m(r, c);
                cdouble expect = (r == c) ? cdouble(1.0) : cdouble(0.0);
                if (v == expect) continue;  // store deviations from identity
                if (!first) out << ",";
                first = false;
                out << "(" << r << "," << c << "," << fmt(v.real()) << "," << fmt(v.imag()) << ")";
            }
        }
        out << "]\n";
    }
    for (const auto& s : exp.slots) {
        out << "slot name=" << s.name << " layer=" << s.layer_index << " channel=" << s.channel
            << " sink=" << s.sink_channel << " amp=" << fmt(s.amplitude) << "\n";
    }
    if (!exp.prebias.empty()) {
        out << "prebias=[";
        for (size_t i = 0; i < exp.prebias.size(); ++i) {
            if (i) out << ",";
            out << "(" << fmt(exp.prebias[i](0).real()) << "," << fmt(exp.prebias[i](0).imag())
                << "," << fmt(exp.prebias[i](1).real()) << "," << fmt(exp.prebias[i](1).imag())
                << ")";
        }
        out << "]\n";
    }
    return out.str();
}

OpticalExperiment parse_experiment(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string name;
    std::vector<std::string> rails;
    int labels = 2, sinks = 0;
    std::optional<SourceConfig> spdc;
    IdealSource ideal;
    std::vector<int> inputs, outputs;
    std::vector<Detector> detectors;
    struct RawLayer {
        std::string name;
        std::vector<std::tuple<long, long, double, double>> entries;
    };
    std::vector<RawLayer> raw_layers;
    std::vector<AttenuationSlot> slots;
    std::vector<Vector> prebias;

    auto kv = [&](const std::string& item, const std::string& key) -> std::string {
        auto pos = item.find(key + "=");
        if (pos == std::string::npos)
            throw std::invalid_argument("experiment parse: missing " + key + " in: " + item);
        pos += key.size() + 1;
        size_t end = pos;
        int depth = 0;
        while (end < item.size() && (depth > 0 || item[end] != ' ')) {
            if (item[end] == '[' || item[end] == '(') ++depth;
            if (item[end] == ']' || item[end] == ')') --depth;
            ++end;
        }
        return item.substr(pos, end - pos);
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("name=", 0) == 0) {
            name = line.substr(5);
        } else if (line.rfind("rails=", 0) == 0) {
            for (auto& r : split(bracket_body(line), ',')) rails.push_back(strip(r));
        } else if (line.rfind("labels=", 0) == 0) {
            labels = std::stoi(line.substr(7));
        } else if (line.rfind("sinks=", 0) == 0) {
            sinks = std::stoi(line.substr(6));
        } else if (line.rfind("source=spdc", 0) == 0) {
            SourceConfig cfg;
            cfg.xi = std::stod(kv(line, "xi"));
            cfg.truncation = std::stoi(kv(line, "truncation"));
            cfg.n_max = std::stoi(kv(line, "nmax"));
            for (auto& p : split(bracket_body(kv(line, "passes")), ',')) {
                if (strip(p).empty()) continue;
                auto body = strip(p);
                auto parts = split(body.substr(1, body.size() - 2), ',');
                cfg.passes.push_back(
                    {std::stoi(parts[0]), std::stoi(parts[1]), std::stod(parts[2])});
            }
            spdc = cfg;
        } else if (line.rfind("source=ideal", 0) == 0) {
            for (auto& p : split(bracket_body(kv(line, "extra")), ',')) {
                auto body = strip(p);
                if (body.empty()) continue;
                auto parts = split(body.substr(1, body.size() - 2), ',');
                ideal.extra_photons.push_back(
                    {std::stoi(parts[0]), strip(parts[1]) == "H" ? Pol::H : Pol::V});
            }
        } else if (line.rfind("inputs=", 0) == 0) {
            for (auto& r : split(bracket_body(line), ',')) inputs.push_back(std::stoi(strip(r)));
        } else if (line.rfind("outputs=", 0) == 0) {
            for (auto& r : split(bracket_body(line), ',')) outputs.push_back(std::stoi(strip(r)));
        } else if (line.rfind("detector ", 0) == 0) {
            Detector d;
            d.name = kv(line, "name");
            d.rail = std::stoi(kv(line, "rail"));
            d.count = std::stoi(kv(line, "count"));
            d.threshold = kv(line, "mode") == "threshold";
            d.analyzed = kv(line, "analyzed") == "1";
            detectors.push_back(d);
        } else if (line.rfind("layer ", 0) == 0) {
            RawLayer rl;
            rl.name = kv(line, "name");
            for (auto& e : split(bracket_body(kv(line, "entries")), ',')) {
                auto body = strip(e);
                if (body.empty()) continue;
                auto parts = split(body.substr(1, body.size() - 2), ',');
                rl.entries.push_back({std::stol(parts[0]), std::stol(parts[1]),
                                      std::stod(parts[2]), std::stod(parts[3])});
            }
            raw_layers.push_back(std::move(rl));
        } else if (line.rfind("slot ", 0) == 0) {
            AttenuationSlot s;
            s.name = kv(line, "name");
            s.layer_index = static_cast<size_t>(std::stol(kv(line, "layer")));
            s.channel = std::stoi(kv(line, "channel"));
            s.sink_channel = std::stoi(kv(line, "sink"));
            s.amplitude = std::stod(kv(line, "amp"));
            slots.push_back(s);
        } else if (line.rfind("prebias=", 0) == 0) {
            for (auto& e : split(bracket_body(line), ',')) {
                auto body = strip(e);
                if (body.empty()) continue;
                auto parts = split(body.substr(1, body.size() - 2), ',');
                Vector v(2);
                v << cdouble(std::stod(parts[0]), std::stod(parts[1])),
                    cdouble(std::stod(parts[2]), std::stod(parts[3]));
                prebias.push_back(v);
            }
        } else {
            throw std::invalid_argument("experiment parse: unknown line: " + line);
        }
    }
    if (rails.empty()) throw std::invalid_argument("experiment parse: missing rails");
    ChannelTable table(rails, labels);
    for (int i = 0; i < sinks; ++i) table.add_sink("sink" + std::to_string(i));
    const int nc = table.total_channels();
    OpticalExperiment exp{table, {}, {detectors}, {inputs, outputs}, spdc, ideal, slots, name};
    exp.prebias = prebias;
    for (const auto& rl : raw_layers) {
        Matrix m = Matrix::Identity(nc, nc);
        // Entries record deviations from identity, diagonal included.
        for (const auto& [r, c, re, im] : rl.entries) m(r, c) = cdouble(re, im);
        exp.layers.push_back(LinearLayer(std::move(m), rl.name));
    }
    return exp;
}

}  // namespace qsl::optics
