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

#include "qsl/core/circuit_text.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qsl::core {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw std::invalid_argument("circuit parse: expected '" + std::string(1, c) + "' in: " + s);
    }
    std::string token() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (start == pos) throw std::invalid_argument("circuit parse: expected token in: " + s);
        return s.substr(start, pos - start);
    }
    double number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' ||
                                  s[pos] == '+' || s[pos] == '.' || s[pos] == 'e' || s[pos] == 'E'))
            ++pos;
        double v = 0.0;
        auto res = std::from_chars(s.data() + start, s.data() + pos, v);
        if (res.ec != std::errc() || start == pos)
            throw std::invalid_argument("circuit parse: bad number in: " + s);
        return v;
    }
    int integer() { return static_cast<int>(number()); }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
};

std::vector<double> parse_bracket_list(Cursor& cur) {
    std::vector<double> out;
    cur.expect('[');
    if (cur.eat(']')) return out;
    out.push_back(cur.number());
    while (cur.eat(',')) out.push_back(cur.number());
    cur.expect(']');
    return out;
}

std::vector<ControlSpec> parse_controls(Cursor& cur) {
    std::vector<ControlSpec> out;
    cur.expect('[');
    if (cur.eat(']')) return out;
    do {
        cur.expect('(');
        int carrier = cur.integer();
        cur.expect(',');
        int value = cur.integer();
        cur.expect(')');
        out.push_back({carrier, value});
    } while (cur.eat(','));
    cur.expect(']');
    return out;
}

}  // namespace

std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "# qsl circuit v1\n";
    out << "dims=[";
    for (size_t i = 0; i < c.shape.dims().size(); ++i) {
        if (i) out << ",";
        out << c.shape.dims()[i];
    }
    out << "]\n";
    for (const auto& g : c.gates) {
        std::string name;
        std::vector<double> params;
        if (g.is_level_swap()) {
            name = "LSWAP";
            params = {static_cast<double>(g.level_swap().level_a),
                      static_cast<double>(g.level_swap().level_b)};
        } else {
            const auto& gm = g.matrix_gate();
            if (gm.label == "X" || gm.label == "Y" || gm.label == "Z" || gm.label == "H" ||
                gm.label == "T" || gm.label == "TDG") {
                name = gm.label;
            } else if (gm.label == "ZTHETA") {
                name = "ZTHETA";
                params = gm.params;
            } else {
                if (gm.arity != 1)
                    throw std::invalid_argument("serialize_circuit: only 1- and named gates supported");
                name = "MAT2";
                params.reserve(8);
                for (int r = 0; r < 2; ++r)
                    for (int cc = 0; cc < 2; ++cc) {
                        params.push_back(gm.matrix(r, cc).real());
                        params.push_back(gm.matrix(r, cc).imag());
                    }
            }
        }
        out << name << " targets=[";
        for (size_t i = 0; i < g.targets.size(); ++i) {
            if (i) out << ",";
            out << g.targets[i];
        }
        out << "]";
        if (!g.controls.empty()) {
            out << " controls=[";
            for (size_t i = 0; i < g.controls.size(); ++i) {
                if (i) out << ",";
                out << "(" << g.controls[i].carrier << "," << g.controls[i].value << ")";
            }
            out << "]";
        }
        if (!params.empty()) {
            out << " params=[";
            for (size_t i = 0; i < params.size(); ++i) {
                if (i) out << ",";
                out << fmt_double(params[i]);
            }
            out << "]";
        }
        out << "\n";
    }
    return out.str();
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<RegisterShape> shape;
    std::vector<PlacedGate> gates;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        Cursor cur{line};
        if (cur.at_end()) continue;
        cur.skip_ws();
        if (line[cur.pos] == '#') continue;
        if (line.compare(cur.pos, 5, "dims=") == 0) {
            cur.pos += 5;
            auto nums = parse_bracket_list(cur);
            std::vector<int> dims(nums.size());
            for (size_t i = 0; i < nums.size(); ++i) dims[i] = static_cast<int>(nums[i]);
            shape = RegisterShape(dims);
            continue;
        }
        std::string name = cur.token();
        std::vector<int> targets;
        std::vector<ControlSpec> controls;
        std::vector<double> params;
        while (!cur.at_end()) {
            std::string key = cur.token();
            cur.expect('=');
            if (key == "targets") {
                for (double v : parse_bracket_list(cur)) targets.push_back(static_cast<int>(v));
            } else if (key == "controls") {
                controls = parse_controls(cur);
            } else if (key == "params") {
                params = parse_bracket_list(cur);
            } else {
                throw std::invalid_argument("circuit parse: unknown field '" + key + "'");
            }
        }
        PlacedGate g = [&]() -> PlacedGate {
            if (name == "LSWAP") {
                if (params.size() != 2) throw std::invalid_argument("LSWAP needs params=[a,b]");
                return PlacedGate{LevelSwap(static_cast<int>(params[0]), static_cast<int>(params[1])),
                                  targets, controls};
            }
            if (name == "X") return PlacedGate{gate::x(), targets, controls};
            if (name == "Y") return PlacedGate{gate::y(), targets, controls};
            if (name == "Z") return PlacedGate{gate::z(), targets, controls};
            if (name == "H") return PlacedGate{gate::h(), targets, controls};
            if (name == "T") return PlacedGate{gate::t(), targets, controls};
            if (name == "TDG") return PlacedGate{gate::tdg(), targets, controls};
            if (name == "ZTHETA") {
                if (params.size() != 1) throw std::invalid_argument("ZTHETA needs params=[theta]");
                return PlacedGate{gate::z_theta(params[0]), targets, controls};
            }
            if (name == "MAT2") {
                if (params.size() != 8) throw std::invalid_argument("MAT2 needs 8 params");
                Matrix m(2, 2);
                m << cdouble(params[0], params[1]), cdouble(params[2], params[3]),
                    cdouble(params[4], params[5]), cdouble(params[6], params[7]);
                return PlacedGate{gate::from_matrix2(m), targets, controls};
            }
            throw std::invalid_argument("circuit parse: unknown gate '" + name + "'");
        }();
        gates.push_back(std::move(g));
    }
    if (!shape) throw std::invalid_argument("circuit parse: missing dims=[...] line");
    return Circuit(*shape, std::move(gates));
}

}  // namespace qsl::core
