// Copyright 2026 The gqc Authors
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

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gqc/compiler.hpp"

namespace gqc {

namespace {

std::map<std::string, std::string> key_values(std::istringstream &in, const std::string &where) {
    std::map<std::string, std::string> kv;
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) {
            fail(ErrorCode::kParse, "expected key=value, got '" + tok + "'" + where);
        }
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

template <typename T>
T parse_number(const std::map<std::string, std::string> &kv, const std::string &key, const std::string &where) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        fail(ErrorCode::kParse, "missing " + key + "=" + where);
    }
    try {
        std::size_t used = 0;
        T v;
        if constexpr (std::is_same_v<T, double>) {
            v = std::stod(it->second, &used);
        } else {
            v = static_cast<T>(std::stoll(it->second, &used));
        }
        if (used == it->second.size()) {
            return v;
        }
    } catch (const std::logic_error &) {
    }
    fail(ErrorCode::kParse, "bad value for " + key + ": '" + it->second + "'" + where);
}

void expect_keys(const std::map<std::string, std::string> &kv, std::initializer_list<const char *> keys,
                 const std::string &where) {
    for (const auto &[k, v] : kv) {
        bool known = false;
        for (const char *allowed : keys) {
            known = known || k == allowed;
        }
        if (!known) {
            fail(ErrorCode::kParse, "unknown key '" + k + "'" + where);
        }
    }
}

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

CMatrix read_matrix_file(const std::string &path, int d) {
    std::ifstream f(path);
    if (!f) {
        fail(ErrorCode::kIo, "cannot open matrix file " + path);
    }
    CMatrix m(d, d);
    std::string line;
    int row = 0;
    while (std::getline(f, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (row >= d) {
            fail(ErrorCode::kParse, path + ": more than " + std::to_string(d) + " rows");
        }
        std::istringstream in(line);
        std::string entry;
        int col = 0;
        while (in >> entry) {
            if (col >= d) {
                fail(ErrorCode::kParse, path + ": row " + std::to_string(row + 1) + " has too many entries");
            }
            double re = 0, im = 0;
            char tail = 0;
            int got = std::sscanf(entry.c_str(), "%lf,%lf%c", &re, &im, &tail);
            if (got != 1 && got != 2) {
                fail(ErrorCode::kParse, path + ": bad entry '" + entry + "'");
            }
            m(row, col++) = cplx(re, got == 2 ? im : 0.0);
        }
        if (col != d) {
            fail(ErrorCode::kParse, path + ": row " + std::to_string(row + 1) + " needs " + std::to_string(d) +
                                        " entries");
        }
        row++;
    }
    if (row != d) {
        fail(ErrorCode::kParse, path + ": expected " + std::to_string(d) + " rows");
    }
    return m;
}

std::vector<LogicalGate> parse_circuit(const std::string &text, int d, const std::string &base_dir) {
    std::vector<LogicalGate> gates;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::string where = " (circuit line " + std::to_string(line_no) + ")";
        std::istringstream toks(line);
        std::string op;
        toks >> op;
        auto kv = key_values(toks, where);
        LogicalGate g;
        if (op == "ROT") {
            expect_keys(kv, {"l", "a", "b", "part", "angle"}, where);
            auto part = kv.find("part");
            if (part == kv.end() || (part->second != "S" && part->second != "A")) {
                fail(ErrorCode::kParse, "part must be S or A" + where);
            }
            g = LogicalGate::rotation(parse_number<int>(kv, "l", where),
                                      {parse_number<std::int64_t>(kv, "a", where), parse_number<std::int64_t>(kv, "b", where)},
                                      part->second == "S" ? Part::kSymmetric : Part::kAntisymmetric,
                                      parse_number<double>(kv, "angle", where));
        } else if (op == "UNI") {
            expect_keys(kv, {"l", "matrix"}, where);
            auto path = kv.find("matrix");
            if (path == kv.end()) {
                fail(ErrorCode::kParse, "missing matrix=" + where);
            }
            std::filesystem::path p(path->second);
            if (p.is_relative()) {
                p = std::filesystem::path(base_dir) / p;
            }
            g = LogicalGate::single_unitary(parse_number<int>(kv, "l", where), read_matrix_file(p.string(), d));
        } else if (op == "ENT") {
            expect_keys(kv, {"l", "u", "angle"}, where);
            g = LogicalGate::entangle(parse_number<int>(kv, "l", where), parse_number<std::int64_t>(kv, "u", where),
                                      parse_number<double>(kv, "angle", where));
        } else {
            fail(ErrorCode::kParse, "unknown gate '" + op + "'" + where);
        }
        g.source = line;
        gates.push_back(std::move(g));
    }
    return gates;
}

std::string format_program(const PulseProgram &program) {
    std::ostringstream os;
    os << "# gqc program d=" << program.d << " N=" << program.n_sites << "\n";
    std::size_t next = 0;
    auto emit_until = [&](std::size_t end) {
        for (; next < end; next++) {
            os << primitive_to_string(program.ops[next]) << "\n";
        }
    };
    for (std::size_t i = 0; i < program.provenance.size(); i++) {
        const auto &e = program.provenance[i];
        emit_until(e.begin);
        os << "# gate " << i + 1 << ": " << e.source << "\n";
        emit_until(e.end);
    }
    emit_until(program.ops.size());
    for (std::size_t i = 0; i < program.provenance.size(); i++) {
        const auto &e = program.provenance[i];
        os << "# cost gate " << i + 1 << ": " << e.end - e.begin << "\n";
    }
    os << "# cost total: " << program.cost() << "\n";
    return os.str();
}

PulseProgram parse_program(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    PulseProgram p{0, 0, {}, {}};
    bool have_header = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            int d = 0, n = 0;
            if (std::sscanf(line.c_str(), "# gqc program d=%d N=%d", &d, &n) == 2) {
                p.d = d;
                p.n_sites = n;
                have_header = true;
                continue;
            }
            if (line.rfind("# gate ", 0) == 0) {
                auto colon = line.find(": ");
                if (colon == std::string::npos) {
                    fail(ErrorCode::kParse, "bad provenance comment on program line " + std::to_string(line_no));
                }
                if (!p.provenance.empty()) {
                    p.provenance.back().end = p.ops.size();
                }
                p.provenance.push_back({line.substr(colon + 2), p.ops.size(), p.ops.size()});
            }
            continue;
        }
        try {
            p.ops.push_back(parse_primitive(line));
        } catch (const Error &e) {
            fail(ErrorCode::kParse, std::string(e.what()) + " (program line " + std::to_string(line_no) + ")");
        }
    }
    if (!have_header) {
        fail(ErrorCode::kParse, "program needs a '# gqc program d=<d> N=<N>' header");
    }
    if (!p.provenance.empty()) {
        p.provenance.back().end = p.ops.size();
    }
    return p;
}

}  // namespace gqc
