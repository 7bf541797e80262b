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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gqc/gqc.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CliError {
    gqc_status status;
    std::string message;
};

int exit_code_for(gqc_status s) {
    switch (s) {
        case GQC_OK:
            return kExitPass;
        case GQC_RESOURCE_CAP:
            return kExitResource;
        case GQC_INVALID_ARGUMENT:
        case GQC_DOMAIN:
        case GQC_UNSUPPORTED_DIMENSION:
        case GQC_DEGENERATE_ELEMENT:
        case GQC_PARSE:
        case GQC_IO:
            return kExitUsage;
        default:
            return kExitFail;
    }
}

void check(gqc_status s) {
    if (s != GQC_OK) {
        throw CliError{s, gqc_last_error()};
    }
}

std::string take(char *s) {
    std::string out = s ? s : "";
    gqc_string_free(s);
    return out;
}

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError{GQC_IO, "cannot open " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw CliError{GQC_IO, "cannot write " + path};
    }
}

std::string dir_of(const std::string &path) {
    auto parent = std::filesystem::path(path).parent_path();
    return parent.empty() ? std::string(".") : parent.string();
}

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// Emits the output either to --out or stdout; the report always goes to stdout.
void emit(const std::string &out_path, const std::string &text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text(out_path, text);
    }
}

struct Common {
    int d = 2;
    int n_sites = 6;
    uint64_t seed = 1;
    double tol = 1e-4;
    int64_t shots = 1000;
    std::string out;
};

int cmd_compile(const Common &c, const std::string &circuit_path, int slices, bool ancilla) {
    std::ostringstream rep;
    rep << "# gqc compile circuit=" << circuit_path << " d=" << c.d << " N=" << c.n_sites << " tol=" << c.tol
        << " slices=" << slices << " entangle=" << (ancilla ? "ancilla" : "time-shift")
        << " out=" << (c.out.empty() ? "-" : c.out) << "\n";
    std::string text = read_text(circuit_path);
    gqc_circuit *circuit = nullptr;
    check(gqc_circuit_parse(text.c_str(), c.d, dir_of(circuit_path).c_str(), &circuit));
    std::unique_ptr<gqc_circuit, decltype(&gqc_circuit_free)> circuit_guard(circuit, gqc_circuit_free);
    gqc_compile_options opts{c.tol, slices, 0, ancilla ? 1 : 0};
    gqc_program *program = nullptr;
    check(gqc_compile(circuit, c.n_sites, c.d, &opts, &program));
    std::unique_ptr<gqc_program, decltype(&gqc_program_free)> program_guard(program, gqc_program_free);

    size_t n_gates = 0;
    check(gqc_program_num_gates(program, &n_gates));
    for (size_t i = 0; i < n_gates; i++) {
        size_t cost = 0;
        char *src = nullptr;
        check(gqc_program_gate(program, i, &cost, &src));
        rep << "gate " << i << " cost=" << cost << " source=" << take(src) << "\n";
        gqc_gate_info info{};
        check(gqc_circuit_gate(circuit, i, &info));
        if (info.kind == GQC_GATE_ROTATION) {
            size_t core = 0;
            check(gqc_single_run_core_cost(c.n_sites, c.d, info.a, info.b, info.site, &core));
            rep << "gate " << i << " core_cost=" << core;
            int formula = 0;
            if (gqc_op_count(c.n_sites, info.site, &formula) == GQC_OK) {
                rep << " op_count_formula=" << formula << (static_cast<size_t>(formula) == core ? " match" : " mismatch");
            }
            rep << "\n";
        }
    }
    size_t total = 0;
    check(gqc_program_cost(program, &total));
    rep << "cost total=" << total << "\n";
    char *prog_text = nullptr;
    check(gqc_program_format(program, &prog_text));
    std::string program_text = take(prog_text);
    if (c.out.empty()) {
        std::cout << rep.str() << program_text;
    } else {
        write_text(c.out, program_text);
        std::cout << rep.str();
    }
    return kExitPass;
}

int cmd_verify(const Common &c, const std::string &program_path, int trials, bool ancilla, bool d_set, bool n_set,
               const std::string &base_dir) {
    std::string text = read_text(program_path);
    gqc_program *program = nullptr;
    check(gqc_program_parse(text.c_str(), &program));
    std::unique_ptr<gqc_program, decltype(&gqc_program_free)> program_guard(program, gqc_program_free);
    int d = 0, n = 0;
    check(gqc_program_shape(program, &d, &n));
    if ((d_set && d != c.d) || (n_set && n != c.n_sites)) {
        throw CliError{GQC_INVALID_ARGUMENT, "program was built for d=" + std::to_string(d) +
                                                 " N=" + std::to_string(n)};
    }
    std::ostringstream rep;
    rep << "# gqc verify program=" << program_path << " d=" << d << " N=" << n << " trials=" << trials
        << " seed=" << c.seed << " tol=" << c.tol << " entangle=" << (ancilla ? "ancilla" : "time-shift") << "\n";
    gqc_circuit *circuit = nullptr;
    std::string base = base_dir.empty() ? dir_of(program_path) : base_dir;
    check(gqc_program_circuit(program, base.c_str(), &circuit));
    std::unique_ptr<gqc_circuit, decltype(&gqc_circuit_free)> circuit_guard(circuit, gqc_circuit_free);
    gqc_verify_report r{};
    check(gqc_verify(program, circuit, trials, c.seed, ancilla ? 1 : 0, &r));
    bool pass = r.min_fidelity > 1.0 - c.tol;
    rep << "min_fidelity=" << fmt("%.15f", r.min_fidelity) << "\n";
    rep << "mean_fidelity=" << fmt("%.15f", r.mean_fidelity) << "\n";
    rep << "result=" << (pass ? "PASS" : "FAIL") << "\n";
    emit(c.out, rep.str());
    return pass ? kExitPass : kExitFail;
}

int cmd_solve(const Common &c, double u, double v, int site, bool cv) {
    std::ostringstream rep;
    rep << "# gqc solve N=" << c.n_sites << " d=" << (cv ? std::string("cv") : std::to_string(c.d)) << " u=" << u
        << " v=" << v << " l=" << site << "\n";
    int exact = 0;
    char *text = nullptr;
    if (cv) {
        double kappa = 0;
        check(gqc_solve_peak_cv(c.n_sites, u, v, site, &exact, &kappa, &text));
    } else {
        int64_t kappa = 0;
        if (u != static_cast<int64_t>(u) || v != static_cast<int64_t>(v)) {
            throw CliError{GQC_INVALID_ARGUMENT, "u and v must be integers over Z_d"};
        }
        check(gqc_solve_peak(c.n_sites, c.d, static_cast<int64_t>(u), static_cast<int64_t>(v), site, &exact, &kappa,
                             &text));
    }
    rep << take(text);
    emit(c.out, rep.str());
    return exact ? kExitPass : kExitFail;
}

int cmd_cv(const Common &c, int power, double alpha, int n_max, int grid) {
    std::ostringstream rep;
    rep << "# gqc cv f=q^" << power << " alpha=" << alpha << " n_max=" << n_max << " grid=" << grid
        << " window=|alpha f(q)|<pi norm=sup\n";
    std::vector<int> rows;
    for (int n = 10; n < n_max; n *= 10) {
        rows.push_back(n);
    }
    rows.push_back(n_max);
    rep << "# n_max eps_sup eps_rms eps_sup_coordinate_window\n";
    bool monotone = true;
    double prev = 0;
    for (size_t i = 0; i < rows.size(); i++) {
        gqc_cv_options sup{grid, 0, 0}, rms{grid, 0, 1}, coord{grid, 1, 0};
        double e_sup = 0, e_rms = 0, e_coord = 0;
        check(gqc_cv_error(power, alpha, rows[i], &sup, &e_sup));
        check(gqc_cv_error(power, alpha, rows[i], &rms, &e_rms));
        check(gqc_cv_error(power, alpha, rows[i], &coord, &e_coord));
        if (i > 0 && !(e_sup < prev)) {
            monotone = false;
        }
        prev = e_sup;
        rep << rows[i] << " " << fmt("%.6e", e_sup) << " " << fmt("%.6e", e_rms) << " " << fmt("%.6e", e_coord)
            << "\n";
    }
    rep << "monotone=" << (monotone ? "yes" : "no") << "\n";
    emit(c.out, rep.str());
    return monotone ? kExitPass : kExitFail;
}

int cmd_readout(const Common &c, const std::string &state_path, int site) {
    gqc_state *state = nullptr;
    check(gqc_state_read(state_path.c_str(), &state));
    std::unique_ptr<gqc_state, decltype(&gqc_state_free)> state_guard(state, gqc_state_free);
    int d = 0, n = 0, two = 0;
    check(gqc_state_shape(state, &d, &n, &two));
    std::ostringstream rep;
    rep << "# gqc readout state=" << state_path << " d=" << d << " N=" << n
        << " layout=" << (two ? "data+ancilla" : "single") << " l=" << site << " shots=" << c.shots
        << " seed=" << c.seed << "\n";
    std::vector<double> dist(d);
    std::vector<int64_t> counts(d);
    check(gqc_readout(state, site, c.shots, c.seed, dist.data(), counts.data()));
    rep << "# outcome probability count\n";
    for (int k = 0; k < d; k++) {
        rep << k << " " << fmt("%.12f", dist[k]) << " " << counts[k] << "\n";
    }
    emit(c.out, rep.str());
    return kExitPass;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"gqc: global-control qudit chain compiler and simulator"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--d", c.d, "local dimension")->capture_default_str();
        sub->add_option("--N", c.n_sites, "number of chain sites")->capture_default_str();
        sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
        sub->add_option("--tol", c.tol, "tolerance")->capture_default_str();
        sub->add_option("--shots", c.shots, "measurement shots")->capture_default_str();
        sub->add_option("--out", c.out, "output file");
    };

    std::string circuit_path, program_path, state_path, base_dir;
    int slices = 0, trials = 20, site = 1, power = 3, n_max = 1000, grid = 10000;
    bool ancilla = false, cv = false;
    double u = 1, v = 0, alpha = 1;

    auto *compile = app.add_subcommand("compile", "compile a logical circuit to a global pulse program");
    add_common(compile);
    compile->add_option("circuit", circuit_path, "circuit file")->required();
    compile->add_option("--slices", slices, "Trotter slices (0 = automatic)");
    compile->add_flag("--ancilla", ancilla, "ancilla-interleaved entangler");

    auto *verify = app.add_subcommand("verify", "check a program against direct logical execution");
    add_common(verify);
    verify->add_option("program", program_path, "program file")->required();
    verify->add_option("--trials", trials, "random encoded inputs")->capture_default_str();
    verify->add_option("--base", base_dir, "directory for matrix files named in gate sources");
    verify->add_flag("--ancilla", ancilla, "ancilla-interleaved entangler");

    auto *solve = app.add_subcommand("solve", "solve for a pulse schedule producing a peak");
    add_common(solve);
    solve->add_option("--u", u, "X exponent")->capture_default_str();
    solve->add_option("--v", v, "Z exponent")->capture_default_str();
    solve->add_option("--l", site, "peak site")->capture_default_str();
    solve->add_flag("--cv", cv, "continuous-variable chain");

    auto *cvcmd = app.add_subcommand("cv", "Fourier approximation error table");
    add_common(cvcmd);
    cvcmd->add_option("--power", power, "monomial power k in f(q)=q^k")->capture_default_str();
    cvcmd->add_option("--alpha", alpha, "rotation strength")->capture_default_str();
    cvcmd->add_option("--nmax", n_max, "largest harmonic")->capture_default_str();
    cvcmd->add_option("--grid", grid, "grid points")->capture_default_str();

    auto *readout = app.add_subcommand("readout", "swap readout of one site");
    add_common(readout);
    readout->add_option("state", state_path, "state file")->required();
    readout->add_option("--l", site, "site to read")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*compile) return cmd_compile(c, circuit_path, slices, ancilla);
        if (*verify) {
            return cmd_verify(c, program_path, trials, ancilla, verify->count("--d") > 0, verify->count("--N") > 0,
                              base_dir);
        }
        if (*solve) return cmd_solve(c, u, v, site, cv);
        if (*cvcmd) return cmd_cv(c, power, alpha, n_max, grid);
        if (*readout) return cmd_readout(c, state_path, site);
    } catch (const CliError &e) {
        std::cerr << "gqc: " << gqc_status_name(e.status) << ": " << e.message << "\n";
        return exit_code_for(e.status);
    }
    return kExitUsage;
}
