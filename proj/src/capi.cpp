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

#include <cstring>
#include <filesystem>
#include <string>

#include "gqc/compiler.hpp"
#include "gqc/cvapprox.hpp"
#include "gqc/gqc.h"

struct gqc_circuit {
    int d = 2;
    std::vector<gqc::LogicalGate> gates;
};

struct gqc_program {
    gqc::PulseProgram program;
};

struct gqc_state {
    gqc::DenseState state;
};

namespace {

thread_local std::string last_error;

gqc_status to_status(gqc::ErrorCode code) {
    return static_cast<gqc_status>(static_cast<int>(code));
}

template <typename Fn>
gqc_status guard(Fn &&fn) {
    try {
        fn();
        last_error.clear();
        return GQC_OK;
    } catch (const gqc::Error &e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return GQC_RESOURCE_CAP;
    } catch (const std::exception &e) {
        last_error = e.what();
        return GQC_INTERNAL;
    }
}

void require(const void *p, const char *what) {
    if (p == nullptr) {
        gqc::fail(gqc::ErrorCode::kInvalidArgument, std::string(what) + " is null");
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char *gqc_last_error(void) {
    return last_error.c_str();
}

const char *gqc_status_name(gqc_status status) {
    if (status == GQC_OK) {
        return "ok";
    }
    return gqc::error_code_name(static_cast<gqc::ErrorCode>(status));
}

void gqc_string_free(char *s) {
    std::free(s);
}

gqc_status gqc_solve_peak(int n_sites, int d, int64_t u, int64_t v, int site, int *exact, int64_t *kappa,
                          char **schedule_text) {
    return guard([&] {
        auto sol = gqc::solve_peak(n_sites, d, u, v, site);
        if (exact) *exact = sol.status == gqc::PeakStatus::kExact;
        if (kappa) *kappa = sol.kappa;
        if (schedule_text) *schedule_text = dup_string(gqc::format_schedule(sol));
    });
}

gqc_status gqc_solve_peak_cv(int n_sites, double u, double v, int site, int *exact, double *kappa,
                             char **schedule_text) {
    return guard([&] {
        auto sol = gqc::solve_peak_cv(n_sites, u, v, site);
        if (exact) *exact = sol.status == gqc::PeakStatus::kExact;
        if (kappa) *kappa = sol.kappa;
        if (schedule_text) *schedule_text = dup_string(gqc::format_schedule(sol));
    });
}

gqc_status gqc_op_count(int n_sites, int m, int *out) {
    return guard([&] {
        require(out, "out");
        *out = gqc::op_count(n_sites, m);
    });
}

gqc_status gqc_single_run_core_cost(int n_sites, int d, int64_t u, int64_t v, int site, size_t *out) {
    return guard([&] {
        require(out, "out");
        *out = gqc::single_run_core_cost(n_sites, d, u, v, site);
    });
}

gqc_status gqc_circuit_parse(const char *text, int d, const char *base_dir, gqc_circuit **out) {
    return guard([&] {
        require(text, "text");
        require(out, "out");
        gqc::Dimension{d}.require_finite();
        auto c = std::make_unique<gqc_circuit>();
        c->d = d;
        c->gates = gqc::parse_circuit(text, d, base_dir ? base_dir : ".");
        *out = c.release();
    });
}

gqc_status gqc_circuit_size(const gqc_circuit *circuit, size_t *out) {
    return guard([&] {
        require(circuit, "circuit");
        require(out, "out");
        *out = circuit->gates.size();
    });
}

gqc_status gqc_circuit_gate(const gqc_circuit *circuit, size_t index, gqc_gate_info *out) {
    return guard([&] {
        require(circuit, "circuit");
        require(out, "out");
        if (index >= circuit->gates.size()) {
            gqc::fail(gqc::ErrorCode::kDomain, "gate index out of range");
        }
        const auto &g = circuit->gates[index];
        *out = gqc_gate_info{};
        out->kind = g.kind == gqc::GateKind::kSingleUnitary ? GQC_GATE_UNITARY
                    : g.kind == gqc::GateKind::kEntangle    ? GQC_GATE_ENTANGLE
                                                            : GQC_GATE_ROTATION;
        out->site = g.site;
        out->a = g.label.a;
        out->b = g.label.b;
        out->antisymmetric = g.part == gqc::Part::kAntisymmetric;
        out->u = g.u;
        out->angle = g.angle;
    });
}

void gqc_circuit_free(gqc_circuit *circuit) {
    delete circuit;
}

gqc_status gqc_compile(const gqc_circuit *circuit, int n_sites, int d, const gqc_compile_options *options,
                       gqc_program **out) {
    return guard([&] {
        require(circuit, "circuit");
        require(out, "out");
        if (circuit->d != d) {
            gqc::fail(gqc::ErrorCode::kInvalidArgument, "circuit was parsed for a different d");
        }
        gqc::CompileOptions opts;
        if (options) {
            if (options->tolerance > 0) opts.tolerance = options->tolerance;
            opts.trotter_slices = options->trotter_slices;
            if (options->max_slices > 0) opts.max_slices = options->max_slices;
            opts.entangle = options->ancilla ? gqc::EntangleMethod::kAncilla : gqc::EntangleMethod::kTimeShift;
        }
        auto p = std::make_unique<gqc_program>();
        p->program = gqc::compile_circuit(circuit->gates, n_sites, d, opts);
        *out = p.release();
    });
}

gqc_status gqc_program_parse(const char *text, gqc_program **out) {
    return guard([&] {
        require(text, "text");
        require(out, "out");
        auto p = std::make_unique<gqc_program>();
        p->program = gqc::parse_program(text);
        *out = p.release();
    });
}

gqc_status gqc_program_format(const gqc_program *program, char **out) {
    return guard([&] {
        require(program, "program");
        require(out, "out");
        *out = dup_string(gqc::format_program(program->program));
    });
}

gqc_status gqc_program_shape(const gqc_program *program, int *d, int *n_sites) {
    return guard([&] {
        require(program, "program");
        if (d) *d = program->program.d;
        if (n_sites) *n_sites = program->program.n_sites;
    });
}

gqc_status gqc_program_cost(const gqc_program *program, size_t *out) {
    return guard([&] {
        require(program, "program");
        require(out, "out");
        *out = program->program.cost();
    });
}

gqc_status gqc_program_num_gates(const gqc_program *program, size_t *out) {
    return guard([&] {
        require(program, "program");
        require(out, "out");
        *out = program->program.provenance.size();
    });
}

gqc_status gqc_program_gate(const gqc_program *program, size_t index, size_t *cost, char **source) {
    return guard([&] {
        require(program, "program");
        const auto &prov = program->program.provenance;
        if (index >= prov.size()) {
            gqc::fail(gqc::ErrorCode::kDomain, "gate index out of range");
        }
        if (cost) *cost = prov[index].end - prov[index].begin;
        if (source) *source = dup_string(prov[index].source);
    });
}

gqc_status gqc_program_circuit(const gqc_program *program, const char *base_dir, gqc_circuit **out) {
    return guard([&] {
        require(program, "program");
        require(out, "out");
        std::string text;
        for (const auto &e : program->program.provenance) {
            text += e.source + "\n";
        }
        auto c = std::make_unique<gqc_circuit>();
        c->d = program->program.d;
        c->gates = gqc::parse_circuit(text, c->d, base_dir ? base_dir : ".");
        *out = c.release();
    });
}

void gqc_program_free(gqc_program *program) {
    delete program;
}

gqc_status gqc_verify(const gqc_program *program, const gqc_circuit *circuit, int trials, uint64_t seed, int ancilla,
                      gqc_verify_report *out) {
    return guard([&] {
        require(program, "program");
        require(circuit, "circuit");
        require(out, "out");
        auto r = gqc::verify_program(program->program, circuit->gates, trials, seed,
                                     ancilla ? gqc::EntangleMethod::kAncilla : gqc::EntangleMethod::kTimeShift);
        *out = gqc_verify_report{r.trials, r.min_fidelity, r.mean_fidelity};
    });
}

gqc_status gqc_state_read(const char *path, gqc_state **out) {
    return guard([&] {
        require(path, "path");
        require(out, "out");
        auto s = std::make_unique<gqc_state>();
        s->state = gqc::read_state_file(path);
        *out = s.release();
    });
}

gqc_status gqc_state_write_binary(const gqc_state *state, const char *path) {
    return guard([&] {
        require(state, "state");
        require(path, "path");
        gqc::write_state_binary(state->state, path);
    });
}

gqc_status gqc_state_format_text(const gqc_state *state, char **out) {
    return guard([&] {
        require(state, "state");
        require(out, "out");
        *out = dup_string(gqc::format_state_text(state->state));
    });
}

gqc_status gqc_state_shape(const gqc_state *state, int *d, int *n_sites, int *two_chain) {
    return guard([&] {
        require(state, "state");
        if (d) *d = state->state.dim();
        if (n_sites) *n_sites = state->state.num_sites();
        if (two_chain) *two_chain = state->state.layout() == gqc::ChainLayout::kDataPlusAncilla;
    });
}

void gqc_state_free(gqc_state *state) {
    delete state;
}

gqc_status gqc_readout(const gqc_state *state, int site, int64_t shots, uint64_t seed, double *distribution,
                       int64_t *counts) {
    return guard([&] {
        require(state, "state");
        const gqc::DenseState &s = state->state;
        gqc::DenseState two = s.layout() == gqc::ChainLayout::kSingle ? gqc::attach_ancilla_chain(s) : s;
        auto r = gqc::readout_swap(two, site);
        int d = s.dim();
        if (distribution) {
            for (int k = 0; k < d; k++) distribution[k] = r.distribution[k];
        }
        if (counts) {
            auto hist = gqc::measure(r.state, {s.num_sites() + site}, shots, seed);
            for (int k = 0; k < d; k++) counts[k] = hist.count(k) ? hist.at(k) : 0;
        }
    });
}

gqc_status gqc_cv_error(int power, double alpha, int n_max, const gqc_cv_options *options, double *out) {
    return guard([&] {
        require(out, "out");
        gqc::ApproxErrorOptions opts;
        if (options) {
            if (options->grid_points > 0) opts.grid_points = options->grid_points;
            opts.window = options->coordinate_window ? gqc::ErrorWindow::kCoordinate : gqc::ErrorWindow::kPhase;
            opts.norm = options->rms ? gqc::ErrorNorm::kRms : gqc::ErrorNorm::kSup;
        }
        *out = gqc::approx_error(gqc::PeriodicFunctionSpec::monomial(power), alpha, n_max, opts);
    });
}

gqc_status gqc_cv_table(int power, int n_max, char **out) {
    return guard([&] {
        require(out, "out");
        *out = dup_string(gqc::format_coefficient_table(
            gqc::fourier_coeffs(gqc::PeriodicFunctionSpec::monomial(power), n_max)));
    });
}

gqc_status gqc_universality_witness(int d, double coupling, gqc_witness *out) {
    return guard([&] {
        require(out, "out");
        auto w = gqc::universality_witness(d, coupling);
        *out = gqc_witness{w.d, w.s, w.j, w.k, w.p, w.q, w.left, w.right, w.margin};
    });
}

}  // extern "C"
