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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gqc/simulator.hpp"

namespace gqc {

enum class GateKind { kSingleUnitary, kBasisRotation, kEntangle };

/// A gate on the M logical sites of a mirror encoding (1-based sites).
///
/// ENTANGLE on (l, l+1) is exp(i angle (Z(-u) (x) X(u) + h.c.)), the generator
/// that the time shift of a site-1 X(u) rotation produces.
struct LogicalGate {
    GateKind kind = GateKind::kBasisRotation;
    int site = 1;
    CMatrix unitary;
    WeylLabel label;
    Part part = Part::kSymmetric;
    double angle = 0.0;
    std::int64_t u = 1;
    /// The circuit line this gate came from, if any.
    std::string source;

    static LogicalGate rotation(int site, WeylLabel label, Part part, double angle);
    static LogicalGate single_unitary(int site, CMatrix unitary);
    static LogicalGate entangle(int site, std::int64_t u, double angle);
    std::string describe() const;
};

struct ProvenanceEntry {
    std::string source;
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct PulseProgram {
    int d = 2;
    int n_sites = 0;
    PrimitiveSequence ops;
    std::vector<ProvenanceEntry> provenance;

    std::size_t cost() const {
        return ops.size();
    }
    /// Appends `other`, shifting its provenance ranges.
    void append(const PulseProgram &other);
    bool operator==(const PulseProgram &) const;
};

enum class EntangleMethod { kTimeShift, kAncilla };

struct CompileOptions {
    /// Operator-norm budget for Trotterised single-site unitaries.
    double tolerance = 1e-4;
    /// Fixed slice count; 0 selects it from the error bound and the actual error.
    int trotter_slices = 0;
    int max_slices = 4096;
    EntangleMethod entangle = EntangleMethod::kTimeShift;
};

/// exp(i angle B_{label,part}) on site and its mirror.
PulseProgram compile_rotation(int n_sites, int d, int site, WeylLabel label, Part part, double angle);

PulseProgram compile_single_unitary(int n_sites, int d, int site, const CMatrix &unitary,
                                    const CompileOptions &options = {});

/// Time shift: `site` T^{-1} steps, a site-1 rotation exp(i angle (X(u) + h.c.)),
/// `site` T steps. Ancilla: the chain interleaves ancillas (N = 4M - 2, logical
/// site k at 2k - 1) and the gate is T exp(i angle (X(u) + h.c.))_{2 site} T^{-1},
/// which acts as exp(i angle (X(u) (x) X(u) + h.c.)) on the logical pair.
PulseProgram compile_entangle(int n_sites, int d, int site, std::int64_t u, double angle,
                              EntangleMethod method = EntangleMethod::kTimeShift);

PulseProgram compile_gate(const LogicalGate &gate, int n_sites, int d, const CompileOptions &options = {});
PulseProgram compile_circuit(const std::vector<LogicalGate> &circuit, int n_sites, int d,
                             const CompileOptions &options = {});

/// The primitive count of one run of the localized-gate protocol for a peak at `site`.
std::size_t single_run_core_cost(int n_sites, int d, std::int64_t u, std::int64_t v, int site);

/// d x d (or d^2 x d^2 for ENTANGLE) logical matrix of a gate. The ancilla
/// method's entangler is exp(i angle (X(u) (x) X(u) + h.c.)).
CMatrix logical_gate_matrix(const LogicalGate &gate, int d, EntangleMethod method = EntangleMethod::kTimeShift);
/// Applies the circuit to a state on M logical sites.
CVector run_logical(const std::vector<LogicalGate> &circuit, int d, int m_logical, const CVector &logical,
                    EntangleMethod method = EntangleMethod::kTimeShift);

/// 1-based logical positions of the ancilla-interleaved chain (N = 4M - 2).
std::vector<int> ancilla_layout_positions(int m_logical);

/// Haar-like random state on M logical sites (normalised complex Gaussians).
CVector random_logical_state(int d, int m_logical, std::uint64_t seed);

struct VerificationReport {
    int trials = 0;
    double min_fidelity = 1.0;
    double mean_fidelity = 1.0;
};

/// Runs `program` on `trials` random encoded inputs and compares each output
/// with the encoding of the directly executed logical circuit.
VerificationReport verify_program(const PulseProgram &program, const std::vector<LogicalGate> &circuit, int trials,
                                  std::uint64_t seed, EntangleMethod method = EntangleMethod::kTimeShift);

struct UniversalityWitness {
    int d = 2;
    int s = 0;
    int j = 0, k = 0, p = 0, q = 0;
    double coupling = 0.5;
    double left = 0.0;
    double right = 0.0;
    double margin = 0.0;
};

/// theta_jk = 2 coupling cos(2 pi (j+k)/d) are the diagonal phases of the
/// entangler in the Fourier basis. Searches (1, d-1, d-s, s) for s = 1..d,
/// skipping s = -1 mod d, for theta_jk + theta_pq != theta_jq + theta_pk mod 2 pi.
UniversalityWitness universality_witness(int d, double coupling = 0.5);

/// Line-oriented circuit text; UNI matrix paths resolve against `base_dir`.
std::vector<LogicalGate> parse_circuit(const std::string &text, int d, const std::string &base_dir = ".");
/// Rows of "re,im" entries separated by whitespace, one row per line.
CMatrix read_matrix_file(const std::string &path, int d);

std::string format_program(const PulseProgram &program);
/// Reads a program; provenance is rebuilt from "# gate i: ..." lines.
PulseProgram parse_program(const std::string &text);

}  // namespace gqc
