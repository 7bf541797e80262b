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

#include "gqc/compiler.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace gqc {

namespace {

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

PulseProgram empty_program(int n_sites, int d, const std::string &source) {
    PulseProgram p{d, n_sites, {}, {}};
    p.provenance.push_back({source, 0, 0});
    return p;
}

PulseProgram wrap(int n_sites, int d, PrimitiveSequence ops, const std::string &source) {
    PulseProgram p{d, n_sites, std::move(ops), {}};
    p.provenance.push_back({source, 0, p.ops.size()});
    return p;
}

void check_chain(int n_sites, int d) {
    Dimension{d}.require_finite();
    if (n_sites < 2) {
        fail(ErrorCode::kInvalidArgument, "a mirror-encoded chain needs N >= 2");
    }
}

std::string rotation_source(int site, WeylLabel label, Part part, double angle) {
    return "ROT l=" + std::to_string(site) + " a=" + std::to_string(label.a) + " b=" + std::to_string(label.b) +
           " part=" + part_name(part) + " angle=" + fmt_double(angle);
}

PrimitiveSequence rotation_ops(int n_sites, int d, int site, WeylLabel label, Part part, double angle) {
    if (angle == 0.0) {
        return {};
    }
    if (label.a == 0 && label.b == 0) {
        if (part == Part::kAntisymmetric) {
            fail(ErrorCode::kDegenerateElement, "the ANTISYMMETRIC element of (0,0) vanishes");
        }
        return {};  // exp(i angle 2I) is a global phase
    }
    PeakSolution peak = solve_peak(n_sites, d, label.a, label.b, site);
    if (peak.status != PeakStatus::kExact) {
        fail(ErrorCode::kCompile, "no pulse schedule isolates site " + std::to_string(site) + ": " + peak.reason);
    }
    try {
        return double_run_sequence(peak, part, angle);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::kUnreachable || d != 2 || part != Part::kAntisymmetric) {
            throw Error(ErrorCode::kCompile, e.what());
        }
    }
    // Qubit Y rotation: zeta^kappa = -1 leaves only the SYMMETRIC part, so rotate
    // X into Y with exp(-i pi/4 Z) and conjugate an X rotation.
    PrimitiveSequence seq = rotation_ops(n_sites, d, site, {0, 1}, Part::kSymmetric, std::numbers::pi / 8);
    PrimitiveSequence x = rotation_ops(n_sites, d, site, {1, 0}, Part::kSymmetric, angle);
    PrimitiveSequence back = rotation_ops(n_sites, d, site, {0, 1}, Part::kSymmetric, -std::numbers::pi / 8);
    seq.insert(seq.end(), x.begin(), x.end());
    seq.insert(seq.end(), back.begin(), back.end());
    return seq;
}

}  // namespace

LogicalGate LogicalGate::rotation(int site, WeylLabel label, Part part, double angle) {
    LogicalGate g;
    g.kind = GateKind::kBasisRotation;
    g.site = site;
    g.label = label;
    g.part = part;
    g.angle = angle;
    return g;
}

LogicalGate LogicalGate::single_unitary(int site, CMatrix unitary) {
    LogicalGate g;
    g.kind = GateKind::kSingleUnitary;
    g.site = site;
    g.unitary = std::move(unitary);
    return g;
}

LogicalGate LogicalGate::entangle(int site, std::int64_t u, double angle) {
    LogicalGate g;
    g.kind = GateKind::kEntangle;
    g.site = site;
    g.u = u;
    g.angle = angle;
    return g;
}

std::string LogicalGate::describe() const {
    if (!source.empty()) {
        return source;
    }
    switch (kind) {
        case GateKind::kBasisRotation:
            return rotation_source(site, label, part, angle);
        case GateKind::kSingleUnitary:
            return "UNI l=" + std::to_string(site) + " matrix=<inline>";
        case GateKind::kEntangle:
            return "ENT l=" + std::to_string(site) + " u=" + std::to_string(u) + " angle=" + fmt_double(angle);
    }
    return "";
}

void PulseProgram::append(const PulseProgram &other) {
    if (other.d != d || other.n_sites != n_sites) {
        fail(ErrorCode::kInvalidArgument, "cannot join programs for different chains");
    }
    std::size_t shift = ops.size();
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
    for (const auto &e : other.provenance) {
        provenance.push_back({e.source, e.begin + shift, e.end + shift});
    }
}

bool PulseProgram::operator==(const PulseProgram &o) const {
    if (d != o.d || n_sites != o.n_sites || ops != o.ops || provenance.size() != o.provenance.size()) {
        return false;
    }
    for (std::size_t i = 0; i < provenance.size(); i++) {
        const auto &a = provenance[i];
        const auto &b = o.provenance[i];
        if (a.source != b.source || a.begin != b.begin || a.end != b.end) {
            return false;
        }
    }
    return true;
}

PulseProgram compile_rotation(int n_sites, int d, int site, WeylLabel label, Part part, double angle) {
    check_chain(n_sites, d);
    if (site < 1 || site > num_site_classes(n_sites)) {
        fail(ErrorCode::kDomain, "rotation site " + std::to_string(site) + " outside [1, ceil(N/2)]");
    }
    label = label.normalized(d);
    auto source = rotation_source(site, label, part, angle);
    return wrap(n_sites, d, rotation_ops(n_sites, d, site, label, part, angle), source);
}

PulseProgram compile_single_unitary(int n_sites, int d, int site, const CMatrix &unitary,
                                    const CompileOptions &options) {
    check_chain(n_sites, d);
    if (unitary.rows() != d || unitary.cols() != d) {
        fail(ErrorCode::kInvalidArgument, "unitary must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (!is_unitary(unitary, 1e-10)) {
        fail(ErrorCode::kValidation, "matrix is not unitary within 1e-10");
    }
    std::string source = "UNI l=" + std::to_string(site);
    CMatrix h = principal_hamiltonian(unitary);
    HamiltonianDecomposition dec = decompose_hamiltonian(Dimension{d}, h);
    if ((dec.reconstruct() - h).norm() > 1e-9) {
        fail(ErrorCode::kInternal, "Hamiltonian decomposition residual above 1e-9");
    }
    int nonzero = 0;
    for (auto &[key, c] : dec.coeffs) {
        if (std::abs(c) > 1e-12) {
            nonzero++;
        } else {
            c = 0.0;
        }
    }
    if (nonzero == 0) {
        return empty_program(n_sites, d, source);
    }

    int slices = 1;
    if (nonzero > 1) {
        if (options.trotter_slices > 0) {
            slices = options.trotter_slices;
        } else {
            double bound = trotter_error_bound(dec, 1.0, 1);
            long long by_bound = static_cast<long long>(std::ceil(bound / options.tolerance));
            long long limit = std::min<long long>(options.max_slices, std::max<long long>(1, by_bound));
            slices = 1;
            while (true) {
                double err = phase_aligned_distance(trotter_product(d, trotterize(dec, 1.0, slices)), unitary);
                if (err < options.tolerance) {
                    break;
                }
                if (slices >= limit) {
                    fail(ErrorCode::kCompile, "tolerance " + fmt_double(options.tolerance) + " not reached with " +
                                                  std::to_string(slices) + " Trotter slices");
                }
                slices = static_cast<int>(std::min<long long>(2LL * slices, limit));
            }
        }
    }

    std::map<std::tuple<std::int64_t, std::int64_t, int, double>, PrimitiveSequence> cache;
    PrimitiveSequence ops;
    for (const auto &term : trotterize(dec, 1.0, slices)) {
        auto key = std::make_tuple(term.label.a, term.label.b, static_cast<int>(term.part), term.angle);
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, rotation_ops(n_sites, d, site, term.label, term.part, term.angle)).first;
        }
        ops.insert(ops.end(), it->second.begin(), it->second.end());
    }
    return wrap(n_sites, d, std::move(ops), source);
}

std::vector<int> ancilla_layout_positions(int m_logical) {
    std::vector<int> pos(m_logical);
    for (int k = 0; k < m_logical; k++) {
        pos[k] = 2 * k + 1;
    }
    return pos;
}

PulseProgram compile_entangle(int n_sites, int d, int site, std::int64_t u, double angle, EntangleMethod method) {
    check_chain(n_sites, d);
    if (mod(u, d) == 0) {
        fail(ErrorCode::kInvalidArgument, "entangler needs u != 0 mod d");
    }
    std::string source = "ENT l=" + std::to_string(site) + " u=" + std::to_string(u) + " angle=" + fmt_double(angle);
    int m_logical = 0;
    if (method == EntangleMethod::kTimeShift) {
        m_logical = logical_sites(n_sites);
    } else {
        if ((n_sites + 2) % 4 != 0) {
            fail(ErrorCode::kInvalidArgument, "the ancilla layout needs N = 4M - 2");
        }
        m_logical = (n_sites + 2) / 4;
    }
    if (site < 1 || site + 1 > m_logical) {
        fail(ErrorCode::kDomain, "entangling pair (" + std::to_string(site) + ", " + std::to_string(site + 1) +
                                     ") outside the " + std::to_string(m_logical) + " logical sites");
    }
    if (angle == 0.0) {
        return empty_program(n_sites, d, source);
    }
    int shifts = method == EntangleMethod::kTimeShift ? site : 1;
    int rot_site = method == EntangleMethod::kTimeShift ? 1 : 2 * site;
    PrimitiveSequence ops(shifts, GlobalPrimitive::t_inv());
    PrimitiveSequence rot = rotation_ops(n_sites, d, rot_site, WeylLabel{u, 0}.normalized(d), Part::kSymmetric, angle);
    ops.insert(ops.end(), rot.begin(), rot.end());
    ops.insert(ops.end(), shifts, GlobalPrimitive::t_step());
    return wrap(n_sites, d, std::move(ops), source);
}

PulseProgram compile_gate(const LogicalGate &gate, int n_sites, int d, const CompileOptions &options) {
    int m_logical = options.entangle == EntangleMethod::kAncilla ? (n_sites + 2) / 4 : logical_sites(n_sites);
    if (gate.site < 1 || gate.site > m_logical) {
        fail(ErrorCode::kDomain, "logical site " + std::to_string(gate.site) + " outside [1, " +
                                     std::to_string(m_logical) + "]");
    }
    PulseProgram p;
    switch (gate.kind) {
        case GateKind::kBasisRotation:
            p = compile_rotation(n_sites, d, gate.site, gate.label, gate.part, gate.angle);
            break;
        case GateKind::kSingleUnitary:
            p = compile_single_unitary(n_sites, d, gate.site, gate.unitary, options);
            break;
        case GateKind::kEntangle:
            p = compile_entangle(n_sites, d, gate.site, gate.u, gate.angle, options.entangle);
            break;
    }
    for (auto &e : p.provenance) {
        e.source = gate.describe();
    }
    return p;
}

PulseProgram compile_circuit(const std::vector<LogicalGate> &circuit, int n_sites, int d,
                             const CompileOptions &options) {
    check_chain(n_sites, d);
    PulseProgram program{d, n_sites, {}, {}};
    for (std::size_t i = 0; i < circuit.size(); i++) {
        try {
            program.append(compile_gate(circuit[i], n_sites, d, options));
        } catch (const Error &e) {
            fail(ErrorCode::kCompile, "gate " + std::to_string(i + 1) + " (" + circuit[i].describe() + "): " + e.what());
        }
    }
    return program;
}

std::size_t single_run_core_cost(int n_sites, int d, std::int64_t u, std::int64_t v, int site) {
    PeakSolution peak = solve_peak(n_sites, d, u, v, site);
    if (peak.status != PeakStatus::kExact) {
        fail(ErrorCode::kCompile, peak.reason);
    }
    return localized_gate_sequence(peak.schedule, 1.0, {peak.u, peak.v}).size();
}

CMatrix logical_gate_matrix(const LogicalGate &gate, int d, EntangleMethod method) {
    Dimension dim{d};
    switch (gate.kind) {
        case GateKind::kBasisRotation: {
            WeylLabel label = gate.label.normalized(d);
            if (label.a == 0 && label.b == 0 && gate.part == Part::kSymmetric) {
                return CMatrix::Identity(d, d);
            }
            return expi_hermitian(hermitian_basis_matrix(dim, label, gate.part).matrix, gate.angle);
        }
        case GateKind::kSingleUnitary:
            return gate.unitary;
        case GateKind::kEntangle: {
            WeylLabel first = method == EntangleMethod::kTimeShift ? WeylLabel{0, -gate.u} : WeylLabel{gate.u, 0};
            CMatrix g = Eigen::kroneckerProduct(weyl_matrix(dim, first), weyl_matrix(dim, {gate.u, 0})).eval();
            return expi_hermitian(g + g.adjoint(), gate.angle);
        }
    }
    fail(ErrorCode::kInternal, "unknown gate kind");
}

CVector run_logical(const std::vector<LogicalGate> &circuit, int d, int m_logical, const CVector &logical,
                    EntangleMethod method) {
    DenseState s(d, m_logical);
    if (logical.size() != s.amplitudes().size()) {
        fail(ErrorCode::kInvalidArgument, "logical state has the wrong length");
    }
    s.amplitudes() = logical;
    for (const auto &g : circuit) {
        CMatrix m = logical_gate_matrix(g, d, method);
        if (g.kind == GateKind::kEntangle) {
            apply_two_site(s, g.site - 1, g.site, m);
        } else {
            apply_local(s, g.site - 1, m);
        }
    }
    return s.amplitudes();
}

CVector random_logical_state(int d, int m_logical, std::uint64_t seed) {
    std::size_t dim = checked_dimension(d, std::max(m_logical, 1));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); i++) {
        double re = g(rng);
        double im = g(rng);
        v(i) = cplx(re, im);
    }
    return v / v.norm();
}

VerificationReport verify_program(const PulseProgram &program, const std::vector<LogicalGate> &circuit, int trials,
                                  std::uint64_t seed, EntangleMethod method) {
    if (trials < 1) {
        fail(ErrorCode::kInvalidArgument, "verification needs at least one trial");
    }
    int n = program.n_sites;
    int d = program.d;
    std::vector<int> positions;
    if (method == EntangleMethod::kAncilla) {
        if ((n + 2) % 4 != 0) {
            fail(ErrorCode::kInvalidArgument, "the ancilla layout needs N = 4M - 2");
        }
        positions = ancilla_layout_positions((n + 2) / 4);
    } else {
        for (int k = 1; k <= logical_sites(n); k++) {
            positions.push_back(k);
        }
    }
    int m = static_cast<int>(positions.size());
    VerificationReport r;
    r.trials = trials;
    double total = 0.0;
    std::mt19937_64 seeds(seed);
    for (int t = 0; t < trials; t++) {
        CVector psi = random_logical_state(d, m, seeds());
        DenseState state = encode_positions(psi, d, n, positions);
        apply_sequence(state, program.ops);
        DenseState expected = encode_positions(run_logical(circuit, d, m, psi, method), d, n, positions);
        double f = fidelity(state, expected);
        r.min_fidelity = std::min(r.min_fidelity, f);
        total += f;
    }
    r.mean_fidelity = total / trials;
    return r;
}

UniversalityWitness universality_witness(int d, double coupling) {
    if (d < 2) {
        fail(ErrorCode::kInvalidArgument, "dimension must be >= 2");
    }
    auto theta = [&](int a, int b) { return 2.0 * coupling * std::cos(2.0 * std::numbers::pi * (a + b) / d); };
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    for (int s = 1; s <= d; s++) {
        if (mod(s + 1, d) == 0) {
            continue;
        }
        UniversalityWitness w;
        w.d = d;
        w.s = s;
        w.coupling = coupling;
        w.j = 1;
        w.k = d - 1;
        w.p = static_cast<int>(mod(d - s, d));
        w.q = static_cast<int>(mod(s, d));
        w.left = theta(w.j, w.k) + theta(w.p, w.q);
        w.right = theta(w.j, w.q) + theta(w.p, w.k);
        double delta = std::fmod(std::abs(w.left - w.right), kTwoPi);
        w.margin = std::min(delta, kTwoPi - delta);
        if (w.margin > 1e-9) {
            return w;
        }
    }
    fail(ErrorCode::kCertification, "no (j,k,p,q) separates the entangler phases for d=" + std::to_string(d));
}

}  // namespace gqc
