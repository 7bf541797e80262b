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

#include "gqc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace gqc {

namespace {

std::vector<cplx> zeta_table(int d) {
    std::vector<cplx> t(d);
    for (int k = 0; k < d; k++) {
        t[k] = zeta_power(Dimension{d}, static_cast<std::int64_t>(k));
    }
    return t;
}

void require_two_chain(const DenseState &state, const char *what) {
    if (state.layout() != ChainLayout::kDataPlusAncilla) {
        fail(ErrorCode::kInvalidArgument, std::string(what) + " needs the data-plus-ancilla layout");
    }
}

// Multiplies every amplitude by zeta^{sign * phase(digits)}.
template <typename PhaseFn>
void apply_diagonal(DenseState &state, int sign, PhaseFn &&phase) {
    int d = state.dim();
    int T = state.total_sites();
    auto table = zeta_table(d);
    std::vector<int> digits(T, 0);
    CVector &a = state.amplitudes();
    for (Eigen::Index idx = 0; idx < a.size(); idx++) {
        std::int64_t e = mod(sign * phase(digits), d);
        if (e != 0) {
            a(idx) *= table[e];
        }
        for (int p = T - 1; p >= 0; p--) {
            if (++digits[p] < d) {
                break;
            }
            digits[p] = 0;
        }
    }
}

void apply_cz_chain(DenseState &state, int sign) {
    int n = state.num_sites();
    apply_diagonal(state, sign, [n](const std::vector<int> &s) {
        std::int64_t e = 0;
        for (int j = 0; j + 1 < n; j++) {
            e += s[j] * s[j + 1];
        }
        return e;
    });
}

void apply_cz_interchain(DenseState &state) {
    require_two_chain(state, "CZ_INTERCHAIN");
    int n = state.num_sites();
    apply_diagonal(state, 1, [n](const std::vector<int> &s) {
        std::int64_t e = 0;
        for (int j = 0; j < n; j++) {
            e += s[j] * s[n + j];
        }
        return e;
    });
}

void apply_on_data_chain(DenseState &state, const CMatrix &op) {
    for (int p = 0; p < state.num_sites(); p++) {
        apply_local(state, p, op);
    }
}

std::vector<int> mirror_pair(int n_sites, int site) {
    std::vector<int> s{site};
    if (n_sites + 1 - site != site) {
        s.push_back(n_sites + 1 - site);
    }
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

std::size_t checked_dimension(int d, int total_sites, std::size_t amplitude_cap) {
    if (d < 2) {
        fail(ErrorCode::kInvalidArgument, "local dimension must be at least 2");
    }
    if (total_sites < 1) {
        fail(ErrorCode::kInvalidArgument, "chain needs at least one site");
    }
    std::size_t dim = 1;
    for (int i = 0; i < total_sites; i++) {
        if (dim > amplitude_cap / static_cast<std::size_t>(d)) {
            fail(ErrorCode::kResourceCap, std::to_string(d) + "^" + std::to_string(total_sites) +
                                              " amplitudes exceed the cap of " + std::to_string(amplitude_cap));
        }
        dim *= static_cast<std::size_t>(d);
    }
    return dim;
}

DenseState::DenseState(int d, int n_sites, ChainLayout layout, std::size_t amplitude_cap)
    : d_(d), n_(n_sites), layout_(layout) {
    std::size_t dim = checked_dimension(d, total_sites(), amplitude_cap);
    amps_ = CVector::Zero(static_cast<Eigen::Index>(dim));
    amps_(0) = 1.0;
}

DenseState DenseState::from_amplitudes(int d, int n_sites, ChainLayout layout, CVector amplitudes,
                                       std::size_t amplitude_cap) {
    DenseState s(d, n_sites, layout, amplitude_cap);
    if (amplitudes.size() != s.amps_.size()) {
        fail(ErrorCode::kInvalidArgument, "expected " + std::to_string(s.amps_.size()) + " amplitudes, got " +
                                              std::to_string(amplitudes.size()));
    }
    if (std::abs(amplitudes.norm() - 1.0) > 1e-10) {
        fail(ErrorCode::kValidation, "state is not normalised");
    }
    s.amps_ = std::move(amplitudes);
    return s;
}

DenseState DenseState::basis_state(int d, const std::vector<int> &digits, ChainLayout layout) {
    int T = static_cast<int>(digits.size());
    int n = layout == ChainLayout::kSingle ? T : T / 2;
    if (layout == ChainLayout::kDataPlusAncilla && T % 2 != 0) {
        fail(ErrorCode::kInvalidArgument, "two-chain basis state needs an even digit count");
    }
    DenseState s(d, n, layout);
    std::size_t idx = 0;
    for (int digit : digits) {
        if (digit < 0 || digit >= d) {
            fail(ErrorCode::kInvalidArgument, "basis digit outside [0, d)");
        }
        idx = idx * d + digit;
    }
    s.amps_.setZero();
    s.amps_(static_cast<Eigen::Index>(idx)) = 1.0;
    return s;
}

std::size_t DenseState::stride(int position) const {
    std::size_t s = 1;
    for (int p = total_sites() - 1; p > position; p--) {
        s *= d_;
    }
    return s;
}

bool GlobalPrimitive::is_global() const {
    return kind != PrimitiveKind::kFSelect && kind != PrimitiveKind::kFSelectInv &&
           kind != PrimitiveKind::kMeasureAncilla;
}

GlobalPrimitive GlobalPrimitive::inverse() const {
    GlobalPrimitive p = *this;
    switch (kind) {
        case PrimitiveKind::kFAll:
            p.kind = PrimitiveKind::kFAllInv;
            break;
        case PrimitiveKind::kFAllInv:
            p.kind = PrimitiveKind::kFAll;
            break;
        case PrimitiveKind::kCzChain:
            p.kind = PrimitiveKind::kCzChainInv;
            break;
        case PrimitiveKind::kCzChainInv:
            p.kind = PrimitiveKind::kCzChain;
            break;
        case PrimitiveKind::kTStep:
            p.kind = PrimitiveKind::kTInv;
            break;
        case PrimitiveKind::kTInv:
            p.kind = PrimitiveKind::kTStep;
            break;
        case PrimitiveKind::kPulse:
            // P(-eps) = P(eps)^{-1} up to a global phase
            p.eps = -eps;
            break;
        case PrimitiveKind::kHamPulse:
            p.beta = -beta;
            break;
        case PrimitiveKind::kFSelect:
            p.kind = PrimitiveKind::kFSelectInv;
            break;
        case PrimitiveKind::kFSelectInv:
            p.kind = PrimitiveKind::kFSelect;
            break;
        case PrimitiveKind::kCzInterchain:
        case PrimitiveKind::kMeasureAncilla:
            fail(ErrorCode::kInvalidArgument, "readout primitives are not inverted");
    }
    return p;
}

std::string primitive_to_string(const GlobalPrimitive &p) {
    std::ostringstream os;
    os.precision(17);
    auto sites = [&]() {
        os << " sites=";
        for (std::size_t i = 0; i < p.sites.size(); i++) {
            os << (i ? "," : "") << p.sites[i];
        }
    };
    switch (p.kind) {
        case PrimitiveKind::kFAll:
            os << "FALL";
            break;
        case PrimitiveKind::kFAllInv:
            os << "FALLINV";
            break;
        case PrimitiveKind::kCzChain:
            os << "CZ";
            break;
        case PrimitiveKind::kCzChainInv:
            os << "CZINV";
            break;
        case PrimitiveKind::kPulse:
            os << "PULSE eps=" << p.eps;
            break;
        case PrimitiveKind::kHamPulse:
            os << "HAM beta=" << p.beta << " u=" << p.label.a << " v=" << p.label.b;
            break;
        case PrimitiveKind::kTStep:
            os << "TSTEP";
            break;
        case PrimitiveKind::kTInv:
            os << "TINV";
            break;
        case PrimitiveKind::kCzInterchain:
            os << "CZ_INTERCHAIN";
            break;
        case PrimitiveKind::kFSelect:
            os << "F_SELECT";
            sites();
            break;
        case PrimitiveKind::kFSelectInv:
            os << "F_SELECT_INV";
            sites();
            break;
        case PrimitiveKind::kMeasureAncilla:
            os << "MEASURE";
            break;
    }
    return os.str();
}

GlobalPrimitive parse_primitive(const std::string &line) {
    std::istringstream in(line);
    std::string op;
    in >> op;
    std::map<std::string, std::string> kv;
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            fail(ErrorCode::kParse, "expected key=value, got '" + tok + "'");
        }
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    auto get = [&](const std::string &key) -> const std::string & {
        auto it = kv.find(key);
        if (it == kv.end()) {
            fail(ErrorCode::kParse, op + " needs " + key + "=");
        }
        return it->second;
    };
    auto as_int = [&](const std::string &key) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(get(key), &used);
            if (used != get(key).size()) {
                throw std::invalid_argument(key);
            }
            return static_cast<std::int64_t>(v);
        } catch (const std::logic_error &) {
            fail(ErrorCode::kParse, "bad integer for " + key + ": '" + get(key) + "'");
        }
    };
    auto as_sites = [&]() {
        std::vector<int> out;
        std::stringstream ss(get("sites"));
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                out.push_back(std::stoi(part));
            } catch (const std::logic_error &) {
                fail(ErrorCode::kParse, "bad site list '" + get("sites") + "'");
            }
        }
        return out;
    };
    auto bare = [&](PrimitiveKind k) {
        if (!kv.empty()) {
            fail(ErrorCode::kParse, op + " takes no arguments");
        }
        return GlobalPrimitive::of(k);
    };
    if (op == "FALL") return bare(PrimitiveKind::kFAll);
    if (op == "FALLINV") return bare(PrimitiveKind::kFAllInv);
    if (op == "CZ") return bare(PrimitiveKind::kCzChain);
    if (op == "CZINV") return bare(PrimitiveKind::kCzChainInv);
    if (op == "TSTEP") return bare(PrimitiveKind::kTStep);
    if (op == "TINV") return bare(PrimitiveKind::kTInv);
    if (op == "CZ_INTERCHAIN") return bare(PrimitiveKind::kCzInterchain);
    if (op == "MEASURE") return bare(PrimitiveKind::kMeasureAncilla);
    if (op == "PULSE") return GlobalPrimitive::pulse(as_int("eps"));
    if (op == "HAM") {
        double beta = 0.0;
        try {
            beta = std::stod(get("beta"));
        } catch (const std::logic_error &) {
            fail(ErrorCode::kParse, "bad beta '" + get("beta") + "'");
        }
        return GlobalPrimitive::ham(beta, {as_int("u"), as_int("v")});
    }
    if (op == "F_SELECT" || op == "F_SELECT_INV") {
        GlobalPrimitive p = GlobalPrimitive::of(op == "F_SELECT" ? PrimitiveKind::kFSelect : PrimitiveKind::kFSelectInv);
        p.sites = as_sites();
        return p;
    }
    fail(ErrorCode::kParse, "unknown primitive '" + op + "'");
}

PrimitiveSequence inverse_sequence(const PrimitiveSequence &seq) {
    PrimitiveSequence out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        out.push_back(it->inverse());
    }
    return out;
}

PrimitiveSequence transform_sequence(const PulseSchedule &schedule) {
    int n = schedule.n_sites;
    PrimitiveSequence seq;
    for (int s = 0; s <= n + 1; s++) {
        std::int64_t eps = schedule.strength(n + 1 - s);
        if (eps != 0) {
            seq.push_back(GlobalPrimitive::pulse(eps));
        }
        if (s <= n) {
            seq.push_back(GlobalPrimitive::t_step());
        }
    }
    seq.push_back(GlobalPrimitive::f_all());
    seq.push_back(GlobalPrimitive::f_all());
    return seq;
}

PrimitiveSequence localized_gate_sequence(const PulseSchedule &schedule, double beta, WeylLabel label) {
    PrimitiveSequence w = transform_sequence(schedule);
    PrimitiveSequence seq{GlobalPrimitive::ham(-beta, label)};
    seq.insert(seq.end(), w.begin(), w.end());
    seq.push_back(GlobalPrimitive::ham(beta, label));
    PrimitiveSequence w_inv = inverse_sequence(w);
    seq.insert(seq.end(), w_inv.begin(), w_inv.end());
    return seq;
}

CMatrix localized_gate_local(int d, std::int64_t kappa, double beta, WeylLabel label) {
    Dimension dim{d};
    CMatrix a = (cplx(1.0) - zeta_power(dim, kappa)) * weyl_matrix(dim, label);
    CMatrix g = a + a.adjoint();
    return expi_hermitian(g, beta / 2.0);
}

DoubleRunPlan plan_double_run(int d, std::int64_t kappa, WeylLabel label, Part part, double theta) {
    Dimension dim{d};
    dim.require_finite();
    if (mod(kappa, d) == 0) {
        fail(ErrorCode::kInvalidArgument, "peak strength kappa vanishes mod d");
    }
    CMatrix a = weyl_matrix(dim, label);
    bool sym_zero = (a + a.adjoint()).norm() < 1e-12;
    bool anti_zero = (a - a.adjoint()).norm() < 1e-12;
    if ((part == Part::kSymmetric && sym_zero) || (part == Part::kAntisymmetric && anti_zero)) {
        fail(ErrorCode::kDegenerateElement, std::string("the ") + part_name(part) + " element of (" +
                                                std::to_string(label.a) + "," + std::to_string(label.b) +
                                                ") vanishes for d=" + std::to_string(d));
    }
    double phi = 2.0 * std::numbers::pi * static_cast<double>(mod(kappa, d)) / d;
    double c = std::cos(phi);
    double s = std::sin(phi);
    bool s_zero = std::abs(s) < 1e-12;
    DoubleRunPlan plan;
    // one run contributes (alpha/2) [(1-c) SYM - s ANTI]; the -kappa run flips s
    if (part == Part::kSymmetric) {
        if (anti_zero || s_zero) {
            plan.single_run = true;
            plan.alpha_first = 2.0 * theta / (1.0 - c);
        } else {
            plan.alpha_first = plan.alpha_second = theta / (1.0 - c);
        }
        return plan;
    }
    if (s_zero) {
        fail(ErrorCode::kUnreachable, "uncontrollable component: zeta^kappa is real for kappa=" +
                                          std::to_string(mod(kappa, d)) +
                                          ", so the ANTISYMMETRIC part cannot be isolated");
    }
    if (sym_zero) {
        plan.single_run = true;
        plan.alpha_first = -2.0 * theta / s;
    } else {
        plan.alpha_first = -theta / s;
        plan.alpha_second = theta / s;
    }
    return plan;
}

PrimitiveSequence double_run_sequence(const PeakSolution &peak, Part part, double theta) {
    std::int64_t kappa = schedule_kappa(peak);
    if (theta == 0.0) {
        return {};
    }
    WeylLabel label{peak.u, peak.v};
    DoubleRunPlan plan = plan_double_run(peak.schedule.d, kappa, label, part, theta);
    PrimitiveSequence seq = localized_gate_sequence(peak.schedule, plan.alpha_first, label);
    if (!plan.single_run) {
        PrimitiveSequence second = localized_gate_sequence(peak.schedule.negated(), plan.alpha_second, label);
        seq.insert(seq.end(), second.begin(), second.end());
    }
    return seq;
}

CMatrix fourier_matrix(int d) {
    Dimension dim{d};
    CMatrix f(d, d);
    double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int r = 0; r < d; r++) {
        for (int s = 0; s < d; s++) {
            f(r, s) = norm * zeta_power(dim, static_cast<std::int64_t>(r * s));
        }
    }
    return f;
}

void apply_local(DenseState &state, int position, const CMatrix &op) {
    int d = state.dim();
    if (op.rows() != d || op.cols() != d) {
        fail(ErrorCode::kInvalidArgument, "local operator has the wrong size");
    }
    if (position < 0 || position >= state.total_sites()) {
        fail(ErrorCode::kDomain, "site position out of range");
    }
    std::size_t s = state.stride(position);
    std::size_t block = s * d;
    std::size_t total = static_cast<std::size_t>(state.amplitudes().size());
    CVector &a = state.amplitudes();
    std::vector<cplx> in(d), out(d);
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t r = 0; r < s; r++) {
            for (int k = 0; k < d; k++) {
                in[k] = a(static_cast<Eigen::Index>(base + r + k * s));
            }
            for (int k = 0; k < d; k++) {
                cplx acc = 0.0;
                for (int j = 0; j < d; j++) {
                    acc += op(k, j) * in[j];
                }
                out[k] = acc;
            }
            for (int k = 0; k < d; k++) {
                a(static_cast<Eigen::Index>(base + r + k * s)) = out[k];
            }
        }
    }
}

void apply_two_site(DenseState &state, int first, int second, const CMatrix &op) {
    int d = state.dim();
    if (op.rows() != d * d || op.cols() != d * d) {
        fail(ErrorCode::kInvalidArgument, "two-site operator has the wrong size");
    }
    if (first == second || first < 0 || second < 0 || first >= state.total_sites() ||
        second >= state.total_sites()) {
        fail(ErrorCode::kDomain, "invalid site pair");
    }
    std::size_t s1 = state.stride(first), s2 = state.stride(second);
    CVector &a = state.amplitudes();
    std::vector<cplx> in(d * d);
    std::vector<std::size_t> where(d * d);
    for (Eigen::Index idx = 0; idx < a.size(); idx++) {
        std::size_t i = static_cast<std::size_t>(idx);
        if ((i / s1) % d != 0 || (i / s2) % d != 0) {
            continue;
        }
        for (int j = 0; j < d; j++) {
            for (int k = 0; k < d; k++) {
                where[j * d + k] = i + j * s1 + k * s2;
                in[j * d + k] = a(static_cast<Eigen::Index>(where[j * d + k]));
            }
        }
        for (int r = 0; r < d * d; r++) {
            cplx acc = 0.0;
            for (int c = 0; c < d * d; c++) {
                acc += op(r, c) * in[c];
            }
            a(static_cast<Eigen::Index>(where[r])) = acc;
        }
    }
}

void apply_primitive(DenseState &state, const GlobalPrimitive &p) {
    int d = state.dim();
    Dimension dim{d};
    switch (p.kind) {
        case PrimitiveKind::kFAll:
            apply_on_data_chain(state, fourier_matrix(d).adjoint());
            break;
        case PrimitiveKind::kFAllInv:
            apply_on_data_chain(state, fourier_matrix(d));
            break;
        case PrimitiveKind::kCzChain:
            apply_cz_chain(state, 1);
            break;
        case PrimitiveKind::kCzChainInv:
            apply_cz_chain(state, -1);
            break;
        case PrimitiveKind::kPulse:
            apply_on_data_chain(state, weyl_matrix(dim, {-p.eps, p.eps}));
            break;
        case PrimitiveKind::kHamPulse: {
            CMatrix a = weyl_matrix(dim, p.label);
            apply_on_data_chain(state, expi_hermitian(a + a.adjoint(), -p.beta / 2.0));
            break;
        }
        case PrimitiveKind::kTStep:
            apply_cz_chain(state, 1);
            apply_on_data_chain(state, fourier_matrix(d).adjoint());
            break;
        case PrimitiveKind::kTInv:
            apply_on_data_chain(state, fourier_matrix(d));
            apply_cz_chain(state, -1);
            break;
        case PrimitiveKind::kCzInterchain:
            apply_cz_interchain(state);
            break;
        case PrimitiveKind::kFSelect:
        case PrimitiveKind::kFSelectInv: {
            require_two_chain(state, "F_SELECT");
            CMatrix f = fourier_matrix(d);
            if (p.kind == PrimitiveKind::kFSelectInv) {
                f = f.adjoint().eval();
            }
            int n = state.num_sites();
            for (int site : p.sites) {
                if (site < 1 || site > n) {
                    fail(ErrorCode::kDomain, "F_SELECT site out of range");
                }
                apply_local(state, site - 1, f);
                apply_local(state, n + site - 1, f);
            }
            break;
        }
        case PrimitiveKind::kMeasureAncilla:
            // marks the readout epilogue; sampling happens in readout_swap / measure
            break;
    }
}

void apply_sequence(DenseState &state, const PrimitiveSequence &seq) {
    for (const auto &p : seq) {
        apply_primitive(state, p);
    }
}

CMatrix sequence_matrix(int d, int n_sites, const PrimitiveSequence &seq, ChainLayout layout) {
    DenseState probe(d, n_sites, layout);
    Eigen::Index dim = probe.amplitudes().size();
    CMatrix m(dim, dim);
    for (Eigen::Index c = 0; c < dim; c++) {
        probe.amplitudes().setZero();
        probe.amplitudes()(c) = 1.0;
        apply_sequence(probe, seq);
        m.col(c) = probe.amplitudes();
    }
    return m;
}

int logical_sites(int n_sites) {
    return n_sites / 2;
}

DenseState encode_positions(const CVector &logical, int d, int n_sites, const std::vector<int> &positions) {
    int M = static_cast<int>(positions.size());
    std::vector<int> occupied(n_sites + 1, 0);
    for (int p : positions) {
        int q = n_sites + 1 - p;
        if (p < 1 || p > n_sites || q == p || occupied[p] || occupied[q]) {
            fail(ErrorCode::kInvalidArgument, "logical positions overlap their mirror images");
        }
        occupied[p] = occupied[q] = 1;
    }
    std::size_t ldim = 1;
    for (int k = 0; k < M; k++) {
        ldim *= d;
    }
    if (static_cast<std::size_t>(logical.size()) != ldim) {
        fail(ErrorCode::kInvalidArgument, "logical state must have d^M = " + std::to_string(ldim) + " amplitudes");
    }
    DenseState out(d, n_sites);
    out.amplitudes().setZero();
    std::vector<std::size_t> first(M), second(M);
    for (int k = 0; k < M; k++) {
        first[k] = out.stride(positions[k] - 1);
        second[k] = out.stride(n_sites - positions[k]);
    }
    auto place = [&](std::size_t idx, const std::vector<std::size_t> &strides) {
        std::size_t phys = 0;
        for (int k = M - 1; k >= 0; k--) {
            phys += (idx % d) * strides[k];
            idx /= d;
        }
        return phys;
    };
    for (std::size_t i = 0; i < ldim; i++) {
        if (logical(static_cast<Eigen::Index>(i)) == cplx(0.0)) {
            continue;
        }
        std::size_t pi = place(i, first);
        for (std::size_t j = 0; j < ldim; j++) {
            out.amplitudes()(static_cast<Eigen::Index>(pi + place(j, second))) =
                logical(static_cast<Eigen::Index>(i)) * logical(static_cast<Eigen::Index>(j));
        }
    }
    double norm = out.amplitudes().norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        fail(ErrorCode::kValidation, "logical state is not normalised");
    }
    return out;
}

DenseState encode_mirror(const CVector &logical, int d, int n_sites) {
    std::vector<int> positions(logical_sites(n_sites));
    for (int k = 0; k < static_cast<int>(positions.size()); k++) {
        positions[k] = k + 1;
    }
    return encode_positions(logical, d, n_sites, positions);
}

DenseState reverse_sites(const DenseState &state) {
    if (state.layout() != ChainLayout::kSingle) {
        fail(ErrorCode::kInvalidArgument, "site reversal needs a single chain");
    }
    int d = state.dim();
    int n = state.num_sites();
    DenseState out = state;
    const CVector &a = state.amplitudes();
    for (Eigen::Index idx = 0; idx < a.size(); idx++) {
        std::size_t rem = static_cast<std::size_t>(idx), rev = 0;
        for (int p = 0; p < n; p++) {
            rev = rev * d + rem % d;
            rem /= d;
        }
        out.amplitudes()(static_cast<Eigen::Index>(rev)) = a(idx);
    }
    return out;
}

DenseState reflection(const DenseState &state) {
    if (state.layout() != ChainLayout::kSingle) {
        fail(ErrorCode::kInvalidArgument, "reflection needs a single chain");
    }
    DenseState out = state;
    apply_primitive(out, GlobalPrimitive::f_all());
    apply_primitive(out, GlobalPrimitive::f_all());
    for (int t = 0; t <= state.num_sites(); t++) {
        apply_primitive(out, GlobalPrimitive::t_step());
    }
    return out;
}

DenseState localized_gate(const DenseState &state, const PulseSchedule &schedule, double alpha, std::int64_t u,
                          std::int64_t v, int site) {
    if (schedule.d != state.dim() || schedule.n_sites != state.num_sites()) {
        fail(ErrorCode::kInvalidArgument, "schedule does not match the state's (d, N)");
    }
    if (!is_exact_peak(evaluate_schedule(schedule, u, v), schedule.d, site)) {
        fail(ErrorCode::kValidation, "schedule is not a peak at site " + std::to_string(site) + " for (u, v) = (" +
                                         std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    DenseState out = state;
    apply_sequence(out, localized_gate_sequence(schedule, alpha, {u, v}));
    return out;
}

DenseState double_run(const DenseState &state, const PeakSolution &peak, Part part, double theta) {
    if (peak.schedule.d != state.dim() || peak.schedule.n_sites != state.num_sites()) {
        fail(ErrorCode::kInvalidArgument, "schedule does not match the state's (d, N)");
    }
    DenseState out = state;
    apply_sequence(out, double_run_sequence(peak, part, theta));
    return out;
}

double fidelity(const DenseState &a, const DenseState &b) {
    if (a.dim() != b.dim() || a.num_sites() != b.num_sites() || a.layout() != b.layout()) {
        fail(ErrorCode::kInvalidArgument, "fidelity needs states of the same shape");
    }
    return std::abs(a.amplitudes().dot(b.amplitudes()));
}

std::vector<double> probabilities(const DenseState &state, const std::vector<int> &positions) {
    int d = state.dim();
    std::vector<std::size_t> strides;
    std::size_t outcomes = 1;
    for (int p : positions) {
        if (p < 1 || p > state.total_sites()) {
            fail(ErrorCode::kDomain, "measured position out of range");
        }
        strides.push_back(state.stride(p - 1));
        outcomes *= d;
    }
    std::vector<double> probs(outcomes, 0.0);
    const CVector &a = state.amplitudes();
    for (Eigen::Index idx = 0; idx < a.size(); idx++) {
        std::size_t o = 0;
        for (std::size_t s : strides) {
            o = o * d + (static_cast<std::size_t>(idx) / s) % d;
        }
        probs[o] += std::norm(a(idx));
    }
    return probs;
}

std::map<std::int64_t, std::int64_t> measure(const DenseState &state, const std::vector<int> &positions,
                                             std::int64_t shots, std::uint64_t seed) {
    if (shots < 0) {
        fail(ErrorCode::kInvalidArgument, "shot count must be non-negative");
    }
    auto probs = probabilities(state, positions);
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::int64_t> dist(probs.begin(), probs.end());
    std::map<std::int64_t, std::int64_t> hist;
    for (std::int64_t i = 0; i < shots; i++) {
        hist[dist(rng)]++;
    }
    return hist;
}

CMatrix reduced_density_matrix(const DenseState &state, const std::vector<int> &positions) {
    int d = state.dim();
    int T = state.total_sites();
    std::vector<int> keep(T, 0);
    std::size_t kdim = 1;
    for (int p : positions) {
        if (p < 1 || p > T || keep[p - 1]) {
            fail(ErrorCode::kDomain, "invalid or repeated position in partial trace");
        }
        keep[p - 1] = 1;
        kdim *= d;
    }
    std::size_t rdim = static_cast<std::size_t>(state.amplitudes().size()) / kdim;
    CMatrix psi = CMatrix::Zero(static_cast<Eigen::Index>(kdim), static_cast<Eigen::Index>(rdim));
    const CVector &a = state.amplitudes();
    for (Eigen::Index idx = 0; idx < a.size(); idx++) {
        std::size_t rem = static_cast<std::size_t>(idx);
        std::vector<int> digits(T);
        for (int p = T - 1; p >= 0; p--) {
            digits[p] = static_cast<int>(rem % d);
            rem /= d;
        }
        std::size_t k = 0, r = 0;
        for (int p : positions) {
            k = k * d + digits[p - 1];
        }
        for (int p = 0; p < T; p++) {
            if (!keep[p]) {
                r = r * d + digits[p];
            }
        }
        psi(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r)) = a(idx);
    }
    return psi * psi.adjoint();
}

double trace_distance(const CMatrix &rho, const CMatrix &sigma) {
    CMatrix diff = rho - sigma;
    diff = (0.5 * (diff + diff.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(diff);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

CMatrix swap_network_matrix(int d, SwapNetwork network) {
    Dimension dim{d};
    dim.require_finite();
    CMatrix f = fourier_matrix(d);
    CMatrix ff = Eigen::kroneckerProduct(f, f);
    CMatrix cz = CMatrix::Zero(d * d, d * d);
    for (int j = 0; j < d; j++) {
        for (int k = 0; k < d; k++) {
            cz(j * d + k, j * d + k) = zeta_power(dim, static_cast<std::int64_t>(j * k));
        }
    }
    if (network == SwapNetwork::kThreeCz) {
        return ff * cz * ff * cz * ff * cz;
    }
    CMatrix ffi = ff.adjoint();
    return ff * cz * ffi * cz * ffi;
}

PrimitiveSequence readout_sequence(int n_sites, int site) {
    if (site < 1 || site > n_sites) {
        fail(ErrorCode::kDomain, "readout site out of range");
    }
    GlobalPrimitive f = GlobalPrimitive::of(PrimitiveKind::kFSelect);
    f.sites = mirror_pair(n_sites, site);
    GlobalPrimitive cz = GlobalPrimitive::of(PrimitiveKind::kCzInterchain);
    return {cz, f, cz, f, cz, f, GlobalPrimitive::of(PrimitiveKind::kMeasureAncilla)};
}

DenseState attach_ancilla_chain(const DenseState &data) {
    if (data.layout() != ChainLayout::kSingle) {
        fail(ErrorCode::kInvalidArgument, "state already carries an ancilla chain");
    }
    DenseState out(data.dim(), data.num_sites(), ChainLayout::kDataPlusAncilla);
    out.amplitudes().setZero();
    std::size_t shift = static_cast<std::size_t>(data.amplitudes().size());
    for (Eigen::Index i = 0; i < data.amplitudes().size(); i++) {
        out.amplitudes()(static_cast<Eigen::Index>(static_cast<std::size_t>(i) * shift)) = data.amplitudes()(i);
    }
    return out;
}

ReadoutResult readout_swap(const DenseState &two_chain, int site) {
    require_two_chain(two_chain, "readout");
    int n = two_chain.num_sites();
    std::vector<int> ancillas(n);
    for (int j = 0; j < n; j++) {
        ancillas[j] = n + j + 1;
    }
    // the ancilla chain is the low-order half, so |0...0> there means index % d^N == 0
    double p_zero = 0.0;
    std::size_t block = static_cast<std::size_t>(std::llround(std::pow(two_chain.dim(), n)));
    for (Eigen::Index i = 0; i < two_chain.amplitudes().size(); i += static_cast<Eigen::Index>(block)) {
        p_zero += std::norm(two_chain.amplitudes()(i));
    }
    if (std::abs(p_zero - 1.0) > 1e-10) {
        fail(ErrorCode::kValidation, "ancilla chain is not initialised to |0...0>");
    }
    ReadoutResult r{two_chain, {}};
    apply_sequence(r.state, readout_sequence(n, site));
    r.distribution = probabilities(r.state, {n + site});
    return r;
}

}  // namespace gqc
