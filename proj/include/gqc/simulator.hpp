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
#include <map>
#include <string>
#include <vector>

#include "gqc/pulses.hpp"
#include "gqc/weyl.hpp"

namespace gqc {

enum class ChainLayout { kSingle = 0, kDataPlusAncilla = 1 };

inline constexpr std::size_t kDefaultAmplitudeCap = std::size_t{1} << 26;

/// d^T amplitudes over T = N (single chain) or 2N (data chain followed by the
/// ancilla chain) sites. Site 1 is the most significant digit of the index.
class DenseState {
   public:
    DenseState() = default;
    /// |0...0>.
    DenseState(int d, int n_sites, ChainLayout layout = ChainLayout::kSingle,
               std::size_t amplitude_cap = kDefaultAmplitudeCap);
    static DenseState from_amplitudes(int d, int n_sites, ChainLayout layout, CVector amplitudes,
                                      std::size_t amplitude_cap = kDefaultAmplitudeCap);
    static DenseState basis_state(int d, const std::vector<int> &digits, ChainLayout layout = ChainLayout::kSingle);

    int dim() const {
        return d_;
    }
    /// Sites per chain.
    int num_sites() const {
        return n_;
    }
    int total_sites() const {
        return layout_ == ChainLayout::kSingle ? n_ : 2 * n_;
    }
    ChainLayout layout() const {
        return layout_;
    }
    const CVector &amplitudes() const {
        return amps_;
    }
    CVector &amplitudes() {
        return amps_;
    }
    double norm() const {
        return amps_.norm();
    }
    /// d^(T-1-p) for zero-based position p.
    std::size_t stride(int position) const;

   private:
    int d_ = 2;
    int n_ = 0;
    ChainLayout layout_ = ChainLayout::kSingle;
    CVector amps_;
};

std::size_t checked_dimension(int d, int total_sites, std::size_t amplitude_cap = kDefaultAmplitudeCap);

enum class PrimitiveKind {
    kFAll,           // prod_j F_j^{-1}
    kFAllInv,        // prod_j F_j
    kCzChain,        // nearest-neighbour CZ along the data chain
    kCzChainInv,
    kPulse,          // P(eps) = (x)_j X(-eps) Z(eps)
    kHamPulse,       // prod_j exp(-i beta/2 (X(u)Z(v) + h.c.))
    kTStep,          // F_ALL after CZ_CHAIN
    kTInv,
    kCzInterchain,   // CZ between data site j and ancilla site j, all j
    kFSelect,        // F on data and ancilla sites in `sites` (readout only)
    kFSelectInv,
    kMeasureAncilla, // readout epilogue marker
};

struct GlobalPrimitive {
    PrimitiveKind kind = PrimitiveKind::kTStep;
    std::int64_t eps = 0;
    double beta = 0.0;
    WeylLabel label;
    std::vector<int> sites;

    static GlobalPrimitive of(PrimitiveKind kind) {
        GlobalPrimitive p;
        p.kind = kind;
        return p;
    }
    static GlobalPrimitive f_all() {
        return of(PrimitiveKind::kFAll);
    }
    static GlobalPrimitive f_all_inv() {
        return of(PrimitiveKind::kFAllInv);
    }
    static GlobalPrimitive cz_chain() {
        return of(PrimitiveKind::kCzChain);
    }
    static GlobalPrimitive t_step() {
        return of(PrimitiveKind::kTStep);
    }
    static GlobalPrimitive t_inv() {
        return of(PrimitiveKind::kTInv);
    }
    static GlobalPrimitive pulse(std::int64_t eps) {
        auto p = of(PrimitiveKind::kPulse);
        p.eps = eps;
        return p;
    }
    static GlobalPrimitive ham(double beta, WeylLabel label) {
        auto p = of(PrimitiveKind::kHamPulse);
        p.beta = beta;
        p.label = label;
        return p;
    }

    bool is_global() const;
    GlobalPrimitive inverse() const;
    bool operator==(const GlobalPrimitive &) const = default;
};

using PrimitiveSequence = std::vector<GlobalPrimitive>;

std::string primitive_to_string(const GlobalPrimitive &p);
/// Inverse of primitive_to_string; throws kParse.
GlobalPrimitive parse_primitive(const std::string &line);

/// Reverse order, each primitive inverted.
PrimitiveSequence inverse_sequence(const PrimitiveSequence &seq);

/// W = F_ALL^2 T~: for s = 0..N+1 the pulse of slot N+1-s (if any) then a T
/// step while s <= N; then two F_ALL.
PrimitiveSequence transform_sequence(const PulseSchedule &schedule);

/// W^{-1} H(beta) W H(-beta), listed in time order. Acts as
/// exp(i beta/2 ((1 - zeta^kappa) A + h.c.)) on the peak sites, A = X(u)Z(v).
PrimitiveSequence localized_gate_sequence(const PulseSchedule &schedule, double beta, WeylLabel label);

/// The d x d local factor exp(i beta/2 ((1 - zeta^kappa) A + h.c.)).
CMatrix localized_gate_local(int d, std::int64_t kappa, double beta, WeylLabel label);

/// Angles of the two runs (kappa then -kappa) realising exp(i theta B_{label,part}).
struct DoubleRunPlan {
    double alpha_first = 0.0;
    double alpha_second = 0.0;
    bool single_run = false;
};

/// Throws kUnreachable ("uncontrollable component") when sin(2 pi kappa/d) = 0
/// and the ANTISYMMETRIC part is requested.
DoubleRunPlan plan_double_run(int d, std::int64_t kappa, WeylLabel label, Part part, double theta);

PrimitiveSequence double_run_sequence(const PeakSolution &peak, Part part, double theta);

void apply_primitive(DenseState &state, const GlobalPrimitive &p);
void apply_sequence(DenseState &state, const PrimitiveSequence &seq);
/// d^T x d^T matrix of a sequence (small chains only).
CMatrix sequence_matrix(int d, int n_sites, const PrimitiveSequence &seq, ChainLayout layout = ChainLayout::kSingle);

/// Dense matrix of one d x d operator acting on zero-based `position`.
void apply_local(DenseState &state, int position, const CMatrix &op);
/// Applies a d^2 x d^2 operator on zero-based positions (first, second); first is the
/// more significant factor.
void apply_two_site(DenseState &state, int first, int second, const CMatrix &op);

CMatrix fourier_matrix(int d);

/// |psi> (x) |0>_middle (odd N) (x) reverse(|psi>).
DenseState encode_mirror(const CVector &logical, int d, int n_sites);

/// Copies of `logical` at 1-based `positions` and their mirror images; every
/// other site holds |0>.
DenseState encode_positions(const CVector &logical, int d, int n_sites, const std::vector<int> &positions);

/// Logical qudit count for an N-site mirror encoding: floor(N/2).
int logical_sites(int n_sites);

/// Site order reversed (single chain).
DenseState reverse_sites(const DenseState &state);

/// Two F_ALL then N+1 T steps.
DenseState reflection(const DenseState &state);

DenseState localized_gate(const DenseState &state, const PulseSchedule &schedule, double alpha, std::int64_t u,
                          std::int64_t v, int site);
DenseState double_run(const DenseState &state, const PeakSolution &peak, Part part, double theta);

/// |<a|b>|.
double fidelity(const DenseState &a, const DenseState &b);

/// Outcome probabilities over 1-based positions, first position most significant.
std::vector<double> probabilities(const DenseState &state, const std::vector<int> &positions);

/// Sampled outcomes keyed by outcome index; deterministic in `seed`.
std::map<std::int64_t, std::int64_t> measure(const DenseState &state, const std::vector<int> &positions,
                                             std::int64_t shots, std::uint64_t seed);

CMatrix reduced_density_matrix(const DenseState &state, const std::vector<int> &positions);
double trace_distance(const CMatrix &rho, const CMatrix &sigma);

enum class SwapNetwork {
    kThreeCz,  // (F x F) CZ (F x F) CZ (F x F) CZ
    kQuoted,   // (F x F) CZ (F^-1 x F^-1) CZ (F^-1 x F^-1)
};

/// d^2 x d^2 matrix of a two-site swap network (data site first).
CMatrix swap_network_matrix(int d, SwapNetwork network);

/// The global readout epilogue for data site `site` (and its mirror).
PrimitiveSequence readout_sequence(int n_sites, int site);

struct ReadoutResult {
    DenseState state;
    std::vector<double> distribution;
};

/// Swaps data site `site` (and mirror) into the ancilla chain and returns the
/// exact distribution of ancilla site `site`. The ancilla chain must be |0...0>.
ReadoutResult readout_swap(const DenseState &two_chain, int site);

/// Single-chain state (x) |0...0> ancillas.
DenseState attach_ancilla_chain(const DenseState &data);

void write_state_binary(const DenseState &state, const std::string &path);
DenseState read_state_binary(const std::string &path);
std::string format_state_text(const DenseState &state);
DenseState parse_state_text(const std::string &text);
/// Binary when the file starts with the magic, text otherwise.
DenseState read_state_file(const std::string &path);

}  // namespace gqc
