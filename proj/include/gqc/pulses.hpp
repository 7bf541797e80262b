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

#include "gqc/tableau.hpp"

namespace gqc {

/// Number of site classes {k, N+1-k}: ceil(N/2).
int num_site_classes(int n_sites);

/// Largest usable pulse slot: ceil((N+1)/2).
int max_pulse_slot(int n_sites);

/// Multiplier of the pulse strength picked up by X(u)Z(v) on `site` from a pulse
/// followed by m steps: S_m(l) = -v x^{(m)}_l + u z^{(m)}_l, where z^{(0)} = 1 and
/// z^{(m)} = -x^{(m-1)}. Gives u on {m, N+1-m}, u+v strictly inside, 0 outside,
/// and u-v on the odd-N centre at m = (N+1)/2.
template <typename Scalar>
Scalar pulse_phase(int n_sites, Scalar u, Scalar v, int m, int site) {
    if (m < 0 || m > n_sites + 1) {
        fail(ErrorCode::kDomain, "pulse slot " + std::to_string(m) + " outside [0, N+1]");
    }
    Scalar x = x_profile(n_sites, m, site);
    Scalar z = m == 0 ? Scalar{1} : static_cast<Scalar>(-x_profile(n_sites, m - 1, site));
    return -v * x + u * z;
}

/// S_m over all N sites (unreduced).
template <typename Scalar>
std::vector<Scalar> plateau_profile(int n_sites, int m, Scalar u, Scalar v) {
    std::vector<Scalar> out(n_sites);
    for (int l = 1; l <= n_sites; l++) {
        out[l - 1] = pulse_phase<Scalar>(n_sites, u, v, m, l);
    }
    return out;
}

struct PulseEntry {
    int slot = 0;
    std::int64_t eps = 0;
    bool operator==(const PulseEntry &) const = default;
};

/// Strengths over Z_d, one entry per non-vanishing slot, sorted by slot. Slot m
/// is the pulse that is followed by m steps of T inside T~.
struct PulseSchedule {
    int d = 2;
    int n_sites = 0;
    std::vector<PulseEntry> entries;

    std::int64_t strength(int slot) const;
    /// Every strength negated; the peak strength flips sign.
    PulseSchedule negated() const;
    PulseSchedule scaled(std::int64_t factor) const;
    bool operator==(const PulseSchedule &) const = default;
};

struct CvPulseEntry {
    int slot = 0;
    double eps = 0.0;
};

struct CvSchedule {
    int n_sites = 0;
    std::vector<CvPulseEntry> entries;
};

enum class PeakStatus { kExact, kUnreachable };

struct PeakSolution {
    PeakStatus status = PeakStatus::kUnreachable;
    PulseSchedule schedule;
    int site = 0;
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::int64_t kappa = 0;
    std::string reason;
    /// For UNREACHABLE: y over site classes 1..K (y_site = 0) such that the
    /// class-`site` row of the profile matrix equals sum_k y_k row_k mod d.
    std::vector<std::int64_t> witness;
};

struct CvPeakSolution {
    PeakStatus status = PeakStatus::kUnreachable;
    CvSchedule schedule;
    int site = 0;
    double u = 0.0;
    double v = 0.0;
    double kappa = 0.0;
    std::string reason;
};

/// Combined per-site multiplier sum_m eps_m S_m(l) mod d.
std::vector<std::int64_t> evaluate_schedule(const PulseSchedule &schedule, std::int64_t u, std::int64_t v);
std::vector<double> evaluate_schedule(const CvSchedule &schedule, double u, double v);

/// True when `profile` vanishes mod d off {site, N+1-site} and is non-zero there.
bool is_exact_peak(const std::vector<std::int64_t> &profile, int d, int site);
/// Same test for CV, with all values taken mod 2 pi.
bool is_exact_peak(const std::vector<double> &profile, int site, double tol = 1e-9);

/// Exact solve over Z_d. Among all schedules producing an l-peak the one with
/// fewest pulses wins, then the lexicographically smallest strength vector
/// (eps_0, eps_1, ...). The extra slot ceil((N+1)/2) of even chains is only used
/// when slots 0..N/2 admit no solution.
PeakSolution solve_peak(int n_sites, int d, std::int64_t u, std::int64_t v, int site);

/// solve_peak for every site 1..ceil(N/2); index k-1 holds site k.
std::vector<PeakSolution> solve_all_peaks(int n_sites, int d, std::int64_t u, std::int64_t v);

/// Back-substitution from the given leading coefficient on S_site through
/// S_{ceil(N/2)}, never using S_0. Returns coefficients indexed by slot 0..ceil(N/2).
/// Throws kUnreachable when a diagonal entry is not a unit mod d.
std::vector<std::int64_t> triangular_peak(int n_sites, int d, std::int64_t u, std::int64_t v, int site,
                                          std::int64_t leading);

/// CV solve over the reals; peaks are tested mod 2 pi (zeta = e^i).
CvPeakSolution solve_peak_cv(int n_sites, double u, double v, int site);

/// The peak strength of an EXACT solution; UNREACHABLE raises kUnreachable.
std::int64_t schedule_kappa(const PeakSolution &solution);
double schedule_kappa(const CvPeakSolution &solution);

/// 4(N+2) + floor(N/2) - 2m.
int op_count(int n_sites, int m);

std::string format_schedule(const PeakSolution &solution);
std::string format_schedule(const CvPeakSolution &solution);
PulseSchedule parse_schedule(const std::string &text, int n_sites);

/// x as "p/q*pi" when x/pi is a small rational, else a decimal.
std::string format_pi_multiple(double x);

}  // namespace gqc
