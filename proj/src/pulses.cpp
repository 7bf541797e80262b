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

#include "gqc/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace gqc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; i++) {
        r *= base;
    }
    return r;
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t d) {
    std::int64_t old_r = mod(a, d), r = d, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    if (old_r != 1) {
        return std::nullopt;
    }
    return mod(old_s, d);
}

void check_site(int n_sites, int site) {
    if (n_sites < 1) {
        fail(ErrorCode::kDomain, "chain needs at least one site");
    }
    if (site < 1 || site > num_site_classes(n_sites)) {
        fail(ErrorCode::kDomain,
             "peak site " + std::to_string(site) + " outside [1, " + std::to_string(num_site_classes(n_sites)) + "]");
    }
}

// Profile rows: rows[k-1][m] = S_m(k) mod d for classes k and slots 0..n_slots-1.
std::vector<std::vector<std::int64_t>> profile_rows(int n_sites, int d, std::int64_t u, std::int64_t v,
                                                    int n_slots) {
    int K = num_site_classes(n_sites);
    std::vector<std::vector<std::int64_t>> rows(K, std::vector<std::int64_t>(n_slots));
    for (int k = 1; k <= K; k++) {
        for (int m = 0; m < n_slots; m++) {
            rows[k - 1][m] = mod(pulse_phase<std::int64_t>(n_sites, u, v, m, k), d);
        }
    }
    return rows;
}

struct Assignment {
    int support = 0;
    std::int64_t index = 0;
};

// Enumerates strengths on `slots` in lexicographic order (first slot most significant).
template <typename Fn>
void for_each_assignment(int d, int count, Fn &&fn) {
    std::vector<std::int64_t> c(count, 0);
    std::int64_t total = ipow(d, count);
    for (std::int64_t idx = 0; idx < total; idx++) {
        std::int64_t rem = idx;
        int support = 0;
        for (int j = count - 1; j >= 0; j--) {
            c[j] = rem % d;
            rem /= d;
            support += c[j] != 0;
        }
        fn(idx, support, c);
    }
}

struct Candidate {
    int support;
    std::int64_t a;
    std::int64_t b;
    std::int64_t kappa;
    auto key() const {
        return std::tie(support, a, b);
    }
};

// Minimal-support peaks for every site class over slots 0..n_slots-1 by
// meet-in-the-middle over the two halves of the slot range.
std::vector<std::optional<std::vector<std::int64_t>>> search_peaks(
    const std::vector<std::vector<std::int64_t>> &rows, int d, int n_slots) {
    int K = static_cast<int>(rows.size());
    int na = (n_slots + 1) / 2;
    int nb = n_slots - na;

    auto image_code = [&](const std::vector<std::int64_t> &c, int offset) {
        std::int64_t code = 0;
        for (int k = 0; k < K; k++) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < c.size(); j++) {
                s += c[j] * rows[k][offset + j];
            }
            code = code * d + mod(s, d);
        }
        return code;
    };

    std::unordered_map<std::int64_t, Assignment> best_b;
    best_b.reserve(static_cast<std::size_t>(ipow(d, nb)) * 2);
    for_each_assignment(d, nb, [&](std::int64_t idx, int support, const std::vector<std::int64_t> &c) {
        std::int64_t code = image_code(c, na);
        auto it = best_b.find(code);
        if (it == best_b.end() || support < it->second.support) {
            best_b[code] = {support, idx};
        }
    });

    std::vector<std::int64_t> place(K);
    for (int k = 0; k < K; k++) {
        place[k] = ipow(d, K - 1 - k);
    }
    std::vector<std::optional<Candidate>> best(K);
    for_each_assignment(d, na, [&](std::int64_t idx, int support, const std::vector<std::int64_t> &c) {
        std::vector<std::int64_t> img(K);
        for (int k = 0; k < K; k++) {
            std::int64_t s = 0;
            for (int j = 0; j < na; j++) {
                s += c[j] * rows[k][j];
            }
            img[k] = mod(s, d);
        }
        std::int64_t neg_code = 0;
        for (int k = 0; k < K; k++) {
            neg_code = neg_code * d + mod(-img[k], d);
        }
        for (int l = 0; l < K; l++) {
            for (std::int64_t kappa = 1; kappa < d; kappa++) {
                // need = kappa e_l - img, adjusted digit-wise at position l
                std::int64_t digit = mod(-img[l], d);
                std::int64_t need = neg_code + (mod(kappa - img[l], d) - digit) * place[l];
                auto it = best_b.find(need);
                if (it == best_b.end()) {
                    continue;
                }
                Candidate cand{support + it->second.support, idx, it->second.index, kappa};
                if (!best[l] || cand.key() < best[l]->key()) {
                    best[l] = cand;
                }
            }
        }
    });

    std::vector<std::optional<std::vector<std::int64_t>>> out(K);
    for (int l = 0; l < K; l++) {
        if (!best[l]) {
            continue;
        }
        std::vector<std::int64_t> c(n_slots, 0);
        std::int64_t a = best[l]->a, b = best[l]->b;
        for (int j = na - 1; j >= 0; j--) {
            c[j] = a % d;
            a /= d;
        }
        for (int j = nb - 1; j >= 0; j--) {
            c[na + j] = b % d;
            b /= d;
        }
        out[l] = std::move(c);
    }
    return out;
}

std::vector<std::int64_t> find_witness(const std::vector<std::vector<std::int64_t>> &rows, int d, int l) {
    int K = static_cast<int>(rows.size());
    int n_slots = static_cast<int>(rows[0].size());
    std::vector<std::int64_t> y(K, 0);
    std::int64_t total = ipow(d, K - 1);
    for (std::int64_t idx = 0; idx < total; idx++) {
        std::int64_t rem = idx;
        for (int k = K - 1; k >= 0; k--) {
            if (k == l) {
                y[k] = 0;
                continue;
            }
            y[k] = rem % d;
            rem /= d;
        }
        bool ok = true;
        for (int m = 0; m < n_slots && ok; m++) {
            std::int64_t s = 0;
            for (int k = 0; k < K; k++) {
                s += y[k] * rows[k][m];
            }
            ok = mod(s - rows[l][m], d) == 0;
        }
        if (ok) {
            return y;
        }
    }
    fail(ErrorCode::kInternal, "no unreachability witness found for site " + std::to_string(l + 1));
}

PulseSchedule schedule_from(int d, int n_sites, const std::vector<std::int64_t> &c) {
    PulseSchedule s{d, n_sites, {}};
    for (int m = 0; m < static_cast<int>(c.size()); m++) {
        if (mod(c[m], d) != 0) {
            s.entries.push_back({m, mod(c[m], d)});
        }
    }
    return s;
}

double wrap_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r > std::numbers::pi) {
        r -= kTwoPi;
    } else if (r <= -std::numbers::pi) {
        r += kTwoPi;
    }
    return r;
}

}  // namespace

int num_site_classes(int n_sites) {
    return (n_sites + 1) / 2;
}

int max_pulse_slot(int n_sites) {
    return (n_sites + 2) / 2;
}

std::int64_t PulseSchedule::strength(int slot) const {
    for (const auto &e : entries) {
        if (e.slot == slot) {
            return e.eps;
        }
    }
    return 0;
}

PulseSchedule PulseSchedule::negated() const {
    return scaled(-1);
}

PulseSchedule PulseSchedule::scaled(std::int64_t factor) const {
    PulseSchedule out{d, n_sites, {}};
    for (const auto &e : entries) {
        std::int64_t v = mod(e.eps * factor, d);
        if (v != 0) {
            out.entries.push_back({e.slot, v});
        }
    }
    return out;
}

std::vector<std::int64_t> evaluate_schedule(const PulseSchedule &schedule, std::int64_t u, std::int64_t v) {
    std::vector<std::int64_t> out(schedule.n_sites, 0);
    for (const auto &e : schedule.entries) {
        auto s = plateau_profile<std::int64_t>(schedule.n_sites, e.slot, u, v);
        for (int j = 0; j < schedule.n_sites; j++) {
            out[j] = mod(out[j] + e.eps * s[j], schedule.d);
        }
    }
    return out;
}

std::vector<double> evaluate_schedule(const CvSchedule &schedule, double u, double v) {
    std::vector<double> out(schedule.n_sites, 0.0);
    for (const auto &e : schedule.entries) {
        auto s = plateau_profile<double>(schedule.n_sites, e.slot, u, v);
        for (int j = 0; j < schedule.n_sites; j++) {
            out[j] += e.eps * s[j];
        }
    }
    return out;
}

bool is_exact_peak(const std::vector<std::int64_t> &profile, int d, int site) {
    int n = static_cast<int>(profile.size());
    for (int l = 1; l <= n; l++) {
        bool on_peak = l == site || l == n + 1 - site;
        if (on_peak != (mod(profile[l - 1], d) != 0)) {
            return false;
        }
    }
    return true;
}

bool is_exact_peak(const std::vector<double> &profile, int site, double tol) {
    int n = static_cast<int>(profile.size());
    for (int l = 1; l <= n; l++) {
        bool on_peak = l == site || l == n + 1 - site;
        bool nonzero = std::abs(wrap_two_pi(profile[l - 1])) > tol;
        if (on_peak != nonzero) {
            return false;
        }
    }
    return true;
}

std::vector<PeakSolution> solve_all_peaks(int n_sites, int d, std::int64_t u, std::int64_t v) {
    Dimension{d}.require_finite();
    check_site(n_sites, 1);
    u = mod(u, d);
    v = mod(v, d);
    if (u == 0 && v == 0) {
        fail(ErrorCode::kDomain, "(u, v) = (0, 0) carries no generator");
    }
    int K = num_site_classes(n_sites);
    int base_slots = K + 1;
    int all_slots = max_pulse_slot(n_sites) + 1;

    auto rows = profile_rows(n_sites, d, u, v, base_slots);
    auto found = search_peaks(rows, d, base_slots);
    if (all_slots > base_slots &&
        std::any_of(found.begin(), found.end(), [](const auto &f) { return !f.has_value(); })) {
        auto rows_all = profile_rows(n_sites, d, u, v, all_slots);
        auto extra = search_peaks(rows_all, d, all_slots);
        for (int l = 0; l < K; l++) {
            if (!found[l]) {
                found[l] = extra[l];
            }
        }
    }

    auto rows_all = profile_rows(n_sites, d, u, v, all_slots);
    std::vector<PeakSolution> out(K);
    for (int l = 1; l <= K; l++) {
        PeakSolution &sol = out[l - 1];
        sol.site = l;
        sol.u = u;
        sol.v = v;
        sol.schedule = PulseSchedule{d, n_sites, {}};
        if (found[l - 1]) {
            sol.status = PeakStatus::kExact;
            sol.schedule = schedule_from(d, n_sites, *found[l - 1]);
            sol.kappa = evaluate_schedule(sol.schedule, u, v)[l - 1];
            continue;
        }
        sol.status = PeakStatus::kUnreachable;
        sol.witness = find_witness(rows_all, d, l - 1);
        std::ostringstream os;
        os << "site class " << l << " is a Z_" << d << " combination of the other classes' pulse responses (u=" << u
           << ", v=" << v << ")";
        if (n_sites % 2 == 1 && l == K) {
            os << "; middle site";
        }
        sol.reason = os.str();
    }
    return out;
}

PeakSolution solve_peak(int n_sites, int d, std::int64_t u, std::int64_t v, int site) {
    check_site(n_sites, site);
    return solve_all_peaks(n_sites, d, u, v)[site - 1];
}

std::vector<std::int64_t> triangular_peak(int n_sites, int d, std::int64_t u, std::int64_t v, int site,
                                          std::int64_t leading) {
    Dimension{d}.require_finite();
    check_site(n_sites, site);
    int K = num_site_classes(n_sites);
    std::vector<std::int64_t> c(K + 1, 0);
    c[site] = mod(leading, d);
    for (int k = site + 1; k <= K; k++) {
        std::int64_t sum = 0;
        for (int m = site; m < k; m++) {
            sum += c[m] * pulse_phase<std::int64_t>(n_sites, u, v, m, k);
        }
        std::int64_t diag = pulse_phase<std::int64_t>(n_sites, u, v, k, k);
        auto inv = mod_inverse(diag, d);
        if (!inv) {
            fail(ErrorCode::kUnreachable, "S_" + std::to_string(k) + " has non-unit response " +
                                              std::to_string(mod(diag, d)) + " on its own sites mod " +
                                              std::to_string(d));
        }
        c[k] = mod(-mod(sum, d) * *inv, d);
    }
    return c;
}

CvPeakSolution solve_peak_cv(int n_sites, double u, double v, int site) {
    check_site(n_sites, site);
    if (u == 0.0 && v == 0.0) {
        fail(ErrorCode::kDomain, "(u, v) = (0, 0) carries no generator");
    }
    int K = num_site_classes(n_sites);
    int n_slots = max_pulse_slot(n_sites) + 1;
    CvPeakSolution sol;
    sol.site = site;
    sol.u = u;
    sol.v = v;
    sol.schedule.n_sites = n_sites;

    auto accept = [&](CvSchedule s) {
        auto prof = evaluate_schedule(s, u, v);
        if (!is_exact_peak(prof, site)) {
            return false;
        }
        sol.status = PeakStatus::kExact;
        sol.schedule = std::move(s);
        sol.kappa = prof[site - 1];
        return true;
    };

    // A single pulse on S_site, with eps = 2 pi / (u+v) wiping the interior.
    {
        double interior = 0.0;
        bool uniform = true;
        for (int k = 1; k <= K; k++) {
            if (k == site) {
                continue;
            }
            double val = pulse_phase<double>(n_sites, u, v, site, k);
            if (val == 0.0) {
                continue;
            }
            if (interior != 0.0 && val != interior) {
                uniform = false;
            }
            interior = val;
        }
        if (uniform) {
            double eps = interior == 0.0 ? 1.0 : kTwoPi / interior;
            if (accept(CvSchedule{n_sites, {{site, eps}}})) {
                return sol;
            }
        }
    }
    if (v == 0.0 && site + 1 < n_slots && accept(CvSchedule{n_sites, {{site, 1.0}, {site + 1, -1.0}}})) {
        return sol;
    }
    if (u == 0.0 && accept(CvSchedule{n_sites, {{site - 1, 1.0}, {site, -1.0}}})) {
        return sol;
    }

    Eigen::MatrixXd others(K - 1, n_slots);
    Eigen::RowVectorXd target(n_slots);
    for (int m = 0; m < n_slots; m++) {
        int r = 0;
        for (int k = 1; k <= K; k++) {
            double val = pulse_phase<double>(n_sites, u, v, m, k);
            if (k == site) {
                target(m) = val;
            } else {
                others(r++, m) = val;
            }
        }
    }
    Eigen::MatrixXd kernel = K > 1 ? Eigen::MatrixXd(Eigen::FullPivLU<Eigen::MatrixXd>(others).kernel())
                                   : Eigen::MatrixXd::Identity(n_slots, n_slots);
    for (Eigen::Index j = 0; j < kernel.cols(); j++) {
        Eigen::VectorXd c = kernel.col(j);
        double kappa = target.dot(c);
        if (std::abs(kappa) < 1e-9) {
            continue;
        }
        c /= kappa;
        CvSchedule s{n_sites, {}};
        for (int m = 0; m < n_slots; m++) {
            if (std::abs(c(m)) > 1e-12) {
                s.entries.push_back({m, c(m)});
            }
        }
        if (accept(std::move(s))) {
            return sol;
        }
    }
    sol.status = PeakStatus::kUnreachable;
    sol.reason = "site class " + std::to_string(site) + " response lies in the span of the other classes over R";
    return sol;
}

std::int64_t schedule_kappa(const PeakSolution &solution) {
    if (solution.status != PeakStatus::kExact) {
        fail(ErrorCode::kUnreachable, solution.reason);
    }
    return solution.kappa;
}

double schedule_kappa(const CvPeakSolution &solution) {
    if (solution.status != PeakStatus::kExact) {
        fail(ErrorCode::kUnreachable, solution.reason);
    }
    return solution.kappa;
}

int op_count(int n_sites, int m) {
    if (n_sites < 1 || m < 1 || m > num_site_classes(n_sites)) {
        fail(ErrorCode::kDomain, "op_count needs 1 <= m <= ceil(N/2)");
    }
    return 4 * (n_sites + 2) + n_sites / 2 - 2 * m;
}

std::string format_pi_multiple(double x) {
    if (x == 0.0) {
        return "0";
    }
    double r = x / std::numbers::pi;
    for (int q = 1; q <= 64; q++) {
        double p = std::round(r * q);
        if (p != 0.0 && std::abs(r * q - p) < 1e-9) {
            std::ostringstream os;
            os << static_cast<long long>(p);
            if (q != 1) {
                os << "/" << q;
            }
            os << "*pi";
            return os.str();
        }
    }
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

std::string format_schedule(const PeakSolution &solution) {
    std::ostringstream os;
    os << "ring=Zd:" << solution.schedule.d << "\n";
    os << "# N=" << solution.schedule.n_sites << " u=" << solution.u << " v=" << solution.v << " l=" << solution.site;
    if (solution.status == PeakStatus::kExact) {
        os << " kappa=" << solution.kappa << "\n";
        for (const auto &e : solution.schedule.entries) {
            os << "s=" << e.slot << " eps=" << e.eps << "\n";
        }
    } else {
        os << " status=UNREACHABLE\n# reason: " << solution.reason << "\n# witness y=";
        for (std::size_t k = 0; k < solution.witness.size(); k++) {
            os << (k ? "," : "") << solution.witness[k];
        }
        os << "\n";
    }
    return os.str();
}

std::string format_schedule(const CvPeakSolution &solution) {
    std::ostringstream os;
    os.precision(17);
    os << "ring=R\n";
    os << "# N=" << solution.schedule.n_sites << " u=" << solution.u << " v=" << solution.v << " l=" << solution.site;
    if (solution.status == PeakStatus::kExact) {
        os << " kappa=" << format_pi_multiple(solution.kappa) << "\n";
        for (const auto &e : solution.schedule.entries) {
            os << "s=" << e.slot << " eps=" << format_pi_multiple(e.eps) << "\n";
        }
    } else {
        os << " status=UNREACHABLE\n# reason: " << solution.reason << "\n";
    }
    return os.str();
}

PulseSchedule parse_schedule(const std::string &text, int n_sites) {
    std::istringstream in(text);
    std::string line;
    PulseSchedule s{0, n_sites, {}};
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto where = " on schedule line " + std::to_string(line_no);
        if (line.rfind("ring=", 0) == 0) {
            if (line.rfind("ring=Zd:", 0) != 0) {
                fail(ErrorCode::kParse, "only Z_d schedules can be loaded" + where);
            }
            try {
                s.d = std::stoi(line.substr(8));
            } catch (const std::exception &) {
                fail(ErrorCode::kParse, "bad ring header" + where);
            }
            continue;
        }
        int slot = 0;
        long long eps = 0;
        char tail = 0;
        if (std::sscanf(line.c_str(), "s=%d eps=%lld %c", &slot, &eps, &tail) != 2) {
            fail(ErrorCode::kParse, "expected 's=<int> eps=<int>'" + where);
        }
        if (s.d < 2) {
            fail(ErrorCode::kParse, "entry before ring header" + where);
        }
        if (slot < 0 || slot > max_pulse_slot(n_sites)) {
            fail(ErrorCode::kParse, "slot out of range" + where);
        }
        if (mod(eps, s.d) != 0) {
            s.entries.push_back({slot, mod(eps, s.d)});
        }
    }
    if (s.d < 2) {
        fail(ErrorCode::kParse, "missing ring header");
    }
    std::sort(s.entries.begin(), s.entries.end(), [](auto &a, auto &b) { return a.slot < b.slot; });
    return s;
}

}  // namespace gqc
