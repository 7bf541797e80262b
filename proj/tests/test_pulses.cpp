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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gqc/pulses.hpp"

namespace gqc {
namespace {

std::int64_t support(const PulseSchedule &s) {
    return static_cast<std::int64_t>(s.entries.size());
}

TEST(Pulses, PhaseProfileShape) {
    for (int n : {5, 6, 7, 8}) {
        for (int m = 1; m <= num_site_classes(n); m++) {
            for (int l = 1; l <= n; l++) {
                std::int64_t s = pulse_phase<std::int64_t>(n, 3, 5, m, l);
                bool edge = l == m || l == n + 1 - m;
                bool inside = l > m && l < n + 1 - m;
                if (n % 2 == 1 && m == (n + 1) / 2 && l == m) {
                    EXPECT_EQ(s, 3 - 5);
                } else if (edge) {
                    EXPECT_EQ(s, 3);
                } else if (inside) {
                    EXPECT_EQ(s, 8);
                } else {
                    EXPECT_EQ(s, 0);
                }
            }
        }
        for (int l = 1; l <= n; l++) {
            EXPECT_EQ(pulse_phase<std::int64_t>(n, 3, 5, 0, l), 8);
        }
    }
    EXPECT_EQ(num_site_classes(7), 4);
    EXPECT_EQ(num_site_classes(8), 4);
    EXPECT_EQ(max_pulse_slot(8), 5);
    EXPECT_THROW(pulse_phase<std::int64_t>(4, 1, 1, 6, 1), Error);
}

TEST(Pulses, SolverReturnsExactPeaks) {
    for (int n = 2; n <= 9; n++) {
        for (int d = 2; d <= 7; d++) {
            for (int u = 0; u < d; u++) {
                for (int v = 0; v < d; v++) {
                    if (u == 0 && v == 0) continue;
                    for (const auto &sol : solve_all_peaks(n, d, u, v)) {
                        if (sol.status != PeakStatus::kExact) continue;
                        auto prof = evaluate_schedule(sol.schedule, u, v);
                        ASSERT_TRUE(is_exact_peak(prof, d, sol.site))
                            << "N=" << n << " d=" << d << " u=" << u << " v=" << v << " l=" << sol.site;
                        EXPECT_EQ(schedule_kappa(sol), prof[sol.site - 1]);
                    }
                }
            }
        }
    }
}

TEST(Pulses, UnitUAlwaysReachableOnPrimeD) {
    for (int n = 2; n <= 10; n++) {
        for (int d : {2, 3, 5, 7}) {
            for (int v = 0; v < d; v++) {
                for (const auto &sol : solve_all_peaks(n, d, 1, v)) {
                    if (n % 2 == 1 && sol.site == (n + 1) / 2 && v == 1) continue;
                    EXPECT_EQ(sol.status, PeakStatus::kExact)
                        << "N=" << n << " d=" << d << " v=" << v << " l=" << sol.site << " " << sol.reason;
                }
            }
        }
    }
}

TEST(Pulses, ZeroVGivesTwoPulseDifference) {
    // With v = 0 adjacent plateaus differ by a peak: R_l = S_l - S_{l+1}.
    for (int n : {6, 7, 8}) {
        for (int l = 1; l < num_site_classes(n); l++) {
            auto sol = solve_peak(n, 5, 1, 0, l);
            ASSERT_EQ(sol.status, PeakStatus::kExact);
            EXPECT_EQ(support(sol.schedule), 2);
            EXPECT_EQ(sol.schedule.strength(l), 1);
            EXPECT_EQ(sol.schedule.strength(l + 1), 4);
        }
    }
}

TEST(Pulses, TieBreakIsMinimalSupportThenLexicographic) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; trial++) {
        int n = 3 + static_cast<int>(rng() % 4);
        int d = 2 + static_cast<int>(rng() % 4);
        std::int64_t u = static_cast<std::int64_t>(rng() % d), v = static_cast<std::int64_t>(rng() % d);
        if (u == 0 && v == 0) continue;
        int site = 1 + static_cast<int>(rng() % num_site_classes(n));
        auto sol = solve_peak(n, d, u, v, site);
        if (sol.status != PeakStatus::kExact) continue;
        // Brute force over all schedules on slots 0..K.
        int k = num_site_classes(n);
        int slots = k + 1;
        std::vector<std::int64_t> best;
        int best_support = 1 << 30;
        std::vector<std::int64_t> c(slots, 0);
        std::int64_t total = 1;
        for (int i = 0; i < slots; i++) total *= d;
        for (std::int64_t code = 1; code < total; code++) {
            std::int64_t r = code;
            int supp = 0;
            for (int i = slots - 1; i >= 0; i--) {
                c[i] = r % d;
                r /= d;
                supp += c[i] != 0;
            }
            PulseSchedule s{d, n, {}};
            for (int i = 0; i < slots; i++) {
                if (c[i]) s.entries.push_back({i, c[i]});
            }
            if (!is_exact_peak(evaluate_schedule(s, u, v), d, site)) continue;
            if (supp < best_support || (supp == best_support && c < best)) {
                best_support = supp;
                best = c;
            }
        }
        if (best.empty()) continue;  // only the extra slot helps
        std::vector<std::int64_t> got(slots, 0);
        for (const auto &e : sol.schedule.entries) {
            ASSERT_LT(e.slot, slots);
            got[e.slot] = e.eps;
        }
        EXPECT_EQ(got, best) << "N=" << n << " d=" << d << " u=" << u << " v=" << v << " l=" << site;
    }
}

TEST(Pulses, UnreachableCarriesWitness) {
    int found = 0;
    for (int n = 2; n <= 8; n++) {
        for (int d : {2, 4, 6}) {
            for (int u = 0; u < d; u++) {
                for (int v = 0; v < d; v++) {
                    if (u == 0 && v == 0) continue;
                    for (const auto &sol : solve_all_peaks(n, d, u, v)) {
                        if (sol.status != PeakStatus::kUnreachable) continue;
                        found++;
                        EXPECT_FALSE(sol.reason.empty());
                        int k = num_site_classes(n);
                        ASSERT_EQ(sol.witness.size(), static_cast<std::size_t>(k));
                        EXPECT_EQ(sol.witness[sol.site - 1], 0);
                        for (int m = 0; m <= max_pulse_slot(n); m++) {
                            std::int64_t lhs = pulse_phase<std::int64_t>(n, u, v, m, sol.site);
                            std::int64_t rhs = 0;
                            for (int c = 1; c <= k; c++) {
                                rhs += sol.witness[c - 1] * pulse_phase<std::int64_t>(n, u, v, m, c);
                            }
                            EXPECT_EQ(mod(lhs - rhs, d), 0) << "N=" << n << " d=" << d << " m=" << m;
                        }
                        EXPECT_THROW(schedule_kappa(sol), Error);
                    }
                }
            }
        }
    }
    EXPECT_GT(found, 0);
}

TEST(Pulses, TriangularFormsForEvenChain) {
    // R_4 = S_4, R_3 = u S_3 - (u+v) S_4, R_2 = u^2 S_2 - (u+v)(u S_3 - v S_4),
    // R_1 = u^3 S_1 - (u+v)(u^2 S_2 - v u S_3 + v^2 S_4).
    for (int d : {3, 5, 7}) {
        for (std::int64_t u = 1; u < d; u++) {
            for (std::int64_t v = 0; v < d; v++) {
                auto m = [d](std::int64_t x) { return mod(x, d); };
                std::int64_t w = u + v;
                std::vector<std::vector<std::int64_t>> expect = {
                    {0, m(u * u * u), m(-w * u * u), m(w * v * u), m(-w * v * v)},
                    {0, 0, m(u * u), m(-w * u), m(w * v)},
                    {0, 0, 0, m(u), m(-w)},
                    {0, 0, 0, 0, 1},
                };
                std::int64_t lead[] = {u * u * u, u * u, u, 1};
                for (int l = 1; l <= 4; l++) {
                    auto c = triangular_peak(8, d, u, v, l, m(lead[l - 1]));
                    EXPECT_EQ(c, expect[l - 1]) << "d=" << d << " u=" << u << " v=" << v << " l=" << l;
                }
            }
        }
    }
}

TEST(Pulses, TriangularRejectsNonUnitDiagonal) {
    try {
        triangular_peak(8, 4, 2, 1, 1, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kUnreachable);
    }
}

TEST(Pulses, ScheduleTextRoundTrip) {
    auto sol = solve_peak(8, 5, 1, 1, 3);
    std::string text = format_schedule(sol);
    EXPECT_NE(text.find("ring=Zd:5"), std::string::npos);
    EXPECT_EQ(parse_schedule(text, 8), sol.schedule);
    EXPECT_THROW(parse_schedule("ring=Zd:5\ns=x eps=1\n", 8), Error);
    EXPECT_EQ(sol.schedule.negated().scaled(-1), sol.schedule);
}

TEST(Pulses, OpCountFormula) {
    EXPECT_EQ(op_count(8, 1), 42);
    EXPECT_EQ(op_count(7, 4), 4 * 9 + 3 - 8);
    EXPECT_THROW(op_count(8, 0), Error);
    EXPECT_THROW(op_count(8, 5), Error);
}

TEST(Pulses, ContinuousPeaks) {
    for (int n : {4, 5, 6, 7, 8}) {
        for (double u : {1.0, 0.7, -1.3}) {
            for (double v : {0.0, 0.4, 2.0}) {
                for (int l = 1; l <= num_site_classes(n); l++) {
                    auto sol = solve_peak_cv(n, u, v, l);
                    if (sol.status != PeakStatus::kExact) continue;
                    auto prof = evaluate_schedule(sol.schedule, u, v);
                    EXPECT_TRUE(is_exact_peak(prof, l)) << "N=" << n << " u=" << u << " v=" << v << " l=" << l;
                    EXPECT_NEAR(schedule_kappa(sol), prof[l - 1], 1e-12);
                }
            }
        }
    }
    auto sol = solve_peak_cv(6, 1.0, 0.5, 2);
    ASSERT_EQ(sol.status, PeakStatus::kExact);
    EXPECT_EQ(format_pi_multiple(4 * std::numbers::pi / 3), "4/3*pi");
}

TEST(Pulses, DomainErrors) {
    EXPECT_THROW(solve_peak(8, 5, 0, 0, 1), Error);
    EXPECT_THROW(solve_peak(8, 5, 1, 0, 5), Error);
    EXPECT_THROW(solve_peak(8, 1, 1, 0, 1), Error);
}

}  // namespace
}  // namespace gqc
