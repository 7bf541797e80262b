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

#include "gqc/simulator.hpp"
#include "gqc/tableau.hpp"
#include "reference_tables.hpp"
#include "test_util.hpp"

namespace gqc {
namespace {

using testing::random_frame;

// Iterates (x, z) -> (Gamma x + z, -x) from (-1, 1) with plain integers.
std::vector<std::vector<int>> iterate_profile(int n_sites, int steps) {
    std::vector<int> x(n_sites, -1), z(n_sites, 1);
    std::vector<std::vector<int>> out{x};
    for (int t = 0; t < steps; t++) {
        std::vector<int> nx(n_sites);
        for (int l = 0; l < n_sites; l++) {
            nx[l] = z[l] + (l > 0 ? x[l - 1] : 0) + (l + 1 < n_sites ? x[l + 1] : 0);
        }
        for (int l = 0; l < n_sites; l++) {
            z[l] = -x[l];
        }
        x = nx;
        out.push_back(x);
    }
    return out;
}

TEST(Tableau, ClosedFormMatchesRecurrence) {
    for (int n = 1; n <= 16; n++) {
        auto iter = iterate_profile(n, n + 1);
        for (int t = 0; t <= n + 1; t++) {
            for (int l = 1; l <= n; l++) {
                ASSERT_EQ(x_profile(n, t, l), iter[t][l - 1]) << "N=" << n << " t=" << t << " l=" << l;
            }
        }
    }
}

TEST(Tableau, ProfileDomain) {
    EXPECT_THROW(x_profile(4, 6, 1), Error);
    EXPECT_THROW(x_profile(4, 2, 0), Error);
    EXPECT_EQ(step_theta(0), 1);
    EXPECT_EQ(step_theta(-1), 0);
}

template <std::size_t N>
void check_reference(const std::array<std::array<int, 5>, N> &xs, const std::array<std::array<int, 5>, N> &zs) {
    int n = static_cast<int>(N);
    for (int l = 1; l <= n; l++) {
        for (int t = 0; t <= 4; t++) {
            EXPECT_EQ(x_profile(n, t, l), xs[l - 1][t]) << "x l=" << l << " t=" << t;
            int z = t == 0 ? 1 : -x_profile(n, t - 1, l);
            EXPECT_EQ(z, zs[l - 1][t]) << "z l=" << l << " t=" << t;
        }
    }
}

TEST(Tableau, ReferenceTables) {
    check_reference<8>(testing::kX8, testing::kZ8);
    check_reference<7>(testing::kX7, testing::kZ7);
}

TEST(Tableau, StepMatrixMatchesStepFrame) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 6; n++) {
        auto c = StepMatrix::build(n);
        for (int trial = 0; trial < 10; trial++) {
            auto f = random_frame(n, 5, rng);
            std::vector<std::int64_t> a(f.x());
            a.insert(a.end(), f.z().begin(), f.z().end());
            auto ca = c.apply(a, 5);
            auto g = step_frame(f);
            for (int j = 0; j < n; j++) {
                EXPECT_EQ(ca[j], g.x()[j]);
                EXPECT_EQ(ca[n + j], g.z()[j]);
            }
        }
    }
    EXPECT_EQ(shift_left({1, 2, 3}), (std::vector<std::int64_t>{2, 3, 0}));
}

struct Case {
    int n;
    int d;
};

class FrameVsDense : public ::testing::TestWithParam<Case> {};

TEST_P(FrameVsDense, ConjugationsAgree) {
    auto [n, d] = GetParam();
    std::mt19937_64 rng(100 * n + d);
    CMatrix mf = sequence_matrix(d, n, {GlobalPrimitive::f_all()});
    CMatrix mcz = sequence_matrix(d, n, {GlobalPrimitive::cz_chain()});
    CMatrix mt = sequence_matrix(d, n, {GlobalPrimitive::t_step()});
    for (int trial = 0; trial < 25; trial++) {
        auto f = random_frame(n, d, rng);
        CMatrix p = frame_to_dense(f);
        EXPECT_LT((mf * p * mf.adjoint() - frame_to_dense(conjugate_by_f(f))).norm(), 1e-9);
        EXPECT_LT((mcz * p * mcz.adjoint() - frame_to_dense(conjugate_by_cz(f))).norm(), 1e-9);
        EXPECT_LT((mt * p * mt.adjoint() - frame_to_dense(step_frame(f))).norm(), 1e-9);
        for (std::int64_t eps = 0; eps < d; eps++) {
            CMatrix mp = sequence_matrix(d, n, {GlobalPrimitive::pulse(eps)});
            EXPECT_LT((mp * p * mp.adjoint() - frame_to_dense(conjugate_by_pulse(f, eps))).norm(), 1e-9);
        }
        auto m = mirror_frame(f);
        // Mirror: the reversal permutation conjugates the word site-wise.
        CMatrix perm = CMatrix::Zero(p.rows(), p.cols());
        for (Eigen::Index i = 0; i < p.rows(); i++) {
            std::vector<int> digits(n);
            Eigen::Index r = i;
            for (int j = n - 1; j >= 0; j--) {
                digits[j] = static_cast<int>(r % d);
                r /= d;
            }
            Eigen::Index target = 0;
            for (int j = n - 1; j >= 0; j--) {
                target = target * d + digits[j];
            }
            perm(target, i) = 1;
        }
        EXPECT_LT((perm * p * perm.adjoint() - frame_to_dense(m)).norm(), 1e-9);
    }
}

INSTANTIATE_TEST_SUITE_P(Small, FrameVsDense,
                         ::testing::Values(Case{1, 2}, Case{2, 2}, Case{3, 2}, Case{4, 2}, Case{1, 3}, Case{2, 3},
                                           Case{3, 3}, Case{2, 4}, Case{2, 5}));

TEST(Tableau, PulseFrameMatchesDensePulse) {
    for (int d : {2, 3, 5}) {
        for (std::int64_t eps = 0; eps < d; eps++) {
            CMatrix dense = sequence_matrix(d, 3, {GlobalPrimitive::pulse(eps)});
            EXPECT_LT((dense - frame_to_dense(pulse_frame(3, d, eps))).norm(), 1e-9);
        }
    }
}

TEST(Tableau, CvFrameAgreesWithIntegerFrame) {
    std::mt19937_64 rng(9);
    auto f = random_frame(5, 7, rng);
    std::vector<double> x(f.x().begin(), f.x().end()), z(f.z().begin(), f.z().end());
    CvFrame g(0, x, z, static_cast<double>(f.phase()));
    auto fi = conjugate_by_pulse(step_frame(conjugate_by_cz(conjugate_by_f(f))), std::int64_t{3});
    auto gi = conjugate_by_pulse(step_frame(conjugate_by_cz(conjugate_by_f(g))), 3.0);
    for (int j = 0; j < 5; j++) {
        EXPECT_EQ(mod(static_cast<std::int64_t>(std::lround(gi.x()[j])), 7), fi.x()[j]);
        EXPECT_EQ(mod(static_cast<std::int64_t>(std::lround(gi.z()[j])), 7), fi.z()[j]);
    }
    EXPECT_EQ(mod(static_cast<std::int64_t>(std::lround(gi.phase())), 7), fi.phase());
}

TEST(Tableau, FourStepsOfFIsIdentity) {
    std::mt19937_64 rng(1);
    auto f = random_frame(4, 6, rng);
    EXPECT_EQ(conjugate_by_f(conjugate_by_f(conjugate_by_f(conjugate_by_f(f)))), f);
}

TEST(Tableau, Formatting) {
    PauliFrame f(3, {1, 0}, {2, 1}, 1);
    EXPECT_FALSE(frame_to_string(f).empty());
    EXPECT_THROW(PauliFrame(3, {1}, {1, 2}), Error);
}

}  // namespace
}  // namespace gqc
