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

#include "gqc/weyl.hpp"
#include "test_util.hpp"

namespace gqc {
namespace {

using testing::random_unitary;

class WeylByDim : public ::testing::TestWithParam<int> {};

TEST_P(WeylByDim, ClockShiftCommutation) {
    int d = GetParam();
    CMatrix x = shift_matrix(d), z = clock_matrix(d);
    EXPECT_LT((z * x - zeta_power(Dimension{d}, std::int64_t{1}) * x * z).norm(), 1e-12);
    for (int s = 0; s < d; s++) {
        CVector e = CVector::Zero(d);
        e(s) = 1;
        CVector xs = x * e;
        EXPECT_NEAR(std::abs(xs((s + 1) % d)), 1.0, 1e-15);
        CVector zs = z * e;
        EXPECT_LT(std::abs(zs(s) - zeta_power(Dimension{d}, std::int64_t{s})), 1e-12);
    }
}

TEST_P(WeylByDim, CommutePhaseMatchesMatrices) {
    int d = GetParam();
    Dimension dim{d};
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            WeylLabel l{a, b}, r{(a + 1) % d, (2 * b + 1) % d};
            CMatrix lhs = weyl_matrix(dim, l) * weyl_matrix(dim, r);
            CMatrix rhs = zeta_power(dim, commute_phase(d, l, r)) * weyl_matrix(dim, WeylLabel{l.a + r.a, l.b + r.b});
            EXPECT_LT((lhs - rhs).norm(), 1e-10) << a << "," << b;
        }
    }
}

TEST_P(WeylByDim, CanonicalBasisIsHermitianAndComplete) {
    int d = GetParam();
    auto basis = canonical_basis(d);
    ASSERT_EQ(basis.size(), static_cast<std::size_t>(d * d));
    Eigen::MatrixXd gram(d * d, d * d);
    std::vector<CMatrix> mats;
    for (const auto &k : basis) {
        auto e = hermitian_basis_matrix(Dimension{d}, k.label, k.part);
        EXPECT_TRUE(is_hermitian(e.matrix, 1e-12));
        mats.push_back(e.matrix);
    }
    for (int i = 0; i < d * d; i++) {
        for (int j = 0; j < d * d; j++) {
            gram(i, j) = (mats[i].adjoint() * mats[j]).trace().real();
        }
    }
    EXPECT_EQ(Eigen::FullPivLU<Eigen::MatrixXd>(gram).rank(), d * d);
}

TEST_P(WeylByDim, DecompositionRoundTrip) {
    int d = GetParam();
    std::mt19937_64 rng(7 + d);
    CMatrix m = random_unitary(d, rng);
    CMatrix h = (m + m.adjoint()) / 2.0;
    auto dec = decompose_hamiltonian(Dimension{d}, h);
    EXPECT_LT((dec.reconstruct() - h).norm(), 1e-10);
}

TEST_P(WeylByDim, TrotterConvergesWithinBound) {
    int d = GetParam();
    std::mt19937_64 rng(11 + d);
    CMatrix m = random_unitary(d, rng);
    CMatrix h = (m + m.adjoint()) / 2.0;
    auto dec = decompose_hamiltonian(Dimension{d}, h);
    CMatrix exact = expi_hermitian(h - dec.identity * 2.0 * CMatrix::Identity(d, d), 0.7);
    double prev = 1e9;
    for (int n : {1, 4, 16, 64}) {
        CMatrix approx = trotter_product(d, trotterize(dec, 0.7, n));
        double err = (approx - exact).operatorNorm();
        EXPECT_LE(err, trotter_error_bound(dec, 0.7, n) + 1e-12) << "n=" << n;
        EXPECT_LE(err, prev + 1e-12);
        prev = err;
    }
}

TEST_P(WeylByDim, PrincipalLogInvertsExponential) {
    int d = GetParam();
    std::mt19937_64 rng(3 * d);
    CMatrix u = random_unitary(d, rng);
    CMatrix h = principal_hamiltonian(u);
    EXPECT_TRUE(is_hermitian(h, 1e-10));
    EXPECT_LT((expi_hermitian(h) - u).norm(), 1e-10);
    EXPECT_TRUE(is_unitary(u, 1e-10));
    EXPECT_LT(phase_aligned_distance(u, std::exp(cplx(0, 1.3)) * u), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Dims, WeylByDim, ::testing::Values(2, 3, 4, 5, 7));

TEST(Weyl, LabelsNormalize) {
    WeylLabel l{-1, 7};
    EXPECT_EQ(l.normalized(5), (WeylLabel{4, 2}));
    EXPECT_EQ(l.negated(5), (WeylLabel{1, 3}));
    EXPECT_EQ(mod(-7, 3), 2);
}

TEST(Weyl, PhaseAngle) {
    EXPECT_NEAR(phase_angle(4, WeylLabel{1, 2}), std::numbers::pi / 4 + std::numbers::pi / 2, 1e-15);
}

TEST(Weyl, ContinuousZetaIsUnitPhase) {
    EXPECT_LT(std::abs(zeta_power(Dimension::continuous(), 0.5) - std::exp(cplx(0, 0.5))), 1e-15);
}

TEST(Weyl, ContinuousMatricesRejected) {
    try {
        weyl_matrix(Dimension::continuous(), WeylLabel{1, 0});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kUnsupportedDimension);
    }
    EXPECT_THROW(Dimension{1}.require_finite(), Error);
}

TEST(Weyl, NonHermitianRejected) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1;
    try {
        decompose_hamiltonian(Dimension{2}, m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kValidation);
    }
}

TEST(Weyl, SelfPairedLabelsHaveOnePart) {
    // X(1)Z(1) for d = 2 squares to -I, so only one of its parts survives.
    auto sym = hermitian_basis_matrix(Dimension{2}, WeylLabel{1, 1}, Part::kSymmetric);
    auto anti = hermitian_basis_matrix(Dimension{2}, WeylLabel{1, 1}, Part::kAntisymmetric);
    EXPECT_NEAR(std::min(sym.matrix.norm(), anti.matrix.norm()), 0.0, 1e-12);
}

}  // namespace
}  // namespace gqc
