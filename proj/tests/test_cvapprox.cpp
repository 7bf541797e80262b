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
#include <complex>
#include <numbers>

#include "gqc/cvapprox.hpp"

namespace gqc {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(CvApprox, ClosedFormsMatchQuadrature) {
    for (int power : {1, 3}) {
        for (double half : {kPi, 2.0}) {
            auto spec = PeriodicFunctionSpec::monomial(power, half);
            auto a = fourier_coeffs(spec, 30);
            auto b = fourier_coeffs_numeric(spec, 30);
            for (int n = 0; n < 30; n++) {
                EXPECT_NEAR(a.sine[n], b.sine[n], 1e-9) << "k=" << power << " n=" << n + 1;
                EXPECT_NEAR(b.cosine[n], 0.0, 1e-9);
            }
            EXPECT_NEAR(b.constant, 0.0, 1e-9);
        }
    }
}

TEST(CvApprox, CubicLeadingCoefficients) {
    // q^3 = sum_n 2 (-1)^(n+1) (n^2 pi^2 - 6) / n^3 sin(n q) on (-pi, pi).
    auto s = fourier_coeffs(PeriodicFunctionSpec::monomial(3), 3);
    EXPECT_NEAR(s.sine[0], 2 * (kPi * kPi - 6), 1e-12);
    EXPECT_NEAR(s.sine[1], -2 * (4 * kPi * kPi - 6) / 8, 1e-12);
}

TEST(CvApprox, SeriesConvergesInside) {
    auto spec = PeriodicFunctionSpec::monomial(3);
    auto s = fourier_coeffs(spec, 2000);
    EXPECT_NEAR(s.evaluate(1.0), 1.0, 5e-3);
    EXPECT_NEAR(s.evaluate(-0.5), -0.125, 5e-3);
}

TEST(CvApprox, TabulatedMatchesMonomial) {
    std::vector<double> values;
    int g = 4001;
    for (int i = 0; i < g; i++) {
        double q = -kPi + 2 * kPi * i / (g - 1);
        values.push_back(q * q);
    }
    auto tab = fourier_coeffs(PeriodicFunctionSpec::tabulated(values), 5);
    auto mono = fourier_coeffs_numeric(PeriodicFunctionSpec::monomial(2), 5);
    EXPECT_NEAR(tab.constant, kPi * kPi / 3, 1e-4);
    for (int n = 0; n < 5; n++) {
        EXPECT_NEAR(tab.cosine[n], mono.cosine[n], 1e-4);
        EXPECT_NEAR(tab.cosine[n], 4.0 * (n % 2 == 0 ? -1 : 1) / ((n + 1) * (n + 1)), 1e-4);
    }
}

TEST(CvApprox, ErrorBelowBoundAndMonotone) {
    auto spec = PeriodicFunctionSpec::monomial(3);
    double e10 = approx_error(spec, 1.0, 10);
    double e100 = approx_error(spec, 1.0, 100);
    double e1000 = approx_error(spec, 1.0, 1000);
    EXPECT_LT(e1000, 0.018);
    EXPECT_GT(e10, e100);
    EXPECT_GT(e100, e1000);
    ApproxErrorOptions rms;
    rms.norm = ErrorNorm::kRms;
    EXPECT_LT(approx_error(spec, 1.0, 1000, rms), e1000);
}

TEST(CvApprox, CoordinateWindowShowsEdgeOvershoot) {
    ApproxErrorOptions opts;
    opts.window = ErrorWindow::kCoordinate;
    // The window reaches the periodisation edge where the series jumps.
    EXPECT_GT(approx_error(PeriodicFunctionSpec::monomial(3), 1.0, 1000, opts), 1.0);
}

TEST(CvApprox, Domain) {
    auto spec = PeriodicFunctionSpec::monomial(3);
    ApproxErrorOptions small;
    small.grid_points = 10;
    EXPECT_THROW(approx_error(spec, 1.0, 10, small), Error);
    EXPECT_THROW(fourier_coeffs(spec, 0), Error);
    EXPECT_EQ(approx_error(spec, 0.0, 10), 0.0);
    EXPECT_THROW(rotation_angles(0, 0), Error);
}

TEST(CvApprox, RotationAngles) {
    auto r = rotation_angles(3, 4);
    EXPECT_NEAR(r.beta, 5, 1e-12);
    EXPECT_NEAR(std::cos(r.omega), 0.6, 1e-12);
    EXPECT_NEAR(std::sin(r.omega), 0.8, 1e-12);
}

TEST(CvApprox, QuadratureDecomposition) {
    // SYM = 2(Re e^{iab} cos - Im e^{iab} sin); the ANTI pair is i times the SYM pair
    // as a combined complex coefficient cos + i sin.
    for (auto [a, b] : {std::pair{0.7, -1.1}, std::pair{2.0, 3.0}, std::pair{-1.5, 0.25}}) {
        auto c = quadrature_decomposition(a, b);
        EXPECT_NEAR(c.sym_cos, 2 * std::cos(a * b), 1e-12);
        EXPECT_NEAR(c.sym_sin, -2 * std::sin(a * b), 1e-12);
        std::complex<double> sym(c.sym_cos, c.sym_sin), anti(c.anti_cos, c.anti_sin);
        EXPECT_LT(std::abs(anti - std::complex<double>(0, 1) * sym), 1e-12);
    }
}

TEST(CvApprox, Tables) {
    auto s = fourier_coeffs(PeriodicFunctionSpec::monomial(1), 3);
    auto t = format_coefficient_table(s);
    EXPECT_NE(t.find("\n"), std::string::npos);
    EXPECT_NE(format_error_sweep({{10, 0.5}, {100, 0.05}}).find("100"), std::string::npos);
}

}  // namespace
}  // namespace gqc
