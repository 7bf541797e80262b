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

#include <string>
#include <utility>
#include <vector>

#include "gqc/error.hpp"

namespace gqc {

/// f(q) on the periodised interval [-L, L].
struct PeriodicFunctionSpec {
    enum class Kind { kMonomial, kTabulated };

    Kind kind = Kind::kMonomial;
    int power = 1;
    double half_width = 3.141592653589793;
    /// Samples on a uniform grid covering [-L, L] including both ends.
    std::vector<double> values;

    static PeriodicFunctionSpec monomial(int power, double half_width = 3.141592653589793);
    static PeriodicFunctionSpec tabulated(std::vector<double> values, double half_width = 3.141592653589793);
    /// Exact for monomials, linear interpolation for tables.
    double evaluate(double q) const;
};

/// f(q) ~ C_0 + sum_n C_n cos(n pi q / L) + D_n sin(n pi q / L).
struct FourierSynthesis {
    int n_max = 0;
    double half_width = 3.141592653589793;
    double constant = 0.0;
    std::vector<double> sine;    // D_1 .. D_nmax
    std::vector<double> cosine;  // C_1 .. C_nmax

    double evaluate(double q) const;
};

/// Closed forms for q and q^3 (rescaled for L != pi); quadrature otherwise.
FourierSynthesis fourier_coeffs(const PeriodicFunctionSpec &spec, int n_max);
/// Composite Gauss-Legendre quadrature for any spec.
FourierSynthesis fourier_coeffs_numeric(const PeriodicFunctionSpec &spec, int n_max);

enum class ErrorWindow {
    kPhase,       // |alpha f(q)| < pi and |q| < L
    kCoordinate,  // |alpha q| < pi and |q| < L
};

enum class ErrorNorm { kSup, kRms };

struct ApproxErrorOptions {
    int grid_points = 10000;
    ErrorWindow window = ErrorWindow::kPhase;
    ErrorNorm norm = ErrorNorm::kSup;
};

/// |exp(i alpha f) - exp(i alpha f_nmax)| / sqrt(2) over an endpoint-free uniform
/// grid on (-L, L), restricted to the window.
double approx_error(const PeriodicFunctionSpec &spec, double alpha, int n_max, const ApproxErrorOptions &options = {});

struct RotationAngles {
    double omega = 0.0;
    double beta = 0.0;
};

/// cos(omega) = a / beta, sin(omega) = b / beta, beta = sqrt(a^2 + b^2).
RotationAngles rotation_angles(double a, double b);

/// X(a)Z(b) + Z(-b)X(-a) = s_cos cos(ap + bq) + s_sin sin(ap + bq) and
/// i(X(a)Z(b) - Z(-b)X(-a)) = a_cos cos(ap + bq) + a_sin sin(ap + bq).
struct QuadratureCoefficients {
    double sym_cos = 0.0;
    double sym_sin = 0.0;
    double anti_cos = 0.0;
    double anti_sin = 0.0;
};

QuadratureCoefficients quadrature_decomposition(double a, double b);

/// "n sine_coeff cosine_coeff" rows.
std::string format_coefficient_table(const FourierSynthesis &synthesis);
/// "n_max epsilon" rows.
std::string format_error_sweep(const std::vector<std::pair<int, double>> &rows);

}  // namespace gqc
