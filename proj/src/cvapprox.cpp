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

#include "gqc/cvapprox.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

namespace gqc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_half_width(double L) {
    if (!(L > 0.0) || !std::isfinite(L)) {
        fail(ErrorCode::kDomain, "half-width L must be positive");
    }
}

}  // namespace

PeriodicFunctionSpec PeriodicFunctionSpec::monomial(int power, double half_width) {
    if (power < 0) {
        fail(ErrorCode::kDomain, "monomial power must be non-negative");
    }
    check_half_width(half_width);
    PeriodicFunctionSpec s;
    s.kind = Kind::kMonomial;
    s.power = power;
    s.half_width = half_width;
    return s;
}

PeriodicFunctionSpec PeriodicFunctionSpec::tabulated(std::vector<double> values, double half_width) {
    if (values.size() < 2) {
        fail(ErrorCode::kDomain, "a table needs at least two samples");
    }
    check_half_width(half_width);
    PeriodicFunctionSpec s;
    s.kind = Kind::kTabulated;
    s.half_width = half_width;
    s.values = std::move(values);
    return s;
}

double PeriodicFunctionSpec::evaluate(double q) const {
    if (kind == Kind::kMonomial) {
        return std::pow(q, power);
    }
    double t = (q + half_width) / (2.0 * half_width) * static_cast<double>(values.size() - 1);
    if (t <= 0.0) {
        return values.front();
    }
    if (t >= static_cast<double>(values.size() - 1)) {
        return values.back();
    }
    auto i = static_cast<std::size_t>(t);
    double frac = t - static_cast<double>(i);
    return values[i] * (1.0 - frac) + values[i + 1] * frac;
}

double FourierSynthesis::evaluate(double q) const {
    double x = kPi * q / half_width;
    double s = constant;
    for (int n = 1; n <= n_max; n++) {
        s += cosine[n - 1] * std::cos(n * x) + sine[n - 1] * std::sin(n * x);
    }
    return s;
}

FourierSynthesis fourier_coeffs_numeric(const PeriodicFunctionSpec &spec, int n_max) {
    if (n_max < 1) {
        fail(ErrorCode::kDomain, "n_max must be at least 1");
    }
    using rule = boost::math::quadrature::gauss<double, 20>;
    const auto &abscissa = rule::abscissa();
    const auto &weights = rule::weights();
    double L = spec.half_width;
    int panels = 2 * n_max + 8;
    if (spec.kind == PeriodicFunctionSpec::Kind::kTabulated) {
        panels = std::max<int>(panels, static_cast<int>(spec.values.size()) - 1);
    }
    double h = 2.0 * L / panels;

    // nodes x in (-pi, pi) and weights already scaled by 1/L * dq
    std::vector<double> xs, fw;
    auto push = [&](double q, double w) {
        xs.push_back(kPi * q / L);
        fw.push_back(spec.evaluate(q) * w * 0.5 * h / L);
    };
    for (int p = 0; p < panels; p++) {
        double mid = -L + (p + 0.5) * h;
        for (std::size_t i = 0; i < abscissa.size(); i++) {
            double off = abscissa[i] * 0.5 * h;
            if (abscissa[i] == 0.0) {
                push(mid, weights[i]);
            } else {
                push(mid - off, weights[i]);
                push(mid + off, weights[i]);
            }
        }
    }
    FourierSynthesis out;
    out.n_max = n_max;
    out.half_width = L;
    out.sine.assign(n_max, 0.0);
    out.cosine.assign(n_max, 0.0);
    for (std::size_t i = 0; i < xs.size(); i++) {
        out.constant += 0.5 * fw[i];
        std::complex<double> step = std::polar(1.0, xs[i]);
        std::complex<double> e = step;
        for (int n = 1; n <= n_max; n++) {
            out.cosine[n - 1] += fw[i] * e.real();
            out.sine[n - 1] += fw[i] * e.imag();
            e *= step;
            if (n % 64 == 0) {
                e = std::polar(1.0, (n + 1) * xs[i]);
            }
        }
    }
    return out;
}

FourierSynthesis fourier_coeffs(const PeriodicFunctionSpec &spec, int n_max) {
    if (n_max < 1) {
        fail(ErrorCode::kDomain, "n_max must be at least 1");
    }
    bool closed = spec.kind == PeriodicFunctionSpec::Kind::kMonomial && (spec.power == 1 || spec.power == 3);
    if (!closed) {
        return fourier_coeffs_numeric(spec, n_max);
    }
    FourierSynthesis out;
    out.n_max = n_max;
    out.half_width = spec.half_width;
    out.sine.assign(n_max, 0.0);
    out.cosine.assign(n_max, 0.0);
    double scale = std::pow(spec.half_width / kPi, spec.power);
    for (int n = 1; n <= n_max; n++) {
        double sign = n % 2 == 0 ? 1.0 : -1.0;
        double dn = static_cast<double>(n);
        double coeff = spec.power == 1 ? -2.0 * sign / dn : -2.0 * (dn * dn * kPi * kPi - 6.0) * sign / (dn * dn * dn);
        out.sine[n - 1] = scale * coeff;
    }
    return out;
}

double approx_error(const PeriodicFunctionSpec &spec, double alpha, int n_max, const ApproxErrorOptions &options) {
    if (options.grid_points < 1000) {
        fail(ErrorCode::kDomain, "approx_error needs at least 1000 grid points");
    }
    if (alpha == 0.0) {
        return 0.0;
    }
    FourierSynthesis series = fourier_coeffs(spec, n_max);
    double L = spec.half_width;
    int G = options.grid_points;
    double worst = 0.0, sum_sq = 0.0;
    long long used = 0;
    for (int i = 0; i < G; i++) {
        double q = -L + 2.0 * L * (i + 1) / (G + 1);
        double f = spec.evaluate(q);
        double gate = options.window == ErrorWindow::kPhase ? alpha * f : alpha * q;
        if (std::abs(gate) >= kPi) {
            continue;
        }
        double e = std::abs(std::polar(1.0, alpha * f) - std::polar(1.0, alpha * series.evaluate(q))) / std::sqrt(2.0);
        worst = std::max(worst, e);
        sum_sq += e * e;
        used++;
    }
    if (used == 0) {
        fail(ErrorCode::kDomain, "no grid point falls inside the error window");
    }
    return options.norm == ErrorNorm::kSup ? worst : std::sqrt(sum_sq / static_cast<double>(used));
}

RotationAngles rotation_angles(double a, double b) {
    if (a == 0.0 && b == 0.0) {
        fail(ErrorCode::kDomain, "rotation_angles needs (a, b) != (0, 0)");
    }
    return {std::atan2(b, a), std::hypot(a, b)};
}

QuadratureCoefficients quadrature_decomposition(double a, double b) {
    std::complex<double> e = std::polar(1.0, a * b);
    return {2.0 * e.real(), -2.0 * e.imag(), 2.0 * e.imag(), 2.0 * e.real()};
}

std::string format_coefficient_table(const FourierSynthesis &synthesis) {
    std::ostringstream os;
    os.precision(17);
    os << "# n sine_coeff cosine_coeff\n";
    os << 0 << " " << 0.0 << " " << synthesis.constant << "\n";
    for (int n = 1; n <= synthesis.n_max; n++) {
        os << n << " " << synthesis.sine[n - 1] << " " << synthesis.cosine[n - 1] << "\n";
    }
    return os.str();
}

std::string format_error_sweep(const std::vector<std::pair<int, double>> &rows) {
    std::ostringstream os;
    os.precision(10);
    os << "# n_max epsilon\n";
    for (const auto &[n, eps] : rows) {
        os << n << " " << eps << "\n";
    }
    return os.str();
}

}  // namespace gqc
