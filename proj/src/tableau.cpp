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

#include "gqc/tableau.hpp"

#include <sstream>

namespace gqc {

int x_profile(int n_sites, int t, int site) {
    if (n_sites < 1) {
        fail(ErrorCode::kDomain, "chain needs at least one site");
    }
    if (t < 0 || t > n_sites + 1) {
        fail(ErrorCode::kDomain, "time step " + std::to_string(t) + " outside [0, N+1]");
    }
    if (site < 1 || site > n_sites) {
        fail(ErrorCode::kDomain, "site " + std::to_string(site) + " outside [1, N]");
    }
    return step_theta(site + t - n_sites - 1) - step_theta(site - t - 1);
}

namespace {

template <typename Scalar>
Scalar dot(const std::vector<Scalar> &a, const std::vector<Scalar> &b) {
    Scalar s{0};
    for (std::size_t j = 0; j < a.size(); j++) {
        s += a[j] * b[j];
    }
    return s;
}

// x . L(x) = sum_j x_j x_{j+1}
template <typename Scalar>
Scalar neighbour_products(const std::vector<Scalar> &x) {
    Scalar s{0};
    for (std::size_t j = 0; j + 1 < x.size(); j++) {
        s += x[j] * x[j + 1];
    }
    return s;
}

// (Gamma x)_j = x_{j-1} + x_{j+1}
template <typename Scalar>
std::vector<Scalar> gamma_times(const std::vector<Scalar> &x) {
    std::vector<Scalar> out(x.size(), Scalar{0});
    for (std::size_t j = 0; j < x.size(); j++) {
        if (j > 0) {
            out[j] += x[j - 1];
        }
        if (j + 1 < x.size()) {
            out[j] += x[j + 1];
        }
    }
    return out;
}

}  // namespace

template <typename Scalar>
BasicFrame<Scalar> step_frame(const BasicFrame<Scalar> &frame) {
    const auto &x = frame.x();
    const auto &z = frame.z();
    std::vector<Scalar> nx = gamma_times(x);
    std::vector<Scalar> nz(x.size());
    for (std::size_t j = 0; j < x.size(); j++) {
        nx[j] += z[j];
        nz[j] = -x[j];
    }
    Scalar f = frame.phase() - (dot(z, x) + neighbour_products(x));
    return BasicFrame<Scalar>(frame.dim(), std::move(nx), std::move(nz), f);
}

template <typename Scalar>
BasicFrame<Scalar> conjugate_by_f(const BasicFrame<Scalar> &frame) {
    const auto &x = frame.x();
    std::vector<Scalar> nz(x.size());
    for (std::size_t j = 0; j < x.size(); j++) {
        nz[j] = -x[j];
    }
    Scalar f = frame.phase() - dot(x, frame.z());
    return BasicFrame<Scalar>(frame.dim(), frame.z(), std::move(nz), f);
}

template <typename Scalar>
BasicFrame<Scalar> conjugate_by_cz(const BasicFrame<Scalar> &frame) {
    const auto &x = frame.x();
    std::vector<Scalar> nz = gamma_times(x);
    for (std::size_t j = 0; j < x.size(); j++) {
        nz[j] += frame.z()[j];
    }
    Scalar f = frame.phase() + neighbour_products(x);
    return BasicFrame<Scalar>(frame.dim(), x, std::move(nz), f);
}

template <typename Scalar>
BasicFrame<Scalar> conjugate_by_pulse(const BasicFrame<Scalar> &frame, Scalar eps) {
    Scalar total{0};
    for (std::size_t j = 0; j < frame.x().size(); j++) {
        total += frame.x()[j] + frame.z()[j];
    }
    return BasicFrame<Scalar>(frame.dim(), frame.x(), frame.z(), frame.phase() + eps * total);
}

template <typename Scalar>
BasicFrame<Scalar> mirror_frame(const BasicFrame<Scalar> &frame) {
    std::vector<Scalar> x(frame.x().rbegin(), frame.x().rend());
    std::vector<Scalar> z(frame.z().rbegin(), frame.z().rend());
    return BasicFrame<Scalar>(frame.dim(), std::move(x), std::move(z), frame.phase());
}

template PauliFrame step_frame(const PauliFrame &);
template CvFrame step_frame(const CvFrame &);
template PauliFrame conjugate_by_f(const PauliFrame &);
template CvFrame conjugate_by_f(const CvFrame &);
template PauliFrame conjugate_by_cz(const PauliFrame &);
template CvFrame conjugate_by_cz(const CvFrame &);
template PauliFrame conjugate_by_pulse(const PauliFrame &, std::int64_t);
template CvFrame conjugate_by_pulse(const CvFrame &, double);
template PauliFrame mirror_frame(const PauliFrame &);
template CvFrame mirror_frame(const CvFrame &);

PauliFrame pulse_frame(int n_sites, int d, std::int64_t eps) {
    return PauliFrame(d, std::vector<std::int64_t>(n_sites, -eps), std::vector<std::int64_t>(n_sites, eps), 0);
}

StepMatrix StepMatrix::build(int n_sites) {
    StepMatrix m;
    m.n_sites = n_sites;
    int n2 = 2 * n_sites;
    m.c.assign(static_cast<std::size_t>(n2) * n2, 0);
    auto set = [&](int r, int col, std::int64_t v) { m.c[static_cast<std::size_t>(r) * n2 + col] = v; };
    for (int i = 0; i < n_sites; i++) {
        if (i > 0) {
            set(i, i - 1, 1);
        }
        if (i + 1 < n_sites) {
            set(i, i + 1, 1);
        }
        set(i, n_sites + i, 1);
        set(n_sites + i, i, -1);
    }
    return m;
}

std::vector<std::int64_t> StepMatrix::apply(const std::vector<std::int64_t> &a, int d) const {
    int n2 = 2 * n_sites;
    if (static_cast<int>(a.size()) != n2) {
        fail(ErrorCode::kInvalidArgument, "exponent vector length must be 2N");
    }
    std::vector<std::int64_t> out(n2, 0);
    for (int r = 0; r < n2; r++) {
        std::int64_t s = 0;
        for (int col = 0; col < n2; col++) {
            s += at(r, col) * a[col];
        }
        out[r] = mod(s, d);
    }
    return out;
}

std::vector<std::int64_t> shift_left(const std::vector<std::int64_t> &s) {
    std::vector<std::int64_t> out(s.size(), 0);
    for (std::size_t j = 0; j + 1 < s.size(); j++) {
        out[j] = s[j + 1];
    }
    return out;
}

CMatrix frame_to_dense(const PauliFrame &frame) {
    Dimension dim{frame.dim()};
    CMatrix m = CMatrix::Identity(1, 1);
    for (int j = 0; j < frame.num_sites(); j++) {
        CMatrix local = weyl_matrix(dim, {frame.x()[j], frame.z()[j]});
        CMatrix next(m.rows() * local.rows(), m.cols() * local.cols());
        for (Eigen::Index r = 0; r < m.rows(); r++) {
            for (Eigen::Index c = 0; c < m.cols(); c++) {
                next.block(r * local.rows(), c * local.cols(), local.rows(), local.cols()) = m(r, c) * local;
            }
        }
        m = std::move(next);
    }
    return zeta_power(dim, frame.phase()) * m;
}

std::string frame_to_string(const PauliFrame &frame) {
    std::ostringstream os;
    os << "zeta^" << frame.phase();
    for (int j = 0; j < frame.num_sites(); j++) {
        os << " X" << frame.x()[j] << "Z" << frame.z()[j];
    }
    return os.str();
}

}  // namespace gqc
