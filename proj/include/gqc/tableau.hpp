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

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "gqc/weyl.hpp"

namespace gqc {

/// Heaviside step with theta(0) = 1.
constexpr int step_theta(std::int64_t n) {
    return n >= 0 ? 1 : 0;
}

/// [x(t)]_l = theta(l + t - N - 1) - theta(l - t - 1) for the boundary condition
/// (x(0), z(0)) = (-1, 1). Sites are 1-based; requires 0 <= t <= N+1.
int x_profile(int n_sites, int t, int site);

/// A Pauli word zeta^f (X^{x_1} Z^{z_1}) (x) ... (x) (X^{x_N} Z^{z_N}) in the
/// Heisenberg picture.
///
/// `Scalar` is std::int64_t for qudits (every exponent and the phase reduced
/// mod d) or double for CV labels, where exponents stay unreduced and zeta = e^i.
template <typename Scalar>
class BasicFrame {
   public:
    BasicFrame() = default;
    /// Identity word on `n_sites` sites. `d == 0` only for the real-valued frame.
    BasicFrame(int n_sites, int d) : d_(d), x_(n_sites, Scalar{0}), z_(n_sites, Scalar{0}) {
        if constexpr (std::integral<Scalar>) {
            Dimension{d}.require_finite();
        }
    }
    BasicFrame(int d, std::vector<Scalar> x, std::vector<Scalar> z, Scalar f = Scalar{0})
        : d_(d), x_(std::move(x)), z_(std::move(z)), f_(f) {
        if (x_.size() != z_.size()) {
            fail(ErrorCode::kInvalidArgument, "frame x and z vectors differ in length");
        }
        if constexpr (std::integral<Scalar>) {
            Dimension{d}.require_finite();
        }
        reduce();
    }

    int dim() const {
        return d_;
    }
    int num_sites() const {
        return static_cast<int>(x_.size());
    }
    const std::vector<Scalar> &x() const {
        return x_;
    }
    const std::vector<Scalar> &z() const {
        return z_;
    }
    Scalar phase() const {
        return f_;
    }
    Scalar &x(int j) {
        return x_[j];
    }
    Scalar &z(int j) {
        return z_[j];
    }
    void set_phase(Scalar f) {
        f_ = f;
        reduce();
    }

    /// Brings every exponent into [0, d). No-op for real frames.
    void reduce() {
        if constexpr (std::integral<Scalar>) {
            for (auto &v : x_) {
                v = mod(v, d_);
            }
            for (auto &v : z_) {
                v = mod(v, d_);
            }
            f_ = mod(f_, d_);
        }
    }

    bool operator==(const BasicFrame &) const = default;

   private:
    int d_ = 2;
    std::vector<Scalar> x_;
    std::vector<Scalar> z_;
    Scalar f_ = Scalar{0};
};

using PauliFrame = BasicFrame<std::int64_t>;
using CvFrame = BasicFrame<double>;

/// One QCA step: A -> T A T^{-1} with T = prod_j F_j^{-1} prod_i CZ_{i,i+1}.
/// a' = C a, f' = f - (z.x + x.L(x)).
template <typename Scalar>
BasicFrame<Scalar> step_frame(const BasicFrame<Scalar> &frame);

/// A -> F A F^{-1} for the global F = prod_j F_j^{-1}: (x, z) -> (z, -x), f' = f - x.z.
template <typename Scalar>
BasicFrame<Scalar> conjugate_by_f(const BasicFrame<Scalar> &frame);

/// A -> CZ A CZ^{-1} for the chain CZ (CZ|j,k> = zeta^{jk}|j,k>): z -> z + Gamma x, f' = f + x.L(x).
template <typename Scalar>
BasicFrame<Scalar> conjugate_by_cz(const BasicFrame<Scalar> &frame);

/// A -> P A P^{-1} for P(eps) = (x)_j X(-eps) Z(eps): f' = f + eps * sum_j (x_j + z_j).
template <typename Scalar>
BasicFrame<Scalar> conjugate_by_pulse(const BasicFrame<Scalar> &frame, Scalar eps);

/// Site reversal l <-> N+1-l; phase unchanged.
template <typename Scalar>
BasicFrame<Scalar> mirror_frame(const BasicFrame<Scalar> &frame);

/// The frame of the global pulse P(eps): x = -eps, z = +eps on every site, f = 0.
PauliFrame pulse_frame(int n_sites, int d, std::int64_t eps);

/// C = [[Gamma, I], [-I, 0]] over the integers, with Gamma the open-chain adjacency.
struct StepMatrix {
    int n_sites = 0;
    std::vector<std::int64_t> c;  // row-major, 2N x 2N

    static StepMatrix build(int n_sites);
    std::int64_t at(int row, int col) const {
        return c[static_cast<std::size_t>(row) * 2 * n_sites + col];
    }
    /// C a mod d for a = (x, z).
    std::vector<std::int64_t> apply(const std::vector<std::int64_t> &a, int d) const;
};

/// L(s_1, ..., s_N) = (s_2, ..., s_N, 0).
std::vector<std::int64_t> shift_left(const std::vector<std::int64_t> &s);

/// zeta^f (x)_j X^{x_j} Z^{z_j}, site 1 most significant.
CMatrix frame_to_dense(const PauliFrame &frame);

std::string frame_to_string(const PauliFrame &frame);

}  // namespace gqc
