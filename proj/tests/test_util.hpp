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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "gqc/compiler.hpp"

namespace gqc::testing {

inline CVector random_vector(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CVector v(static_cast<Eigen::Index>(dim));
    for (auto &a : v) {
        a = cplx(g(rng), g(rng));
    }
    return v / v.norm();
}

inline DenseState random_state(int d, int n_sites, std::mt19937_64 &rng) {
    std::size_t dim = checked_dimension(d, n_sites);
    return DenseState::from_amplitudes(d, n_sites, ChainLayout::kSingle, random_vector(dim, rng));
}

inline PauliFrame random_frame(int n_sites, int d, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::int64_t> u(0, d - 1);
    std::vector<std::int64_t> x(n_sites), z(n_sites);
    for (int j = 0; j < n_sites; j++) {
        x[j] = u(rng);
        z[j] = u(rng);
    }
    return PauliFrame(d, x, z, u(rng));
}

inline CMatrix random_unitary(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMatrix m(d, d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            m(i, j) = cplx(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(m);
    return qr.householderQ();
}

inline bool matrices_close(const CMatrix &a, const CMatrix &b, double tol) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).norm() < tol;
}

}  // namespace gqc::testing
