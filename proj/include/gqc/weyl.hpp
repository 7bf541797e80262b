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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gqc/error.hpp"

namespace gqc {

/// Local dimension of a q-site. `d == 0` marks a continuous-variable site,
/// which only carries labels and phases; no matrices exist for it.
struct Dimension {
    int d = 2;

    static constexpr Dimension continuous() {
        return Dimension{0};
    }
    constexpr bool is_continuous() const {
        return d == 0;
    }
    /// Throws kUnsupportedDimension for CV, kInvalidArgument for d < 2.
    void require_finite() const;
};

/// Exponents of X(a)Z(b). For finite d they are kept in [0, d) after `normalized`.
struct WeylLabel {
    std::int64_t a = 0;
    std::int64_t b = 0;

    WeylLabel normalized(int d) const;
    WeylLabel negated(int d) const;
    auto operator<=>(const WeylLabel &) const = default;
};

enum class Part { kSymmetric, kAntisymmetric };

const char *part_name(Part part);

std::int64_t mod(std::int64_t value, std::int64_t d);

/// phi_{a,b} = pi/4 + pi*a*b/d.
double phase_angle(int d, WeylLabel label);

/// e^{i 2 pi k / d}, or e^{i k} for the continuous case.
cplx zeta_power(Dimension dim, double k);
cplx zeta_power(Dimension dim, std::int64_t k);

CMatrix shift_matrix(int d);
CMatrix clock_matrix(int d);

/// X^a Z^b in the computational basis.
CMatrix weyl_matrix(Dimension dim, WeylLabel label);

/// k such that (X^a Z^b)(X^a' Z^b') = zeta^k X^{a+a'} Z^{b+b'}; k = a' b mod d.
std::int64_t commute_phase(int d, WeylLabel left, WeylLabel right);

struct HermitianBasisElement {
    WeylLabel label;
    Part part = Part::kSymmetric;
    CMatrix matrix;
};

/// SYMMETRIC: X(a)Z(b) + Z(-b)X(-a). ANTISYMMETRIC: i(X(a)Z(b) - Z(-b)X(-a)).
HermitianBasisElement hermitian_basis_matrix(Dimension dim, WeylLabel label, Part part);

struct BasisKey {
    WeylLabel label;
    Part part = Part::kSymmetric;
    auto operator<=>(const BasisKey &) const = default;
};

/// A real basis of the d^2-dimensional space of Hermitian d x d matrices drawn
/// from the SYMMETRIC/ANTISYMMETRIC elements. One representative label is taken
/// from each pair {(a,b), (-a,-b)}; self-paired labels contribute their single
/// non-vanishing part. Includes (0,0) SYMMETRIC = 2I.
std::vector<BasisKey> canonical_basis(int d);

struct HamiltonianDecomposition {
    int d = 2;
    /// Coefficients on the non-identity canonical elements.
    std::map<BasisKey, double> coeffs;
    /// Coefficient on the (0,0) SYMMETRIC element (= 2I); a global phase.
    double identity = 0.0;

    CMatrix reconstruct() const;
};

/// Expands a Hermitian H over `canonical_basis(d)` by solving the Gram system.
HamiltonianDecomposition decompose_hamiltonian(Dimension dim, const CMatrix &hamiltonian);

struct TrotterTerm {
    WeylLabel label;
    Part part = Part::kSymmetric;
    double angle = 0.0;
};

/// First-order product formula for e^{iHt}; terms are listed in application
/// order, one pass per slice. The identity component is dropped.
std::vector<TrotterTerm> trotterize(const HamiltonianDecomposition &coeffs, double t, int n_slices);

/// Ordered product of e^{i angle B_term} over `terms` (first term applied first).
CMatrix trotter_product(int d, const std::vector<TrotterTerm> &terms);

/// Upper bound (t^2 / 2n) * sum_{j<k} ||[H_j, H_k]||_2 on the first-order error.
double trotter_error_bound(const HamiltonianDecomposition &coeffs, double t, int n_slices);

/// e^{i t H} for Hermitian H.
CMatrix expi_hermitian(const CMatrix &hamiltonian, double t = 1.0);

/// H with e^{iH} = U and eigenphases in (-pi, pi].
CMatrix principal_hamiltonian(const CMatrix &unitary);

/// min over global phase of ||a - e^{i phi} b||_2 (spectral norm).
double phase_aligned_distance(const CMatrix &a, const CMatrix &b);

bool is_hermitian(const CMatrix &m, double tol);
bool is_unitary(const CMatrix &m, double tol);

}  // namespace gqc
