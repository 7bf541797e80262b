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

#include "gqc/weyl.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gqc {

namespace {

constexpr double kPi = std::numbers::pi;

double spectral_norm(const CMatrix &m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace

void Dimension::require_finite() const {
    if (is_continuous()) {
        fail(ErrorCode::kUnsupportedDimension, "continuous-variable sites have no finite matrix representation");
    }
    if (d < 2) {
        fail(ErrorCode::kInvalidArgument, "dimension must be >= 2, got " + std::to_string(d));
    }
}

std::int64_t mod(std::int64_t value, std::int64_t d) {
    std::int64_t r = value % d;
    return r < 0 ? r + d : r;
}

WeylLabel WeylLabel::normalized(int d) const {
    return {mod(a, d), mod(b, d)};
}

WeylLabel WeylLabel::negated(int d) const {
    return {mod(-a, d), mod(-b, d)};
}

const char *part_name(Part part) {
    return part == Part::kSymmetric ? "S" : "A";
}

double phase_angle(int d, WeylLabel label) {
    return kPi / 4 + kPi * static_cast<double>(label.a) * static_cast<double>(label.b) / d;
}

cplx zeta_power(Dimension dim, double k) {
    if (dim.is_continuous()) {
        return std::polar(1.0, k);
    }
    return std::polar(1.0, 2 * kPi * k / dim.d);
}

cplx zeta_power(Dimension dim, std::int64_t k) {
    if (dim.is_continuous()) {
        return std::polar(1.0, static_cast<double>(k));
    }
    // Reducing first keeps the angle small, so periodicity holds to the last bit.
    return std::polar(1.0, 2 * kPi * static_cast<double>(mod(k, dim.d)) / dim.d);
}

CMatrix shift_matrix(int d) {
    CMatrix x = CMatrix::Zero(d, d);
    for (int s = 0; s < d; s++) {
        x((s + 1) % d, s) = 1.0;
    }
    return x;
}

CMatrix clock_matrix(int d) {
    CMatrix z = CMatrix::Zero(d, d);
    for (int s = 0; s < d; s++) {
        z(s, s) = zeta_power(Dimension{d}, std::int64_t{s});
    }
    return z;
}

CMatrix weyl_matrix(Dimension dim, WeylLabel label) {
    dim.require_finite();
    int d = dim.d;
    WeylLabel n = label.normalized(d);
    // X^a Z^b |s> = zeta^{b s} |s + a>.
    CMatrix m = CMatrix::Zero(d, d);
    for (int s = 0; s < d; s++) {
        m(mod(s + n.a, d), s) = zeta_power(dim, n.b * s);
    }
    return m;
}

std::int64_t commute_phase(int d, WeylLabel left, WeylLabel right) {
    return mod(mod(right.a, d) * mod(left.b, d), d);
}

HermitianBasisElement hermitian_basis_matrix(Dimension dim, WeylLabel label, Part part) {
    dim.require_finite();
    int d = dim.d;
    WeylLabel n = label.normalized(d);
    if (part == Part::kAntisymmetric && n.a == 0 && n.b == 0) {
        fail(ErrorCode::kDegenerateElement, "the antisymmetric element vanishes at label (0,0)");
    }
    CMatrix a = weyl_matrix(dim, n);
    CMatrix adj = a.adjoint();
    HermitianBasisElement out{n, part, {}};
    if (part == Part::kSymmetric) {
        out.matrix = a + adj;
    } else {
        out.matrix = cplx(0, 1) * (a - adj);
    }
    return out;
}

std::vector<BasisKey> canonical_basis(int d) {
    Dimension{d}.require_finite();
    std::vector<BasisKey> keys;
    for (std::int64_t a = 0; a < d; a++) {
        for (std::int64_t b = 0; b < d; b++) {
            WeylLabel label{a, b};
            WeylLabel partner = label.negated(d);
            if (partner < label) {
                continue;
            }
            if (partner == label) {
                // Self-paired: (X^a Z^b)^dagger = zeta^{ab} X^a Z^b, so exactly one part survives.
                Part part = mod(a * b, d) == 0 ? Part::kSymmetric : Part::kAntisymmetric;
                keys.push_back({label, part});
            } else {
                keys.push_back({label, Part::kSymmetric});
                keys.push_back({label, Part::kAntisymmetric});
            }
        }
    }
    return keys;
}

CMatrix HamiltonianDecomposition::reconstruct() const {
    CMatrix h = 2.0 * identity * CMatrix::Identity(d, d);
    for (const auto &[key, c] : coeffs) {
        h += c * hermitian_basis_matrix(Dimension{d}, key.label, key.part).matrix;
    }
    return h;
}

bool is_hermitian(const CMatrix &m, double tol) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const CMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

HamiltonianDecomposition decompose_hamiltonian(Dimension dim, const CMatrix &hamiltonian) {
    dim.require_finite();
    int d = dim.d;
    if (hamiltonian.rows() != d || hamiltonian.cols() != d) {
        fail(ErrorCode::kValidation, "Hamiltonian must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (!is_hermitian(hamiltonian, 1e-10)) {
        fail(ErrorCode::kValidation, "Hamiltonian is not Hermitian within 1e-10");
    }
    auto keys = canonical_basis(d);
    std::vector<CMatrix> mats;
    mats.reserve(keys.size());
    for (const auto &key : keys) {
        mats.push_back(hermitian_basis_matrix(dim, key.label, key.part).matrix);
    }
    auto n = static_cast<Eigen::Index>(keys.size());
    Eigen::MatrixXd gram(n, n);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            gram(i, j) = (mats[i] * mats[j]).trace().real();
        }
        rhs(i) = (mats[i] * hamiltonian).trace().real();
    }
    Eigen::VectorXd c = gram.fullPivLu().solve(rhs);

    HamiltonianDecomposition out;
    out.d = d;
    for (Eigen::Index i = 0; i < n; i++) {
        const auto &key = keys[i];
        if (key.label == WeylLabel{0, 0}) {
            out.identity = c(i);
        } else {
            out.coeffs[key] = c(i);
        }
    }
    return out;
}

std::vector<TrotterTerm> trotterize(const HamiltonianDecomposition &coeffs, double t, int n_slices) {
    if (n_slices < 1) {
        fail(ErrorCode::kInvalidArgument, "n_slices must be >= 1");
    }
    std::vector<TrotterTerm> slice;
    for (const auto &[key, c] : coeffs.coeffs) {
        if (c != 0.0) {
            slice.push_back({key.label, key.part, c * t});
        }
    }
    if (slice.size() <= 1) {
        return slice;
    }
    std::vector<TrotterTerm> out;
    out.reserve(slice.size() * static_cast<std::size_t>(n_slices));
    for (int s = 0; s < n_slices; s++) {
        for (const auto &term : slice) {
            out.push_back({term.label, term.part, term.angle / n_slices});
        }
    }
    return out;
}

CMatrix trotter_product(int d, const std::vector<TrotterTerm> &terms) {
    CMatrix u = CMatrix::Identity(d, d);
    std::map<BasisKey, CMatrix> cache;
    for (const auto &term : terms) {
        BasisKey key{term.label, term.part};
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, hermitian_basis_matrix(Dimension{d}, term.label, term.part).matrix).first;
        }
        u = expi_hermitian(it->second, term.angle) * u;
    }
    return u;
}

double trotter_error_bound(const HamiltonianDecomposition &coeffs, double t, int n_slices) {
    std::vector<CMatrix> terms;
    for (const auto &[key, c] : coeffs.coeffs) {
        if (c != 0.0) {
            terms.push_back(c * hermitian_basis_matrix(Dimension{coeffs.d}, key.label, key.part).matrix);
        }
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < terms.size(); j++) {
        for (std::size_t k = j + 1; k < terms.size(); k++) {
            sum += spectral_norm(terms[j] * terms[k] - terms[k] * terms[j]);
        }
    }
    return t * t * sum / (2.0 * n_slices);
}

CMatrix expi_hermitian(const CMatrix &hamiltonian, double t) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hamiltonian);
    CVector phases(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); k++) {
        phases(k) = std::polar(1.0, t * es.eigenvalues()(k));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix principal_hamiltonian(const CMatrix &unitary) {
    Eigen::ComplexSchur<CMatrix> schur(unitary);
    const CMatrix &t = schur.matrixT();
    const CMatrix &q = schur.matrixU();
    // A unitary is normal, so its Schur form is diagonal; degenerate clusters
    // still get an orthonormal Q.
    Eigen::VectorXd phases(t.rows());
    for (Eigen::Index k = 0; k < t.rows(); k++) {
        double phi = std::arg(t(k, k));
        if (phi <= -kPi) {
            phi = kPi;
        }
        phases(k) = phi;
    }
    CMatrix h = q * phases.cast<cplx>().asDiagonal() * q.adjoint();
    return 0.5 * (h + h.adjoint());
}

double phase_aligned_distance(const CMatrix &a, const CMatrix &b) {
    cplx overlap = (b.adjoint() * a).trace();
    cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1, 0);
    return spectral_norm(a - phase * b);
}

}  // namespace gqc
