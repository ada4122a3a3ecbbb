// Copyright 2026 The qregion developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qregion/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qregion/pinv.hpp"
#include "qregion/sampling.hpp"

namespace qregion {

namespace {

bool is_prime(int d) {
    if (d < 2) return false;
    for (int p = 2; p * p <= d; ++p)
        if (d % p == 0) return false;
    return true;
}

Matrix bloch_state(double x, double y, double z) {
    Matrix rho(2, 2);
    rho << Complex(1.0 + z, 0.0), Complex(x, -y),
           Complex(x, y), Complex(1.0 - z, 0.0);
    return 0.5 * rho;
}

Eigen::VectorXcd ket(int d, int i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v(i) = 1.0;
    return v;
}

}  // namespace

std::string to_string(EnsembleKind kind) {
    return kind == EnsembleKind::Measurement ? "measurement" : "state_family";
}

EnsembleKind ensemble_kind_from_string(const std::string& s) {
    if (s == "measurement") return EnsembleKind::Measurement;
    if (s == "state_family" || s == "states") return EnsembleKind::StateFamily;
    throw std::invalid_argument("unknown ensemble kind: " + s);
}

ValidationReport validate(const Ensemble& e, const Tolerances& tol) {
    ValidationReport rep;
    if (e.dim < 1) {
        rep.valid = false;
        rep.problems.push_back("dimension must be positive");
        return rep;
    }
    if (e.elements.empty()) {
        rep.valid = false;
        rep.problems.push_back("ensemble has no elements");
        return rep;
    }

    Matrix sum = Matrix::Zero(e.dim, e.dim);
    for (int i = 0; i < e.n(); ++i) {
        const Matrix& m = e.elements[i];
        if (m.rows() != e.dim || m.cols() != e.dim) {
            rep.valid = false;
            rep.problems.push_back("element " + std::to_string(i) + " has wrong dimension");
            return rep;
        }
        sum += m;
        const double herm = hermiticity_residual(m);
        rep.hermiticity_residuals.push_back(herm);
        if (herm > tol.herm) {
            rep.valid = false;
            rep.problems.push_back("element " + std::to_string(i) + " is not Hermitian");
            rep.min_eigenvalues.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        const double lmin = min_eigenvalue(m, tol.herm);
        rep.min_eigenvalues.push_back(lmin);
        if (lmin < -tol.psd) {
            rep.valid = false;
            rep.problems.push_back("element " + std::to_string(i) +
                                   " has negative eigenvalue " + std::to_string(lmin));
        }
    }

    if (e.kind == EnsembleKind::Measurement) {
        rep.completeness_residual = (sum - Matrix::Identity(e.dim, e.dim)).norm();
        if (rep.completeness_residual > tol.recon) {
            rep.valid = false;
            rep.problems.push_back("elements do not sum to the identity (residual " +
                                   std::to_string(rep.completeness_residual) + ")");
        }
    } else {
        for (int i = 0; i < e.n(); ++i) {
            const double tres = std::abs(e.elements[i].trace().real() - 1.0);
            rep.trace_residuals.push_back(tres);
            if (tres > tol.recon) {
                rep.valid = false;
                rep.problems.push_back("element " + std::to_string(i) +
                                       " does not have unit trace");
            }
        }
    }

    // Informational completeness: rank of the centered Gram matrix,
    // <a_i - Tr[a_i] 1/d, a_j - Tr[a_j] 1/d>, must reach d^2 - 1.
    if (rep.valid) {
        GramMatrix g = gram(e);
        Eigen::MatrixXd centered = g.products -
            g.traces * g.traces.transpose() / static_cast<double>(e.dim);
        auto fac = pinv_gram(centered, tol.effective_rank_rel(e.n(), e.dim), 1e-8);
        rep.centered_rank = fac.rank;
        rep.informationally_complete = (fac.rank == e.dim * e.dim - 1);
    }
    return rep;
}

GramMatrix gram(const Ensemble& e) {
    const int n = e.n();
    GramMatrix g;
    g.products = Eigen::MatrixXd(n, n);
    g.traces = Eigen::VectorXd(n);
    for (int i = 0; i < n; ++i) {
        g.traces(i) = e.elements[i].trace().real();
        for (int j = i; j < n; ++j) {
            const double v = hs_inner(e.elements[i], e.elements[j]);
            g.products(i, j) = v;
            g.products(j, i) = v;
        }
    }
    return g;
}

Ensemble make_sic(int d, EnsembleKind kind) {
    std::vector<Matrix> projectors;
    if (d == 2) {
        const double s = 1.0 / std::sqrt(3.0);
        projectors = {
            bloch_state(s, s, s), bloch_state(s, -s, -s),
            bloch_state(-s, s, -s), bloch_state(-s, -s, s)};
    } else if (d == 3) {
        // Weyl-Heisenberg orbit of the Hesse fiducial.
        const Complex omega = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
        Eigen::VectorXcd fiducial(3);
        fiducial << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                Eigen::VectorXcd psi(3);
                for (int m = 0; m < 3; ++m)
                    psi((m + j) % 3) = std::pow(omega, static_cast<double>(k * m)) *
                                       fiducial(m);
                projectors.push_back(psi * psi.adjoint());
            }
        }
    } else {
        throw std::invalid_argument("make_sic: only d = 2 and d = 3 are supported");
    }

    Ensemble e;
    e.kind = kind;
    e.dim = d;
    e.label = "sic-d" + std::to_string(d) +
              (kind == EnsembleKind::Measurement ? "-povm" : "-states");
    for (auto& p : projectors)
        e.elements.push_back(kind == EnsembleKind::Measurement
                                 ? Matrix(p / static_cast<double>(d))
                                 : p);
    return e;
}

Ensemble make_mub(int d, EnsembleKind kind) {
    if (!is_prime(d))
        throw std::invalid_argument("make_mub: d must be prime");

    std::vector<Matrix> projectors;  // ordered basis by basis
    if (d == 2) {
        const double r = 1.0 / std::sqrt(2.0);
        std::vector<Eigen::VectorXcd> kets;
        kets.push_back(ket(2, 0));
        kets.push_back(ket(2, 1));
        Eigen::VectorXcd plus(2), minus(2), plus_i(2), minus_i(2);
        plus << r, r;
        minus << r, -r;
        plus_i << r, Complex(0.0, r);
        minus_i << r, Complex(0.0, -r);
        kets.insert(kets.end(), {plus, minus, plus_i, minus_i});
        for (const auto& k : kets) projectors.push_back(k * k.adjoint());
    } else {
        // Computational basis, then for a = 0..d-1 the bases with
        // components omega^(a m^2 + b m)/sqrt(d); mutually unbiased for
        // odd prime d via quadratic Gauss sums.
        const Complex omega = std::exp(Complex(0.0, 2.0 * std::numbers::pi / d));
        for (int b = 0; b < d; ++b) {
            auto k = ket(d, b);
            projectors.push_back(k * k.adjoint());
        }
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                Eigen::VectorXcd psi(d);
                for (int m = 0; m < d; ++m) {
                    const long long phase =
                        (static_cast<long long>(a) * m * m + static_cast<long long>(b) * m) % d;
                    psi(m) = std::pow(omega, static_cast<double>(phase)) / std::sqrt(d);
                }
                projectors.push_back(psi * psi.adjoint());
            }
        }
    }

    Ensemble e;
    e.kind = kind;
    e.dim = d;
    e.label = "mub-d" + std::to_string(d) +
              (kind == EnsembleKind::Measurement ? "-povm" : "-states");
    for (auto& p : projectors)
        e.elements.push_back(kind == EnsembleKind::Measurement
                                 ? Matrix(p / static_cast<double>(d + 1))
                                 : p);
    return e;
}

Ensemble builtin(const std::string& name) {
    if (name == "trine") {
        Ensemble e;
        e.kind = EnsembleKind::Measurement;
        e.dim = 2;
        e.label = "trine";
        for (int i = 0; i < 3; ++i) {
            const double theta = 2.0 * std::numbers::pi * i / 3.0;
            // Bloch vectors at 120 degrees in the x-z plane.
            e.elements.push_back((2.0 / 3.0) *
                                 bloch_state(std::sin(theta), 0.0, std::cos(theta)));
        }
        return e;
    }
    if (name == "tetrahedron") {
        Ensemble e = make_sic(2, EnsembleKind::Measurement);
        e.label = "tetrahedron";
        return e;
    }
    if (name == "bb84-states") {
        Ensemble e;
        e.kind = EnsembleKind::StateFamily;
        e.dim = 2;
        e.label = "bb84-states";
        e.elements = {bloch_state(0, 0, 1), bloch_state(0, 0, -1),
                      bloch_state(1, 0, 0), bloch_state(-1, 0, 0)};
        return e;
    }
    if (name == "pair") {
        Ensemble e;
        e.kind = EnsembleKind::StateFamily;
        e.dim = 2;
        e.label = "pair";
        e.elements = {bloch_state(0, 0, 1), bloch_state(1, 0, 0)};
        return e;
    }
    if (name.rfind("computational(", 0) == 0 && name.back() == ')') {
        const int d = std::stoi(name.substr(14, name.size() - 15));
        if (d < 1) throw std::invalid_argument("computational dimension must be positive");
        Ensemble e;
        e.kind = EnsembleKind::Measurement;
        e.dim = d;
        e.label = name;
        for (int i = 0; i < d; ++i) {
            auto k = ket(d, i);
            e.elements.push_back(k * k.adjoint());
        }
        return e;
    }
    throw std::invalid_argument("unknown builtin ensemble: " + name);
}

Ensemble random_ic_measurement(int d, int n, std::uint64_t seed) {
    if (n < d * d)
        throw std::invalid_argument(
            "random_ic_measurement: need at least d^2 elements");
    auto rng = make_rng(seed);
    std::vector<Matrix> projectors;
    Matrix sum = Matrix::Zero(d, d);
    for (int i = 0; i < n; ++i) {
        projectors.push_back(sample_haar_pure(d, rng));
        sum += projectors.back();
    }
    // sum is positive definite a.s.; sandwich with its inverse square root.
    auto dec = eig_hermitian(sum);
    Eigen::VectorXd inv_sqrt = dec.eigenvalues;
    for (int i = 0; i < inv_sqrt.size(); ++i) {
        if (inv_sqrt(i) <= 0.0)
            throw std::runtime_error("random_ic_measurement: degenerate frame sum");
        inv_sqrt(i) = 1.0 / std::sqrt(inv_sqrt(i));
    }
    Matrix s_inv_sqrt = dec.eigenvectors * inv_sqrt.asDiagonal() *
                        dec.eigenvectors.adjoint();

    Ensemble e;
    e.kind = EnsembleKind::Measurement;
    e.dim = d;
    e.label = "random-ic-d" + std::to_string(d);
    for (auto& p : projectors) {
        Matrix eff = s_inv_sqrt * p * s_inv_sqrt;
        e.elements.push_back(0.5 * (eff + eff.adjoint()));
    }
    return e;
}

}  // namespace qregion
