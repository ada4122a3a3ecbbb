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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qregion/io.hpp"
#include "qregion/sampling.hpp"

namespace py = pybind11;
using namespace qregion;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Conic inner/outer approximations of quantum testing regions";
    m.attr("__version__") = QREGION_VERSION;

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("herm", &Tolerances::herm)
        .def_readwrite("psd", &Tolerances::psd)
        .def_readwrite("recon", &Tolerances::recon)
        .def_readwrite("penrose", &Tolerances::penrose)
        .def_readwrite("range", &Tolerances::range)
        .def_readwrite("member", &Tolerances::member)
        .def_readwrite("rank_rel", &Tolerances::rank_rel);

    py::enum_<EnsembleKind>(m, "EnsembleKind")
        .value("Measurement", EnsembleKind::Measurement)
        .value("StateFamily", EnsembleKind::StateFamily);

    py::class_<Ensemble>(m, "Ensemble")
        .def(py::init([](EnsembleKind kind, int dim, std::vector<Matrix> elements,
                         std::string label) {
                 Ensemble e;
                 e.kind = kind;
                 e.dim = dim;
                 e.elements = std::move(elements);
                 e.label = std::move(label);
                 return e;
             }),
             py::arg("kind"), py::arg("dim"), py::arg("elements"),
             py::arg("label") = "")
        .def_readonly("kind", &Ensemble::kind)
        .def_readonly("dim", &Ensemble::dim)
        .def_readonly("elements", &Ensemble::elements)
        .def_readonly("label", &Ensemble::label)
        .def_property_readonly("n", &Ensemble::n)
        .def("__repr__", [](const Ensemble& e) {
            return "<Ensemble " + e.label + " (" + to_string(e.kind) + ", d=" +
                   std::to_string(e.dim) + ", n=" + std::to_string(e.n()) + ")>";
        });

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("valid", &ValidationReport::valid)
        .def_readonly("informationally_complete",
                      &ValidationReport::informationally_complete)
        .def_readonly("centered_rank", &ValidationReport::centered_rank)
        .def_readonly("min_eigenvalues", &ValidationReport::min_eigenvalues)
        .def_readonly("completeness_residual",
                      &ValidationReport::completeness_residual)
        .def_readonly("trace_residuals", &ValidationReport::trace_residuals)
        .def_readonly("problems", &ValidationReport::problems);

    py::class_<GramMatrix>(m, "GramMatrix")
        .def_readonly("products", &GramMatrix::products)
        .def_readonly("traces", &GramMatrix::traces);

    py::class_<PinvFactorization>(m, "PinvFactorization")
        .def_readonly("rank", &PinvFactorization::rank)
        .def_readonly("positive_eigenvalues",
                      &PinvFactorization::positive_eigenvalues)
        .def_readonly("pinv", &PinvFactorization::pinv)
        .def_readonly("range_projector", &PinvFactorization::range_projector);

    py::class_<MembershipReport>(m, "MembershipReport")
        .def_readonly("form_value", &MembershipReport::form_value)
        .def_readonly("range_residual", &MembershipReport::range_residual)
        .def_readonly("threshold_sq", &MembershipReport::threshold_sq)
        .def_readonly("kappa_star", &MembershipReport::kappa_star)
        .def_property_readonly(
            "verdict", [](const MembershipReport& r) { return to_string(r.verdict); })
        .def("member", &MembershipReport::member)
        .def("margin", &MembershipReport::margin);

    py::class_<EllipsoidApprox>(m, "EllipsoidApprox")
        .def_readonly("n", &EllipsoidApprox::n)
        .def_readonly("dim", &EllipsoidApprox::dim)
        .def_readonly("r", &EllipsoidApprox::r)
        .def_readonly("center", &EllipsoidApprox::center)
        .def_readonly("covariance", &EllipsoidApprox::covariance)
        .def_readonly("pinv", &EllipsoidApprox::pinv)
        .def_readonly("informationally_complete",
                      &EllipsoidApprox::informationally_complete);

    py::class_<DConeApprox>(m, "DConeApprox")
        .def_readonly("n", &DConeApprox::n)
        .def_readonly("dim", &DConeApprox::dim)
        .def_readonly("r", &DConeApprox::r)
        .def_readonly("shape", &DConeApprox::shape)
        .def_readonly("slice_coeff", &DConeApprox::slice_coeff)
        .def_readonly("pinv", &DConeApprox::pinv)
        .def_readonly("informationally_complete",
                      &DConeApprox::informationally_complete);

    py::class_<ContainmentWitness>(m, "ContainmentWitness")
        .def_readonly("direction", &ContainmentWitness::direction)
        .def_readonly("hull_support", &ContainmentWitness::hull_support)
        .def_readonly("body_support", &ContainmentWitness::body_support)
        .def_readonly("margin", &ContainmentWitness::margin);

    py::class_<ContainmentCertificate>(m, "ContainmentCertificate")
        .def_property_readonly(
            "verdict",
            [](const ContainmentCertificate& c) { return to_string(c.verdict); })
        .def_readonly("witnesses", &ContainmentCertificate::witnesses)
        .def_readonly("method", &ContainmentCertificate::method)
        .def_readonly("slack", &ContainmentCertificate::slack)
        .def_readonly("conclusion", &ContainmentCertificate::conclusion);

    py::class_<VerificationStats>(m, "VerificationStats")
        .def_readonly("samples", &VerificationStats::samples)
        .def_readonly("seed", &VerificationStats::seed)
        .def_readonly("violations", &VerificationStats::violations)
        .def_readonly("skipped", &VerificationStats::skipped)
        .def_readonly("note", &VerificationStats::note)
        .def_readonly("max_form_pure", &VerificationStats::max_form_pure)
        .def_readonly("min_form_pure", &VerificationStats::min_form_pure)
        .def_readonly("mean_form_pure", &VerificationStats::mean_form_pure)
        .def_readonly("max_form_mixed", &VerificationStats::max_form_mixed)
        .def_readonly("min_form_mixed", &VerificationStats::min_form_mixed)
        .def_readonly("mean_form_mixed", &VerificationStats::mean_form_mixed)
        .def_readonly("min_reconstruction_eigenvalue",
                      &VerificationStats::min_reconstruction_eigenvalue)
        .def_readonly("max_forward_residual",
                      &VerificationStats::max_forward_residual)
        .def_readonly("max_trace_residual",
                      &VerificationStats::max_trace_residual)
        .def_readonly("max_slice_form_error",
                      &VerificationStats::max_slice_form_error);

    // operator algebra
    m.def("hs_inner", &hs_inner, py::arg("a"), py::arg("b"));
    m.def("sqrt_psd", &sqrt_psd, py::arg("m"), py::arg("tol_psd") = Tolerances{}.psd);
    m.def(
        "pinv_gram",
        [](const Eigen::MatrixXd& m, double rel_tol) { return pinv_gram(m, rel_tol); },
        py::arg("m"), py::arg("rel_tol"));
    m.def(
        "eig_hermitian",
        [](const Matrix& a) {
            auto dec = eig_hermitian(a);
            return py::make_tuple(dec.eigenvalues, dec.eigenvectors);
        },
        py::arg("a"));

    // sampling (seed-based wrappers)
    m.def("sample_haar_pure", [](int d, std::uint64_t seed) {
        auto rng = make_rng(seed);
        return sample_haar_pure(d, rng);
    });
    m.def("sample_mixed", [](int d, int rank, std::uint64_t seed) {
        auto rng = make_rng(seed);
        return sample_mixed(d, rank, rng);
    });
    m.def("sample_projector", [](int d, int k, std::uint64_t seed) {
        auto rng = make_rng(seed);
        return sample_projector(d, k, rng);
    });
    m.def("sample_random_effect", [](int d, std::uint64_t seed) {
        auto rng = make_rng(seed);
        return sample_random_effect(d, rng);
    });

    // ensembles
    m.def("validate", &validate, py::arg("ensemble"),
          py::arg("tol") = Tolerances{});
    m.def("gram", &gram);
    m.def("make_sic", &make_sic, py::arg("d"), py::arg("kind"));
    m.def("make_mub", &make_mub, py::arg("d"), py::arg("kind"));
    m.def("builtin", &builtin, py::arg("name"));
    m.def("random_ic_measurement", &random_ic_measurement, py::arg("d"),
          py::arg("n"), py::arg("seed"));

    // region approximations
    m.def("approx_measurement", &approx_measurement, py::arg("ensemble"),
          py::arg("r") = 1.0, py::arg("tol") = Tolerances{});
    m.def("membership", &membership, py::arg("approx"), py::arg("p"),
          py::arg("tol") = Tolerances{});
    m.def("support", &support, py::arg("approx"), py::arg("direction"));
    m.def("approx_states", &approx_states, py::arg("ensemble"),
          py::arg("r") = 1.0, py::arg("tol") = Tolerances{});
    m.def("slice_membership", &slice_membership, py::arg("cone"), py::arg("q"),
          py::arg("k"), py::arg("tol") = Tolerances{});
    m.def("dcone_membership", &dcone_membership, py::arg("cone"), py::arg("q"),
          py::arg("tol") = Tolerances{});
    m.def("dcone_support", &dcone_support, py::arg("cone"), py::arg("direction"));
    m.def("envelope_radius", &envelope_radius, py::arg("cone"), py::arg("kappa"));
    m.def("image", &image, py::arg("ensemble"), py::arg("op"));
    m.def("reconstruct_state", &reconstruct_state, py::arg("ensemble"),
          py::arg("p"), py::arg("tol") = Tolerances{});
    m.def("reconstruct_effect", &reconstruct_effect, py::arg("ensemble"),
          py::arg("q"), py::arg("k"), py::arg("tol") = Tolerances{});

    // simulability
    m.def(
        "ellipsoid_in_hull",
        [](const EllipsoidApprox& body, const Eigen::MatrixXd& cloud_points,
           double slack, int facet_dim_limit, int n_directions,
           std::uint64_t seed) {
            ProbabilityCloud cloud{cloud_points, true};
            ContainmentOptions opts;
            opts.facet_dim_limit = facet_dim_limit;
            opts.n_directions = n_directions;
            opts.seed = seed;
            return ellipsoid_in_hull(body, cloud, slack, opts);
        },
        py::arg("body"), py::arg("cloud_points"), py::arg("slack") = 0.0,
        py::arg("facet_dim_limit") = 4, py::arg("n_directions") = 10000,
        py::arg("seed") = 2026);
    m.def(
        "dcone_in_hull",
        [](const DConeApprox& body, const Eigen::MatrixXd& cloud_points,
           double slack, int facet_dim_limit, int n_directions,
           std::uint64_t seed) {
            ProbabilityCloud cloud{cloud_points, false};
            ContainmentOptions opts;
            opts.facet_dim_limit = facet_dim_limit;
            opts.n_directions = n_directions;
            opts.seed = seed;
            return dcone_in_hull(body, cloud, slack, opts);
        },
        py::arg("body"), py::arg("cloud_points"), py::arg("slack") = 0.0,
        py::arg("facet_dim_limit") = 4, py::arg("n_directions") = 10000,
        py::arg("seed") = 2026);

    // verification harness
    m.def("verify_outer_measurement", &verify_outer_measurement,
          py::arg("ensemble"), py::arg("samples"), py::arg("seed"),
          py::arg("tol") = Tolerances{});
    m.def("verify_inner_measurement", &verify_inner_measurement,
          py::arg("ensemble"), py::arg("probes"), py::arg("seed"),
          py::arg("tol") = Tolerances{});
    m.def("verify_states_cone", &verify_states_cone, py::arg("ensemble"),
          py::arg("samples"), py::arg("seed"), py::arg("tol") = Tolerances{});

    // io
    m.def("read_ensemble", &read_ensemble, py::arg("path"));
    m.def("write_ensemble", &write_ensemble, py::arg("path"), py::arg("ensemble"));
    m.def("parse_ensemble_spec", &parse_ensemble_spec, py::arg("spec"));

    py::register_exception<ParseError>(m, "ParseError");
}
