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

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qregion/io.hpp"
#include "qregion/pinv.hpp"
#include "qregion/sampling.hpp"

namespace {

using nlohmann::json;
using namespace qregion;

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&tt));
    return buf;
}

json tolerances_to_json(const Tolerances& tol) {
    return json{{"herm", tol.herm},     {"psd", tol.psd},
                {"recon", tol.recon},   {"penrose", tol.penrose},
                {"range", tol.range},   {"member", tol.member},
                {"rank_rel", tol.rank_rel}};
}

json input_summary(const Ensemble& e) {
    return json{{"label", e.label},
                {"kind", to_string(e.kind)},
                {"dim", e.dim},
                {"n", e.n()}};
}

struct ReportSink {
    std::string command;
    Tolerances tol;
    std::optional<std::uint64_t> seed;
    std::string output_path;

    int emit(json result, int exit_code, const Ensemble* input = nullptr) const {
        json report{{"tool", "qregion"},
                    {"version", QREGION_VERSION},
                    {"command", command},
                    {"timestamp", iso_timestamp()},
                    {"tolerances", tolerances_to_json(tol)},
                    {"result", std::move(result)}};
        if (seed) report["seed"] = *seed;
        if (input) report["input"] = input_summary(*input);
        const std::string text = report.dump(2) + "\n";
        std::cout << text;
        if (!output_path.empty()) {
            std::ofstream out(output_path);
            if (!out) {
                std::cerr << "error: cannot write " << output_path << "\n";
                return 2;
            }
            out << text;
        }
        return exit_code;
    }
};

// Validates unless allowed not to; exit 1 on failure.
void require_valid_or_allowed(const Ensemble& e, bool allow_invalid,
                              const Tolerances& tol) {
    if (allow_invalid) return;
    auto rep = validate(e, tol);
    if (!rep.valid)
        throw std::invalid_argument("ensemble failed validation: " +
                                    rep.problems.front() +
                                    " (use --allow-invalid to bypass)");
}

json ellipse_profile(const EllipsoidApprox& a, int ci, int cj) {
    Eigen::Matrix2d sub;
    sub << a.covariance(ci, ci), a.covariance(ci, cj),
           a.covariance(cj, ci), a.covariance(cj, cj);
    const Eigen::MatrixXd root = sqrt_psd(sub, 1e-12);
    json polyline = json::array();
    constexpr int kPoints = 128;
    for (int s = 0; s <= kPoints; ++s) {
        const double theta = 2.0 * 3.14159265358979323846 * s / kPoints;
        const Eigen::Vector2d dir(std::cos(theta), std::sin(theta));
        const Eigen::Vector2d p =
            Eigen::Vector2d(a.center(ci), a.center(cj)) + (root * dir) / a.r;
        polyline.push_back(json::array({p.x(), p.y()}));
    }
    return json{{"coordinates", json::array({ci, cj})},
                {"center", json::array({a.center(ci), a.center(cj)})},
                {"covariance_submatrix", matrix_to_json(sub)},
                {"polyline", std::move(polyline)}};
}

json cone_profile(const DConeApprox& c) {
    json nodes = json::array();
    for (int k = 0; k <= c.dim; ++k)
        nodes.push_back(json::array(
            {static_cast<double>(k),
             std::sqrt(std::max(c.slice_coeff[k], 0.0)) / c.r}));
    return json{{"axial_profile", std::move(nodes)},
                {"slice_coefficients", c.slice_coeff}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conic inner/outer approximation of quantum testing regions"};
    app.require_subcommand(1);

    Tolerances tol;
    std::uint64_t seed = 1;
    std::string output_path;
    app.add_option("--tol-herm", tol.herm, "Hermiticity tolerance")
        ->envname("QREGION_TOL_HERM");
    app.add_option("--tol-psd", tol.psd, "PSD tolerance")
        ->envname("QREGION_TOL_PSD");
    app.add_option("--tol-recon", tol.recon, "reconstruction tolerance")
        ->envname("QREGION_TOL_RECON");
    app.add_option("--tol-penrose", tol.penrose, "Penrose identity tolerance")
        ->envname("QREGION_TOL_PENROSE");
    app.add_option("--tol-range", tol.range, "affine range tolerance")
        ->envname("QREGION_TOL_RANGE");
    app.add_option("--tol-member", tol.member, "membership boundary band")
        ->envname("QREGION_TOL_MEMBER");
    app.add_option("--seed", seed, "RNG seed")->envname("QREGION_SEED");
    app.add_option("-o,--output", output_path, "also write the report here");

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "validate an ensemble file");
    std::string validate_input;
    cmd_validate->add_option("input", validate_input)->required();

    // region
    auto* cmd_region = app.add_subcommand(
        "region", "emit the conic approximation (Q/t or G/c_k)");
    std::string region_input;
    double region_r = 1.0;
    bool region_profile = false;
    std::string region_coords = "0,1";
    bool region_allow_invalid = false;
    cmd_region->add_option("input", region_input)->required();
    cmd_region->add_option("--r", region_r, "ellipsoid scale (1 outer, d-1 inner)");
    cmd_region->add_flag("--profile", region_profile, "emit 2-D profile data");
    cmd_region->add_option("--coords", region_coords,
                           "two coordinates for the ellipsoid cross-section");
    cmd_region->add_flag("--allow-invalid", region_allow_invalid);

    // member
    auto* cmd_member = app.add_subcommand("member", "membership query");
    std::string member_input, member_point;
    double member_r = 1.0;
    int member_k = -1;
    cmd_member->add_option("input", member_input)->required();
    cmd_member->add_option("--point", member_point, "probability vector")->required();
    cmd_member->add_option("--r", member_r);
    cmd_member->add_option("--k", member_k, "slice index (state families)");

    // reconstruct
    auto* cmd_reconstruct =
        app.add_subcommand("reconstruct", "minimal-norm preimage of a point");
    std::string rec_input, rec_point;
    int rec_k = -1;
    cmd_reconstruct->add_option("input", rec_input)->required();
    cmd_reconstruct->add_option("--point", rec_point)->required();
    cmd_reconstruct->add_option("--k", rec_k, "target trace (state families)");

    // simtest
    auto* cmd_simtest = app.add_subcommand(
        "simtest", "semi-device-independent simulability containment test");
    std::string sim_reference, sim_cloud;
    double sim_slack = 0.0;
    std::string sim_mode = "auto";
    int sim_dirs = 10000;
    cmd_simtest->add_option("reference", sim_reference)->required();
    cmd_simtest->add_option("cloud", sim_cloud)->required();
    cmd_simtest->add_option("--slack", sim_slack, "containment slack");
    cmd_simtest->add_option("--mode", sim_mode)
        ->check(CLI::IsMember({"auto", "facets", "sampled"}));
    cmd_simtest->add_option("--dirs", sim_dirs, "directions in sampled mode");

    // verify
    auto* cmd_verify = app.add_subcommand(
        "verify", "Monte Carlo verification of the inclusion theorems");
    std::string verify_input;
    long verify_samples = 10000;
    cmd_verify->add_option("input", verify_input)->required();
    cmd_verify->add_option("--samples", verify_samples);

    // make
    auto* cmd_make =
        app.add_subcommand("make", "write a builtin/sic/mub ensemble file");
    std::string make_name, make_out;
    cmd_make->add_option("name", make_name,
                         "builtin name or sic:D:KIND / mub:D:KIND")->required();
    cmd_make->add_option("file", make_out, "destination path")->required();

    CLI11_PARSE(app, argc, argv);

    ReportSink sink{app.get_subcommands().front()->get_name(), tol, seed,
                    output_path};
    try {
        if (*cmd_validate) {
            Ensemble e = parse_ensemble_spec(validate_input);
            ValidationReport rep = validate(e, tol);
            return sink.emit(to_json(rep), rep.valid ? 0 : 1, &e);
        }

        if (*cmd_region) {
            Ensemble e = parse_ensemble_spec(region_input);
            require_valid_or_allowed(e, region_allow_invalid, tol);
            json result;
            if (e.kind == EnsembleKind::Measurement) {
                EllipsoidApprox a = approx_measurement(e, region_r, tol);
                result = to_json(a);
                if (region_profile) {
                    const Eigen::VectorXd coords = parse_vector(region_coords);
                    if (coords.size() != 2 || coords(0) < 0 || coords(1) < 0 ||
                        coords(0) >= a.n || coords(1) >= a.n ||
                        coords(0) == coords(1))
                        throw ParseError("--coords needs two distinct outcome indices");
                    result["profile"] = ellipse_profile(
                        a, static_cast<int>(coords(0)), static_cast<int>(coords(1)));
                }
            } else {
                DConeApprox c = approx_states(e, region_r, tol);
                result = to_json(c);
                if (region_profile) result["profile"] = cone_profile(c);
            }
            return sink.emit(std::move(result), 0, &e);
        }

        if (*cmd_member) {
            Ensemble e = parse_ensemble_spec(member_input);
            require_valid_or_allowed(e, false, tol);
            const Eigen::VectorXd p = parse_vector(member_point);
            if (p.size() != e.n())
                throw ParseError("--point length does not match the outcome count");
            MembershipReport rep;
            if (e.kind == EnsembleKind::Measurement) {
                rep = membership(approx_measurement(e, member_r, tol), p, tol);
            } else {
                DConeApprox c = approx_states(e, member_r, tol);
                rep = member_k >= 0 ? slice_membership(c, p, member_k, tol)
                                    : dcone_membership(c, p, tol);
            }
            return sink.emit(to_json(rep), 0, &e);
        }

        if (*cmd_reconstruct) {
            Ensemble e = parse_ensemble_spec(rec_input);
            require_valid_or_allowed(e, false, tol);
            const Eigen::VectorXd p = parse_vector(rec_point);
            if (p.size() != e.n())
                throw ParseError("--point length does not match the outcome count");
            Matrix op;
            try {
                if (e.kind == EnsembleKind::Measurement) {
                    op = reconstruct_state(e, p, tol);
                } else {
                    if (rec_k < 0)
                        throw ParseError("state families need --k (target trace)");
                    op = reconstruct_effect(e, p, rec_k, tol);
                }
            } catch (const std::invalid_argument& ex) {
                // Off-range points are a domain failure, not a usage error.
                return sink.emit(json{{"error", ex.what()}}, 1, &e);
            }
            auto dec = eig_hermitian(op, tol.herm);
            json result{{"operator", operator_to_json(op)},
                        {"eigenvalues", vector_to_json(dec.eigenvalues)},
                        {"trace", op.trace().real()},
                        {"forward_residual", (image(e, op) - p).norm()}};
            return sink.emit(std::move(result), 0, &e);
        }

        if (*cmd_simtest) {
            Ensemble ref = parse_ensemble_spec(sim_reference);
            require_valid_or_allowed(ref, false, tol);
            ProbabilityCloud cloud;
            cloud.points = read_cloud_points(sim_cloud);
            cloud.normalized = (ref.kind == EnsembleKind::Measurement);
            if (cloud.n() != ref.n())
                throw ParseError("cloud column count does not match the reference");
            try {
                validate_cloud(cloud, 1e-6);
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what());
            }

            ContainmentOptions opts;
            opts.n_directions = sim_dirs;
            opts.seed = seed;
            if (sim_mode == "facets")
                opts.facet_dim_limit = 1024;  // force facet mode or fail
            else if (sim_mode == "sampled")
                opts.facet_dim_limit = -1;

            ContainmentCertificate cert =
                ref.kind == EnsembleKind::Measurement
                    ? ellipsoid_in_hull(approx_measurement(ref, 1.0, tol), cloud,
                                        sim_slack, opts, tol)
                    : dcone_in_hull(approx_states(ref, 1.0, tol), cloud,
                                    sim_slack, opts, tol);
            int code = 0;
            if (cert.verdict == Containment::Violated) code = 1;
            if (cert.verdict == Containment::InconclusivePass) code = 3;
            return sink.emit(to_json(cert), code, &ref);
        }

        if (*cmd_verify) {
            Ensemble e = parse_ensemble_spec(verify_input);
            require_valid_or_allowed(e, false, tol);
            json result;
            long violations = 0;
            if (e.kind == EnsembleKind::Measurement) {
                auto outer = verify_outer_measurement(e, verify_samples, seed, tol);
                auto inner = verify_inner_measurement(
                    e, std::max(verify_samples / 10, 1L), split_seed(seed, 1), tol);
                violations = outer.violations + inner.violations;
                result = json{{"outer", to_json(outer)}, {"inner", to_json(inner)}};
            } else {
                auto cone = verify_states_cone(e, verify_samples, seed, tol);
                violations = cone.violations;
                result = json{{"cone", to_json(cone)}};
            }
            result["violations_total"] = violations;
            return sink.emit(std::move(result), violations ? 1 : 0, &e);
        }

        if (*cmd_make) {
            Ensemble e = parse_ensemble_spec(make_name);
            write_ensemble(make_out, e);
            return sink.emit(json{{"written", make_out}, {"label", e.label}}, 0, &e);
        }
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
