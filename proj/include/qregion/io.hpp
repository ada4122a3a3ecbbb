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

#pragma once

#include <string>

#include <json.hpp>

#include "qregion/ensemble.hpp"
#include "qregion/region.hpp"
#include "qregion/simulability.hpp"
#include "qregion/verify.hpp"

namespace qregion {

/// Malformed input file or specifier (CLI exit code 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Versioned JSON ensemble format: complex entries serialize as [re, im]
/// pairs, element order is preserved, and write/read round-trips are
/// bit-exact.
nlohmann::json ensemble_to_json(const Ensemble& e);
Ensemble ensemble_from_json(const nlohmann::json& j);

void write_ensemble(const std::string& path, const Ensemble& e);
Ensemble read_ensemble(const std::string& path);

/// Resolves an ensemble argument: a file path, or one of the specifiers
/// "builtin:NAME", "sic:D:KIND", "mub:D:KIND" (KIND "measurement" or
/// "states"); bare builtin names are accepted when no such file exists.
Ensemble parse_ensemble_spec(const std::string& spec);

/// Plain-text cloud format: one probability vector per line, whitespace
/// or comma separated, optional '#' header naming the outcomes.
Eigen::MatrixXd read_cloud_points(const std::string& path);
void write_cloud_points(const std::string& path, const Eigen::MatrixXd& points,
                        const std::string& header = "");

/// Parses "a,b,c" or "a b c" into a vector (used for --point).
Eigen::VectorXd parse_vector(const std::string& text);

// Report payload builders; every report also carries tool metadata,
// effective tolerances and seeds (see make_report in the CLI).
nlohmann::json to_json(const ValidationReport& rep);
nlohmann::json to_json(const MembershipReport& rep);
nlohmann::json to_json(const VerificationStats& stats);
nlohmann::json to_json(const ContainmentCertificate& cert);
nlohmann::json to_json(const EllipsoidApprox& a);
nlohmann::json to_json(const DConeApprox& c);
nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);
nlohmann::json vector_to_json(const Eigen::VectorXd& v);
nlohmann::json operator_to_json(const Matrix& m);

}  // namespace qregion
