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

#include "qregion/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace qregion {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

json complex_to_json(const Complex& z) {
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("complex entries must be [re, im] pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

json ensemble_to_json(const Ensemble& e) {
    json elements = json::array();
    for (const auto& m : e.elements) {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
            rows.push_back(std::move(row));
        }
        elements.push_back(std::move(rows));
    }
    return json{{"format_version", kFormatVersion},
                {"kind", to_string(e.kind)},
                {"dim", e.dim},
                {"label", e.label},
                {"elements", std::move(elements)}};
}

Ensemble ensemble_from_json(const json& j) {
    try {
        if (!j.is_object()) throw ParseError("ensemble file must hold a JSON object");
        const int version = j.at("format_version").get<int>();
        if (version != kFormatVersion)
            throw ParseError("unsupported format_version " + std::to_string(version));
        Ensemble e;
        e.kind = ensemble_kind_from_string(j.at("kind").get<std::string>());
        e.dim = j.at("dim").get<int>();
        e.label = j.value("label", std::string{});
        if (e.dim < 1) throw ParseError("dim must be positive");
        for (const auto& el : j.at("elements")) {
            if (!el.is_array() || static_cast<int>(el.size()) != e.dim)
                throw ParseError("element has wrong row count");
            Matrix m(e.dim, e.dim);
            for (int r = 0; r < e.dim; ++r) {
                if (!el[r].is_array() || static_cast<int>(el[r].size()) != e.dim)
                    throw ParseError("element has wrong column count");
                for (int c = 0; c < e.dim; ++c) m(r, c) = complex_from_json(el[r][c]);
            }
            e.elements.push_back(std::move(m));
        }
        if (e.elements.empty()) throw ParseError("ensemble has no elements");
        return e;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("malformed ensemble file: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("malformed ensemble file: ") + ex.what());
    }
}

void write_ensemble(const std::string& path, const Ensemble& e) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << ensemble_to_json(e).dump(2) << "\n";
}

Ensemble read_ensemble(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + ex.what());
    }
    return ensemble_from_json(j);
}

Ensemble parse_ensemble_spec(const std::string& spec) {
    const auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ':')) parts.push_back(part);
        return parts;
    };
    if (spec.find(':') != std::string::npos) {
        auto parts = split(spec);
        try {
            if (parts[0] == "builtin" && parts.size() == 2)
                return builtin(parts[1]);
            if ((parts[0] == "sic" || parts[0] == "mub") && parts.size() == 3) {
                const int d = std::stoi(parts[1]);
                const EnsembleKind kind = ensemble_kind_from_string(parts[2]);
                return parts[0] == "sic" ? make_sic(d, kind) : make_mub(d, kind);
            }
        } catch (const std::invalid_argument& ex) {
            throw ParseError(std::string("bad ensemble specifier '") + spec +
                             "': " + ex.what());
        }
        throw ParseError("bad ensemble specifier '" + spec + "'");
    }
    if (std::filesystem::exists(spec)) return read_ensemble(spec);
    try {
        return builtin(spec);
    } catch (const std::invalid_argument&) {
        throw ParseError("no such file or builtin ensemble: " + spec);
    }
}

Eigen::MatrixXd read_cloud_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        for (auto& ch : line)
            if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
        std::stringstream ss(line);
        std::vector<double> row;
        double v;
        while (ss >> v) row.push_back(v);
        std::string trailing;
        if (ss.clear(), ss >> trailing; !trailing.empty())
            throw ParseError("non-numeric value in cloud file " + path);
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("inconsistent column count in cloud file " + path);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("cloud file " + path + " has no data");
    Eigen::MatrixXd pts(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.front().size(); ++j) pts(i, j) = rows[i][j];
    if (!pts.allFinite()) throw ParseError("non-finite value in cloud file " + path);
    return pts;
}

void write_cloud_points(const std::string& path, const Eigen::MatrixXd& points,
                        const std::string& header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.precision(17);
    if (!header.empty()) out << "# " << header << "\n";
    for (int i = 0; i < points.rows(); ++i) {
        for (int j = 0; j < points.cols(); ++j) {
            if (j) out << " ";
            out << points(i, j);
        }
        out << "\n";
    }
}

Eigen::VectorXd parse_vector(const std::string& text) {
    std::string cleaned = text;
    for (auto& ch : cleaned)
        if (ch == ',' || ch == ';') ch = ' ';
    std::stringstream ss(cleaned);
    std::vector<double> vals;
    double v;
    while (ss >> v) vals.push_back(v);
    std::string trailing;
    if (ss.clear(), ss >> trailing; !trailing.empty())
        throw ParseError("non-numeric value in vector '" + text + "'");
    if (vals.empty()) throw ParseError("empty vector '" + text + "'");
    Eigen::VectorXd out(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) out(i) = vals[i];
    return out;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
    json row = json::array();
    for (int i = 0; i < v.size(); ++i) row.push_back(v(i));
    return row;
}

json operator_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const ValidationReport& rep) {
    return json{{"valid", rep.valid},
                {"informationally_complete", rep.informationally_complete},
                {"centered_rank", rep.centered_rank},
                {"min_eigenvalues", rep.min_eigenvalues},
                {"hermiticity_residuals", rep.hermiticity_residuals},
                {"completeness_residual", rep.completeness_residual},
                {"trace_residuals", rep.trace_residuals},
                {"problems", rep.problems}};
}

json to_json(const MembershipReport& rep) {
    json j{{"form_value", rep.form_value},
           {"range_residual", rep.range_residual},
           {"threshold_sq", rep.threshold_sq},
           {"verdict", to_string(rep.verdict)}};
    if (!std::isnan(rep.kappa_star)) j["kappa_star"] = rep.kappa_star;
    return j;
}

json to_json(const VerificationStats& stats) {
    json j{{"samples", stats.samples},
           {"seed", stats.seed},
           {"violations", stats.violations},
           {"skipped", stats.skipped}};
    if (!stats.note.empty()) j["note"] = stats.note;
    const auto put = [&](const char* key, double v) {
        if (!std::isnan(v)) j[key] = v;
    };
    put("max_form_pure", stats.max_form_pure);
    put("min_form_pure", stats.min_form_pure);
    if (stats.samples) j["mean_form_pure"] = stats.mean_form_pure;
    put("max_form_mixed", stats.max_form_mixed);
    put("min_form_mixed", stats.min_form_mixed);
    if (stats.samples) j["mean_form_mixed"] = stats.mean_form_mixed;
    put("min_reconstruction_eigenvalue", stats.min_reconstruction_eigenvalue);
    j["max_forward_residual"] = stats.max_forward_residual;
    j["max_trace_residual"] = stats.max_trace_residual;
    j["max_slice_form_error"] = stats.max_slice_form_error;
    return j;
}

json to_json(const ContainmentCertificate& cert) {
    json witnesses = json::array();
    for (const auto& w : cert.witnesses)
        witnesses.push_back(json{{"direction", vector_to_json(w.direction)},
                                 {"hull_support", w.hull_support},
                                 {"body_support", w.body_support},
                                 {"margin", w.margin}});
    return json{{"verdict", to_string(cert.verdict)},
                {"method", cert.method},
                {"slack", cert.slack},
                {"witnesses", std::move(witnesses)},
                {"conclusion", cert.conclusion}};
}

json to_json(const EllipsoidApprox& a) {
    return json{{"n", a.n},
                {"dim", a.dim},
                {"r", a.r},
                {"center", vector_to_json(a.center)},
                {"covariance", matrix_to_json(a.covariance)},
                {"rank", a.pinv.rank},
                {"informationally_complete", a.informationally_complete}};
}

json to_json(const DConeApprox& c) {
    return json{{"n", c.n},
                {"dim", c.dim},
                {"r", c.r},
                {"shape", matrix_to_json(c.shape)},
                {"slice_coefficients", c.slice_coeff},
                {"rank", c.pinv.rank},
                {"informationally_complete", c.informationally_complete}};
}

}  // namespace qregion
