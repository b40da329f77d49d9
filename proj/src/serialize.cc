// Copyright 2026 The spectrakit Authors
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

#include "spectrakit/serialize.h"

#include <charconv>
#include <cmath>
#include <ostream>

#include "spectrakit/errors.h"

namespace spectrakit {

Json to_json(const Partition &p) {
    return Json(p.rows());
}

Partition partition_from_json(const Json &j) {
    if (!j.is_array()) {
        throw DomainError("partition must be a JSON array of integers");
    }
    std::vector<int> rows;
    for (const auto &x : j) {
        if (!x.is_number_integer()) {
            throw DomainError("partition must be a JSON array of integers");
        }
        rows.push_back(x.get<int>());
    }
    return Partition(std::move(rows));
}

Json to_json(const Tableau &t) {
    return Json(t.rows);
}

Json matrix_to_json(const Matrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json re_row = Json::array();
        Json im_row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("re") || !j["re"].is_array()) {
        throw DomainError("matrix needs an \"re\" array of rows");
    }
    const Json &re = j["re"];
    bool has_im = j.contains("im");
    const Json im = has_im ? j["im"] : Json::array();
    Eigen::Index rows = static_cast<Eigen::Index>(re.size());
    Eigen::Index cols = rows > 0 ? static_cast<Eigen::Index>(re[0].size()) : 0;
    if (has_im && im.size() != re.size()) {
        throw DomainError("\"re\" and \"im\" have different shapes");
    }
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (!re[i].is_array() || static_cast<Eigen::Index>(re[i].size()) != cols ||
            (has_im && (!im[i].is_array() || im[i].size() != re[i].size()))) {
            throw DomainError("matrix rows must all have the same length");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            if (!re[i][k].is_number() || (has_im && !im[i][k].is_number())) {
                throw DomainError("matrix entries must be numbers");
            }
            double im_part = has_im ? im[i][k].get<double>() : 0.0;
            m(i, k) = Complex(re[i][k].get<double>(), im_part);
        }
    }
    return m;
}

Json to_json(const DensityMatrix &rho) {
    Json j = matrix_to_json(rho.matrix());
    return Json{{"dims", rho.dims()}, {"re", std::move(j["re"])}, {"im", std::move(j["im"])}};
}

DensityMatrix density_from_json(const Json &j) {
    Matrix m = matrix_from_json(j);
    std::vector<int> dims;
    if (j.contains("dims")) {
        if (!j["dims"].is_array()) {
            throw DomainError("\"dims\" must be an array of integers");
        }
        for (const auto &d : j["dims"]) {
            if (!d.is_number_integer()) {
                throw DomainError("\"dims\" must be an array of integers");
            }
            dims.push_back(d.get<int>());
        }
    } else {
        dims.push_back(static_cast<int>(m.rows()));
    }
    return DensityMatrix(std::move(dims), std::move(m));
}

Json to_json(const CharacterTable &table) {
    Json out = Json::array();
    for (std::size_t i = 0; i < table.irreps().size(); ++i) {
        for (std::size_t c = 0; c < table.classes().size(); ++c) {
            out.push_back(Json{{"lambda", to_json(table.irreps()[i])},
                               {"class", to_json(table.classes()[c].cycle_type)},
                               {"chi", table.value(i, c)}});
        }
    }
    return out;
}

Json frames_to_json(const SpectrumDistribution &dist) {
    Json out = Json::array();
    for (const auto &f : dist.frames) {
        out.push_back(Json{{"frame", to_json(f.frame)}, {"prob", f.prob}});
    }
    return out;
}

Json summary_to_json(const SpectrumDistribution &dist) {
    const FrameProbability *mode = nullptr;
    for (const auto &f : dist.frames) {
        if (!mode || f.prob > mode->prob) {
            mode = &f;
        }
    }
    return Json{{"k", dist.k},
                {"spectrum", dist.spectrum},
                {"eps", dist.eps},
                {"metric", dist.metric == BallMetric::TotalVariation ? "tv" : "l1"},
                {"total", dist.total},
                {"mass_within", dist.mass_within},
                {"mode", mode ? to_json(mode->frame) : Json::array()}};
}

Json to_json(const BravyiReport &report) {
    return Json{{"a", report.a},
                {"b", report.b},
                {"rab", report.r},
                {"slack", report.slack},
                {"admissible", report.admissible}};
}

Json to_json(const HornResult &result) {
    return Json{{"residual", result.residual},
                {"achieved", result.achieved},
                {"restarts", result.restarts},
                {"a", matrix_to_json(result.a)},
                {"b", matrix_to_json(result.b)}};
}

Json to_json(const MeasureReport &report) {
    return Json{{"value", report.value},
                {"kind", to_string(report.kind)},
                {"witness_digest", report.witness_digest()}};
}

void write_scan_csv(std::ostream &out, const std::vector<ScanCell> &cells) {
    out << "mu1,mu2,nu1,nu2,g,admissible\n";
    for (const auto &c : cells) {
        out << c.mu[0] << ',' << c.mu[1] << ',' << c.nu[0] << ',' << c.nu[1] << ',' << c.g << ','
            << (c.admissible ? 1 : 0) << '\n';
    }
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

}  // namespace spectrakit
