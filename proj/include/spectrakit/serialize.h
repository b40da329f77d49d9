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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectrakit/characters.h"
#include "spectrakit/entanglement.h"
#include "spectrakit/partition.h"
#include "spectrakit/qstate.h"
#include "spectrakit/schurweyl.h"
#include "spectrakit/spectra.h"

namespace spectrakit {

using Json = nlohmann::ordered_json;

Json to_json(const Partition &p);
Partition partition_from_json(const Json &j);

Json to_json(const Tableau &t);

/// {"dims": [...], "re": [[...]], "im": [[...]]}.
Json to_json(const DensityMatrix &rho);
/// Validates the result as a density matrix.
DensityMatrix density_from_json(const Json &j);
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

/// [{"lambda": [...], "class": [...], "chi": int}, ...].
Json to_json(const CharacterTable &table);

/// [{"frame": [...], "prob": x}, ...].
Json frames_to_json(const SpectrumDistribution &dist);
Json summary_to_json(const SpectrumDistribution &dist);

Json to_json(const BravyiReport &report);
Json to_json(const HornResult &result);
Json to_json(const MeasureReport &report);

/// Header mu1,mu2,nu1,nu2,g,admissible, one row per cell.
void write_scan_csv(std::ostream &out, const std::vector<ScanCell> &cells);

/// Shortest text that reads back to the same double.
std::string format_double(double x);

}  // namespace spectrakit
