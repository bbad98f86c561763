#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "finc/graph.hpp"
#include "finc/incidence.hpp"
#include "finc/sumproduct.hpp"

namespace finc {

using json = nlohmann::ordered_json;

// Rationals are emitted both as an exact "num/den" string and as a float
// rendering so downstream tools can re-verify without rounding.
json rational_json(std::int64_t num, std::int64_t den);

json to_json(const BoundCertificate& c);
json to_json(const SpectralCertificate& c);
json to_json(const RegimeCertificate& c);
json to_json(const SumProductReport& r);

std::string sweep_csv_header();
std::string sweep_csv_row(const SumProductReport& r);

}  // namespace finc
