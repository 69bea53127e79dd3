#pragma once

#include <json.hpp>

#include "krulldim/formulas.hpp"
#include "krulldim/spectrum.hpp"
#include "krulldim/suites.hpp"

namespace krulldim {

// Field order is part of the output contract; ordered_json keeps insertion
// order so the serialized bytes are stable.
using Json = nlohmann::ordered_json;

Json to_json(const DimReport& report);
Json to_json(const SpectrumSummary& summary);
Json to_json(const CheckReport& report);
Json to_json(const HeightReport& report);

}  // namespace krulldim
