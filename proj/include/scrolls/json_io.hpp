#pragma once

#include <json.hpp>

#include "scrolls/generators.hpp"
#include "scrolls/groebner.hpp"
#include "scrolls/points.hpp"
#include "scrolls/report.hpp"

namespace scrolls {

using ordered_json = nlohmann::ordered_json;

ordered_json gens_to_json(const GeneratorSet& gens);
ordered_json gb_to_json(const GroebnerBasis& gb);
ordered_json points_to_json(const PointSet& ps);
/// `with_millis` is off for byte-reproducible output.
ordered_json report_to_json(const Report& report, bool with_millis = true);

}  // namespace scrolls
