#pragma once

#include <json.hpp>

#include "gqd/analysis.hpp"
#include "gqd/classify.hpp"
#include "gqd/dessin.hpp"
#include "gqd/genus.hpp"

namespace gqd {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const GeneratingVector& v);
Json to_json(const GenusRecord& r);
Json to_json(const Classification& c);
Json to_json(const JacobianLedger& l);
Json to_json(const FixedPointReport& r, const Group& G);
Json to_json(const QuotientOrbifold& q);

}  // namespace gqd
