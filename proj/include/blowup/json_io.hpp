#ifndef BLOWUP_JSON_IO_HPP
#define BLOWUP_JSON_IO_HPP

#include <json.hpp>

#include "blowup/resolve.hpp"

namespace blowup {

using Json = nlohmann::ordered_json;

Json ring_to_json(const PolyRing& ring);
RingPtr ring_from_json(const Json& j);

Json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const Json& j, const RingPtr& ring);

Json step_to_json(const BlowupStep& step);
Json tree_to_json(const ChartTree& tree);
ChartTree tree_from_json(const Json& j);

Json snc_verdict_to_json(const SncVerdict& v);
Json smoothness_to_json(const SmoothnessVerdict& v);
Json principalization_to_json(const PrincipalizationResult& r);
Json strnorm_to_json(const SncNormalizationResult& r);

Json trace_to_json(const ResolutionTrace& trace);
ResolutionTrace trace_from_json(const Json& j);

/// One line per step: depth, chart path, center generators, mu before/after.
std::string trace_summary(const ResolutionTrace& trace);

} // namespace blowup

#endif
