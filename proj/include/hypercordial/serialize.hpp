#pragma once

#include <json.hpp>

#include "hypercordial/explore.hpp"
#include "hypercordial/hypertree.hpp"
#include "hypercordial/labeling.hpp"

namespace hypercordial {

// {"k":..,"labels":[..],"edge_labels":[..],"vertex_hist":[..],
//  "edge_hist":[..],"k_friendly":..,"k_cordial":..}
nlohmann::ordered_json labeling_json(const Hypertree& tree,
                                     const VertexLabeling& labeling);

nlohmann::ordered_json report_json(const ExploreReport& report);

}  // namespace hypercordial
