#pragma once

#include "petcheck/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace petcheck {

/// A named fixture whose data file could not be found or failed validation.
class FixtureUnavailable : public GraphError {
public:
    using GraphError::GraphError;
};

MultiGraph petersen_graph();
/// Petersen as the Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
MultiGraph kneser_petersen_graph();
MultiGraph heawood_graph();
MultiGraph dodecahedron_graph();
/// Dodecahedron with an induced six-edge matching subdivided and the
/// subdivision vertices joined to a new hub. The matching is the
/// lexicographically first one meeting every face exactly once.
MultiGraph dodeca_apex_graph();
MultiGraph complete_graph(std::size_t n);
MultiGraph complete_bipartite_graph(std::size_t a, std::size_t b);
MultiGraph cycle_graph(std::size_t n);
/// Circular ladder on 2k vertices (k = 3 is the triangular prism).
MultiGraph prism_graph(std::size_t k);
MultiGraph cube_graph();

/// Directory holding bundled data: $PETCHECK_DATA_DIR or the build-time default.
std::string data_dir();

/// Cubic, girth 5, three pairwise vertex-disjoint pentagons.
bool starfish_shape_ok(const MultiGraph& g);
/// Loads data/fixtures/starfish.adj; throws FixtureUnavailable when absent or invalid.
MultiGraph starfish_graph();

const std::vector<std::string>& fixture_names();
/// One of fixture_names(); throws GraphError for unknown names.
MultiGraph fixture(std::string_view name);

}  // namespace petcheck
