#pragma once

#include "petcheck/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace petcheck {

/// Vertex bijection from g to h preserving edge multiplicities (loops
/// included), indexed by vertex id of g. `forced` pairs (g vertex, h vertex)
/// must be respected. Colour refinement followed by backtracking.
std::optional<std::vector<VertexId>> find_isomorphism(const MultiGraph& g, const MultiGraph& h,
                                                      const std::vector<std::pair<VertexId, VertexId>>& forced = {});

bool is_isomorphic(const MultiGraph& g, const MultiGraph& h);

/// Vertices of g that some automorphism maps v to.
std::vector<VertexId> vertex_orbit(const MultiGraph& g, VertexId v);

/// True when every permutation of the (distinct, simple) neighbours of v is
/// induced by an automorphism fixing v.
bool neighbourhood_fully_symmetric(const MultiGraph& g, VertexId v);

}  // namespace petcheck
