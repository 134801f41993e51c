#pragma once

#include "petcheck/circuits.hpp"
#include "petcheck/containment.hpp"
#include "petcheck/cuts.hpp"
#include "petcheck/graph.hpp"
#include "petcheck/planarity.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace petcheck {

struct ThetaClassification {
    std::optional<VertexId> apex;
    std::optional<DoublecrossWitness> doublecross;
    bool doublecross_decided = true;
    bool starfish_iso = false;
    bool starfish_available = false;
    ContainmentResult petersen;
    /// Petersen-free iff (apex or doublecross or Starfish); nullopt when an
    /// ingredient is undecided.
    std::optional<bool> consistent;
};

/// Requires is_theta_connected(g); throws GraphError otherwise.
ThetaClassification classify_theta_connected(const MultiGraph& g, const SearchOptions& options = {});

struct ShoreReplacement {
    MultiGraph graph;                 // G|X plus the new circuit, attached by a matching
    std::vector<VertexId> new_circuit;  // w_1..w_k
    Circuit breaker;
    SubdivisionWitness witness;  // graph inside the original host
};

/// Replaces the far side of a shore by a k-circuit, k = |δ(X)|, routed
/// through k disjoint paths to a circuit of length >= k on the far side.
/// Throws GraphError when the shore is invalid or the paths do not exist.
ShoreReplacement build_shore_replacement(const MultiGraph& g, const Shore& shore);

struct Girth4Contraction {
    MultiGraph graph;
    EdgeId e3 = kNoEdge;
    /// g cubic, interesting, and c its only short circuit.
    bool hypotheses = false;
    bool girth_at_least_five = false;
    bool pentagons_touch_e3 = false;
};

/// With c = u1 u2 u3 u4 (c.vertices in order, c.edges[i] joining u_i and
/// u_{i+1}), deletes e1 and contracts e2 and e4. Throws GraphError when c is
/// not a quadrilateral of g.
Girth4Contraction girth4_contraction(const MultiGraph& g, const Circuit& c);

/// Partners of b1, b2, c1, c2 among {q1, q2, r1, r2}, as indices 0..3 into that list.
using Figure2Variant = std::array<int, 4>;

struct Figure2Build {
    MultiGraph g;  // 16 vertices: blocks a b_i c_i d and p q_i r_i s joined by a matching
    Circuit quadrilateral;
    Girth4Contraction h;
};

/// All 24 assignments, consistent or not, in lexicographic order.
std::vector<Figure2Variant> figure2_assignments();
/// Assignments for which b3 q3 r3 c3 is the only short circuit of the built graph.
std::vector<Figure2Variant> figure2_variants();
/// Throws GraphError for an inconsistent variant.
Figure2Build build_figure2(const Figure2Variant& variant);
/// The contracted graph of the first consistent variant.
MultiGraph figure2_graph();

enum class ReductionKind {
    delete_reduce,
    shore_replace,
    girth4_case,
};

const char* reduction_kind_name(ReductionKind k);

struct ReductionStep {
    ReductionKind kind = ReductionKind::delete_reduce;
    MultiGraph input;
    MultiGraph output;
    SubdivisionWitness witness;  // output inside input
    std::optional<Circuit> breaker;
};

enum class PipelineOutcome {
    reduced,
    petersen_witness,
    theta_terminal,
    stuck,
};

const char* pipeline_outcome_name(PipelineOutcome o);

struct PipelineResult {
    PipelineOutcome outcome = PipelineOutcome::stuck;
    std::optional<ReductionStep> step;
    ContainmentResult petersen;
    std::optional<ThetaClassification> theta;
    std::string note;
};

/// One step of the induction. Requires is_interesting(g).
PipelineResult reduction_pipeline(const MultiGraph& g, const SearchOptions& options = {});

/// Checks a reduction step: output interesting, smaller, and witnessed inside the input.
bool step_is_sound(const ReductionStep& s, std::string* reason = nullptr);

}  // namespace petcheck
