#include "petcheck/reduction.hpp"

#include "petcheck/fixtures.hpp"
#include "petcheck/flow.hpp"

#include <algorithm>
#include <map>

namespace petcheck {

namespace {

// Rebuilds the vertex sequence of an edge trace starting at `from`.
HostPath walk_trace(const MultiGraph& g, VertexId from, VertexId to, const std::vector<EdgeId>& trace)
{
    auto walk = [&](VertexId start) {
        HostPath p;
        p.vertices.push_back(start);
        VertexId at = start;
        for (EdgeId e : trace) {
            const Edge& ed = g.edge(e);
            if (!ed.has_end(at))
                return std::optional<HostPath>{};
            at = ed.other(at);
            p.vertices.push_back(at);
            p.edges.push_back(e);
        }
        return std::optional<HostPath>(std::move(p));
    };
    if (auto p = walk(from); p && p->vertices.back() == to)
        return *p;
    if (auto p = walk(to); p && p->vertices.back() == from) {
        std::reverse(p->vertices.begin(), p->vertices.end());
        std::reverse(p->edges.begin(), p->edges.end());
        return *p;
    }
    throw GraphError("edge trace does not form a path");
}

SubdivisionWitness trace_witness(const MultiGraph& g, const ReducedGraph& r)
{
    SubdivisionWitness w;
    w.branch_map.assign(r.graph.vertex_bound(), kNoVertex);
    for (VertexId v : r.graph.vertices())
        w.branch_map[v] = v;
    w.path_map.resize(r.graph.edge_bound());
    for (EdgeId e : r.graph.edges()) {
        const Edge& ed = r.graph.edge(e);
        w.path_map[e] = walk_trace(g, ed.u, ed.v, r.trace[e]);
    }
    return w;
}

}  // namespace

ThetaClassification classify_theta_connected(const MultiGraph& g, const SearchOptions& options)
{
    if (!is_theta_connected(g))
        throw GraphError("classify_theta_connected: graph is not theta-connected");
    ThetaClassification r;
    r.apex = is_apex(g);
    try {
        r.doublecross = is_doublecross(g);
    } catch (const BoundExceeded&) {
        r.doublecross_decided = false;
    }
    try {
        MultiGraph star = starfish_graph();
        r.starfish_available = true;
        r.starfish_iso = is_isomorphic(g, star);
    } catch (const FixtureUnavailable&) {
        r.starfish_available = false;
    }
    r.petersen = contains_petersen(g, options);
    if (r.petersen.outcome != SearchOutcome::unknown && r.doublecross_decided) {
        bool petersen_free = r.petersen.outcome == SearchOutcome::none;
        bool excused = r.apex.has_value() || r.doublecross.has_value() || r.starfish_iso;
        r.consistent = petersen_free == excused;
    }
    return r;
}

ShoreReplacement build_shore_replacement(const MultiGraph& g, const Shore& shore)
{
    const std::vector<VertexId>& xs = shore.cut.side;
    if (!is_shore(g, xs))
        throw GraphError("build_shore_replacement: not a shore");
    Cut cut = edge_cut(g, xs);
    const std::size_t k = cut.boundary.size();

    std::vector<char> in_x(g.vertex_bound(), 0);
    for (VertexId v : xs)
        in_x[v] = 1;
    std::vector<VertexId> inner, outer;
    for (EdgeId e : cut.boundary) {
        const Edge& ed = g.edge(e);
        inner.push_back(in_x[ed.u] ? ed.u : ed.v);
        outer.push_back(in_x[ed.u] ? ed.v : ed.u);
    }
    {
        std::vector<VertexId> sorted = outer;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw GraphError("build_shore_replacement: boundary is not a matching on the far side");
    }

    std::vector<VertexId> rest;
    for (VertexId v : g.vertices())
        if (!in_x[v])
            rest.push_back(v);
    MultiGraph far = induced(g, rest);

    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < rest.size(); ++i)
        index[rest[i]] = i;

    // Disjoint paths from the outer boundary ends to a circuit, via unit vertex capacities.
    auto route = [&](const Circuit& c) -> std::optional<std::vector<HostPath>> {
        std::size_t n = rest.size();
        FlowNetwork net(2 * n + 2);
        std::size_t source = 2 * n, sink = 2 * n + 1;
        std::vector<std::vector<std::pair<std::size_t, EdgeId>>> out_arcs(n);  // arc, host edge
        std::vector<std::size_t> sink_arc(n, static_cast<std::size_t>(-1));
        for (std::size_t i = 0; i < n; ++i)
            net.add_arc(2 * i, 2 * i + 1, 1);
        for (EdgeId e : far.edges()) {
            const Edge& ed = far.edge(e);
            if (ed.is_loop())
                continue;
            std::size_t a = index[ed.u], b = index[ed.v];
            out_arcs[a].emplace_back(net.add_arc(2 * a + 1, 2 * b, 1), e);
            out_arcs[b].emplace_back(net.add_arc(2 * b + 1, 2 * a, 1), e);
        }
        for (VertexId t : outer)
            net.add_arc(source, 2 * index[t], 1);
        std::vector<char> on_c(n, 0);
        for (VertexId v : c.vertices) {
            on_c[index[v]] = 1;
            sink_arc[index[v]] = net.add_arc(2 * index[v] + 1, sink, 1);
        }
        if (net.max_flow(source, sink) != static_cast<std::int64_t>(k))
            return std::nullopt;
        std::vector<HostPath> paths;
        for (VertexId t : outer) {
            HostPath p;
            std::size_t at = index[t];
            p.vertices.push_back(t);
            while (!on_c[at]) {
                bool moved = false;
                for (auto [arc, e] : out_arcs[at])
                    if (net.flow_on(arc) > 0) {
                        at = net.arc_head(arc) / 2;
                        p.vertices.push_back(rest[at]);
                        p.edges.push_back(e);
                        moved = true;
                        break;
                    }
                if (!moved)
                    throw GraphError("build_shore_replacement: broken flow path");
            }
            paths.push_back(std::move(p));
        }
        return paths;
    };

    std::optional<Circuit> far_circuit;
    std::vector<HostPath> paths;
    for (std::size_t len = std::max<std::size_t>(k, 1); len <= far.order() && !far_circuit; ++len) {
        for (const Circuit& c : circuits_up_to(far, len)) {
            if (c.length() != len)
                continue;
            if (auto routed = route(c)) {
                far_circuit = c;
                paths = std::move(*routed);
                break;
            }
        }
    }
    if (!far_circuit)
        throw GraphError("build_shore_replacement: no circuit with " + std::to_string(k) +
                         " disjoint paths beyond the shore");

    const Circuit& cp = *far_circuit;
    std::vector<std::size_t> order(k);
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) {
        order[i] = i;
        pos[i] = static_cast<std::size_t>(
            std::find(cp.vertices.begin(), cp.vertices.end(), paths[i].vertices.back()) - cp.vertices.begin());
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });

    ShoreReplacement out;
    MultiGraph h = induced(g, xs);
    std::vector<VertexId> ws(k);
    for (std::size_t i = 0; i < k; ++i)
        ws[i] = h.add_vertex();
    std::vector<EdgeId> ring(k), spokes(k);
    for (std::size_t i = 0; i < k; ++i)
        ring[i] = h.add_edge(ws[i], ws[(i + 1) % k]);
    for (std::size_t i = 0; i < k; ++i)
        spokes[i] = h.add_edge(inner[order[i]], ws[i]);

    SubdivisionWitness w;
    w.branch_map.assign(h.vertex_bound(), kNoVertex);
    w.path_map.resize(h.edge_bound());
    for (VertexId v : xs)
        w.branch_map[v] = v;
    for (std::size_t i = 0; i < k; ++i)
        w.branch_map[ws[i]] = paths[order[i]].vertices.back();
    for (EdgeId e : h.edges()) {
        if (std::find(ring.begin(), ring.end(), e) != ring.end() ||
            std::find(spokes.begin(), spokes.end(), e) != spokes.end())
            continue;
        const Edge& ed = h.edge(e);
        w.path_map[e] = HostPath{{ed.u, ed.v}, {e}};
    }
    const std::size_t len = cp.length();
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t a = pos[order[i]];
        std::size_t b = pos[order[(i + 1) % k]];
        std::size_t steps = (b + len - a) % len;
        if (steps == 0)
            steps = len;
        HostPath seg;
        seg.vertices.push_back(cp.vertices[a]);
        for (std::size_t s = 0; s < steps; ++s) {
            seg.edges.push_back(cp.edges[(a + s) % len]);
            seg.vertices.push_back(cp.vertices[(a + s + 1) % len]);
        }
        w.path_map[ring[i]] = std::move(seg);

        const HostPath& p = paths[order[i]];
        HostPath spoke;
        spoke.vertices.push_back(inner[order[i]]);
        spoke.edges.push_back(cut.boundary[order[i]]);
        spoke.vertices.insert(spoke.vertices.end(), p.vertices.begin(), p.vertices.end());
        spoke.edges.insert(spoke.edges.end(), p.edges.begin(), p.edges.end());
        w.path_map[spokes[i]] = std::move(spoke);
    }

    out.breaker = canonical_circuit(ws, ring);
    out.new_circuit = ws;
    out.graph = std::move(h);
    out.witness = std::move(w);
    return out;
}

Girth4Contraction girth4_contraction(const MultiGraph& g, const Circuit& c)
{
    if (c.length() != 4 || c.vertices.size() != 4 || !is_valid_circuit(g, c))
        throw GraphError("girth4_contraction: not a quadrilateral of the graph");
    for (std::size_t i = 0; i < 4; ++i) {
        const Edge& ed = g.edge(c.edges[i]);
        VertexId a = c.vertices[i], b = c.vertices[(i + 1) % 4];
        if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
            throw GraphError("girth4_contraction: edges do not follow the vertex order");
    }
    Girth4Contraction r;
    r.e3 = c.edges[2];
    MultiGraph h = delete_edge(g, c.edges[0]);
    h = contract_edge(h, c.edges[1]);
    h = contract_edge(h, c.edges[3]);
    r.graph = std::move(h);

    if (is_cubic(g) && is_interesting(g)) {
        std::vector<Circuit> sc = short_circuits(g);
        r.hypotheses = sc.size() == 1 && sc.front().edge_set() == c.edge_set();
    }
    auto gh = girth(r.graph);
    r.girth_at_least_five = !gh || *gh >= 5;
    const Edge& e3 = r.graph.edge(r.e3);
    r.pentagons_touch_e3 = true;
    for (const Circuit& p : pentagons(r.graph))
        if (!p.contains_vertex(e3.u) && !p.contains_vertex(e3.v))
            r.pentagons_touch_e3 = false;
    return r;
}

namespace {

// a=0, b1..b3=1..3, c1..c3=4..6, d=7, p=8, q1..q3=9..11, r1..r3=12..14, s=15.
constexpr VertexId kA = 0, kD = 7, kP = 8, kS = 15;
VertexId fb(int i) { return static_cast<VertexId>(1 + i); }
VertexId fc(int i) { return static_cast<VertexId>(4 + i); }
VertexId fq(int i) { return static_cast<VertexId>(9 + i); }
VertexId fr(int i) { return static_cast<VertexId>(12 + i); }

struct Figure2Raw {
    MultiGraph g;
    Circuit quad;
};

Figure2Raw figure2_raw(const Figure2Variant& v)
{
    std::array<int, 4> seen{};
    for (int x : v) {
        if (x < 0 || x > 3 || seen[static_cast<std::size_t>(x)]++)
            throw GraphError("build_figure2: variant is not a bijection onto {q1,q2,r1,r2}");
    }
    MultiGraph g(16, "figure2_G");
    for (int i = 0; i < 3; ++i) {
        g.add_edge(kA, fb(i));
        g.add_edge(fb(i), fc(i));
        g.add_edge(fc(i), kD);
        g.add_edge(kP, fq(i));
        g.add_edge(fq(i), fr(i));
        g.add_edge(fr(i), kS);
    }
    EdgeId b3q3 = g.add_edge(fb(2), fq(2));
    EdgeId c3r3 = g.add_edge(fc(2), fr(2));
    const std::array<VertexId, 4> targets{fq(0), fq(1), fr(0), fr(1)};
    const std::array<VertexId, 4> sources{fb(0), fb(1), fc(0), fc(1)};
    for (std::size_t i = 0; i < 4; ++i)
        g.add_edge(sources[i], targets[static_cast<std::size_t>(v[i])]);

    auto between = [&](VertexId x, VertexId y) {
        for (EdgeId e : g.incident(x))
            if (g.edge(e).other(x) == y)
                return e;
        return kNoEdge;
    };
    Circuit quad;
    quad.vertices = {fb(2), fq(2), fr(2), fc(2)};
    quad.edges = {b3q3, between(fq(2), fr(2)), c3r3, between(fc(2), fb(2))};
    return {std::move(g), std::move(quad)};
}

bool figure2_consistent(const Figure2Raw& raw)
{
    if (!is_cubic(raw.g) || raw.g.order() != 16)
        return false;
    std::vector<Circuit> sc = short_circuits(raw.g);
    return sc.size() == 1 && sc.front().edge_set() == raw.quad.edge_set();
}

}  // namespace

std::vector<Figure2Variant> figure2_assignments()
{
    std::vector<Figure2Variant> out;
    Figure2Variant v{0, 1, 2, 3};
    do
        out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Figure2Variant> figure2_variants()
{
    std::vector<Figure2Variant> out;
    for (const Figure2Variant& v : figure2_assignments())
        if (figure2_consistent(figure2_raw(v)))
            out.push_back(v);
    return out;
}

Figure2Build build_figure2(const Figure2Variant& variant)
{
    Figure2Raw raw = figure2_raw(variant);
    if (!figure2_consistent(raw))
        throw GraphError("build_figure2: variant leaves a short circuit other than b3 q3 r3 c3");
    Figure2Build b;
    b.h = girth4_contraction(raw.g, raw.quad);
    b.g = std::move(raw.g);
    b.quadrilateral = std::move(raw.quad);
    return b;
}

MultiGraph figure2_graph()
{
    std::vector<Figure2Variant> vs = figure2_variants();
    if (vs.empty())
        throw GraphError("figure2: no consistent variant");
    MultiGraph h = compacted(build_figure2(vs.front()).h.graph);
    h.set_name("figure2");
    return h;
}

const char* reduction_kind_name(ReductionKind k)
{
    switch (k) {
    case ReductionKind::delete_reduce:
        return "delete_reduce";
    case ReductionKind::shore_replace:
        return "shore_replace";
    case ReductionKind::girth4_case:
        return "girth4_case";
    }
    return "?";
}

const char* pipeline_outcome_name(PipelineOutcome o)
{
    switch (o) {
    case PipelineOutcome::reduced:
        return "reduced";
    case PipelineOutcome::petersen_witness:
        return "petersen_witness";
    case PipelineOutcome::theta_terminal:
        return "theta_terminal";
    case PipelineOutcome::stuck:
        return "stuck";
    }
    return "?";
}

PipelineResult reduction_pipeline(const MultiGraph& g, const SearchOptions& options)
{
    if (!is_interesting(g))
        throw GraphError("reduction_pipeline: graph is not interesting");
    PipelineResult result;
    std::vector<Circuit> shorts = short_circuits(g);
    std::vector<Circuit> breakers = find_breakers(g);
    std::optional<std::size_t> gg = girth(g);

    auto reduced_by_delete = [&](EdgeId e, ReductionKind kind, const std::optional<Circuit>& breaker) {
        ReducedGraph r = reduce_delete_traced(g, e);
        if (r.graph.order() >= g.order() || !is_interesting(r.graph))
            return false;
        ReductionStep s;
        s.kind = kind;
        s.input = g;
        s.witness = trace_witness(g, r);
        s.output = std::move(r.graph);
        s.breaker = breaker;
        result.outcome = PipelineOutcome::reduced;
        result.step = std::move(s);
        return true;
    };

    if (gg && *gg < 4) {
        for (const Circuit& c : shorts) {
            if (c.length() > 3)
                continue;
            for (const Circuit& b : breakers)
                for (EdgeId e : c.edges)
                    if (b.contains_edge(e) && reduced_by_delete(e, ReductionKind::delete_reduce, std::nullopt))
                        return result;
        }
    }

    std::optional<Shore> shore = breakers.empty() ? find_shore(g) : push_shore(g, breakers.front());
    if (shore) {
        try {
            ShoreReplacement rep = build_shore_replacement(g, *shore);
            if (rep.graph.order() < g.order() && is_interesting(rep.graph)) {
                ReductionStep s;
                s.kind = ReductionKind::shore_replace;
                s.input = g;
                s.output = std::move(rep.graph);
                s.witness = std::move(rep.witness);
                s.breaker = std::move(rep.breaker);
                result.outcome = PipelineOutcome::reduced;
                result.step = std::move(s);
                return result;
            }
            result.note = "shore replacement did not yield a smaller interesting graph";
        } catch (const GraphError& err) {
            result.note = err.what();
        }
    }

    if (gg == std::optional<std::size_t>(4) && shorts.size() == 1) {
        if (reduced_by_delete(shorts.front().edges.front(), ReductionKind::girth4_case, std::nullopt))
            return result;
    }

    if (is_theta_connected(g)) {
        result.theta = classify_theta_connected(g, options);
        result.petersen = result.theta->petersen;
        result.outcome = PipelineOutcome::theta_terminal;
        return result;
    }
    result.petersen = contains_petersen(g, options);
    result.outcome = result.petersen.outcome == SearchOutcome::found ? PipelineOutcome::petersen_witness
                                                                     : PipelineOutcome::stuck;
    return result;
}

bool step_is_sound(const ReductionStep& s, std::string* reason)
{
    auto fail = [&](const char* why) {
        if (reason)
            *reason = why;
        return false;
    };
    if (!is_interesting(s.output))
        return fail("output is not interesting");
    if (s.output.order() >= s.input.order())
        return fail("output is not smaller");
    std::string why;
    if (!validate_witness(s.input, s.output, s.witness, &why)) {
        if (reason)
            *reason = "witness: " + why;
        return false;
    }
    return true;
}

}  // namespace petcheck
