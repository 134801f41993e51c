#include "petcheck/containment.hpp"

#include "petcheck/fixtures.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace petcheck {

const char* outcome_name(SearchOutcome o)
{
    switch (o) {
    case SearchOutcome::found:
        return "found";
    case SearchOutcome::none:
        return "none";
    case SearchOutcome::unknown:
        return "unknown";
    }
    return "?";
}

namespace {

constexpr int kFree = -1;
constexpr int kInterior = -2;

struct Step {
    bool root = false;
    VertexId vertex = kNoVertex;  // root steps
    EdgeId edge = kNoEdge;        // edge steps
    VertexId from = kNoVertex;
    VertexId to = kNoVertex;
    bool closing = false;  // `to` already placed when the step starts
    int sym_group = -1;    // symmetry-ordered group of paths leaving one vertex
    int sym_rank = -1;
};

class Searcher {
public:
    Searcher(const MultiGraph& host, const MultiGraph& pattern, const SearchOptions& options)
        : host_(host), pattern_(pattern), options_(options)
    {
        adj_.resize(host.vertex_bound());
        for (EdgeId e : host.edges()) {
            const Edge& ed = host.edge(e);
            adj_[ed.u].emplace_back(e, ed.v);
            if (!ed.is_loop())
                adj_[ed.v].emplace_back(e, ed.u);
        }
        state_.assign(host.vertex_bound(), kFree);
        edge_used_.assign(host.edge_bound(), 0);
        excluded_.assign(host.vertex_bound(), 0);
        image_.assign(pattern.vertex_bound(), kNoVertex);
        pending_.assign(pattern.vertex_bound(), 0);
        for (VertexId p : pattern.vertices())
            pending_[p] = pattern.degree(p);
        paths_.resize(pattern.edge_bound());
        seen_.assign(host.vertex_bound(), 0);

        for (VertexId h : host.vertices())
            candidates_.push_back(h);
        // Low degree first; among equals, vertices next to a higher-degree vertex first.
        auto top_neighbour = [&](VertexId v) {
            std::size_t best = 0;
            for (VertexId w : host.neighbours(v))
                best = std::max(best, host.degree(w));
            return best;
        };
        std::stable_sort(candidates_.begin(), candidates_.end(), [&](VertexId a, VertexId b) {
            if (host.degree(a) != host.degree(b))
                return host.degree(a) < host.degree(b);
            return top_neighbour(a) > top_neighbour(b);
        });
        plan();
    }

    ContainmentResult run()
    {
        ContainmentResult result;
        bool ok = step(0);
        result.nodes = nodes_;
        if (ok) {
            result.outcome = SearchOutcome::found;
            SubdivisionWitness w;
            w.branch_map = image_;
            w.path_map = paths_;
            result.witness = std::move(w);
        } else {
            result.outcome = exhausted_ ? SearchOutcome::unknown : SearchOutcome::none;
        }
        return result;
    }

private:
    void plan()
    {
        std::vector<char> placed(pattern_.vertex_bound(), 0);
        std::vector<std::size_t> rank(pattern_.vertex_bound(), 0);
        std::vector<char> done(pattern_.edge_bound(), 0);
        std::size_t placed_count = 0;
        std::size_t remaining = pattern_.size();
        auto place = [&](VertexId p) {
            placed[p] = 1;
            rank[p] = placed_count++;
        };

        auto pick_root = [&]() {
            VertexId best = kNoVertex;
            for (VertexId p : pattern_.vertices())
                if (!placed[p] && (best == kNoVertex || pattern_.degree(p) > pattern_.degree(best)))
                    best = p;
            return best;
        };

        while (placed_count < pattern_.order() || remaining > 0) {
            EdgeId closing = kNoEdge;
            EdgeId tree = kNoEdge;
            std::size_t tree_rank = 0;
            std::size_t tree_links = 0;
            for (EdgeId e : pattern_.edges()) {
                if (done[e])
                    continue;
                const Edge& ed = pattern_.edge(e);
                if (placed[ed.u] && placed[ed.v]) {
                    closing = e;
                    break;
                }
                if (placed[ed.u] != placed[ed.v]) {
                    // Prefer the new vertex with most placed neighbours, then the earliest placed end.
                    VertexId at = placed[ed.u] ? ed.u : ed.v;
                    VertexId fresh = ed.other(at);
                    std::size_t links = 0;
                    for (EdgeId f : pattern_.incident(fresh))
                        links += placed[pattern_.edge(f).other(fresh)] ? 1 : 0;
                    if (tree == kNoEdge || links > tree_links || (links == tree_links && rank[at] < tree_rank)) {
                        tree = e;
                        tree_rank = rank[at];
                        tree_links = links;
                    }
                }
            }
            if (closing != kNoEdge) {
                const Edge& ed = pattern_.edge(closing);
                VertexId from = rank[ed.u] <= rank[ed.v] ? ed.u : ed.v;
                steps_.push_back({false, kNoVertex, closing, from, ed.other(from), true, -1});
                done[closing] = 1;
                --remaining;
            } else if (tree != kNoEdge) {
                const Edge& ed = pattern_.edge(tree);
                VertexId from = placed[ed.u] ? ed.u : ed.v;
                VertexId to = ed.other(from);
                steps_.push_back({false, kNoVertex, tree, from, to, false, -1});
                place(to);
                done[tree] = 1;
                --remaining;
            } else {
                VertexId r = pick_root();
                steps_.push_back({true, r, kNoEdge, kNoVertex, kNoVertex, false, -1});
                place(r);
            }
        }

        if (steps_.empty() || !options_.use_symmetry)
            return;
        first_ = steps_.front().vertex;
        in_orbit_.assign(pattern_.vertex_bound(), 0);
        for (VertexId q : vertex_orbit(pattern_, first_))
            in_orbit_[q] = 1;

        // Stabiliser chain: walking out from the first vertex, whenever the
        // automorphisms fixing everything seen so far permute a vertex's new
        // neighbours arbitrarily, the paths towards them are taken with
        // increasing first host edge.
        std::vector<std::pair<VertexId, VertexId>> fixed{{first_, first_}};
        std::vector<char> is_fixed(pattern_.vertex_bound(), 0);
        is_fixed[first_] = 1;
        std::vector<VertexId> walk{first_};
        for (std::size_t qi = 0; qi < walk.size(); ++qi) {
            VertexId v = walk[qi];
            std::vector<std::size_t> idx;
            std::vector<VertexId> targets;
            for (std::size_t k = 0; k < steps_.size(); ++k) {
                const Step& st = steps_[k];
                if (!st.root && !st.closing && st.from == v && !is_fixed[st.to]) {
                    idx.push_back(k);
                    targets.push_back(st.to);
                }
            }
            if (targets.empty())
                continue;
            bool symmetric = targets.size() >= 2;
            std::vector<VertexId> perm = targets;
            std::sort(perm.begin(), perm.end());
            while (symmetric && std::next_permutation(perm.begin(), perm.end())) {
                auto forced = fixed;
                for (std::size_t r = 0; r < targets.size(); ++r)
                    forced.emplace_back(targets[r], perm[r]);
                symmetric = find_isomorphism(pattern_, pattern_, forced).has_value();
            }
            if (symmetric) {
                std::vector<VertexId> sorted = perm;
                std::sort(sorted.begin(), sorted.end());
                for (std::size_t r = 0; r < idx.size(); ++r) {
                    steps_[idx[r]].sym_group = static_cast<int>(sym_firsts_.size());
                    steps_[idx[r]].sym_rank = static_cast<int>(r);
                }
                sym_firsts_.emplace_back(idx.size(), kNoEdge);
            }
            for (VertexId t : targets) {
                fixed.emplace_back(t, t);
                is_fixed[t] = 1;
                walk.push_back(t);
            }
        }
    }

    bool over_budget()
    {
        if (++nodes_ > options_.node_budget) {
            exhausted_ = true;
            return true;
        }
        return false;
    }

    bool eligible(VertexId p, VertexId h) const
    {
        if (state_[h] != kFree)
            return false;
        if (host_.degree(h) < pattern_.degree(p))
            return false;
        if (!in_orbit_.empty() && in_orbit_[p] && excluded_[h])
            return false;
        return true;
    }

    // Necessary conditions for completing the remaining steps from `next`
    // on. When `tip` is set, step `next` is a path in progress ending there.
    //  - free vertices that can be neither interior nor branch are peeled off;
    //  - placed branch vertices keep enough live incidences;
    //  - enough live vertices remain for the unplaced pattern vertices;
    //  - terminals joined by the unrouted part of the pattern stay connected.
    bool viable(std::size_t next, VertexId tip)
    {
        const std::size_t hb = host_.vertex_bound();
        const std::size_t pb = pattern_.vertex_bound();
        const VertexId tip_node = static_cast<VertexId>(pb);

        // Components of the unrouted pattern; the edge in progress hangs off the tip.
        uf_.resize(pb + 1);
        for (std::size_t k = 0; k <= pb; ++k)
            uf_[k] = static_cast<VertexId>(k);
        auto find = [&](VertexId x) {
            while (uf_[x] != x)
                x = uf_[x] = uf_[uf_[x]];
            return x;
        };
        std::size_t dmin = static_cast<std::size_t>(-1);
        for (std::size_t k = next; k < steps_.size(); ++k) {
            const Step& st = steps_[k];
            if (st.root)
                continue;
            VertexId a = (k == next && tip != kNoVertex) ? tip_node : st.from;
            uf_[find(a)] = find(st.to);
        }
        std::vector<std::size_t> unplaced_degrees;
        bool unplaced_in_orbit = !in_orbit_.empty();
        for (VertexId p : pattern_.vertices())
            if (image_[p] == kNoVertex) {
                unplaced_in_orbit = unplaced_in_orbit && in_orbit_[p];
                unplaced_degrees.push_back(pattern_.degree(p));
                dmin = std::min(dmin, pattern_.degree(p));
            }

        // Terminal component per host vertex (-1: not a terminal).
        term_.assign(hb, -1);
        for (VertexId p : pattern_.vertices())
            if (image_[p] != kNoVertex && pending_[p] > 0)
                term_[image_[p]] = static_cast<int>(find(p));
        if (tip != kNoVertex)
            term_[tip] = static_cast<int>(find(tip_node));

        auto alive = [&](VertexId h) { return term_[h] >= 0 || (state_[h] == kFree && !dead_[h]); };
        dead_.assign(hb, 0);
        live_.assign(hb, 0);
        for (VertexId h : host_.vertices()) {
            if (!alive(h))
                continue;
            std::size_t d = 0;
            for (auto [e, x] : adj_[h]) {
                if (edge_used_[e] || !alive(x))
                    continue;
                if (x == h)
                    d += term_[h] >= 0 ? 2 : 0;
                else
                    ++d;
            }
            live_[h] = d;
        }
        queue_.clear();
        auto doomed = [&](VertexId h) { return term_[h] < 0 && live_[h] < 2 && live_[h] < dmin; };
        for (VertexId h : host_.vertices())
            if (state_[h] == kFree && term_[h] < 0 && doomed(h)) {
                dead_[h] = 1;
                queue_.push_back(h);
            }
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            VertexId h = queue_[qi];
            for (auto [e, x] : adj_[h]) {
                if (edge_used_[e] || x == h || !alive(x))
                    continue;
                --live_[x];
                if (state_[x] == kFree && term_[x] < 0 && doomed(x)) {
                    dead_[x] = 1;
                    queue_.push_back(x);
                }
            }
        }

        for (VertexId p : pattern_.vertices())
            if (image_[p] != kNoVertex && live_[image_[p]] < pending_[p])
                return false;
        if (tip != kNoVertex && live_[tip] < 1)
            return false;

        if (!unplaced_degrees.empty()) {
            std::vector<std::size_t> supply;
            for (VertexId h : host_.vertices())
                if (state_[h] == kFree && !dead_[h] && term_[h] < 0 && !(unplaced_in_orbit && excluded_[h]))
                    supply.push_back(live_[h]);
            if (supply.size() < unplaced_degrees.size())
                return false;
            std::sort(supply.rbegin(), supply.rend());
            std::sort(unplaced_degrees.rbegin(), unplaced_degrees.rend());
            for (std::size_t k = 0; k < unplaced_degrees.size(); ++k)
                if (supply[k] < unplaced_degrees[k])
                    return false;
        }

        // Connectivity of each terminal class through free live vertices.
        ++stamp_;
        for (VertexId h : host_.vertices()) {
            if (term_[h] < 0 || seen_[h] == stamp_)
                continue;
            int cls = term_[h];
            queue_.clear();
            queue_.push_back(h);
            seen_[h] = stamp_;
            for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
                VertexId y = queue_[qi];
                for (auto [e, z] : adj_[y]) {
                    if (edge_used_[e] || seen_[z] == stamp_)
                        continue;
                    if (term_[z] == cls || (term_[z] < 0 && state_[z] == kFree && !dead_[z])) {
                        seen_[z] = stamp_;
                        queue_.push_back(z);
                    }
                }
            }
            // Any unreached terminal of the same class fails.
            for (VertexId z : host_.vertices())
                if (term_[z] == cls && seen_[z] != stamp_)
                    return false;
        }

        // The unrouted pattern is a subdivision inside the live graph, so per
        // live component its cyclomatic number cannot exceed the component's.
        class_edges_.assign(pb + 1, 0);
        class_vertices_.assign(pb + 1, 0);
        std::vector<char>& counted = counted_;
        counted.assign(pb + 1, 0);
        for (std::size_t k = next; k < steps_.size(); ++k) {
            const Step& st = steps_[k];
            if (st.root)
                continue;
            VertexId a = (k == next && tip != kNoVertex) ? tip_node : st.from;
            ++class_edges_[find(a)];
            for (VertexId x : {a, st.to})
                if (!counted[x]) {
                    counted[x] = 1;
                    ++class_vertices_[find(x)];
                }
        }
        comp_.assign(hb, -1);
        for (VertexId h : host_.vertices()) {
            if (!alive(h) || comp_[h] >= 0 || (term_[h] < 0 && dead_[h]))
                continue;
            queue_.clear();
            queue_.push_back(h);
            comp_[h] = static_cast<int>(h);
            long long ends = 0;
            for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
                VertexId y = queue_[qi];
                for (auto [e, z] : adj_[y]) {
                    if (edge_used_[e] || !alive(z) || (term_[z] < 0 && dead_[z]))
                        continue;
                    if (z == y && term_[y] < 0)
                        continue;
                    ends += (z == y) ? 2 : 1;
                    if (comp_[z] < 0) {
                        comp_[z] = static_cast<int>(h);
                        queue_.push_back(z);
                    }
                }
            }
            long long cyc = ends / 2 - static_cast<long long>(queue_.size()) + 1;
            long long need = 0;
            std::fill(counted.begin(), counted.end(), 0);
            for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
                int cls = term_[queue_[qi]];
                if (cls < 0 || counted[static_cast<std::size_t>(cls)])
                    continue;
                counted[static_cast<std::size_t>(cls)] = 1;
                need += static_cast<long long>(class_edges_[static_cast<std::size_t>(cls)]) -
                        static_cast<long long>(class_vertices_[static_cast<std::size_t>(cls)]) + 1;
            }
            if (need > cyc)
                return false;
        }
        return true;
    }

    bool step(std::size_t i)
    {
        if (i == steps_.size())
            return true;
        const Step& s = steps_[i];
        if (s.root)
            return place_root(i);
        HostPath& path = paths_[s.edge];
        path.vertices.assign(1, image_[s.from]);
        path.edges.clear();
        --pending_[s.from];
        if (grow(i, image_[s.from]))
            return true;
        ++pending_[s.from];
        return false;
    }

    bool place_root(std::size_t i)
    {
        const Step& s = steps_[i];
        for (VertexId h : candidates_) {
            if (!eligible(s.vertex, h))
                continue;
            if (over_budget())
                return false;
            image_[s.vertex] = h;
            state_[h] = static_cast<int>(s.vertex);
            if (viable(i + 1, kNoVertex) && step(i + 1))
                return true;
            image_[s.vertex] = kNoVertex;
            state_[h] = kFree;
            if (exhausted_)
                return false;
            // No witness sends the first vertex to h, hence none sends any vertex
            // of its orbit to h or to any host vertex in the orbit of h.
            if (i == 0 && !in_orbit_.empty())
                for (VertexId h2 : vertex_orbit(host_, h))
                    excluded_[h2] = 1;
        }
        return false;
    }

    void finish_edge(const Step& s) { --pending_[s.to]; }

    void unfinish_edge(const Step& s) { ++pending_[s.to]; }

    bool grow(std::size_t i, VertexId tip)
    {
        const Step& s = steps_[i];
        HostPath& path = paths_[s.edge];
        for (auto [e, x] : adj_[tip]) {
            if (edge_used_[e])
                continue;
            if (s.sym_group >= 0 && path.edges.empty()) {
                std::vector<EdgeId>& firsts = sym_firsts_[static_cast<std::size_t>(s.sym_group)];
                auto r = static_cast<std::size_t>(s.sym_rank);
                if (r > 0 && e <= firsts[r - 1])
                    continue;
                firsts[r] = e;
            }
            if (over_budget())
                return false;
            edge_used_[e] = 1;
            path.edges.push_back(e);
            path.vertices.push_back(x);

            if (s.closing) {
                VertexId target = image_[s.to];
                if (x == target) {
                    finish_edge(s);
                    if (viable(i + 1, kNoVertex) && step(i + 1))
                        return true;
                    unfinish_edge(s);
                } else if (state_[x] == kFree) {
                    state_[x] = kInterior;
                    if (viable(i, x) && grow(i, x))
                        return true;
                    state_[x] = kFree;
                }
            } else if (state_[x] == kFree) {
                if (eligible(s.to, x)) {
                    image_[s.to] = x;
                    state_[x] = static_cast<int>(s.to);
                    finish_edge(s);
                    if (viable(i + 1, kNoVertex) && step(i + 1))
                        return true;
                    unfinish_edge(s);
                    image_[s.to] = kNoVertex;
                    state_[x] = kFree;
                }
                if (!exhausted_) {
                    state_[x] = kInterior;
                    if (viable(i, x) && grow(i, x))
                        return true;
                    state_[x] = kFree;
                }
            }

            path.edges.pop_back();
            path.vertices.pop_back();
            edge_used_[e] = 0;
            if (exhausted_)
                return false;
        }
        return false;
    }

    const MultiGraph& host_;
    const MultiGraph& pattern_;
    SearchOptions options_;
    std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj_;
    std::vector<VertexId> candidates_;
    std::vector<Step> steps_;
    std::vector<int> state_;
    std::vector<char> edge_used_;
    std::vector<char> excluded_;
    std::vector<char> in_orbit_;
    std::vector<VertexId> image_;
    std::vector<std::size_t> pending_;
    std::vector<HostPath> paths_;
    VertexId first_ = kNoVertex;
    std::vector<std::vector<EdgeId>> sym_firsts_;
    std::vector<std::uint32_t> seen_;
    std::vector<VertexId> uf_;
    std::vector<int> term_;
    std::vector<char> dead_;
    std::vector<std::size_t> live_;
    std::vector<std::size_t> class_edges_;
    std::vector<std::size_t> class_vertices_;
    std::vector<char> counted_;
    std::vector<int> comp_;
    std::uint32_t stamp_ = 0;
    std::vector<VertexId> queue_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

ContainmentResult contains_subdivision(const MultiGraph& host, const MultiGraph& pattern,
                                       const SearchOptions& options)
{
    ContainmentResult quick;
    quick.outcome = SearchOutcome::none;
    if (pattern.order() > host.order() || pattern.size() > host.size())
        return quick;
    std::vector<std::size_t> hd = degree_sequence(host), pd = degree_sequence(pattern);
    std::sort(hd.rbegin(), hd.rend());
    std::sort(pd.rbegin(), pd.rend());
    for (std::size_t i = 0; i < pd.size(); ++i)
        if (pd[i] > hd[i])
            return quick;
    Searcher searcher(host, pattern, options);
    return searcher.run();
}

ContainmentResult contains_petersen(const MultiGraph& host, const SearchOptions& options)
{
    static const MultiGraph pattern = petersen_graph();
    return contains_subdivision(host, pattern, options);
}

bool validate_witness(const MultiGraph& host, const MultiGraph& pattern, const SubdivisionWitness& w,
                      std::string* reason)
{
    auto fail = [&](const std::string& why) {
        if (reason)
            *reason = why;
        return false;
    };
    if (w.branch_map.size() < pattern.vertex_bound() || w.path_map.size() < pattern.edge_bound())
        return fail("witness maps are shorter than the pattern id range");

    std::map<VertexId, VertexId> owner;  // host vertex -> pattern vertex
    for (VertexId p : pattern.vertices()) {
        VertexId h = w.branch_map[p];
        if (!host.has_vertex(h))
            return fail("pattern vertex " + std::to_string(p) + " maps outside the host");
        if (!owner.emplace(h, p).second)
            return fail("host vertex " + std::to_string(h) + " is the image of two pattern vertices");
    }

    std::set<VertexId> interior_used;
    std::set<EdgeId> edges_used;
    for (EdgeId pe : pattern.edges()) {
        const Edge& ped = pattern.edge(pe);
        const HostPath& hp = w.path_map[pe];
        std::string tag = "path for pattern edge " + std::to_string(pe);
        if (hp.edges.empty())
            return fail(tag + " has no edges");
        if (hp.vertices.size() != hp.edges.size() + 1)
            return fail(tag + " has inconsistent lengths");
        VertexId a = w.branch_map[ped.u], b = w.branch_map[ped.v];
        bool forward = hp.vertices.front() == a && hp.vertices.back() == b;
        bool backward = hp.vertices.front() == b && hp.vertices.back() == a;
        if (!forward && !backward)
            return fail(tag + " does not join the branch images");
        for (std::size_t k = 0; k < hp.edges.size(); ++k) {
            EdgeId he = hp.edges[k];
            if (!host.has_edge(he))
                return fail(tag + " uses a missing host edge");
            const Edge& hed = host.edge(he);
            VertexId x = hp.vertices[k], y = hp.vertices[k + 1];
            if (!((hed.u == x && hed.v == y) || (hed.u == y && hed.v == x)))
                return fail(tag + " step " + std::to_string(k) + " is not an edge between its vertices");
            if (!edges_used.insert(he).second)
                return fail("host edge " + std::to_string(he) + " is used twice");
        }
        for (std::size_t k = 1; k + 1 < hp.vertices.size(); ++k) {
            VertexId x = hp.vertices[k];
            if (owner.count(x))
                return fail(tag + " passes through a branch vertex");
            if (!interior_used.insert(x).second)
                return fail("host vertex " + std::to_string(x) + " is interior to two paths or repeats");
        }
    }
    return true;
}

std::string witness_certificate(const MultiGraph& pattern, const SubdivisionWitness& w)
{
    std::ostringstream out;
    for (VertexId p : pattern.vertices())
        out << "branch " << p << " -> " << w.branch_map.at(p) << '\n';
    for (EdgeId pe : pattern.edges()) {
        const Edge& ed = pattern.edge(pe);
        out << "path (" << ed.u << ',' << ed.v << "):";
        const HostPath& hp = w.path_map.at(pe);
        std::vector<VertexId> vs = hp.vertices;
        if (!vs.empty() && vs.front() != w.branch_map.at(ed.u))
            std::reverse(vs.begin(), vs.end());
        for (VertexId v : vs)
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

SubdivisionWitness parse_certificate(const MultiGraph& host, const MultiGraph& pattern, std::istream& in)
{
    static const std::regex branch_re(R"(^\s*branch\s+(\d+)\s*->\s*(\d+)\s*$)");
    static const std::regex path_re(R"(^\s*path\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*:((?:\s+\d+)+)\s*$)");

    SubdivisionWitness w;
    w.branch_map.assign(pattern.vertex_bound(), kNoVertex);
    w.path_map.resize(pattern.edge_bound());
    std::vector<char> edge_taken(host.edge_bound(), 0);
    std::vector<char> pattern_edge_done(pattern.edge_bound(), 0);

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#')
            continue;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::smatch m;
        std::string where = "certificate line " + std::to_string(lineno);
        if (std::regex_match(line, m, branch_re)) {
            auto p = static_cast<VertexId>(std::stoul(m[1]));
            if (!pattern.has_vertex(p))
                throw GraphError(where + ": unknown pattern vertex");
            w.branch_map[p] = static_cast<VertexId>(std::stoul(m[2]));
        } else if (std::regex_match(line, m, path_re)) {
            auto i = static_cast<VertexId>(std::stoul(m[1]));
            auto j = static_cast<VertexId>(std::stoul(m[2]));
            EdgeId pe = kNoEdge;
            for (EdgeId e : pattern.edges()) {
                const Edge& ed = pattern.edge(e);
                if (!pattern_edge_done[e] && ((ed.u == i && ed.v == j) || (ed.u == j && ed.v == i))) {
                    pe = e;
                    break;
                }
            }
            if (pe == kNoEdge)
                throw GraphError(where + ": no unmatched pattern edge (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            pattern_edge_done[pe] = 1;
            HostPath hp;
            std::istringstream vs(m[3].str());
            for (unsigned long v; vs >> v;)
                hp.vertices.push_back(static_cast<VertexId>(v));
            for (std::size_t k = 0; k + 1 < hp.vertices.size(); ++k) {
                VertexId x = hp.vertices[k], y = hp.vertices[k + 1];
                if (!host.has_vertex(x) || !host.has_vertex(y))
                    throw GraphError(where + ": vertex outside the host");
                EdgeId pick = kNoEdge;
                for (EdgeId e : host.incident(x)) {
                    const Edge& ed = host.edge(e);
                    if (ed.other(x) == y && !edge_taken[e] && (pick == kNoEdge || e < pick))
                        pick = e;
                }
                if (pick == kNoEdge)
                    throw GraphError(where + ": no unused host edge between " + std::to_string(x) + " and " +
                                     std::to_string(y));
                edge_taken[pick] = 1;
                hp.edges.push_back(pick);
            }
            w.path_map[pe] = std::move(hp);
        } else {
            throw GraphError(where + ": unrecognised line");
        }
    }
    return w;
}

SubdivisionWitness relabel_witness(const SubdivisionWitness& w, const std::vector<VertexId>& vertex_map,
                                   const std::vector<EdgeId>& edge_map)
{
    SubdivisionWitness out = w;
    for (VertexId& v : out.branch_map)
        if (v != kNoVertex)
            v = vertex_map.at(v);
    for (HostPath& hp : out.path_map) {
        for (VertexId& v : hp.vertices)
            v = vertex_map.at(v);
        for (EdgeId& e : hp.edges)
            e = edge_map.at(e);
    }
    return out;
}

}  // namespace petcheck
