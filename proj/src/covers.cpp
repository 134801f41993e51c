#include "petcheck/covers.hpp"

#include "petcheck/cuts.hpp"
#include "petcheck/fixtures.hpp"
#include "petcheck/flow.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

namespace petcheck {

namespace {

void set_reason(std::string* reason, std::string text)
{
    if (reason) *reason = std::move(text);
}

std::vector<long long> weights_by_position(const MultiGraph& g, const EdgeWeighting& p)
{
    for (const auto& [e, w] : p) {
        (void)w;
        if (!g.has_edge(e)) throw GraphError("weighting names edge " + std::to_string(e) + " absent from graph");
    }
    std::vector<long long> out;
    out.reserve(g.size());
    for (EdgeId e : g.edges()) {
        auto it = p.find(e);
        if (it == p.end()) throw GraphError("weighting has no value for edge " + std::to_string(e));
        out.push_back(it->second);
    }
    return out;
}

struct VectorHash {
    std::size_t operator()(const std::vector<long long>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (long long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

class CoverSearch {
public:
    CoverSearch(const MultiGraph& g, std::vector<Circuit> circuits, std::uint64_t budget)
        : g_(g), circuits_(std::move(circuits)), budget_(budget)
    {
        pos_.assign(g.edge_bound(), 0);
        for (std::size_t i = 0; i < g.edges().size(); ++i) pos_[g.edges()[i]] = i;
        through_.resize(g.size());
        members_.resize(circuits_.size());
        for (std::size_t c = 0; c < circuits_.size(); ++c) {
            for (EdgeId e : circuits_[c].edges) {
                members_[c].push_back(pos_[e]);
                through_[pos_[e]].push_back(c);
            }
        }
        for (VertexId v : g.vertices()) {
            std::vector<std::size_t> star;
            for (EdgeId e : g.incident(v))
                if (!g.edge(e).is_loop()) star.push_back(pos_[e]);
            if (!star.empty()) stars_.push_back(std::move(star));
        }
    }

    // 1 found, 0 none, -1 budget
    int run(std::vector<long long>& r)
    {
        std::size_t first = 0;
        while (first < r.size() && r[first] == 0) ++first;
        if (first == r.size()) return 1;
        if (failed_.count(r)) return 0;
        for (std::size_t c : through_[first]) {
            if (++nodes_ > budget_) return -1;
            bool fits = true;
            for (std::size_t i : members_[c]) fits = fits && r[i] > 0;
            if (!fits) continue;
            for (std::size_t i : members_[c]) --r[i];
            if (stars_ok(r)) {
                chosen_.push_back(c);
                int res = run(r);
                if (res != 0) {
                    for (std::size_t i : members_[c]) ++r[i];
                    return res;
                }
                chosen_.pop_back();
            }
            for (std::size_t i : members_[c]) ++r[i];
        }
        failed_.insert(r);
        return 0;
    }

    CircuitCover cover() const
    {
        std::map<std::size_t, std::size_t> count;
        for (std::size_t c : chosen_) ++count[c];
        CircuitCover out;
        for (const auto& [c, k] : count) out.circuits.emplace_back(circuits_[c], k);
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool stars_ok(const std::vector<long long>& r) const
    {
        for (const auto& star : stars_) {
            long long total = 0, top = 0;
            for (std::size_t i : star) {
                total += r[i];
                top = std::max(top, r[i]);
            }
            if (2 * top > total) return false;
        }
        return true;
    }

    const MultiGraph& g_;
    std::vector<Circuit> circuits_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> pos_;
    std::vector<std::vector<std::size_t>> through_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::vector<std::size_t>> stars_;
    std::vector<std::size_t> chosen_;
    std::unordered_set<std::vector<long long>, VectorHash> failed_;
};

// The ten 2-subsets of five colours as bit masks.
constexpr std::array<unsigned, 10> kPairs = {0x03, 0x05, 0x06, 0x09, 0x0a, 0x0c, 0x11, 0x12, 0x14, 0x18};

class FiveCoverSearch {
public:
    FiveCoverSearch(const MultiGraph& g, std::uint64_t budget) : g_(g), budget_(budget)
    {
        parity_.assign(g.vertex_bound(), 0);
        open_.assign(g.vertex_bound(), 0);
        colour_.assign(g.edge_bound(), 0);
        for (EdgeId e : g.edges())
            if (!g.edge(e).is_loop()) {
                ++open_[g.edge(e).u];
                ++open_[g.edge(e).v];
            }
        // Breadth-first edge order so that vertex stars close early.
        std::vector<char> seen_v(g.vertex_bound(), 0), seen_e(g.edge_bound(), 0);
        for (VertexId s : g.vertices()) {
            if (seen_v[s]) continue;
            std::vector<VertexId> queue{s};
            seen_v[s] = 1;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                VertexId v = queue[qi];
                for (EdgeId e : g.incident(v)) {
                    if (seen_e[e]) continue;
                    seen_e[e] = 1;
                    order_.push_back(e);
                    VertexId w = g.edge(e).other(v);
                    if (!seen_v[w]) {
                        seen_v[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
    }

    int run(std::size_t k, int used)
    {
        if (k == order_.size()) return 1;
        const Edge& ed = g_.edge(order_[k]);
        if (ed.is_loop()) {
            colour_[ed.id] = kPairs[0];
            return run(k + 1, std::max(used, 1));
        }
        std::optional<unsigned> forced;
        for (VertexId x : {ed.u, ed.v})
            if (open_[x] == 1) {
                if (forced && *forced != parity_[x]) return 0;
                forced = parity_[x];
            }
        for (unsigned pair : kPairs) {
            if (forced && pair != *forced) continue;
            int top = 31 - std::countl_zero(pair);
            int low = std::countr_zero(pair);
            // Colours are interchangeable: new colours enter in increasing order.
            if (top > used + 1 && !(low == used + 1 && top == used + 2)) continue;
            if (top > used + 2) continue;
            if (++nodes_ > budget_) return -1;
            colour_[ed.id] = pair;
            apply(ed, pair);
            int res = run(k + 1, std::max(used, top));
            unapply(ed, pair);
            if (res != 0) return res;
        }
        return 0;
    }

    EulerianFiveCover cover() const
    {
        EulerianFiveCover out;
        for (EdgeId e : g_.edges())
            for (int c = 0; c < 5; ++c)
                if (colour_[e] >> c & 1u) out.subgraphs[c].push_back(e);
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void apply(const Edge& ed, unsigned pair)
    {
        parity_[ed.u] ^= pair;
        parity_[ed.v] ^= pair;
        --open_[ed.u];
        --open_[ed.v];
    }
    void unapply(const Edge& ed, unsigned pair)
    {
        parity_[ed.u] ^= pair;
        parity_[ed.v] ^= pair;
        ++open_[ed.u];
        ++open_[ed.v];
    }

    const MultiGraph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<unsigned> parity_;
    std::vector<int> open_;
    std::vector<unsigned> colour_;
    std::vector<EdgeId> order_;
};

}  // namespace

EdgeWeighting constant_weighting(const MultiGraph& g, long long value)
{
    EdgeWeighting p;
    for (EdgeId e : g.edges()) p[e] = value;
    return p;
}

bool is_admissible(const MultiGraph& g, const EdgeWeighting& p, std::string* reason)
{
    auto w = weights_by_position(g, p);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] < 0) {
            set_reason(reason, "negative weight on edge " + std::to_string(g.edges()[i]));
            return false;
        }
    for (VertexId v : g.vertices()) {
        long long total = 0;
        for (EdgeId e : g.incident(v))
            if (!g.edge(e).is_loop()) total += p.at(e);
        if (total % 2 != 0) {
            set_reason(reason, "odd weight on the star of vertex " + std::to_string(v));
            return false;
        }
    }
    std::vector<std::size_t> node(g.vertex_bound(), 0);
    for (std::size_t i = 0; i < g.vertices().size(); ++i) node[g.vertices()[i]] = i;
    std::set<std::pair<VertexId, VertexId>> done;
    for (EdgeId f : g.edges()) {
        const Edge& ed = g.edge(f);
        if (ed.is_loop() || p.at(f) == 0) continue;
        FlowNetwork net(g.order());
        for (EdgeId e : g.edges()) {
            const Edge& x = g.edge(e);
            if (x.is_loop() || p.at(e) == 0) continue;
            net.add_arc(node[x.u], node[x.v], p.at(e));
            net.add_arc(node[x.v], node[x.u], p.at(e));
        }
        long long need = 2 * p.at(f);
        if (net.max_flow(node[ed.u], node[ed.v], need) < need) {
            set_reason(reason, "a cut through edge " + std::to_string(f) + " weighs less than " + std::to_string(need));
            return false;
        }
    }
    return true;
}

CoverResult circuit_cover_exists(const MultiGraph& g, const EdgeWeighting& p, const CoverOptions& options)
{
    std::string why;
    if (!is_admissible(g, p, &why)) throw GraphError("weighting not admissible: " + why);
    CoverResult res;
    auto r = weights_by_position(g, p);
    if (g.size() > options.max_edges) return res;
    for (long long x : r)
        if (x > options.max_value) return res;
    CoverSearch search(g, circuits_up_to(g, g.order()), options.node_budget);
    int found = search.run(r);
    res.nodes = search.nodes();
    if (found < 0) return res;
    res.outcome = found ? SearchOutcome::found : SearchOutcome::none;
    if (found) res.cover = search.cover();
    return res;
}

bool validate_circuit_cover(const MultiGraph& g, const EdgeWeighting& p, const CircuitCover& c, std::string* reason)
{
    std::map<EdgeId, long long> count;
    for (const auto& [circ, k] : c.circuits) {
        if (k == 0) {
            set_reason(reason, "zero multiplicity");
            return false;
        }
        if (!is_valid_circuit(g, circ)) {
            set_reason(reason, "not a circuit of the graph");
            return false;
        }
        for (EdgeId e : circ.edges) count[e] += static_cast<long long>(k);
    }
    for (EdgeId e : g.edges()) {
        auto it = p.find(e);
        long long want = it == p.end() ? 0 : it->second;
        if (count[e] != want) {
            set_reason(reason, "edge " + std::to_string(e) + " covered " + std::to_string(count[e]) + " times, expected " +
                                   std::to_string(want));
            return false;
        }
    }
    return true;
}

std::optional<EdgeWeighting> find_uncoverable_weighting(const MultiGraph& g, long long max_value,
                                                        const CoverOptions& options)
{
    const auto& es = g.edges();
    // last position of each vertex's non-loop edges, for parity pruning
    std::vector<std::size_t> closes(g.vertex_bound(), 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
        const Edge& ed = g.edge(es[i]);
        closes[ed.u] = std::max(closes[ed.u], i);
        closes[ed.v] = std::max(closes[ed.v], i);
    }
    std::vector<std::vector<VertexId>> closing_at(es.size());
    for (VertexId v : g.vertices())
        if (g.degree(v) > 0) closing_at[closes[v]].push_back(v);

    std::vector<std::vector<long long>> candidates;
    std::vector<long long> cur(es.size(), 0);
    std::vector<long long> star(g.vertex_bound(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == es.size()) {
            candidates.push_back(cur);
            return;
        }
        const Edge& ed = g.edge(es[i]);
        for (long long x = 0; x <= max_value; ++x) {
            cur[i] = x;
            if (!ed.is_loop()) {
                star[ed.u] += x;
                star[ed.v] += x;
            }
            bool ok = true;
            for (VertexId v : closing_at[i]) ok = ok && star[v] % 2 == 0;
            if (ok) self(self, i + 1);
            if (!ed.is_loop()) {
                star[ed.u] -= x;
                star[ed.v] -= x;
            }
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        long long sa = std::accumulate(a.begin(), a.end(), 0LL), sb = std::accumulate(b.begin(), b.end(), 0LL);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    for (const auto& c : candidates) {
        EdgeWeighting p;
        for (std::size_t i = 0; i < es.size(); ++i) p[es[i]] = c[i];
        if (!is_admissible(g, p)) continue;
        if (circuit_cover_exists(g, p, options).outcome == SearchOutcome::none) return p;
    }
    return std::nullopt;
}

std::size_t cycle_rank(const MultiGraph& g) { return cyclomatic_number(g); }

FiveCoverResult five_eulerian_cover_unchecked(const MultiGraph& g, std::uint64_t node_budget)
{
    FiveCoverResult res;
    if (cycle_rank(g) > kFiveCoverMaxCycleRank) return res;
    FiveCoverSearch search(g, node_budget);
    int found = search.run(0, -1);
    res.nodes = search.nodes();
    if (found < 0) return res;
    res.outcome = found ? SearchOutcome::found : SearchOutcome::none;
    if (found) res.cover = search.cover();
    return res;
}

FiveCoverResult five_eulerian_cover(const MultiGraph& g, std::uint64_t node_budget)
{
    if (!is_cubic(g)) throw GraphError("five-cover requires a cubic graph");
    if (!is_two_edge_connected(g)) throw GraphError("five-cover requires a 2-edge-connected graph");
    SearchOptions opts;
    opts.node_budget = node_budget;
    auto pet = contains_petersen(g, opts);
    if (pet.outcome == SearchOutcome::found) throw GraphError("five-cover requires a Petersen-free graph");
    if (pet.outcome == SearchOutcome::unknown) return {};
    return five_eulerian_cover_unchecked(g, node_budget);
}

bool validate_five_cover(const MultiGraph& g, const EulerianFiveCover& c, std::string* reason)
{
    std::vector<int> count(g.edge_bound(), 0);
    for (std::size_t k = 0; k < c.subgraphs.size(); ++k) {
        std::vector<int> deg(g.vertex_bound(), 0);
        std::set<EdgeId> seen;
        for (EdgeId e : c.subgraphs[k]) {
            if (!g.has_edge(e)) {
                set_reason(reason, "subgraph " + std::to_string(k) + " names a missing edge");
                return false;
            }
            if (!seen.insert(e).second) {
                set_reason(reason, "subgraph " + std::to_string(k) + " repeats edge " + std::to_string(e));
                return false;
            }
            ++count[e];
            ++deg[g.edge(e).u];
            ++deg[g.edge(e).v];
        }
        for (VertexId v : g.vertices())
            if (deg[v] % 2 != 0) {
                set_reason(reason, "subgraph " + std::to_string(k) + " has odd degree at " + std::to_string(v));
                return false;
            }
    }
    for (EdgeId e : g.edges())
        if (count[e] != 2) {
            set_reason(reason, "edge " + std::to_string(e) + " lies in " + std::to_string(count[e]) + " subgraphs");
            return false;
        }
    return true;
}

}  // namespace petcheck
