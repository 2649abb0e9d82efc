#pragma once

// Weighted-graph data model and exact cost evaluators.
//
// Vertices are ids 1..n. Every vertex weight is positive, ground flows are
// nonnegative, edge weights are positive and the graph is simple. Instances
// are immutable after construction; all operations here are pure.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isot/rational.hpp"

namespace isot {

using VertexId = int;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Rational c;
};

enum class Problem { IppMax, IppMean, NcpMax, NcpMean };
enum class CostVariant { Max, Mean };

inline CostVariant variant_of(Problem p) {
    return (p == Problem::IppMax || p == Problem::NcpMax) ? CostVariant::Max
                                                          : CostVariant::Mean;
}

inline bool is_partition_problem(Problem p) {
    return p == Problem::NcpMax || p == Problem::NcpMean;
}

inline std::string problem_name(Problem p) {
    switch (p) {
        case Problem::IppMax: return "ipp-max";
        case Problem::IppMean: return "ipp-mean";
        case Problem::NcpMax: return "ncp-max";
        case Problem::NcpMean: return "ncp-mean";
    }
    return "?";
}

inline std::optional<Problem> parse_problem(const std::string& s) {
    if (s == "ipp-max") return Problem::IppMax;
    if (s == "ipp-mean") return Problem::IppMean;
    if (s == "ncp-max") return Problem::NcpMax;
    if (s == "ncp-mean") return Problem::NcpMean;
    return std::nullopt;
}

// Sorted duplicate-free vertex ids.
struct VertexSet {
    std::vector<VertexId> ids;

    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> v) : ids(std::move(v)) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }

    bool empty() const { return ids.empty(); }
    size_t size() const { return ids.size(); }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.ids == b.ids; }
};

// k pairwise disjoint nonempty parts; a partition additionally covers 1..n.
struct Subpartition {
    std::vector<VertexSet> parts;

    int k() const { return static_cast<int>(parts.size()); }

    // Parts ordered by smallest contained id.
    void canonicalize() {
        std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
            return a.ids.front() < b.ids.front();
        });
    }
    friend bool operator==(const Subpartition& a, const Subpartition& b) {
        return a.parts == b.parts;
    }
};

using Partition = Subpartition;

// Flat adjacency slice: (neighbor, edge index) pairs of one vertex.
struct NeighborRange {
    const std::pair<VertexId, int>* first = nullptr;
    const std::pair<VertexId, int>* last = nullptr;
    const std::pair<VertexId, int>* begin() const { return first; }
    const std::pair<VertexId, int>* end() const { return last; }
    size_t size() const { return static_cast<size_t>(last - first); }
};

class WeightedGraph {
public:
    WeightedGraph() = default;

    // omega/gamma are indexed by id-1 and must have size n (gamma may be
    // empty for all-zero ground flows). Throws std::invalid_argument on any
    // violated invariant; if declared_tree, the edges must form a tree.
    static WeightedGraph create(int n, std::vector<Rational> omega,
                                std::vector<Rational> gamma, std::vector<Edge> edges,
                                bool declared_tree) {
        if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
        if (static_cast<int>(omega.size()) != n)
            throw std::invalid_argument("omega must assign a weight to every vertex");
        if (gamma.empty()) gamma.assign(n, Rational(0));
        if (static_cast<int>(gamma.size()) != n)
            throw std::invalid_argument("gamma size mismatch");
        for (const Rational& w : omega)
            if (w.sign() <= 0) throw std::invalid_argument("vertex weight must be positive");
        for (const Rational& g : gamma)
            if (g.sign() < 0) throw std::invalid_argument("ground flow must be nonnegative");

        WeightedGraph g;
        g.n_ = n;
        g.omega_.reserve(n + 1);
        g.omega_.emplace_back(0);
        for (auto& w : omega) g.omega_.push_back(std::move(w));
        g.gamma_.reserve(n + 1);
        g.gamma_.emplace_back(0);
        for (auto& x : gamma) g.gamma_.push_back(std::move(x));

        for (Edge& e : edges) {
            if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
                throw std::invalid_argument("edge endpoint out of range");
            if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
            if (e.c.sign() <= 0) throw std::invalid_argument("edge weight must be positive");
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
            return std::pair(a.u, a.v) < std::pair(b.u, b.v);
        });
        for (size_t i = 1; i < edges.size(); ++i)
            if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
                throw std::invalid_argument("duplicate edge");
        g.edges_ = std::move(edges);

        // adjacency in compressed sparse rows, per-vertex entries in edge
        // index order
        g.adj_start_.assign(n + 2, 0);
        for (const Edge& e : g.edges_) {
            ++g.adj_start_[e.u + 1];
            ++g.adj_start_[e.v + 1];
        }
        for (int v = 1; v <= n; ++v) g.adj_start_[v + 1] += g.adj_start_[v];
        g.adj_flat_.resize(2 * g.edges_.size());
        std::vector<int> fill(g.adj_start_.begin(), g.adj_start_.end() - 1);
        for (size_t i = 0; i < g.edges_.size(); ++i) {
            const Edge& e = g.edges_[i];
            g.adj_flat_[fill[e.u]++] = {e.v, static_cast<int>(i)};
            g.adj_flat_[fill[e.v]++] = {e.u, static_cast<int>(i)};
        }

        if (declared_tree) {
            if (static_cast<int>(g.edges_.size()) != n - 1)
                throw std::invalid_argument("a tree on n vertices needs exactly n-1 edges");
            if (!g.connected())
                throw std::invalid_argument("declared tree is not connected");
            g.tree_ = true;
        }
        return g;
    }

    int size() const { return n_; }
    bool is_tree() const { return tree_; }
    const Rational& omega(VertexId v) const { return omega_[check(v)]; }
    const Rational& gamma(VertexId v) const { return gamma_[check(v)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    NeighborRange neighbors(VertexId v) const {
        check(v);
        return {adj_flat_.data() + adj_start_[v], adj_flat_.data() + adj_start_[v + 1]};
    }

    bool gamma_all_zero() const {
        for (int v = 1; v <= n_; ++v)
            if (!gamma_[v].is_zero()) return false;
        return true;
    }

    Rational total_omega() const {
        Rational s(0);
        for (int v = 1; v <= n_; ++v) s += omega_[v];
        return s;
    }

    Rational total_edge_weight() const {
        Rational s(0);
        for (const Edge& e : edges_) s += e.c;
        return s;
    }

    bool connected() const {
        if (n_ == 0) return false;
        std::vector<char> seen(n_ + 1, 0);
        std::vector<VertexId> stack = {1};
        seen[1] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (auto [w, idx] : neighbors(v)) {
                (void)idx;
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        return cnt == n_;
    }

private:
    int n_ = 0;
    bool tree_ = false;
    std::vector<Rational> omega_, gamma_;  // index by id, [0] unused
    std::vector<Edge> edges_;              // u < v, sorted
    std::vector<int> adj_start_;           // CSR offsets, index by id
    std::vector<std::pair<VertexId, int>> adj_flat_;

    VertexId check(VertexId v) const {
        if (v < 1 || v > n_) throw std::invalid_argument("vertex id out of range");
        return v;
    }
};

namespace detail {

// Part label per vertex: 0 = unassigned/outside, 1..k = part index.
// Throws if parts overlap, are empty, or contain out-of-range ids.
inline std::vector<int> part_labels(const WeightedGraph& g, const Subpartition& sp) {
    std::vector<int> label(g.size() + 1, 0);
    if (sp.parts.empty()) throw std::invalid_argument("subpartition needs at least one part");
    for (size_t p = 0; p < sp.parts.size(); ++p) {
        if (sp.parts[p].empty())
            throw std::invalid_argument("subpartition part must be nonempty");
        for (VertexId v : sp.parts[p].ids) {
            if (v < 1 || v > g.size())
                throw std::invalid_argument("vertex id out of range in part");
            if (label[v] != 0) throw std::invalid_argument("subpartition parts overlap");
            label[v] = static_cast<int>(p) + 1;
        }
    }
    return label;
}

}  // namespace detail

inline void validate_subpartition(const WeightedGraph& g, const Subpartition& sp) {
    (void)detail::part_labels(g, sp);
}

inline bool covers_all_vertices(const WeightedGraph& g, const Subpartition& sp) {
    size_t total = 0;
    for (const VertexSet& part : sp.parts) total += part.size();
    return total == static_cast<size_t>(g.size());
}

inline void validate_partition(const WeightedGraph& g, const Subpartition& sp) {
    validate_subpartition(g, sp);
    if (!covers_all_vertices(g, sp))
        throw std::invalid_argument("partition must cover every vertex");
}

// c(A) = weight of edges with exactly one endpoint in A plus the ground
// flows of A's vertices.
inline Rational cut_weight(const WeightedGraph& g, const VertexSet& a) {
    if (a.empty()) throw std::invalid_argument("cut of an empty set");
    std::vector<char> in(g.size() + 1, 0);
    for (VertexId v : a.ids) {
        if (v < 1 || v > g.size()) throw std::invalid_argument("vertex id out of range");
        in[v] = 1;
    }
    Rational cut(0);
    for (const Edge& e : g.edges())
        if (in[e.u] != in[e.v]) cut += e.c;
    for (VertexId v : a.ids) cut += g.gamma(v);
    return cut;
}

inline Rational set_weight(const WeightedGraph& g, const VertexSet& a) {
    Rational w(0);
    for (VertexId v : a.ids) w += g.omega(v);
    return w;
}

inline Rational normalized_flow(const WeightedGraph& g, const VertexSet& a) {
    return cut_weight(g, a) / set_weight(g, a);
}

inline Rational subpartition_cost(const WeightedGraph& g, const Subpartition& sp,
                                  CostVariant variant) {
    const std::vector<int> label = detail::part_labels(g, sp);
    const int k = sp.k();
    std::vector<Rational> cut(k, Rational(0));
    std::vector<Rational> weight(k, Rational(0));
    for (const Edge& e : g.edges()) {
        const int lu = label[e.u], lv = label[e.v];
        if (lu == lv) continue;
        if (lu > 0) cut[lu - 1] += e.c;
        if (lv > 0) cut[lv - 1] += e.c;
    }
    for (int v = 1; v <= g.size(); ++v) {
        if (label[v] > 0) {
            cut[label[v] - 1] += g.gamma(v);
            weight[label[v] - 1] += g.omega(v);
        }
    }
    if (variant == CostVariant::Max) {
        Rational best = cut[0] / weight[0];
        for (int i = 1; i < k; ++i) {
            Rational f = cut[i] / weight[i];
            if (f > best) best = std::move(f);
        }
        return best;
    }
    Rational sum(0);
    for (int i = 0; i < k; ++i) sum += cut[i] / weight[i];
    return sum / Rational(k);
}

// Connected components of g minus the edges whose indices are in
// removed_edges, ordered by smallest contained vertex id.
inline std::vector<VertexSet> components_after_removal(const WeightedGraph& g,
                                                       const std::vector<int>& removed_edges) {
    std::vector<char> removed(g.edges().size(), 0);
    for (int idx : removed_edges) {
        if (idx < 0 || idx >= static_cast<int>(g.edges().size()))
            throw std::invalid_argument("removed edge index out of range");
        removed[idx] = 1;
    }
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.size() + 1, 0);
    std::vector<VertexId> stack;
    for (VertexId s = 1; s <= g.size(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            comp.ids.push_back(v);
            for (auto [w, idx] : g.neighbors(v)) {
                if (removed[idx] || seen[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        std::sort(comp.ids.begin(), comp.ids.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Overload taking edges as vertex pairs; every pair must name an edge of g.
inline std::vector<VertexSet> components_after_removal(
    const WeightedGraph& g, const std::vector<std::pair<VertexId, VertexId>>& removed) {
    std::vector<int> idxs;
    for (auto [u, v] : removed) {
        if (u > v) std::swap(u, v);
        int found = -1;
        for (size_t i = 0; i < g.edges().size(); ++i)
            if (g.edges()[i].u == u && g.edges()[i].v == v) {
                found = static_cast<int>(i);
                break;
            }
        if (found < 0) throw std::invalid_argument("removed edge is not an edge of the graph");
        idxs.push_back(found);
    }
    return components_after_removal(g, idxs);
}

struct QuotientResult {
    WeightedGraph graph;
    std::vector<VertexId> vertex_map;  // index by original id, [0] unused
};

// Contract every connected component of every part of pi to a single
// vertex. Weights and ground flows add up; parallel contracted edges merge
// by adding their weights. Quotient vertices are numbered by smallest
// contained original id.
inline QuotientResult quotient(const WeightedGraph& g, const Partition& pi) {
    validate_partition(g, pi);
    const std::vector<int> label = detail::part_labels(g, pi);

    std::vector<VertexId> comp(g.size() + 1, 0);
    int comp_count = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 1; s <= g.size(); ++s) {
        if (comp[s] != 0) continue;
        ++comp_count;
        comp[s] = comp_count;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (auto [w, idx] : g.neighbors(v)) {
                (void)idx;
                if (comp[w] == 0 && label[w] == label[v]) {
                    comp[w] = comp_count;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<Rational> omega(comp_count, Rational(0));
    std::vector<Rational> gamma(comp_count, Rational(0));
    for (VertexId v = 1; v <= g.size(); ++v) {
        omega[comp[v] - 1] += g.omega(v);
        gamma[comp[v] - 1] += g.gamma(v);
    }
    std::map<std::pair<VertexId, VertexId>, Rational> acc;
    for (const Edge& e : g.edges()) {
        VertexId qu = comp[e.u], qv = comp[e.v];
        if (qu == qv) continue;
        if (qu > qv) std::swap(qu, qv);
        auto [it, fresh] = acc.try_emplace({qu, qv}, e.c);
        if (!fresh) it->second += e.c;
    }
    std::vector<Edge> edges;
    edges.reserve(acc.size());
    for (auto& [key, c] : acc) edges.push_back({key.first, key.second, std::move(c)});

    QuotientResult result;
    const bool is_tree = g.is_tree() && comp_count >= 1 &&
                         edges.size() == static_cast<size_t>(comp_count) - 1;
    result.graph = WeightedGraph::create(comp_count, std::move(omega), std::move(gamma),
                                         std::move(edges), is_tree);
    result.vertex_map.assign(g.size() + 1, 0);
    for (VertexId v = 1; v <= g.size(); ++v) result.vertex_map[v] = comp[v];
    return result;
}

}  // namespace isot
