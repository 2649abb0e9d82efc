#pragma once

// Shared helpers for the test suites: instance builders, Pruefer-code tree
// generation and the random corpora.

#include <random>
#include <tuple>
#include <vector>

#include "isot/isot.hpp"

namespace test_support {

using isot::Edge;
using isot::Rational;
using isot::VertexId;
using isot::VertexSet;
using isot::WeightedGraph;

inline WeightedGraph make_graph(int n,
                                const std::vector<std::tuple<int, int, long long>>& edges,
                                const std::vector<long long>& omega, bool tree,
                                const std::vector<long long>& gamma = {}) {
    std::vector<Rational> w, g;
    for (long long x : omega) w.emplace_back(x);
    for (long long x : gamma) g.emplace_back(x);
    std::vector<Edge> es;
    for (auto [u, v, c] : edges) es.push_back({u, v, Rational(c)});
    return WeightedGraph::create(n, std::move(w), std::move(g), std::move(es), tree);
}

inline WeightedGraph unit_path(int n) {
    std::vector<std::tuple<int, int, long long>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1, 1);
    return make_graph(n, edges, std::vector<long long>(n, 1), true);
}

// The sharpness star: center weight k, k leaves of weight t, unit edges.
inline WeightedGraph star(int k, long long t) {
    std::vector<std::tuple<int, int, long long>> edges;
    std::vector<long long> omega = {k};
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(1, i + 2, 1);
        omega.push_back(t);
    }
    return make_graph(k + 1, edges, omega, true);
}

inline std::vector<std::pair<int, int>> edges_from_prufer(const std::vector<int>& code) {
    const int n = static_cast<int>(code.size()) + 2;
    std::vector<int> deg(n + 1, 1);
    for (int c : code) ++deg[c];
    std::vector<std::pair<int, int>> edges;
    for (int c : code) {
        for (int v = 1; v <= n; ++v) {
            if (deg[v] == 1) {
                edges.emplace_back(v, c);
                deg[v] = 0;
                --deg[c];
                break;
            }
        }
    }
    int a = 0;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) {
            if (a == 0)
                a = v;
            else
                edges.emplace_back(a, v);
        }
    return edges;
}

inline WeightedGraph random_tree(std::mt19937_64& rng, int n, long long wmax,
                                 long long cmax = 0) {
    if (cmax == 0) cmax = wmax;
    std::vector<std::tuple<int, int, long long>> edges;
    if (n >= 2) {
        std::vector<int> code(n - 2);
        std::uniform_int_distribution<int> vd(1, n);
        for (int& c : code) c = vd(rng);
        std::uniform_int_distribution<long long> cd(1, cmax);
        for (auto [u, v] : edges_from_prufer(code)) edges.emplace_back(u, v, cd(rng));
    }
    std::vector<long long> omega(n);
    std::uniform_int_distribution<long long> wd(1, wmax);
    for (auto& w : omega) w = wd(rng);
    return make_graph(n, edges, omega, true);
}

// Scaling shapes with unit-magnitude weights.
enum class TreeShape { Path, Star, RandomAttachment };

inline WeightedGraph shaped_tree(TreeShape shape, int n, std::mt19937_64& rng) {
    std::vector<std::tuple<int, int, long long>> edges;
    switch (shape) {
        case TreeShape::Path:
            for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1, 1);
            break;
        case TreeShape::Star:
            for (int i = 2; i <= n; ++i) edges.emplace_back(1, i, 1);
            break;
        case TreeShape::RandomAttachment:
            for (int i = 2; i <= n; ++i) {
                std::uniform_int_distribution<int> pd(1, i - 1);
                edges.emplace_back(pd(rng), i, 1);
            }
            break;
    }
    return make_graph(n, edges, std::vector<long long>(n, 1), true);
}

inline VertexSet vs(std::vector<VertexId> ids) { return VertexSet(std::move(ids)); }

inline isot::Subpartition sp(std::vector<std::vector<VertexId>> parts) {
    isot::Subpartition out;
    for (auto& p : parts) out.parts.push_back(VertexSet(std::move(p)));
    return out;
}

}  // namespace test_support
