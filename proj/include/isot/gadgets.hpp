#pragma once

// Instance generators: the sharp star family, the reduction gadgets
// (3-PARTITION -> SUBSET AVERAGE -> tree, EQUIPARTITION -> tree,
// PARTITION -> bipartite), the heavy-vertex separation bound, and the
// two-step unitarization that trades weights for pendant and subdivision
// gadgets.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isot/graph.hpp"

namespace isot {

struct GeneratedInstance {
    WeightedGraph graph;
    int k = 0;
    Rational threshold;
    std::vector<std::pair<std::string, std::string>> provenance;
    std::map<Problem, Rational> closed_forms;
};

namespace gadget_detail {

constexpr long long kMaxVertices = 50'000'000;

inline std::string join(const std::vector<long long>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace gadget_detail

// Star with center weight k, k leaves of weight t and unit edges. The gap
// between its isoperimetric numbers and normalized cuts approaches the
// worst-case ratios as t grows.
inline GeneratedInstance star_family(int k, long long t) {
    if (k < 3) throw std::invalid_argument("star family requires k >= 3");
    if (t < k) throw std::invalid_argument("star family requires t >= k");
    std::vector<Rational> omega;
    omega.emplace_back(k);
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        omega.emplace_back(t);
        edges.push_back({1, i + 2, Rational(1)});
    }
    GeneratedInstance inst;
    inst.graph = WeightedGraph::create(k + 1, std::move(omega), {}, std::move(edges), true);
    inst.k = k;
    inst.threshold = Rational(1, t);
    inst.closed_forms[Problem::IppMax] = Rational(1, t);
    inst.closed_forms[Problem::IppMean] = Rational(1, t);
    inst.closed_forms[Problem::NcpMax] = Rational(k - 1, t + k);
    inst.closed_forms[Problem::NcpMean] =
        (Rational(1) - Rational(1, k)) * (Rational(1, t + k) + Rational(1, t));
    inst.provenance = {{"family", "star"}, {"t", std::to_string(t)}};
    return inst;
}

struct SubsetAverageInstance {
    std::vector<long long> y;
    int m = 0;
    long long alpha = 0;
};

// 3-PARTITION -> SUBSET AVERAGE: y_i = x_i + B + 1 for the 3m source
// numbers plus m extra ones; the average becomes alpha = B + 1.
inline SubsetAverageInstance three_partition_to_subset_average(
    const std::vector<long long>& x, int m, long long B) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (static_cast<long long>(x.size()) != 3LL * m)
        throw std::invalid_argument("3-PARTITION needs exactly 3m numbers");
    long long sum = 0;
    for (long long xi : x) {
        if (4 * xi <= B || 2 * xi >= B)
            throw std::invalid_argument("3-PARTITION numbers must satisfy B/4 < x < B/2");
        sum += xi;
    }
    if (sum != static_cast<long long>(m) * B)
        throw std::invalid_argument("3-PARTITION numbers must sum to m*B");
    SubsetAverageInstance out;
    out.m = m;
    out.alpha = B + 1;
    out.y.reserve(4 * m);
    for (long long xi : x) out.y.push_back(xi + B + 1);
    for (int i = 0; i < m; ++i) out.y.push_back(1);
    return out;
}

// SUBSET AVERAGE -> max normalized cut on a tree: center u of weight
// n*alpha, children u_i of weight l*y_i, and l-1 grandchildren of weight
// alpha under each u_i; unit edges, k = n(l-1)+m+1, threshold 1/alpha.
// With the default l the reduction is an equivalence; an explicit smaller l
// certifies only the forward direction.
inline GeneratedInstance subset_average_to_tree(const std::vector<long long>& y, int m,
                                                std::optional<long long> l_override = {}) {
    const int n = static_cast<int>(y.size());
    if (n < 1) throw std::invalid_argument("empty SUBSET AVERAGE instance");
    if (m < 1 || m > n) throw std::invalid_argument("SUBSET AVERAGE requires 1 <= m <= n");
    long long sum = 0;
    for (long long yi : y) {
        if (yi < 1) throw std::invalid_argument("SUBSET AVERAGE numbers must be positive");
        sum += yi;
    }
    if (sum % n != 0)
        throw std::invalid_argument("SUBSET AVERAGE requires an integral average");
    const long long alpha = sum / n;

    const bool l_default = !l_override.has_value();
    BigInt l_big;
    if (l_default) {
        l_big = pow_u(BigInt(alpha), 3) * BigInt(n) * BigInt(n) *
                BigInt(3LL * n - 2LL * m - 1);
    } else {
        if (*l_override < 2) throw std::invalid_argument("l must be at least 2");
        l_big = BigInt(*l_override);
    }
    const BigInt vertex_count = BigInt(n) * l_big + BigInt(1);
    if (!vertex_count.fits_ll() || vertex_count.to_ll() > gadget_detail::kMaxVertices)
        throw std::invalid_argument(
            "default l makes the tree too large to materialize; pass an explicit l");
    const long long l = l_big.to_ll();

    const long long total = n * l + 1;
    std::vector<Rational> omega(static_cast<size_t>(total), Rational(0));
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(total) - 1);
    omega[0] = Rational(static_cast<long long>(n) * alpha);
    for (int i = 1; i <= n; ++i) {
        omega[i] = Rational(l) * Rational(y[i - 1]);
        edges.push_back({1, 1 + i, Rational(1)});
        for (long long j = 1; j <= l - 1; ++j) {
            const long long vid = 1 + n + static_cast<long long>(i - 1) * (l - 1) + j;
            omega[vid - 1] = Rational(alpha);
            edges.push_back({1 + i, static_cast<VertexId>(vid), Rational(1)});
        }
    }

    GeneratedInstance inst;
    inst.graph = WeightedGraph::create(static_cast<int>(total), std::move(omega), {},
                                       std::move(edges), true);
    inst.k = static_cast<int>(n * (l - 1) + m + 1);
    inst.threshold = Rational(1, alpha);
    inst.provenance = {{"source", "subset-average"},
                       {"y", gadget_detail::join(y)},
                       {"m", std::to_string(m)},
                       {"alpha", std::to_string(alpha)},
                       {"l", std::to_string(l)},
                       {"certificate", l_default ? "equivalence" : "forward-only"}};
    return inst;
}

// 2CW/c0 for C the total edge weight, W the vertex weight outside S and c0
// the minimum edge weight: vertices of weight at least this bound end up in
// distinct parts of some minimizer and are never left out.
inline Rational separation_bound(const WeightedGraph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("separation bound needs a nonempty set");
    if (g.edges().empty()) throw std::invalid_argument("separation bound needs edges");
    std::vector<char> in(g.size() + 1, 0);
    for (VertexId v : s.ids) {
        if (v < 1 || v > g.size()) throw std::invalid_argument("vertex id out of range");
        in[v] = 1;
    }
    if (static_cast<int>(s.size()) == g.size())
        throw std::invalid_argument("separation bound needs a proper subset");
    Rational outside_w(0);
    for (VertexId v = 1; v <= g.size(); ++v)
        if (!in[v]) outside_w += g.omega(v);
    Rational total_c(0);
    Rational min_c = g.edges()[0].c;
    for (const Edge& e : g.edges()) {
        total_c += e.c;
        if (e.c < min_c) min_c = e.c;
    }
    return Rational(2) * total_c * outside_w / min_c;
}

// EQUIPARTITION -> mean problems on a spider tree: chains v0 - u_i - v_i
// with both chain edges weighing x_i((d+1)^2 B^2 + Q - B x_i). The decision
// threshold for k = 3n+1 parts is N/k with
// N = n(d+1)^2 B^2 + nQ + dB^2 + (d+1)^2 B^3 / D.
inline GeneratedInstance equipartition_to_tree(const std::vector<long long>& x, long long d,
                                               long long D) {
    if (x.empty() || x.size() % 2 != 0)
        throw std::invalid_argument("EQUIPARTITION needs 2n numbers");
    if (d < 1 || D < 1) throw std::invalid_argument("d and D must be positive");
    const int n = static_cast<int>(x.size()) / 2;
    BigInt sum(0), sum_sq(0);
    for (long long xi : x) {
        if (xi < 1) throw std::invalid_argument("EQUIPARTITION numbers must be positive");
        sum = sum + BigInt(xi);
        sum_sq = sum_sq + BigInt(xi) * BigInt(xi);
    }
    if (sum.odd()) throw std::invalid_argument("EQUIPARTITION numbers must have an even sum");
    const BigInt B = sum / BigInt(2);
    const BigInt Q = sum_sq / BigInt(2);  // sum of squares has the parity of the sum
    const BigInt dp1_sq = BigInt(d + 1) * BigInt(d + 1);
    const BigInt base = dp1_sq * B * B + Q;

    const int total = 4 * n + 1;
    std::vector<Rational> omega(total, Rational(0));
    std::vector<Edge> edges;
    omega[0] = Rational(BigInt(2) * BigInt(d) * B);
    std::vector<Rational> chain_c(2 * n);
    for (int i = 1; i <= 2 * n; ++i) {
        const BigInt ci = BigInt(x[i - 1]) * (base - B * BigInt(x[i - 1]));
        if (ci.sign() <= 0) throw std::invalid_argument("degenerate edge weight");
        chain_c[i - 1] = Rational(ci);
        omega[i] = Rational(BigInt(2) * BigInt(x[i - 1]));  // u_i, adjacent to the center
        omega[2 * n + i] = Rational(BigInt(2) * BigInt(D));  // v_i, the leaf
        edges.push_back({1, 1 + i, chain_c[i - 1]});
        edges.push_back({1 + i, 1 + 2 * n + i, chain_c[i - 1]});
    }

    GeneratedInstance inst;
    inst.graph =
        WeightedGraph::create(total, std::move(omega), {}, std::move(edges), true);
    inst.k = 3 * n + 1;
    const Rational big_n = Rational(BigInt(n) * dp1_sq * B * B) + Rational(BigInt(n) * Q) +
                           Rational(BigInt(d) * B * B) +
                           Rational(dp1_sq * B * B * B) / Rational(D);
    inst.threshold = big_n / Rational(inst.k);

    VertexSet heavy;
    heavy.ids.push_back(1);
    for (int i = 1; i <= 2 * n; ++i) heavy.ids.push_back(1 + 2 * n + i);
    std::sort(heavy.ids.begin(), heavy.ids.end());
    const Rational sep = separation_bound(inst.graph, heavy);
    const bool sep_ok = Rational(BigInt(2) * BigInt(d) * B) >= sep &&
                        Rational(2 * D) >= sep;
    // conservative stand-in for "D sufficiently larger than d"; no sharp
    // constant is known
    const bool d_ok = Rational(D) >= Rational(BigInt(d) * B * B * B) * sep;
    inst.provenance = {{"source", "equipartition"},
                       {"x", gadget_detail::join(x)},
                       {"B", B.to_string()},
                       {"Q", Q.to_string()},
                       {"d", std::to_string(d)},
                       {"D", std::to_string(D)},
                       {"N", big_n.to_string()},
                       {"separation-bound", sep.to_string()},
                       {"separation-sufficient", sep_ok ? "yes" : "no"},
                       {"D-sufficient", d_ok ? "yes" : "no"}};
    return inst;
}

// PARTITION -> Cheeger constant of a complete bipartite {u1,u2} x {v_i}
// graph with unit edges: threshold n/(M+B) is reachable iff some subset of
// x sums to B. The default M is the separation bound of the unit-M graph,
// rounded up.
inline GeneratedInstance partition_to_bipartite(const std::vector<long long>& x,
                                                std::optional<long long> m_override = {}) {
    const int n = static_cast<int>(x.size());
    if (n < 1) throw std::invalid_argument("empty PARTITION instance");
    long long sum = 0;
    for (long long xi : x) {
        if (xi < 1) throw std::invalid_argument("PARTITION numbers must be positive");
        sum += xi;
    }
    if (sum % 2 != 0)
        throw std::invalid_argument("PARTITION numbers must have an even sum");
    const long long B = sum / 2;

    auto build = [&](const Rational& m_weight) {
        std::vector<Rational> omega;
        omega.push_back(m_weight);
        omega.push_back(m_weight);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            omega.emplace_back(x[i]);
            edges.push_back({1, 3 + i, Rational(1)});
            edges.push_back({2, 3 + i, Rational(1)});
        }
        return WeightedGraph::create(n + 2, std::move(omega), {}, std::move(edges), false);
    };

    BigInt m_value;
    const bool m_default = !m_override.has_value();
    if (m_default) {
        const WeightedGraph unit = build(Rational(1));
        m_value = separation_bound(unit, VertexSet({1, 2})).ceil();
    } else {
        if (*m_override < 1) throw std::invalid_argument("M must be positive");
        m_value = BigInt(*m_override);
    }

    GeneratedInstance inst;
    inst.graph = build(Rational(m_value));
    inst.k = 2;
    inst.threshold = Rational(BigInt(n), m_value + BigInt(B));
    inst.provenance = {{"source", "partition"},
                       {"x", gadget_detail::join(x)},
                       {"B", std::to_string(B)},
                       {"M", m_value.to_string()},
                       {"M-default", m_default ? "yes" : "no"}};
    return inst;
}

struct VertexUnitarization {
    WeightedGraph graph;
    BigInt chi;
};

// Step 1 of unitarization: scale vertex weights by the smallest chi with
// chi*omega(u) >= sum of incident edge weights everywhere, then replace the
// weight of u by chi*omega(u)-1 unit pendants. Normalized cuts scale by
// exactly chi; thresholds transform as N/chi.
inline VertexUnitarization unitarize_vertex_weights(const WeightedGraph& g) {
    if (!g.gamma_all_zero())
        throw std::invalid_argument("vertex unitarization requires zero ground flows");
    for (VertexId v = 1; v <= g.size(); ++v)
        if (!g.omega(v).is_integer())
            throw std::invalid_argument("vertex unitarization requires integral weights");
    for (const Edge& e : g.edges())
        if (!e.c.is_integer())
            throw std::invalid_argument("vertex unitarization requires integral weights");

    BigInt chi(1);
    for (VertexId v = 1; v <= g.size(); ++v) {
        Rational incident(0);
        for (auto [w, idx] : g.neighbors(v)) {
            (void)w;
            incident += g.edges()[idx].c;
        }
        const BigInt need = (incident / g.omega(v)).ceil();
        if (need > chi) chi = need;
    }

    BigInt total(0);
    std::vector<BigInt> pendants(g.size() + 1);
    for (VertexId v = 1; v <= g.size(); ++v) {
        pendants[v] = chi * g.omega(v).num() - BigInt(1);
        total = total + pendants[v] + BigInt(1);
    }
    if (!total.fits_ll() || total.to_ll() > gadget_detail::kMaxVertices)
        throw std::invalid_argument("unitarized graph too large to materialize");
    const long long n2 = total.to_ll();

    std::vector<Rational> omega(static_cast<size_t>(n2), Rational(1));
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back(e);
    long long next_id = g.size() + 1;
    for (VertexId v = 1; v <= g.size(); ++v) {
        const long long cnt = pendants[v].to_ll();
        for (long long i = 0; i < cnt; ++i)
            edges.push_back({v, static_cast<VertexId>(next_id++), Rational(1)});
    }

    VertexUnitarization out;
    out.graph = WeightedGraph::create(static_cast<int>(n2), std::move(omega), {},
                                      std::move(edges), g.is_tree());
    out.chi = chi;
    return out;
}

struct EdgeUnitarization {
    WeightedGraph graph;
    Rational threshold;
    BigInt psi;
};

// Step 2 of unitarization: replace each edge by c(e) internally disjoint
// length-2 paths through fresh unit vertices; original vertices get weight
// psi. With N = M/L in lowest terms the default psi = n*L*C*|S|+1 makes
// "value <= N" equivalent to "value <= N/psi" on the new graph.
inline EdgeUnitarization unitarize_edge_weights(const WeightedGraph& g, const Rational& n_threshold,
                                                std::optional<BigInt> psi_override = {}) {
    for (VertexId v = 1; v <= g.size(); ++v)
        if (g.omega(v) != Rational(1))
            throw std::invalid_argument("edge unitarization requires unit vertex weights");
    for (const Edge& e : g.edges())
        if (!e.c.is_integer())
            throw std::invalid_argument("edge unitarization requires integral edge weights");
    if (n_threshold.sign() <= 0)
        throw std::invalid_argument("threshold must be positive");

    BigInt subdivisions(0);
    for (const Edge& e : g.edges()) subdivisions = subdivisions + e.c.num();
    const BigInt total_c = subdivisions;

    BigInt psi;
    if (psi_override.has_value()) {
        psi = *psi_override;
        if (psi.sign() <= 0) throw std::invalid_argument("psi must be positive");
    } else {
        psi = BigInt(g.size()) * n_threshold.den() * total_c * subdivisions + BigInt(1);
    }

    const BigInt total = BigInt(g.size()) + subdivisions;
    if (!total.fits_ll() || total.to_ll() > gadget_detail::kMaxVertices)
        throw std::invalid_argument("unitarized graph too large to materialize");
    const long long n2 = total.to_ll();

    std::vector<Rational> omega(static_cast<size_t>(n2), Rational(1));
    for (VertexId v = 1; v <= g.size(); ++v) omega[v - 1] = Rational(psi);
    std::vector<Edge> edges;
    bool all_unit = true;
    long long next_id = g.size() + 1;
    for (const Edge& e : g.edges()) {
        const long long mult = e.c.num().to_ll();
        if (mult != 1) all_unit = false;
        for (long long i = 0; i < mult; ++i) {
            const VertexId s = static_cast<VertexId>(next_id++);
            edges.push_back({e.u, s, Rational(1)});
            edges.push_back({s, e.v, Rational(1)});
        }
    }

    EdgeUnitarization out;
    out.graph = WeightedGraph::create(static_cast<int>(n2), std::move(omega), {},
                                      std::move(edges), g.is_tree() && all_unit);
    out.threshold = n_threshold / Rational(psi);
    out.psi = psi;
    return out;
}

struct IntegralScaling {
    WeightedGraph graph;
    BigInt omega_scale;  // vertex weights were multiplied by this
    BigInt edge_scale;   // edge weights were multiplied by this
};

// Rescales rational weights to integers by the lcm of the denominators.
// Isoperimetric values scale by edge_scale/omega_scale.
inline IntegralScaling make_integral(const WeightedGraph& g) {
    auto lcm_with = [](const BigInt& a, const BigInt& b) {
        return a / BigInt::gcd(a, b) * b;
    };
    BigInt ws(1), es(1);
    for (VertexId v = 1; v <= g.size(); ++v) ws = lcm_with(ws, g.omega(v).den());
    for (const Edge& e : g.edges()) es = lcm_with(es, e.c.den());
    std::vector<Rational> omega, gamma;
    for (VertexId v = 1; v <= g.size(); ++v) {
        omega.push_back(g.omega(v) * Rational(ws));
        gamma.push_back(g.gamma(v) * Rational(es));
    }
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) e.c *= Rational(es);
    IntegralScaling out;
    out.graph = WeightedGraph::create(g.size(), std::move(omega), std::move(gamma),
                                      std::move(edges), g.is_tree());
    out.omega_scale = ws;
    out.edge_scale = es;
    return out;
}

}  // namespace isot
