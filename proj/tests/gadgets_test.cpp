#include <catch2/catch.hpp>

#include <random>

#include "isot/exact.hpp"
#include "isot/gadgets.hpp"
#include "isot/io.hpp"
#include "isot/oracle.hpp"
#include "support.hpp"

using namespace isot;
using test_support::make_graph;
using test_support::sp;
using test_support::unit_path;
using test_support::vs;

TEST_CASE("star family closed forms", "[gadgets]") {
    const GeneratedInstance g = star_family(3, 5);
    REQUIRE(g.graph.size() == 4);
    REQUIRE(g.k == 3);
    REQUIRE(g.threshold == Rational(1, 5));
    REQUIRE(g.closed_forms.at(Problem::IppMax) == Rational(1, 5));
    REQUIRE(g.closed_forms.at(Problem::NcpMax) == Rational(1, 4));
    REQUIRE(g.closed_forms.at(Problem::IppMean) == Rational(1, 5));
    REQUIRE(g.closed_forms.at(Problem::NcpMean) == Rational(13, 60));

    REQUIRE(star_family(3, 3).closed_forms.at(Problem::NcpMax) == Rational(1, 3));
    REQUIRE_THROWS_AS(star_family(2, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(star_family(3, 2), std::invalid_argument);
}

TEST_CASE("star family closed forms match the oracle", "[gadgets]") {
    for (int k : {3, 4, 5}) {
        for (long long t : {static_cast<long long>(k), static_cast<long long>(k) + 1, 10LL}) {
            const GeneratedInstance g = star_family(k, t);
            const OracleBatch b = oracle_all(g.graph, k);
            REQUIRE(b.ipp_max.value == g.closed_forms.at(Problem::IppMax));
            REQUIRE(b.ipp_mean.value == g.closed_forms.at(Problem::IppMean));
            REQUIRE(b.ncp_max.value == g.closed_forms.at(Problem::NcpMax));
            REQUIRE(b.ncp_mean.value == g.closed_forms.at(Problem::NcpMean));
        }
    }
}

TEST_CASE("3-partition to subset average", "[gadgets]") {
    const SubsetAverageInstance a = three_partition_to_subset_average({3, 3, 4}, 1, 10);
    REQUIRE(a.y == std::vector<long long>{14, 14, 15, 1});
    REQUIRE(a.alpha == 11);
    const SubsetAverageInstance b =
        three_partition_to_subset_average({3, 3, 4, 3, 3, 4}, 2, 10);
    REQUIRE(b.y == std::vector<long long>{14, 14, 15, 14, 14, 15, 1, 1});
    REQUIRE(b.alpha == 11);
    REQUIRE_THROWS_AS(three_partition_to_subset_average({1, 1, 2}, 1, 4),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(three_partition_to_subset_average({3, 3, 3}, 1, 10),
                      std::invalid_argument);
}

namespace {

// exhaustive 3-PARTITION decision for m <= 2
bool three_partition_yes(const std::vector<long long>& x, int m, long long B) {
    const int n = static_cast<int>(x.size());
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) {
            std::vector<long long> sums(m, 0);
            for (int j = 0; j < n; ++j) sums[assign[j]] += x[j];
            for (long long s : sums)
                if (s != B) return false;
            return true;
        }
        for (int g = 0; g < m; ++g) {
            assign[i] = g;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

// exhaustive SUBSET AVERAGE decision
bool subset_average_yes(const std::vector<long long>& y, int m, long long alpha) {
    const int n = static_cast<int>(y.size());
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) {
            std::vector<long long> sums(m, 0), counts(m, 0);
            for (int j = 0; j < n; ++j) {
                sums[assign[j]] += y[j];
                counts[assign[j]] += 1;
            }
            for (int g = 0; g < m; ++g)
                if (counts[g] == 0 || sums[g] != alpha * counts[g]) return false;
            return true;
        }
        for (int g = 0; g < m; ++g) {
            assign[i] = g;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

TEST_CASE("3-partition reduction preserves yes and no instances", "[gadgets]") {
    // B <= 12 has only yes instances; B = 15 brings genuine no instances
    // such as (4,4,4,6,6,6).
    int yes_seen = 0, no_seen = 0;
    for (long long B = 4; B <= 15; ++B) {
        for (int m : {1, 2}) {
            // all multisets of 3m values in (B/4, B/2) summing to m*B
            std::vector<long long> range;
            for (long long v = B / 4 + 1; 2 * v < B; ++v) range.push_back(v);
            if (range.empty()) continue;
            std::vector<long long> x;
            auto rec = [&](auto&& self, size_t lo, long long left) -> void {
                if (static_cast<int>(x.size()) == 3 * m) {
                    if (left != 0) return;
                    const auto inst = three_partition_to_subset_average(x, m, B);
                    const bool src = three_partition_yes(x, m, B);
                    const bool dst = subset_average_yes(inst.y, inst.m, inst.alpha);
                    REQUIRE(src == dst);
                    (src ? yes_seen : no_seen) += 1;
                    return;
                }
                for (size_t i = lo; i < range.size(); ++i) {
                    if (range[i] > left) break;
                    x.push_back(range[i]);
                    self(self, i, left - range[i]);
                    x.pop_back();
                }
            };
            rec(rec, 0, static_cast<long long>(m) * B);
        }
    }
    REQUIRE(yes_seen > 0);
    REQUIRE(no_seen > 0);
}

TEST_CASE("subset average tree with the default l", "[gadgets]") {
    const GeneratedInstance g = subset_average_to_tree({1, 3}, 1);
    REQUIRE(g.graph.size() == 193);
    REQUIRE(g.k == 192);
    REQUIRE(g.threshold == Rational(1, 2));
    REQUIRE(g.graph.is_tree());
    REQUIRE(g.graph.omega(1) == Rational(4));   // center: n*alpha
    REQUIRE(g.graph.omega(2) == Rational(96));  // l*y_1
    REQUIRE(g.graph.omega(3) == Rational(288)); // l*y_2
}

TEST_CASE("subset average tree with an explicit l", "[gadgets]") {
    const GeneratedInstance g = subset_average_to_tree({1, 3}, 1, 2);
    REQUIRE(g.graph.size() == 5);
    REQUIRE(g.k == 4);
    REQUIRE(g.threshold == Rational(1, 2));
    const Partition witness = sp({{1}, {2, 3}, {4}, {5}});
    validate_partition(g.graph, witness);
    REQUIRE(subpartition_cost(g.graph, witness, CostVariant::Max) == Rational(1, 2));
    REQUIRE_THROWS_AS(subset_average_to_tree({1, 2}, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(subset_average_to_tree({1, 3}, 1, 1), std::invalid_argument);
}

TEST_CASE("subset average yes instances stay yes on the tree at desk scale", "[gadgets]") {
    const std::vector<std::pair<std::vector<long long>, int>> instances = {
        {{1, 3}, 1}, {{2, 2}, 1}, {{2, 2}, 2}, {{1, 2, 3}, 1},
        {{1, 2, 3}, 2}, {{2, 2, 2}, 2}, {{1, 1, 4}, 1}, {{3, 3, 3}, 3}};
    for (const auto& [y, m] : instances) {
        long long sum = 0;
        for (long long v : y) sum += v;
        if (sum % static_cast<long long>(y.size()) != 0) continue;
        const long long alpha = sum / static_cast<long long>(y.size());
        if (!subset_average_yes(y, m, alpha)) continue;
        const GeneratedInstance g = subset_average_to_tree(y, m, 2);
        OracleOptions opts;
        opts.cap_override = g.graph.size();
        const SolveResult r =
            oracle_value(g.graph, g.k, Problem::NcpMax, false, opts);
        REQUIRE(r.value <= g.threshold);
    }
}

TEST_CASE("separation bound", "[gadgets]") {
    const WeightedGraph p = unit_path(3);
    REQUIRE(separation_bound(p, vs({1})) == Rational(8));
    REQUIRE(separation_bound(p, vs({1, 3})) == Rational(4));
    const WeightedGraph doubled =
        make_graph(3, {{1, 2, 2}, {2, 3, 2}}, {1, 1, 1}, true);
    REQUIRE(separation_bound(doubled, vs({1})) == Rational(8));
    REQUIRE_THROWS_AS(separation_bound(p, vs({1, 2, 3})), std::invalid_argument);
    REQUIRE_THROWS_AS(separation_bound(p, VertexSet{}), std::invalid_argument);
}

TEST_CASE("equipartition tree formulas", "[gadgets]") {
    const long long d = 3, D = 7;
    const GeneratedInstance g = equipartition_to_tree({1, 1, 1, 1}, d, D);
    REQUIRE(g.graph.size() == 9);
    REQUIRE(g.k == 7);
    REQUIRE(g.graph.omega(1) == Rational(2 * d * 2));  // 2dB with B=2
    REQUIRE(g.graph.omega(2) == Rational(2));          // u_1: 2x_1
    REQUIRE(g.graph.omega(6) == Rational(2 * D));      // v_1
    // every chain edge weighs 4(d+1)^2
    for (const Edge& e : g.graph.edges()) REQUIRE(e.c == Rational(4 * (d + 1) * (d + 1)));
    const Rational expected_n = Rational(8 * (d + 1) * (d + 1)) + Rational(4) +
                                Rational(4 * d) +
                                Rational(8 * (d + 1) * (d + 1)) / Rational(D);
    REQUIRE(g.threshold == expected_n / Rational(7));
    REQUIRE_THROWS_AS(equipartition_to_tree({1, 2}, 1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(equipartition_to_tree({}, 1, 1), std::invalid_argument);
}

TEST_CASE("equipartition reduction decides at desk scale", "[gadgets]") {
    OracleOptions opts;
    opts.cap_override = 9;
    // yes: x = (1,1,1,1), I = {1,2} sums to B = 2
    {
        const GeneratedInstance g = equipartition_to_tree({1, 1, 1, 1}, 48, 400000);
        const SolveResult r = oracle_value(g.graph, g.k, Problem::NcpMean, false, opts);
        REQUIRE(r.value == g.threshold);
    }
    // no: x = (1,1,1,3) has no half-size subset summing to B = 3
    {
        const GeneratedInstance g = equipartition_to_tree({1, 1, 1, 3}, 48, 400000);
        const SolveResult r = oracle_value(g.graph, g.k, Problem::NcpMean, false, opts);
        REQUIRE(r.value > g.threshold);
    }
}

TEST_CASE("partition to bipartite", "[gadgets]") {
    const GeneratedInstance g = partition_to_bipartite({1, 2, 3}, 100);
    REQUIRE(g.graph.size() == 5);
    REQUIRE(g.k == 2);
    REQUIRE(g.threshold == Rational(3, 103));
    REQUIRE_FALSE(g.graph.is_tree());
    REQUIRE(oracle_value(g.graph, 2, Problem::NcpMax).value <= g.threshold);

    const GeneratedInstance h = partition_to_bipartite({1, 1}, 100);
    REQUIRE(h.threshold == Rational(2, 101));
    REQUIRE(oracle_value(h.graph, 2, Problem::NcpMax).value <= h.threshold);

    REQUIRE_THROWS_AS(partition_to_bipartite({1, 1, 1}), std::invalid_argument);
}

TEST_CASE("partition to bipartite with the default separation weight", "[gadgets]") {
    // default M on the unit graph: 2 * C * W / c0 = 2 * 2n * 2B
    const GeneratedInstance g = partition_to_bipartite({1, 2, 3});
    REQUIRE(g.graph.omega(1) == Rational(8 * 3 * 3));
    const std::vector<std::pair<std::vector<long long>, bool>> cases = {
        {{1, 1}, true}, {{1, 2, 3}, true}, {{1, 1, 4}, true},
        {{1, 1, 1, 1}, true}, {{1, 2, 4, 5}, true}, {{1, 1, 6}, true},
        {{3, 3, 4}, true}, {{1, 2, 7}, true}};
    for (const auto& [x, _] : cases) {
        long long sum = 0;
        for (long long v : x) sum += v;
        if (sum % 2 != 0) continue;
        const long long B = sum / 2;
        // exhaustive PARTITION decision
        bool yes = false;
        for (long long mask = 0; mask < (1LL << x.size()); ++mask) {
            long long s = 0;
            for (size_t i = 0; i < x.size(); ++i)
                if (mask & (1LL << i)) s += x[i];
            if (s == B) yes = true;
        }
        const GeneratedInstance inst = partition_to_bipartite(x);
        const SolveResult r = oracle_value(inst.graph, 2, Problem::NcpMax);
        REQUIRE((r.value <= inst.threshold) == yes);
    }
}

TEST_CASE("vertex unitarization gadgets", "[gadgets]") {
    // already unit: unchanged
    const WeightedGraph e = unit_path(2);
    const VertexUnitarization u1 = unitarize_vertex_weights(e);
    REQUIRE(u1.chi == BigInt(1));
    REQUIRE(serialize_instance(u1.graph) == serialize_instance(e));

    // edge with omega (2,1), c = 3: chi = 3, pendants 5 and 2
    const WeightedGraph g = make_graph(2, {{1, 2, 3}}, {2, 1}, true);
    const VertexUnitarization u2 = unitarize_vertex_weights(g);
    REQUIRE(u2.chi == BigInt(3));
    REQUIRE(u2.graph.size() == 2 + 5 + 2);
    for (VertexId v = 1; v <= u2.graph.size(); ++v)
        REQUIRE(u2.graph.omega(v) == Rational(1));
    REQUIRE(u2.graph.neighbors(1).size() == 6);  // v2 plus 5 pendants
    REQUIRE(u2.graph.neighbors(2).size() == 3);

    // unit star with three unit edges: chi = 3, everyone gains 2 pendants
    const WeightedGraph s = make_graph(4, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}},
                                       {1, 1, 1, 1}, true);
    const VertexUnitarization u3 = unitarize_vertex_weights(s);
    REQUIRE(u3.chi == BigInt(3));
    REQUIRE(u3.graph.size() == 12);

    const WeightedGraph frac = make_graph(2, {{1, 2, 1}}, {1, 1}, true);
    REQUIRE_NOTHROW(unitarize_vertex_weights(frac));
    const WeightedGraph with_gamma = make_graph(2, {{1, 2, 1}}, {1, 1}, true, {1, 0});
    REQUIRE_THROWS_AS(unitarize_vertex_weights(with_gamma), std::invalid_argument);
}

TEST_CASE("vertex unitarization preserves scaled normalized cuts", "[gadgets]") {
    std::mt19937_64 rng(109);
    for (int iter = 0; iter < 12; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const WeightedGraph g = test_support::random_tree(rng, n, 3, 3);
        const VertexUnitarization u = unitarize_vertex_weights(g);
        if (u.graph.size() > 14) continue;
        for (int k = 2; k <= std::min(3, n); ++k) {
            OracleOptions opts;
            opts.cap_override = 14;
            const Rational lhs = oracle_value(g, k, Problem::NcpMax, false, opts).value;
            const Rational rhs =
                oracle_value(u.graph, k, Problem::NcpMax, false, opts).value;
            REQUIRE(lhs == Rational(u.chi) * rhs);
        }
    }
}

TEST_CASE("edge unitarization gadgets", "[gadgets]") {
    // unit edge, c=1, N=1: path with one subdivision vertex
    const WeightedGraph e = unit_path(2);
    const EdgeUnitarization u1 = unitarize_edge_weights(e, Rational(1));
    REQUIRE(u1.graph.size() == 3);
    REQUIRE(u1.psi == BigInt(2 * 1 * 1 * 1 + 1));
    REQUIRE(u1.graph.omega(1) == Rational(u1.psi));
    REQUIRE(u1.graph.omega(3) == Rational(1));
    REQUIRE(u1.graph.is_tree());
    REQUIRE(u1.threshold == Rational(1) / Rational(u1.psi));

    // c=2 splits into two parallel length-2 paths
    const WeightedGraph g = make_graph(2, {{1, 2, 2}}, {1, 1}, true);
    const EdgeUnitarization u2 = unitarize_edge_weights(g, Rational(1, 2));
    REQUIRE(u2.graph.size() == 4);
    REQUIRE(u2.graph.neighbors(1).size() == 2);
    REQUIRE(u2.graph.neighbors(3).size() == 2);
    REQUIRE_FALSE(u2.graph.is_tree());
    REQUIRE(u2.psi == BigInt(2 * 2 * 2 * 2 + 1));

    const WeightedGraph heavy = make_graph(2, {{1, 2, 1}}, {2, 1}, true);
    REQUIRE_THROWS_AS(unitarize_edge_weights(heavy, Rational(1)), std::invalid_argument);
}

TEST_CASE("edge unitarization preserves the decision at the optimum", "[gadgets]") {
    std::mt19937_64 rng(113);
    int checked = 0;
    for (int iter = 0; iter < 20; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 3);
        WeightedGraph base = test_support::random_tree(rng, n, 1, 3);
        for (int k = 2; k <= std::min(3, n); ++k) {
            const Rational opt = oracle_value(base, k, Problem::NcpMax).value;
            const EdgeUnitarization u = unitarize_edge_weights(base, opt);
            if (u.graph.size() > 14) continue;
            OracleOptions opts;
            opts.cap_override = 14;
            const Rational mapped =
                oracle_value(u.graph, k, Problem::NcpMax, false, opts).value;
            REQUIRE(mapped <= u.threshold);
            const Rational below = opt * Rational(999, 1000);
            const EdgeUnitarization ub = unitarize_edge_weights(base, below);
            const Rational mapped_below =
                oracle_value(ub.graph, k, Problem::NcpMax, false, opts).value;
            REQUIRE(mapped_below > ub.threshold);
            ++checked;
        }
    }
    REQUIRE(checked > 0);
}

TEST_CASE("rational weights rescale to integers", "[gadgets]") {
    const WeightedGraph g = parse_instance("tree 2\nv 1 3/2\nv 2 5/6\ne 1 2 7/4");
    const IntegralScaling s = make_integral(g);
    REQUIRE(s.omega_scale == BigInt(6));
    REQUIRE(s.edge_scale == BigInt(4));
    REQUIRE(s.graph.omega(1) == Rational(9));
    REQUIRE(s.graph.omega(2) == Rational(5));
    REQUIRE(s.graph.edges()[0].c == Rational(7));
    // values scale by edge_scale/omega_scale
    const Rational before = oracle_value(g, 2, Problem::NcpMax).value;
    const Rational after = oracle_value(s.graph, 2, Problem::NcpMax).value;
    REQUIRE(after == before * Rational(4) / Rational(6));
}
