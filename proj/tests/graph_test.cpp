#include <catch2/catch.hpp>

#include <random>

#include "isot/graph.hpp"
#include "isot/io.hpp"
#include "support.hpp"

using namespace isot;
using test_support::make_graph;
using test_support::sp;
using test_support::star;
using test_support::unit_path;
using test_support::vs;

TEST_CASE("graph construction enforces invariants", "[graph]") {
    REQUIRE_THROWS_AS(make_graph(2, {{1, 2, 1}}, {1, 0}, true), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(2, {{1, 2, 0}}, {1, 1}, true), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(2, {{1, 1, 1}}, {1, 1}, false), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(2, {{1, 2, 1}, {2, 1, 2}}, {1, 1}, false),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(3, {{1, 2, 1}}, {1, 1, 1}, true), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}}, {1, 1, 1}, true),
                      std::invalid_argument);
    const WeightedGraph g = make_graph(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}}, {1, 1, 1}, false);
    REQUIRE_FALSE(g.is_tree());
    REQUIRE(g.connected());
}

TEST_CASE("parse smallest tree", "[graph]") {
    const WeightedGraph g = parse_instance("tree 2\nv 1 1\nv 2 1\ne 1 2 1");
    REQUIRE(g.size() == 2);
    REQUIRE(g.is_tree());
    REQUIRE(g.omega(1) == Rational(1));
    REQUIRE(g.omega(2) == Rational(1));
    REQUIRE(g.edges().size() == 1);
    REQUIRE(g.edges()[0].c == Rational(1));
}

TEST_CASE("parse the sharpness star", "[graph]") {
    const WeightedGraph g = parse_instance(
        "tree 4\nv 1 3\nv 2 5\nv 3 5\nv 4 5\ne 1 2 1\ne 1 3 1\ne 1 4 1");
    REQUIRE(g.size() == 4);
    REQUIRE(g.omega(1) == Rational(3));
    REQUIRE(g.omega(4) == Rational(5));
    REQUIRE(g.is_tree());
}

TEST_CASE("parse errors carry line numbers", "[graph]") {
    REQUIRE_THROWS_AS(parse_instance("tree 2\nv 1 1\nv 2 0\ne 1 2 1"), ParseError);
    try {
        parse_instance("tree 2\nv 1 1\nv 2 0\ne 1 2 1");
    } catch (const ParseError& e) {
        REQUIRE(e.line == 3);
    }
    REQUIRE_THROWS_AS(parse_instance("tree 2\nv 1 1\nv 2 1\ne 1 2 1\ne 2 1 1"), ParseError);
    REQUIRE_THROWS_AS(parse_instance("tree 2\nv 1 1\nv 2 1"), ParseError);
    REQUIRE_THROWS_AS(parse_instance("tree 2\nv 1 1\nv 3 1\ne 1 2 1"), ParseError);
    REQUIRE_THROWS_AS(parse_instance("graph 2\nv 1 1\ne 1 2 1"), ParseError);
    REQUIRE_THROWS_AS(parse_instance("tree 3\nv 1 1\nv 2 1\nv 3 1\ne 1 2 1\ne 1 3 1\ne 2 3 1"),
                      ParseError);
    REQUIRE_THROWS_AS(parse_instance(""), ParseError);
    REQUIRE_THROWS_AS(parse_instance("tree 2\nv 1 1\nv 2 1\nq 1 2"), ParseError);
}

TEST_CASE("comments and gamma fields parse", "[graph]") {
    const WeightedGraph g = parse_instance(
        "# a comment\ngraph 2\nv 1 3/2 5\nv 2 1\n# another\ne 1 2 2/3");
    REQUIRE(g.omega(1) == Rational(3, 2));
    REQUIRE(g.gamma(1) == Rational(5));
    REQUIRE(g.gamma(2) == Rational(0));
    REQUIRE(g.edges()[0].c == Rational(2, 3));
    REQUIRE_FALSE(g.is_tree());
}

TEST_CASE("serialize renders rationals and gamma", "[graph]") {
    const WeightedGraph g = parse_instance("tree 2\nv 1 3/2 5\nv 2 1\ne 1 2 1");
    const std::string text = serialize_instance(g);
    REQUIRE(text == "tree 2\nv 1 3/2 5\nv 2 1\ne 1 2 1\n");
}

TEST_CASE("parse/serialize round trip on random instances", "[graph]") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 120; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 9);
        WeightedGraph g = test_support::random_tree(rng, n, 9);
        const std::string text = serialize_instance(g);
        const WeightedGraph h = parse_instance(text);
        REQUIRE(serialize_instance(h) == text);
        REQUIRE(h.size() == g.size());
        REQUIRE(h.is_tree() == g.is_tree());
        for (VertexId v = 1; v <= g.size(); ++v) REQUIRE(h.omega(v) == g.omega(v));
    }
}

TEST_CASE("witness format round trips", "[graph]") {
    const Subpartition w = sp({{2, 1}, {4}, {3, 5}});
    const std::string text = format_witness(w);
    REQUIRE(text == "part 1: 1 2\npart 2: 4\npart 3: 3 5\n");
    REQUIRE(parse_witness(text) == w);
    REQUIRE(parse_witness("part 2: 4\n# note\npart 1 : 1 2\n").parts ==
            std::vector<VertexSet>{vs({1, 2}), vs({4})});
    REQUIRE_THROWS_AS(parse_witness("part 1: 1\npart 3: 2\n"), ParseError);
    REQUIRE_THROWS_AS(parse_witness("part 1:\n"), ParseError);
    REQUIRE_THROWS_AS(parse_witness(""), ParseError);
    REQUIRE_THROWS_AS(parse_witness("piece 1: 1\n"), ParseError);
}

TEST_CASE("the parser rejects malformed lines without crashing", "[graph]") {
    const std::vector<std::string> bad = {
        "tree 2\nv 1 1 -1\nv 2 1\ne 1 2 1",    // negative gamma
        "tree 2\nv 1 1\nv 2 1\ne 1 1 1",       // self loop
        "tree 2\nv 1 1\nv 1 1\ne 1 2 1",       // duplicate vertex
        "tree 2\nv 1 0/3\nv 2 1\ne 1 2 1",     // zero weight
        "tree 2\nv 1 1/0\nv 2 1\ne 1 2 1",     // zero denominator
        "tree x\nv 1 1",                       // bad count
        "tree 2\nv 1 1\nv 2 1\ne 1 2",         // short edge line
        "tree 2\nv one 1\nv 2 1\ne 1 2 1",     // bad id
        "graph -3",                            // negative count
    };
    for (const std::string& text : bad) REQUIRE_THROWS_AS(parse_instance(text), ParseError);

    std::mt19937_64 rng(100003);
    const std::string base = "tree 3\nv 1 1\nv 2 2\nv 3 3\ne 1 2 1\ne 2 3 1\n";
    for (int iter = 0; iter < 400; ++iter) {
        std::string mutated = base;
        const size_t pos = rng() % mutated.size();
        mutated[pos] = static_cast<char>("0123456789ev# /-\n"[rng() % 17]);
        try {
            (void)parse_instance(mutated);
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("cut weights on the star", "[graph]") {
    const WeightedGraph g = star(3, 5);
    REQUIRE(cut_weight(g, vs({1})) == Rational(3));
    REQUIRE(cut_weight(g, vs({1, 2, 3, 4})) == Rational(0));
    REQUIRE_THROWS_AS(cut_weight(g, VertexSet{}), std::invalid_argument);
    REQUIRE_THROWS_AS(cut_weight(g, vs({5})), std::invalid_argument);
}

TEST_CASE("gamma-only cut on an isolated vertex", "[graph]") {
    const WeightedGraph g = make_graph(1, {}, {1}, false, {5});
    REQUIRE(cut_weight(g, vs({1})) == Rational(5));
}

TEST_CASE("normalized flows", "[graph]") {
    const WeightedGraph g = star(3, 5);
    REQUIRE(normalized_flow(g, vs({2})) == Rational(1, 5));
    REQUIRE(normalized_flow(g, vs({1, 2, 3, 4})) == Rational(0));
    const WeightedGraph p = unit_path(3);
    REQUIRE(normalized_flow(p, vs({2})) == Rational(2));
}

TEST_CASE("subpartition costs", "[graph]") {
    const WeightedGraph g = star(3, 5);
    const auto leaves = sp({{2}, {3}, {4}});
    REQUIRE(subpartition_cost(g, leaves, CostVariant::Max) == Rational(1, 5));
    REQUIRE(subpartition_cost(g, leaves, CostVariant::Mean) == Rational(1, 5));
    const WeightedGraph p = unit_path(3);
    REQUIRE(subpartition_cost(p, sp({{1}, {2, 3}}), CostVariant::Mean) == Rational(3, 4));
    REQUIRE_THROWS_AS(subpartition_cost(g, sp({{2}, {2, 3}}), CostVariant::Max),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(subpartition_cost(g, sp({{2}, {}}), CostVariant::Max),
                      std::invalid_argument);
}

TEST_CASE("mean cost at most max cost at most k times mean", "[graph]") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const WeightedGraph g = test_support::random_tree(rng, n, 9);
        // random subpartition from a random labeling
        std::vector<std::vector<VertexId>> parts(1 + rng() % 3);
        for (int v = 1; v <= n; ++v) {
            const size_t slot = rng() % (parts.size() + 1);
            if (slot < parts.size()) parts[slot].push_back(v);
        }
        isot::Subpartition cand;
        for (auto& p : parts)
            if (!p.empty()) cand.parts.push_back(VertexSet(std::move(p)));
        if (cand.parts.empty()) continue;
        const int k = cand.k();
        const Rational mean = subpartition_cost(g, cand, CostVariant::Mean);
        const Rational max = subpartition_cost(g, cand, CostVariant::Max);
        REQUIRE(mean <= max);
        REQUIRE(max <= Rational(k) * mean);
        REQUIRE(mean >= Rational(0));
    }
}

TEST_CASE("flows are nonnegative and vanish exactly with the cut", "[graph]") {
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const WeightedGraph g = test_support::random_tree(rng, n, 9);
        std::vector<VertexId> ids;
        for (VertexId v = 1; v <= n; ++v)
            if (rng() % 2) ids.push_back(v);
        if (ids.empty()) ids.push_back(1);
        const VertexSet a(ids);
        const Rational flow = normalized_flow(g, a);
        REQUIRE(flow >= Rational(0));
        REQUIRE((flow.is_zero()) == (cut_weight(g, a).is_zero()));
    }
}

TEST_CASE("components after removal", "[graph]") {
    const WeightedGraph p = unit_path(4);
    const auto one =
        components_after_removal(p, std::vector<std::pair<VertexId, VertexId>>{{2, 3}});
    REQUIRE(one == std::vector<VertexSet>{vs({1, 2}), vs({3, 4})});
    const auto two =
        components_after_removal(p, std::vector<std::pair<VertexId, VertexId>>{{1, 2}, {3, 4}});
    REQUIRE(two == std::vector<VertexSet>{vs({1}), vs({2, 3}), vs({4})});
    const auto none = components_after_removal(p, std::vector<int>{});
    REQUIRE(none == std::vector<VertexSet>{vs({1, 2, 3, 4})});
    REQUIRE_THROWS_AS(components_after_removal(
                          p, std::vector<std::pair<VertexId, VertexId>>{{1, 3}}),
                      std::invalid_argument);
}

TEST_CASE("quotient contracts one edge of a path", "[graph]") {
    const WeightedGraph p = unit_path(4);
    const auto q = quotient(p, sp({{1, 2}, {3}, {4}}));
    REQUIRE(q.graph.size() == 3);
    REQUIRE(q.graph.is_tree());
    REQUIRE(q.graph.omega(1) == Rational(2));
    REQUIRE(q.graph.omega(2) == Rational(1));
    REQUIRE(q.graph.omega(3) == Rational(1));
    REQUIRE(q.graph.edges().size() == 2);
    REQUIRE(q.graph.edges()[0].c == Rational(1));
    REQUIRE(q.vertex_map[1] == q.vertex_map[2]);
    REQUIRE(q.vertex_map[3] != q.vertex_map[1]);
}

TEST_CASE("quotient splits disconnected parts into components", "[graph]") {
    const WeightedGraph p = unit_path(3);
    const auto q = quotient(p, sp({{1, 3}, {2}}));
    REQUIRE(q.graph.size() == 3);
    REQUIRE(q.graph.omega(1) == Rational(1));
    REQUIRE(q.graph.edges().size() == 2);
    // both remaining edges attach to the image of vertex 2
    const VertexId hub = q.vertex_map[2];
    for (const Edge& e : q.graph.edges()) REQUIRE((e.u == hub || e.v == hub));
}

TEST_CASE("singleton quotient is the identity", "[graph]") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const WeightedGraph g = test_support::random_tree(rng, n, 9);
        isot::Subpartition singletons;
        for (int v = 1; v <= n; ++v) singletons.parts.push_back(vs({v}));
        const auto q = quotient(g, singletons);
        REQUIRE(serialize_instance(q.graph) == serialize_instance(g));
    }
}

TEST_CASE("quotient preserves cuts and weights of part unions", "[graph]") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 150; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const WeightedGraph g = test_support::random_tree(rng, n, 9);
        // random partition into up to 3 parts
        const int k = 2 + static_cast<int>(rng() % 2);
        std::vector<std::vector<VertexId>> buckets(k);
        for (int v = 1; v <= n; ++v) buckets[rng() % k].push_back(v);
        isot::Partition pi;
        for (auto& b : buckets)
            if (!b.empty()) pi.parts.push_back(VertexSet(std::move(b)));
        if (pi.parts.size() < 2) continue;
        const auto q = quotient(g, pi);
        // preimage of the quotient image of part 0 has identical cut/weight
        const VertexSet& part = pi.parts[0];
        std::vector<char> chosen(q.graph.size() + 1, 0);
        for (VertexId v : part.ids) chosen[q.vertex_map[v]] = 1;
        std::vector<VertexId> image;
        for (VertexId u = 1; u <= q.graph.size(); ++u)
            if (chosen[u]) image.push_back(u);
        REQUIRE(cut_weight(q.graph, VertexSet(image)) == cut_weight(g, part));
        REQUIRE(set_weight(q.graph, VertexSet(image)) == set_weight(g, part));
        REQUIRE(normalized_flow(q.graph, VertexSet(image)) == normalized_flow(g, part));
    }
}
