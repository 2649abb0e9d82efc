#pragma once

// Linear-time decision procedure for the max isoperimetric problem on
// weighted trees with ground flows.
//
// The tree is processed leaves-first (reverse breadth-first order from the
// root). For the current vertex v with parent edge e (c(e) = 0 at the
// root), with omega/gamma accumulated so far:
//
//   1. gamma(v) + c(e) <= N*omega(v):  emit the accumulated set as a part;
//      the parent absorbs c(e) as ground flow.
//   2. else if gamma(v) - c(e) < N*omega(v):  contract v into its parent
//      (set, weight and ground flow accumulate).
//   3. else:  drop the accumulated set; the parent absorbs c(e).
//
// The answer is YES iff k parts get emitted. Every emitted part has
// normalized outgoing flow <= N by the case-1 test, so a YES witness is
// self-certifying.

#include <optional>
#include <stdexcept>
#include <vector>

#include "isot/graph.hpp"

namespace isot {

struct Decision {
    bool yes = false;
    std::optional<Subpartition> witness;     // present iff yes
    std::optional<Rational> witness_value;   // max flow over witness parts
    long long rational_ops = 0;              // elementary rational operations
};

inline Decision decide_ipp_max(const WeightedGraph& t, int k, const Rational& threshold,
                               VertexId root) {
    if (!t.is_tree()) throw std::invalid_argument("decide_ipp_max requires a tree");
    const int n = t.size();
    if (k < 2 || k > n) throw std::invalid_argument("decide_ipp_max requires 2 <= k <= n");
    if (threshold.sign() <= 0)
        throw std::invalid_argument("decide_ipp_max requires a positive threshold");
    if (root < 1 || root > n) throw std::invalid_argument("root out of range");

    long long ops = 0;

    // Per-vertex working state, indexed by breadth-first position from the
    // root so that children precede parents when walked backwards. One
    // packed slot per vertex keeps the accumulated weight, ground flow and
    // splice list on the same cache lines; the leaves-first pass then runs
    // as a single descending stream with parent writes in the previous
    // level. The buffers live in a thread-local workspace so repeated
    // calls (the FPTAS bisection, benchmarks) reuse warm memory instead of
    // re-faulting large allocations; the function stays externally pure.
    struct Slot {
        Rational omega;
        Rational gamma;
        const Rational* edge_c;  // weight of the parent edge, null at the root
        int parent;              // parent position, -1 at the root
        int head, tail, next;    // accumulated set as a spliceable list
    };
    struct Workspace {
        std::vector<Slot> slots;
        std::vector<VertexId> order;
        std::vector<int> pos_of;
    };
    thread_local Workspace ws;
    if (static_cast<int>(ws.slots.size()) < n) ws.slots.resize(n);
    std::vector<Slot>& slots = ws.slots;
    std::vector<VertexId>& order = ws.order;
    order.clear();
    order.reserve(n);
    ws.pos_of.assign(n + 1, -1);
    {
        std::vector<int>& pos_of = ws.pos_of;
        order.push_back(root);
        pos_of[root] = 0;
        slots[0].parent = -1;
        slots[0].edge_c = nullptr;
        for (size_t at = 0; at < order.size(); ++at) {
            const VertexId v = order[at];
            for (auto [w, idx] : t.neighbors(v)) {
                if (pos_of[w] >= 0) continue;
                const int pos = static_cast<int>(order.size());
                pos_of[w] = pos;
                slots[pos].parent = static_cast<int>(at);
                slots[pos].edge_c = &t.edges()[idx].c;
                order.push_back(w);
            }
        }
    }
    const bool no_gamma = t.gamma_all_zero();
    const Rational zero_gamma(0);
    for (int i = 0; i < n; ++i) {
        Slot& s = slots[i];
        s.omega = t.omega(order[i]);
        s.gamma = no_gamma ? zero_gamma : t.gamma(order[i]);
        s.head = s.tail = i;
        s.next = -1;
    }

    struct EmittedPart {
        int head;
        Rational cut, weight;
    };
    std::vector<EmittedPart> parts;
    parts.reserve(k);

    const Rational zero(0);
    for (int i = n; i-- > 0 && static_cast<int>(parts.size()) < k;) {
        Slot& s = slots[i];
        const Rational& ce = s.parent >= 0 ? *s.edge_c : zero;

        const Rational bound = threshold * s.omega;
        ops += 1;
        if (s.gamma + ce <= bound) {
            ops += 2;
            parts.push_back({s.head, s.gamma + ce, s.omega});
            if (s.parent >= 0) {
                slots[s.parent].gamma += ce;
                ops += 1;
            }
        } else if (s.gamma - ce < bound) {
            ops += 4;
            // contract i into its parent (unreachable at the root, where
            // ce = 0 makes case 1 and this test coincide)
            Slot& p = slots[s.parent];
            slots[p.tail].next = s.head;
            p.tail = s.tail;
            p.omega += s.omega;
            p.gamma += s.gamma;
            ops += 2;
        } else {
            ops += 4;
            if (s.parent >= 0) {
                slots[s.parent].gamma += ce;
                ops += 1;
            }
        }
    }

    Decision d;
    d.yes = static_cast<int>(parts.size()) == k;
    d.rational_ops = ops;
    if (!d.yes) return d;

    Subpartition sp;
    sp.parts.reserve(k);
    Rational best(0);
    bool first = true;
    for (const EmittedPart& p : parts) {
        VertexSet set;
        for (int i = p.head; i >= 0; i = slots[i].next) set.ids.push_back(order[i]);
        std::sort(set.ids.begin(), set.ids.end());
        sp.parts.push_back(std::move(set));
        Rational flow = p.cut / p.weight;
        d.rational_ops += 2;
        if (first || flow > best) {
            best = std::move(flow);
            first = false;
        }
    }
    sp.canonicalize();
    d.witness = std::move(sp);
    d.witness_value = std::move(best);
    return d;
}

inline Decision decide_ipp_max(const WeightedGraph& t, int k, const Rational& threshold) {
    return decide_ipp_max(t, k, threshold, t.size());
}

}  // namespace isot
