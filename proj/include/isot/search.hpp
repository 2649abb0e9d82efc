#pragma once

// Bisection FPTAS for the max isoperimetric number of a tree, constructive
// partition completion, and certified approximation wrappers for the three
// NP-hard parameters.

#include <stdexcept>
#include <vector>

#include "isot/decide.hpp"
#include "isot/graph.hpp"

namespace isot {

struct ApproxResult {
    Problem problem;
    Rational value;        // exact cost of witness
    Subpartition witness;
    Rational factor;       // certified approximation factor vs the optimum
    Rational lower_bound;  // certified lower bound on the optimum
    int decide_calls = 0;
};

// Approximates the max isoperimetric number within (1+eps). Bisects the
// bracket [2*c0/W, C/w0] (c0/C min/total edge weight, w0/W min/total vertex
// weight), deciding at each midpoint; the lower end is valid because some
// part of any k-subpartition has weight at most W/2 while every proper
// nonempty subset of a connected tree has cut at least c0.
inline ApproxResult fptas_ipp_max(const WeightedGraph& t, int k, const Rational& eps) {
    if (!t.is_tree()) throw std::invalid_argument("fptas_ipp_max requires a tree");
    if (!t.gamma_all_zero())
        throw std::invalid_argument("fptas_ipp_max requires zero ground flows");
    if (k < 2 || k > t.size())
        throw std::invalid_argument("fptas_ipp_max requires 2 <= k <= n");
    if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");

    Rational c0 = t.edges()[0].c, total_c(0);
    for (const Edge& e : t.edges()) {
        if (e.c < c0) c0 = e.c;
        total_c += e.c;
    }
    Rational w0 = t.omega(1), total_w(0);
    for (VertexId v = 1; v <= t.size(); ++v) {
        if (t.omega(v) < w0) w0 = t.omega(v);
        total_w += t.omega(v);
    }

    Rational lo = Rational(2) * c0 / total_w;
    Rational hi = total_c / w0;

    ApproxResult res;
    res.problem = Problem::IppMax;
    res.factor = Rational(1) + eps;

    // Any k singletons certify YES at the upper end of the bracket.
    Decision last_yes = decide_ipp_max(t, k, hi);
    res.decide_calls = 1;
    if (!last_yes.yes)
        throw std::logic_error("decision at the bracket upper bound must be YES");

    long long steps = 1;
    const Rational ratio_excess = total_c * total_w - Rational(2) * c0 * w0;
    if (ratio_excess.sign() > 0) {
        const Rational x = ratio_excess / (Rational(2) * eps * c0 * w0);
        steps = std::max(1LL, ceil_log2(x));
    }

    for (long long i = 0; i < steps; ++i) {
        if (hi - lo <= eps * lo) break;
        const Rational mid = (lo + hi) / Rational(2);
        Decision d = decide_ipp_max(t, k, mid);
        ++res.decide_calls;
        if (d.yes) {
            hi = mid;
            last_yes = std::move(d);
        } else {
            lo = mid;
        }
    }

    res.value = *last_yes.witness_value;
    res.witness = std::move(*last_yes.witness);
    res.lower_bound = std::move(lo);
    return res;
}

// Completes a k-subpartition to a k-partition by merging the uncovered
// leftover into one existing part. For Max the part with the largest cut
// absorbs it; for Mean the part minimizing
//   (C - c_j) / (w_j + w(leftover)) + sum_{i != j} c_i / w_i
// does. Ties go to the smallest part index; an input that already covers
// every vertex is returned unchanged.
inline Partition complete_partition(const WeightedGraph& g, const Subpartition& parts,
                                    CostVariant variant) {
    validate_subpartition(g, parts);
    std::vector<char> covered(g.size() + 1, 0);
    for (const VertexSet& p : parts.parts)
        for (VertexId v : p.ids) covered[v] = 1;
    VertexSet leftover;
    for (VertexId v = 1; v <= g.size(); ++v)
        if (!covered[v]) leftover.ids.push_back(v);
    if (leftover.empty()) return parts;

    const int k = parts.k();
    std::vector<Rational> cut(k), weight(k);
    for (int i = 0; i < k; ++i) {
        cut[i] = cut_weight(g, parts.parts[i]);
        weight[i] = set_weight(g, parts.parts[i]);
    }

    int chosen = 0;
    if (variant == CostVariant::Max) {
        for (int j = 1; j < k; ++j)
            if (cut[j] > cut[chosen]) chosen = j;
    } else {
        const Rational leftover_w = set_weight(g, leftover);
        Rational total_cut(0), flow_sum(0);
        for (int i = 0; i < k; ++i) {
            total_cut += cut[i];
            flow_sum += cut[i] / weight[i];
        }
        bool first = true;
        Rational best_score;
        for (int j = 0; j < k; ++j) {
            const Rational score = (total_cut - cut[j]) / (weight[j] + leftover_w) +
                                   flow_sum - cut[j] / weight[j];
            if (first || score < best_score) {
                best_score = score;
                chosen = j;
                first = false;
            }
        }
    }

    Partition out = parts;
    auto& ids = out.parts[chosen].ids;
    ids.insert(ids.end(), leftover.ids.begin(), leftover.ids.end());
    std::sort(ids.begin(), ids.end());
    return out;
}

// Certified approximations of the three NP-hard parameters via the FPTAS
// and partition completion. The internal FPTAS accuracy is chosen so the
// claimed factor holds exactly:
//   ncp-max   factor k-1+eps (1+eps when k = 2), eps' = eps/k
//   ipp-mean  factor k+eps,                      eps' = eps/k
//   ncp-mean  factor 2k-2+eps,                   eps' = eps/(2k-2)
inline ApproxResult approximate(const WeightedGraph& t, int k, const Rational& eps,
                                Problem problem) {
    if (problem == Problem::IppMax)
        throw std::invalid_argument("use fptas_ipp_max for the max isoperimetric number");
    if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");

    const Rational inner_eps =
        problem == Problem::NcpMean ? eps / Rational(2 * k - 2) : eps / Rational(k);
    ApproxResult base = fptas_ipp_max(t, k, inner_eps);

    ApproxResult res;
    res.problem = problem;
    res.decide_calls = base.decide_calls;
    switch (problem) {
        case Problem::NcpMax:
            res.witness = complete_partition(t, base.witness, CostVariant::Max);
            res.value = subpartition_cost(t, res.witness, CostVariant::Max);
            res.factor = (k == 2 ? Rational(1) : Rational(k - 1)) + eps;
            res.lower_bound = base.lower_bound;
            break;
        case Problem::IppMean:
            res.witness = base.witness;
            res.value = subpartition_cost(t, res.witness, CostVariant::Mean);
            res.factor = Rational(k) + eps;
            res.lower_bound = base.lower_bound / Rational(k);
            break;
        case Problem::NcpMean:
            res.witness = complete_partition(t, base.witness, CostVariant::Mean);
            res.value = subpartition_cost(t, res.witness, CostVariant::Mean);
            res.factor = Rational(2 * k - 2) + eps;
            res.lower_bound = base.lower_bound / Rational(k);
            break;
        default:
            break;
    }
    return res;
}

// Exact truth of  sum_i a_i b_i <= max_j (lambda a_j b_j + (1 - lambda/k) b_j)
// for 0 < lambda < k, a on the simplex, b >= 0. Always true under the
// preconditions; equality holds only for b identically zero or a uniform
// with b constant.
inline bool mean_bound_inequality_holds(int k, const Rational& lambda,
                                        const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k)
        throw std::invalid_argument("a and b must have length k");
    if (lambda.sign() <= 0 || lambda >= Rational(k))
        throw std::invalid_argument("lambda must satisfy 0 < lambda < k");
    Rational sum_a(0);
    for (const Rational& x : a) {
        if (x.sign() < 0) throw std::invalid_argument("a entries must be nonnegative");
        sum_a += x;
    }
    if (sum_a != Rational(1)) throw std::invalid_argument("a must sum to 1");
    for (const Rational& x : b)
        if (x.sign() < 0) throw std::invalid_argument("b entries must be nonnegative");

    Rational lhs(0);
    for (int i = 0; i < k; ++i) lhs += a[i] * b[i];
    const Rational coeff = Rational(1) - lambda / Rational(k);
    Rational rhs = lambda * a[0] * b[0] + coeff * b[0];
    for (int j = 1; j < k; ++j) {
        Rational cand = lambda * a[j] * b[j] + coeff * b[j];
        if (cand > rhs) rhs = std::move(cand);
    }
    return lhs <= rhs;
}

}  // namespace isot
