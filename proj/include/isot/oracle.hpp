#pragma once

// Brute-force ground truth: direct evaluation of the defining minima over
// all k-subpartitions / k-partitions of small instances.
//
// Enumeration assigns every vertex a label in {0 (outside), 1..k}; label 0
// is forbidden for partition problems. Labelings are canonicalized by
// first-occurrence order (label j+1 may only open after label j), so each
// unordered (sub)partition is visited exactly once. There is no pruning
// beyond this symmetry canonicalization and the label-count feasibility
// bound; ties are broken by the lexicographically smallest canonical
// labeling.

#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "isot/graph.hpp"

namespace isot {

struct SolveResult {
    Problem problem;
    Rational value;
    Subpartition witness;
};

struct OracleOptions {
    int jobs = 1;
    int cap_override = 0;  // 0 keeps the defaults: 16 for k=2, 12 for k>=3
};

struct OracleBatch {
    SolveResult ipp_max, ipp_mean, ncp_max, ncp_mean;
};

namespace oracle_detail {

struct Best {
    bool set = false;
    Rational value;
    std::vector<int8_t> labels;

    void offer(const Rational& v, const std::vector<int8_t>& l) {
        if (!set || v < value) {
            set = true;
            value = v;
            labels = l;
        }
    }
    void merge(const Best& o) {
        if (!o.set) return;
        if (!set || o.value < value ||
            (o.value == value &&
             std::lexicographical_compare(o.labels.begin(), o.labels.end(), labels.begin(),
                                          labels.end()))) {
            *this = o;
        }
    }
};

struct Needs {
    bool allow_outside = true;
    bool connected_only = false;
    bool ipp = true;
    bool ncp = true;
    bool max = true;
    bool mean = true;
};

class Enumerator {
public:
    Enumerator(const WeightedGraph& g, int k, const Needs& needs)
        : g_(g), k_(k), needs_(needs), n_(g.size()) {
        labels_.assign(n_ + 1, 0);
        cut_.assign(k + 1, Rational(0));
        wt_.assign(k + 1, Rational(0));
        down_.assign(n_ + 1, {});
        for (const Edge& e : g.edges()) {
            down_[std::max(e.u, e.v)].emplace_back(std::min(e.u, e.v), &e.c);
        }
        uf_.assign(n_ + 1, 0);
    }

    Best best_ipp_max, best_ipp_mean, best_ncp_max, best_ncp_mean;

    // Recurse over vertices from..n_; prefix vertices 1..from-1 must have
    // been applied with apply().
    void run(VertexId from) { recurse(from); }

    void apply(VertexId v, int label) {
        labels_[v] = static_cast<int8_t>(label);
        if (label > 0) {
            if (label > used_) ++used_;
            wt_[label] += g_.omega(v);
            cut_[label] += g_.gamma(v);
        } else {
            ++outside_;
        }
        for (auto [w, c] : down_[v]) {
            const int lw = labels_[w];
            if (lw == label) continue;
            if (lw > 0) cut_[lw] += *c;
            if (label > 0) cut_[label] += *c;
        }
    }

    void unapply(VertexId v, int label) {
        for (auto [w, c] : down_[v]) {
            const int lw = labels_[w];
            if (lw == label) continue;
            if (lw > 0) cut_[lw] -= *c;
            if (label > 0) cut_[label] -= *c;
        }
        if (label > 0) {
            wt_[label] -= g_.omega(v);
            cut_[label] -= g_.gamma(v);
            if (wt_[label].is_zero() && label == used_) --used_;
        } else {
            --outside_;
        }
        labels_[v] = 0;
    }

    int used() const { return used_; }

private:
    const WeightedGraph& g_;
    const int k_;
    const Needs needs_;
    const int n_;
    std::vector<int8_t> labels_;
    std::vector<Rational> cut_, wt_;
    std::vector<std::vector<std::pair<VertexId, const Rational*>>> down_;
    std::vector<int> uf_;
    int used_ = 0;
    int outside_ = 0;

    void recurse(VertexId v) {
        if (v > n_) {
            if (used_ == k_) evaluate_leaf();
            return;
        }
        // Not enough vertices left to open the remaining labels.
        const int remaining = n_ - v + 1;
        if (k_ - used_ > remaining) return;
        if (needs_.allow_outside && k_ - used_ < remaining) {
            apply(v, 0);
            recurse(v + 1);
            unapply(v, 0);
        }
        const int top = std::min(used_ + 1, k_);
        for (int label = 1; label <= top; ++label) {
            apply(v, label);
            recurse(v + 1);
            unapply(v, label);
        }
    }

    int uf_find(int x) {
        while (uf_[x] != x) {
            uf_[x] = uf_[uf_[x]];
            x = uf_[x];
        }
        return x;
    }

    bool parts_connected() {
        for (int v = 1; v <= n_; ++v) uf_[v] = v;
        for (const Edge& e : g_.edges()) {
            if (labels_[e.u] != 0 && labels_[e.u] == labels_[e.v])
                uf_[uf_find(e.u)] = uf_find(e.v);
        }
        std::vector<int> root_of_label(k_ + 1, 0);
        for (int v = 1; v <= n_; ++v) {
            const int l = labels_[v];
            if (l == 0) continue;
            const int r = uf_find(v);
            if (root_of_label[l] == 0)
                root_of_label[l] = r;
            else if (root_of_label[l] != r)
                return false;
        }
        return true;
    }

    void evaluate_leaf() {
        if (needs_.connected_only && !parts_connected()) return;
        const bool is_partition = outside_ == 0;
        if (!needs_.ipp && !is_partition) return;

        if (needs_.max) {
            int arg = 1;
            for (int i = 2; i <= k_; ++i) {
                // cut[i]/wt[i] > cut[arg]/wt[arg], weights positive
                if (cut_[i] * wt_[arg] > cut_[arg] * wt_[i]) arg = i;
            }
            const Rational v = cut_[arg] / wt_[arg];
            if (needs_.ipp) best_ipp_max.offer(v, labels_);
            if (needs_.ncp && is_partition) best_ncp_max.offer(v, labels_);
        }
        if (needs_.mean) {
            Rational sum(0);
            for (int i = 1; i <= k_; ++i) sum += cut_[i] / wt_[i];
            const Rational v = sum / Rational(k_);
            if (needs_.ipp) best_ipp_mean.offer(v, labels_);
            if (needs_.ncp && is_partition) best_ncp_mean.offer(v, labels_);
        }
    }
};

inline Subpartition labels_to_subpartition(int n, int k, const std::vector<int8_t>& labels) {
    Subpartition sp;
    sp.parts.assign(k, VertexSet{});
    for (int v = 1; v <= n; ++v)
        if (labels[v] > 0) sp.parts[labels[v] - 1].ids.push_back(v);
    return sp;
}

// Canonical label prefixes of the first `depth` vertices, in lex order.
inline void collect_prefixes(int depth, int k, bool allow_outside, int n,
                             std::vector<int8_t>& cur, int used,
                             std::vector<std::vector<int8_t>>& out) {
    const int v = static_cast<int>(cur.size()) + 1;
    if (v > depth) {
        out.push_back(cur);
        return;
    }
    const int remaining = n - v + 1;
    if (k - used > remaining) return;
    if (allow_outside && k - used < remaining) {
        cur.push_back(0);
        collect_prefixes(depth, k, allow_outside, n, cur, used, out);
        cur.pop_back();
    }
    const int top = std::min(used + 1, k);
    for (int label = 1; label <= top; ++label) {
        cur.push_back(static_cast<int8_t>(label));
        collect_prefixes(depth, k, allow_outside, n, cur, used + (label > used ? 1 : 0), out);
        cur.pop_back();
    }
}

struct RunResult {
    Best ipp_max, ipp_mean, ncp_max, ncp_mean;
};

inline RunResult enumerate_all(const WeightedGraph& g, int k, const Needs& needs, int jobs) {
    const int n = g.size();
    RunResult res;
    if (jobs <= 1 || n < 8) {
        Enumerator e(g, k, needs);
        e.run(1);
        res = {e.best_ipp_max, e.best_ipp_mean, e.best_ncp_max, e.best_ncp_mean};
        return res;
    }
    const int depth = std::min(n, 4);
    std::vector<std::vector<int8_t>> prefixes;
    std::vector<int8_t> cur;
    collect_prefixes(depth, k, needs.allow_outside, n, cur, 0, prefixes);
    const int workers = std::min<int>(jobs, static_cast<int>(prefixes.size()));
    std::vector<RunResult> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w]() {
            try {
                Enumerator e(g, k, needs);
                for (size_t p = w; p < prefixes.size(); p += workers) {
                    const auto& pre = prefixes[p];
                    for (int v = 1; v <= depth; ++v) e.apply(v, pre[v - 1]);
                    e.run(depth + 1);
                    for (int v = depth; v >= 1; --v) e.unapply(v, pre[v - 1]);
                }
                partial[w] = {e.best_ipp_max, e.best_ipp_mean, e.best_ncp_max,
                              e.best_ncp_mean};
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    for (const RunResult& p : partial) {
        res.ipp_max.merge(p.ipp_max);
        res.ipp_mean.merge(p.ipp_mean);
        res.ncp_max.merge(p.ncp_max);
        res.ncp_mean.merge(p.ncp_mean);
    }
    return res;
}

inline void check_preconditions(const WeightedGraph& g, int k, const OracleOptions& opts) {
    if (k < 2 || k > g.size())
        throw std::invalid_argument("oracle requires 2 <= k <= n");
    const int cap = opts.cap_override > 0 ? opts.cap_override : (k == 2 ? 16 : 12);
    if (g.size() > cap)
        throw std::invalid_argument("instance exceeds the oracle size cap");
}

}  // namespace oracle_detail

inline SolveResult oracle_value(const WeightedGraph& g, int k, Problem problem,
                                bool connected_only = false, const OracleOptions& opts = {}) {
    oracle_detail::check_preconditions(g, k, opts);
    oracle_detail::Needs needs;
    needs.allow_outside = !is_partition_problem(problem);
    needs.connected_only = connected_only;
    needs.ipp = !is_partition_problem(problem);
    needs.ncp = is_partition_problem(problem);
    needs.max = variant_of(problem) == CostVariant::Max;
    needs.mean = variant_of(problem) == CostVariant::Mean;
    const auto res = oracle_detail::enumerate_all(g, k, needs, opts.jobs);
    const oracle_detail::Best* best = nullptr;
    switch (problem) {
        case Problem::IppMax: best = &res.ipp_max; break;
        case Problem::IppMean: best = &res.ipp_mean; break;
        case Problem::NcpMax: best = &res.ncp_max; break;
        case Problem::NcpMean: best = &res.ncp_mean; break;
    }
    if (!best->set)
        throw std::invalid_argument("no feasible (sub)partition found");
    return {problem, best->value,
            oracle_detail::labels_to_subpartition(g.size(), k, best->labels)};
}

// All four parameters from one enumeration pass.
inline OracleBatch oracle_all(const WeightedGraph& g, int k, bool connected_only = false,
                              const OracleOptions& opts = {}) {
    oracle_detail::check_preconditions(g, k, opts);
    oracle_detail::Needs needs;
    needs.connected_only = connected_only;
    const auto res = oracle_detail::enumerate_all(g, k, needs, opts.jobs);
    auto make = [&](Problem p, const oracle_detail::Best& b) -> SolveResult {
        if (!b.set) throw std::invalid_argument("no feasible (sub)partition found");
        return {p, b.value, oracle_detail::labels_to_subpartition(g.size(), k, b.labels)};
    };
    return {make(Problem::IppMax, res.ipp_max), make(Problem::IppMean, res.ipp_mean),
            make(Problem::NcpMax, res.ncp_max), make(Problem::NcpMean, res.ncp_mean)};
}

}  // namespace isot
