#pragma once

// Exact fixed-k solvers for weighted trees via bounded edge-subset
// enumeration: removing |F| edges from a tree leaves |F|+1 components, and
// component-count bounds for minimizers cap |F|.
//
//   ipp (max/mean):  k-1 <= |F| <= floor((3k-3)/2)
//   ncp-max:         k-1 <= |F| <= max(2k^2-6k-3, k-1)
//
// For ipp the candidate is the k components of smallest normalized flow;
// for ncp-max the components are grouped into exactly k blocks (restricted
// growth strings, so unordered block sets are visited once). Enumeration is
// lexicographic; the first optimum found wins ties, independent of the
// worker count.

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "isot/graph.hpp"
#include "isot/oracle.hpp"

namespace isot {

struct ExactOptions {
    int jobs = 1;
};

inline std::pair<int, int> enumeration_bounds(int k, Problem problem) {
    if (k < 2) throw std::invalid_argument("enumeration bounds require k >= 2");
    const long long kk = k;
    switch (problem) {
        case Problem::IppMax:
        case Problem::IppMean:
            return {k - 1, static_cast<int>((3 * kk - 3) / 2)};
        case Problem::NcpMax: {
            const long long hi = std::max(2 * kk * kk - 6 * kk - 3, kk - 1);
            return {k - 1, static_cast<int>(
                               std::min<long long>(hi, std::numeric_limits<int>::max()))};
        }
        default:
            throw std::invalid_argument("no enumeration bounds for ncp-mean");
    }
}

namespace exact_detail {

// (value, sequence) minimum with the earliest sequence winning ties.
struct Tracker {
    bool set = false;
    Rational value;
    long long seq = 0;
    Subpartition witness;

    void offer(const Rational& v, long long s, const Subpartition& w) {
        if (!set || v < value || (v == value && s < seq)) {
            set = true;
            value = v;
            seq = s;
            witness = w;
        }
    }
    void merge(const Tracker& o) {
        if (o.set) offer(o.value, o.seq, o.witness);
    }
};

struct ComponentData {
    std::vector<VertexSet> comps;
    std::vector<Rational> weight;        // per component
    std::vector<Rational> cut;           // per component: incident F-edges
    std::vector<std::pair<int, int>> f_comp;  // per F-edge: component of u, of v
};

inline ComponentData split(const WeightedGraph& t, const std::vector<int>& subset) {
    ComponentData d;
    d.comps = components_after_removal(t, subset);
    const int tcount = static_cast<int>(d.comps.size());
    std::vector<int> comp_of(t.size() + 1, 0);
    for (int i = 0; i < tcount; ++i)
        for (VertexId v : d.comps[i].ids) comp_of[v] = i;
    d.weight.assign(tcount, Rational(0));
    d.cut.assign(tcount, Rational(0));
    for (int i = 0; i < tcount; ++i)
        for (VertexId v : d.comps[i].ids) d.weight[i] += t.omega(v);
    for (int idx : subset) {
        const Edge& e = t.edges()[idx];
        const int cu = comp_of[e.u], cv = comp_of[e.v];
        d.cut[cu] += e.c;
        d.cut[cv] += e.c;
        d.f_comp.emplace_back(cu, cv);
    }
    return d;
}

// Lexicographic size-s subsets of {0..m-1} whose smallest element is e0.
template <typename Fn>
void for_each_subset_with_first(int m, int s, int e0, Fn&& fn) {
    if (e0 + s > m) return;
    std::vector<int> subset(s);
    for (int i = 0; i < s; ++i) subset[i] = e0 + i;
    for (;;) {
        fn(subset);
        // position i may grow up to m-s+i; position 0 stays at e0
        int i = s - 1;
        while (i >= 1 && subset[i] == m - s + i) --i;
        if (i < 1) return;
        ++subset[i];
        for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
    }
}

struct IppTrackers {
    Tracker max, mean;
};

inline void ipp_scan_subset(const WeightedGraph& t, int k, const std::vector<int>& subset,
                            long long& seq, IppTrackers& out) {
    const ComponentData d = split(t, subset);
    const int tcount = static_cast<int>(d.comps.size());
    std::vector<int> order(tcount);
    for (int i = 0; i < tcount; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return d.cut[a] * d.weight[b] < d.cut[b] * d.weight[a];
    });
    const int kth = order[k - 1];
    Rational max_v = d.cut[kth] / d.weight[kth];
    Rational sum(0);
    for (int i = 0; i < k; ++i) sum += d.cut[order[i]] / d.weight[order[i]];
    Rational mean_v = sum / Rational(k);
    const bool improves_max = !out.max.set || max_v < out.max.value;
    const bool improves_mean = !out.mean.set || mean_v < out.mean.value;
    if (improves_max || improves_mean) {
        Subpartition sp;
        sp.parts.reserve(k);
        for (int i = 0; i < k; ++i) sp.parts.push_back(d.comps[order[i]]);
        sp.canonicalize();
        if (improves_max) out.max.offer(max_v, seq, sp);
        if (improves_mean) out.mean.offer(mean_v, seq, sp);
    }
    ++seq;
}

inline void ncp_scan_subset(const WeightedGraph& t, int k, const std::vector<int>& subset,
                            long long& seq, Tracker& out) {
    const ComponentData d = split(t, subset);
    const int tcount = static_cast<int>(d.comps.size());
    std::vector<int> rgs(tcount, 0);
    std::vector<Rational> block_w(k, Rational(0)), block_cut(k, Rational(0));
    // Depth-first restricted growth strings over the components.
    auto emit = [&]() {
        for (int b = 0; b < k; ++b) {
            block_w[b] = Rational(0);
            block_cut[b] = Rational(0);
        }
        for (int i = 0; i < tcount; ++i) block_w[rgs[i]] += d.weight[i];
        for (size_t f = 0; f < d.f_comp.size(); ++f) {
            const auto [cu, cv] = d.f_comp[f];
            if (rgs[cu] == rgs[cv]) continue;
            const Rational& c = t.edges()[subset[f]].c;
            block_cut[rgs[cu]] += c;
            block_cut[rgs[cv]] += c;
        }
        int arg = 0;
        for (int b = 1; b < k; ++b)
            if (block_cut[b] * block_w[arg] > block_cut[arg] * block_w[b]) arg = b;
        Rational v = block_cut[arg] / block_w[arg];
        if (!out.set || v < out.value) {
            Subpartition sp;
            sp.parts.assign(k, VertexSet{});
            for (int i = 0; i < tcount; ++i) {
                auto& ids = sp.parts[rgs[i]].ids;
                ids.insert(ids.end(), d.comps[i].ids.begin(), d.comps[i].ids.end());
            }
            for (auto& part : sp.parts) std::sort(part.ids.begin(), part.ids.end());
            sp.canonicalize();
            out.offer(v, seq, sp);
        }
        ++seq;
    };
    auto recurse = [&](auto&& self, int i, int used) -> void {
        if (k - used > tcount - i) return;
        if (i == tcount) {
            if (used == k) emit();
            return;
        }
        const int top = std::min(used + 1, k);
        for (int label = 0; label < top; ++label) {
            rgs[i] = label;
            self(self, i + 1, std::max(used, label + 1));
        }
    };
    recurse(recurse, 0, 0);
}

// Runs fn(subset, seq) over all lexicographic subsets with lo <= |F| <= hi,
// split across jobs by (size, first element) tasks. seq values order the
// enumeration globally so merge results are worker-count independent.
template <typename Scan>
void parallel_subset_sweep(const WeightedGraph& t, int lo, int hi, int jobs, Scan scan) {
    const int m = static_cast<int>(t.edges().size());
    struct Task {
        int size, first;
        long long seq_base;
    };
    std::vector<Task> tasks;
    long long seq = 0;
    for (int s = lo; s <= hi; ++s) {
        for (int e0 = 0; e0 + s <= m; ++e0) {
            // Each (size, first-element) group gets a disjoint sequence
            // range; any enumeration that could exhaust 2^40 entries per
            // group is far beyond feasible anyway.
            tasks.push_back({s, e0, seq});
            seq += 1LL << 40;
        }
    }
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (workers == 1) {
        for (const Task& task : tasks) {
            long long local = task.seq_base;
            for_each_subset_with_first(m, task.size, task.first,
                                       [&](const std::vector<int>& subset) {
                                           scan(0, subset, local);
                                       });
        }
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w]() {
            try {
                for (size_t idx = w; idx < tasks.size(); idx += workers) {
                    const Task& task = tasks[idx];
                    long long local = task.seq_base;
                    for_each_subset_with_first(m, task.size, task.first,
                                               [&](const std::vector<int>& subset) {
                                                   scan(w, subset, local);
                                               });
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

inline void check_tree_input(const WeightedGraph& t, int k) {
    if (!t.is_tree()) throw std::invalid_argument("exact solvers require a tree");
    if (!t.gamma_all_zero())
        throw std::invalid_argument("exact solvers require zero ground flows");
    if (k < 2 || k > t.size()) throw std::invalid_argument("exact solvers require 2 <= k <= n");
}

inline std::pair<SolveResult, SolveResult> ipp_sweep(const WeightedGraph& t, int k, int lo,
                                                     int hi, int jobs) {
    const int workers = std::max(1, jobs);
    std::vector<IppTrackers> partial(workers);
    parallel_subset_sweep(t, lo, hi, jobs,
                          [&](int w, const std::vector<int>& subset, long long& seq) {
                              ipp_scan_subset(t, k, subset, seq, partial[w]);
                          });
    IppTrackers all;
    for (const IppTrackers& p : partial) {
        all.max.merge(p.max);
        all.mean.merge(p.mean);
    }
    if (!all.max.set) throw std::logic_error("empty enumeration");
    return {SolveResult{Problem::IppMax, all.max.value, all.max.witness},
            SolveResult{Problem::IppMean, all.mean.value, all.mean.witness}};
}

}  // namespace exact_detail

inline std::pair<SolveResult, SolveResult> exact_ipp_fixed_k(const WeightedGraph& t, int k,
                                                             const ExactOptions& opts = {}) {
    exact_detail::check_tree_input(t, k);
    auto [lo, hi] = enumeration_bounds(k, Problem::IppMax);
    hi = std::min(hi, t.size() - 1);
    return exact_detail::ipp_sweep(t, k, lo, hi, opts.jobs);
}

inline SolveResult exact_ncp_max_fixed_k(const WeightedGraph& t, int k,
                                         const ExactOptions& opts = {}) {
    exact_detail::check_tree_input(t, k);
    if (k > 6)
        throw std::invalid_argument(
            "exact ncp-max enumeration is limited to k <= 6 (the component bound "
            "grows quadratically in k)");
    auto [lo, hi] = enumeration_bounds(k, Problem::NcpMax);
    hi = std::min(hi, t.size() - 1);
    const int workers = std::max(1, opts.jobs);
    std::vector<exact_detail::Tracker> partial(workers);
    exact_detail::parallel_subset_sweep(
        t, lo, hi, opts.jobs, [&](int w, const std::vector<int>& subset, long long& seq) {
            exact_detail::ncp_scan_subset(t, k, subset, seq, partial[w]);
        });
    exact_detail::Tracker all;
    for (const exact_detail::Tracker& p : partial) all.merge(p);
    if (!all.set) throw std::logic_error("empty enumeration");
    return {Problem::NcpMax, all.value, all.witness};
}

}  // namespace isot
