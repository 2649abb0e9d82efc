// Command-line front end: parse ISOT instances, dispatch the solvers and
// generators, print exact rational results and witnesses.
//
// Exit status: 0 on success, 2 on input errors (bad flags, unreadable or
// malformed instances), 3 on violated solver preconditions.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isot/isot.hpp"

namespace {

using namespace isot;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

WeightedGraph load_instance(const std::string& path) {
    if (path.empty() || path == "-") return parse_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    return parse_instance(in);
}

Rational parse_rational_flag(const std::string& text, const char* what) {
    try {
        return Rational::from_string(text);
    } catch (const std::exception&) {
        throw InputError(std::string("invalid ") + what + " '" + text +
                         "' (expected p or p/q)");
    }
}

std::vector<long long> parse_ll_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoll(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InputError(std::string("invalid ") + what + " list '" + text + "'");
        }
    }
    if (out.empty()) throw InputError(std::string("empty ") + what + " list");
    return out;
}

Problem parse_problem_flag(const std::string& text) {
    const auto p = parse_problem(text);
    if (!p) throw InputError("unknown problem '" + text + "'");
    return *p;
}

void print_value(const Rational& v) { std::cout << "value " << v.to_string() << "\n"; }

void print_provenance(const std::vector<std::pair<std::string, std::string>>& entries) {
    std::cout << "# provenance\n";
    for (const auto& [key, val] : entries) std::cout << "# " << key << " " << val << "\n";
}

void print_generated(const GeneratedInstance& inst) {
    std::cout << serialize_instance(inst.graph);
    auto entries = inst.provenance;
    entries.emplace_back("k", std::to_string(inst.k));
    entries.emplace_back("threshold", inst.threshold.to_string());
    for (const auto& [problem, value] : inst.closed_forms)
        entries.emplace_back("closed-form " + problem_name(problem), value.to_string());
    print_provenance(entries);
}

struct Options {
    std::string input;
    std::string partition_file;
    int k = 0;
    int jobs = 1;
    std::string threshold, eps, problem, step = "full";
    bool connected_only = false;
    // generator flags
    long long t = 0;
    int m = 0;
    std::string x_list, y_list;
    long long l = 0, d = 1, big_d = 1, big_m = 0, psi = 0;
    bool has_l = false, has_big_m = false, has_psi = false, has_threshold = false;
};

int run_decide(const Options& opt) {
    const WeightedGraph g = load_instance(opt.input);
    const Rational n = parse_rational_flag(opt.threshold, "threshold");
    const Decision d = decide_ipp_max(g, opt.k, n);
    std::cout << (d.yes ? "answer YES\n" : "answer NO\n");
    if (d.yes) {
        std::cout << format_witness(*d.witness);
        print_provenance({{"witness-value", d.witness_value->to_string()}});
    }
    return 0;
}

int run_fptas(const Options& opt) {
    const WeightedGraph g = load_instance(opt.input);
    const Rational eps = parse_rational_flag(opt.eps, "eps");
    const ApproxResult r = fptas_ipp_max(g, opt.k, eps);
    print_value(r.value);
    std::cout << format_witness(r.witness);
    print_provenance({{"problem", problem_name(r.problem)},
                      {"factor", r.factor.to_string()},
                      {"lower-bound", r.lower_bound.to_string()},
                      {"decide-calls", std::to_string(r.decide_calls)}});
    return 0;
}

int run_exact(const Options& opt) {
    const WeightedGraph g = load_instance(opt.input);
    const Problem problem = parse_problem_flag(opt.problem);
    ExactOptions eo;
    eo.jobs = opt.jobs;
    SolveResult r{problem, Rational(0), {}};
    switch (problem) {
        case Problem::IppMax:
            r = exact_ipp_fixed_k(g, opt.k, eo).first;
            break;
        case Problem::IppMean:
            r = exact_ipp_fixed_k(g, opt.k, eo).second;
            break;
        case Problem::NcpMax:
            r = exact_ncp_max_fixed_k(g, opt.k, eo);
            break;
        default:
            throw std::invalid_argument("exact supports ipp-max, ipp-mean and ncp-max");
    }
    print_value(r.value);
    std::cout << format_witness(r.witness);
    print_provenance({{"problem", problem_name(problem)}});
    return 0;
}

int run_approx(const Options& opt) {
    const WeightedGraph g = load_instance(opt.input);
    const Rational eps = parse_rational_flag(opt.eps, "eps");
    const Problem problem = parse_problem_flag(opt.problem);
    const ApproxResult r = approximate(g, opt.k, eps, problem);
    print_value(r.value);
    std::cout << format_witness(r.witness);
    print_provenance({{"problem", problem_name(problem)},
                      {"factor", r.factor.to_string()},
                      {"lower-bound", r.lower_bound.to_string()},
                      {"decide-calls", std::to_string(r.decide_calls)}});
    return 0;
}

int run_oracle(const Options& opt) {
    const WeightedGraph g = load_instance(opt.input);
    const Problem problem = parse_problem_flag(opt.problem);
    OracleOptions oo;
    oo.jobs = opt.jobs;
    const SolveResult r = oracle_value(g, opt.k, problem, opt.connected_only, oo);
    print_value(r.value);
    std::cout << format_witness(r.witness);
    print_provenance({{"problem", problem_name(problem)},
                      {"connected-only", opt.connected_only ? "yes" : "no"}});
    return 0;
}

int run_quotient(const Options& opt) {
    const WeightedGraph g = load_instance(opt.input);
    if (opt.partition_file.empty()) throw InputError("quotient needs --partition FILE");
    std::ifstream in(opt.partition_file);
    if (!in) throw InputError("cannot open partition file '" + opt.partition_file + "'");
    const Partition pi = parse_witness(in);
    const QuotientResult q = quotient(g, pi);
    std::cout << serialize_instance(q.graph);
    std::vector<std::pair<std::string, std::string>> entries;
    for (VertexId v = 1; v <= g.size(); ++v)
        entries.emplace_back("map", std::to_string(v) + " " + std::to_string(q.vertex_map[v]));
    print_provenance(entries);
    return 0;
}

int run_gen(const Options& opt, const std::string& which) {
    if (which == "star") {
        print_generated(star_family(opt.k, opt.t));
        return 0;
    }
    if (which == "subset-average") {
        const auto y = parse_ll_list(opt.y_list, "y");
        std::optional<long long> l;
        if (opt.has_l) l = opt.l;
        print_generated(subset_average_to_tree(y, opt.m, l));
        return 0;
    }
    if (which == "equipartition") {
        const auto x = parse_ll_list(opt.x_list, "x");
        print_generated(equipartition_to_tree(x, opt.d, opt.big_d));
        return 0;
    }
    if (which == "partition2") {
        const auto x = parse_ll_list(opt.x_list, "x");
        std::optional<long long> m;
        if (opt.has_big_m) m = opt.big_m;
        print_generated(partition_to_bipartite(x, m));
        return 0;
    }
    if (which == "3partition") {
        const auto x = parse_ll_list(opt.x_list, "x");
        if (opt.m < 1) throw InputError("3partition needs --m >= 1");
        long long sum = 0;
        for (long long v : x) sum += v;
        if (sum % opt.m != 0)
            throw std::invalid_argument("3-PARTITION numbers must sum to m*B");
        const auto inst = three_partition_to_subset_average(x, opt.m, sum / opt.m);
        std::vector<std::pair<std::string, std::string>> entries = {
            {"source", "3partition"}};
        std::string ys;
        for (size_t i = 0; i < inst.y.size(); ++i)
            ys += (i ? "," : "") + std::to_string(inst.y[i]);
        entries.emplace_back("y", ys);
        entries.emplace_back("m", std::to_string(inst.m));
        entries.emplace_back("alpha", std::to_string(inst.alpha));
        print_provenance(entries);
        return 0;
    }
    throw InputError("unknown generator '" + which + "'");
}

int run_unitarize(const Options& opt) {
    WeightedGraph g = load_instance(opt.input);
    std::vector<std::pair<std::string, std::string>> entries;
    std::optional<Rational> threshold;
    if (opt.has_threshold)
        threshold = parse_rational_flag(opt.threshold, "threshold");

    if (opt.step == "edges") {
        if (!threshold) throw InputError("unitarize --step edges needs --threshold");
        std::optional<BigInt> psi;
        if (opt.has_psi) psi = BigInt(opt.psi);
        const EdgeUnitarization u = unitarize_edge_weights(g, *threshold, psi);
        std::cout << serialize_instance(u.graph);
        entries.emplace_back("psi", u.psi.to_string());
        entries.emplace_back("threshold", u.threshold.to_string());
        print_provenance(entries);
        return 0;
    }

    if (opt.step == "vertices" || opt.step == "full") {
        const IntegralScaling scaled = make_integral(g);
        if (!(scaled.omega_scale == BigInt(1)) || !(scaled.edge_scale == BigInt(1))) {
            entries.emplace_back("omega-scale", scaled.omega_scale.to_string());
            entries.emplace_back("edge-scale", scaled.edge_scale.to_string());
            if (threshold)
                threshold = *threshold * Rational(scaled.edge_scale) /
                            Rational(scaled.omega_scale);
        }
        const VertexUnitarization u = unitarize_vertex_weights(scaled.graph);
        entries.emplace_back("chi", u.chi.to_string());
        if (threshold) threshold = *threshold / Rational(u.chi);
        if (opt.step == "vertices") {
            std::cout << serialize_instance(u.graph);
            if (threshold) entries.emplace_back("threshold", threshold->to_string());
            print_provenance(entries);
            return 0;
        }
        if (!threshold) throw InputError("unitarize --step full needs --threshold");
        std::optional<BigInt> psi;
        if (opt.has_psi) psi = BigInt(opt.psi);
        const EdgeUnitarization e = unitarize_edge_weights(u.graph, *threshold, psi);
        std::cout << serialize_instance(e.graph);
        entries.emplace_back("psi", e.psi.to_string());
        entries.emplace_back("threshold", e.threshold.to_string());
        print_provenance(entries);
        return 0;
    }
    throw InputError("unknown unitarization step '" + opt.step + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and approximate solvers for isoperimetric numbers and "
                 "normalized cuts on weighted trees"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_k) {
        sub->add_option("--input", opt.input, "instance file (default: stdin)");
        if (needs_k) sub->add_option("--k", opt.k, "number of parts")->required();
    };

    CLI::App* decide = app.add_subcommand("decide", "decide ipp-max at a threshold");
    add_common(decide, true);
    decide->add_option("--threshold", opt.threshold, "decision threshold p/q")->required();

    CLI::App* fptas = app.add_subcommand("fptas", "approximate ipp-max within 1+eps");
    add_common(fptas, true);
    fptas->add_option("--eps", opt.eps, "accuracy p/q")->required();

    CLI::App* exact = app.add_subcommand("exact", "exact fixed-k solver");
    add_common(exact, true);
    exact->add_option("--problem", opt.problem, "ipp-max | ipp-mean | ncp-max")->required();
    exact->add_option("--jobs", opt.jobs, "worker threads");

    CLI::App* approx = app.add_subcommand("approx", "certified O(k) approximations");
    add_common(approx, true);
    approx->add_option("--problem", opt.problem, "ncp-max | ipp-mean | ncp-mean")
        ->required();
    approx->add_option("--eps", opt.eps, "accuracy p/q")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    add_common(oracle, true);
    oracle->add_option("--problem", opt.problem, "problem tag")->required();
    oracle->add_flag("--connected-only", opt.connected_only,
                     "restrict parts to connected subgraphs");
    oracle->add_option("--jobs", opt.jobs, "worker threads");

    CLI::App* quot = app.add_subcommand("quotient", "contract a partition");
    add_common(quot, false);
    quot->add_option("--partition", opt.partition_file, "witness-format partition file")
        ->required();

    CLI::App* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    CLI::App* gen_star = gen->add_subcommand("star", "sharpness family");
    gen_star->add_option("--k", opt.k)->required();
    gen_star->add_option("--t", opt.t)->required();
    CLI::App* gen_sa = gen->add_subcommand("subset-average", "SUBSET AVERAGE tree");
    gen_sa->add_option("--y", opt.y_list, "comma-separated numbers")->required();
    gen_sa->add_option("--m", opt.m)->required();
    gen_sa->add_option("--l", opt.l)->each([&](const std::string&) { opt.has_l = true; });
    CLI::App* gen_eq = gen->add_subcommand("equipartition", "EQUIPARTITION spider tree");
    gen_eq->add_option("--x", opt.x_list, "comma-separated numbers")->required();
    gen_eq->add_option("--d", opt.d)->required();
    gen_eq->add_option("--D", opt.big_d)->required();
    CLI::App* gen_p2 = gen->add_subcommand("partition2", "PARTITION bipartite graph");
    gen_p2->add_option("--x", opt.x_list, "comma-separated numbers")->required();
    gen_p2->add_option("--M", opt.big_m)->each([&](const std::string&) {
        opt.has_big_m = true;
    });
    CLI::App* gen_3p = gen->add_subcommand("3partition", "3-PARTITION to SUBSET AVERAGE");
    gen_3p->add_option("--x", opt.x_list, "comma-separated numbers")->required();
    gen_3p->add_option("--m", opt.m)->required();

    CLI::App* unit = app.add_subcommand("unitarize", "weight-to-gadget reductions");
    add_common(unit, false);
    unit->add_option("--step", opt.step, "vertices | edges | full");
    unit->add_option("--threshold", opt.threshold)->each([&](const std::string&) {
        opt.has_threshold = true;
    });
    unit->add_option("--psi", opt.psi)->each([&](const std::string&) {
        opt.has_psi = true;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(decide)) return run_decide(opt);
        if (app.got_subcommand(fptas)) return run_fptas(opt);
        if (app.got_subcommand(exact)) return run_exact(opt);
        if (app.got_subcommand(approx)) return run_approx(opt);
        if (app.got_subcommand(oracle)) return run_oracle(opt);
        if (app.got_subcommand(quot)) return run_quotient(opt);
        if (app.got_subcommand(gen)) {
            for (CLI::App* sub : gen->get_subcommands()) return run_gen(opt, sub->get_name());
        }
        if (app.got_subcommand(unit)) return run_unitarize(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
