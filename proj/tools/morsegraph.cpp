// morsegraph: Euler characteristics, Morse indices, curvature, and critical
// point search for simple graphs, over the DIMACS-flavored text format.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morsegraph/bench.hpp"
#include "morsegraph/curvature.hpp"
#include "morsegraph/experiments.hpp"
#include "morsegraph/fast_chi.hpp"
#include "morsegraph/generators.hpp"
#include "morsegraph/graph_io.hpp"
#include "morsegraph/morse_io.hpp"
#include "morsegraph/morse_spectrum.hpp"
#include "morsegraph/rng.hpp"

using namespace morsegraph;

namespace {

// exit codes, also documented in --help
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitVerification = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long long> parse_param_csv(const std::string& text) {
    std::vector<long long> params;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        params.push_back(std::stoll(item));
    }
    return params;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

// stdout unless --out was given
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot write output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

MorseFunction load_or_draw_morse(const Graph& g, const std::string& morse_path,
                                 bool seed_given, std::uint64_t seed, const char* context) {
    if (!morse_path.empty()) {
        auto values = load_morse_file(morse_path, g.order());
        return morse_from_values(g, values);
    }
    if (!seed_given) {
        throw UsageError(std::string(context) + " without --morse requires --seed");
    }
    return MorseFunction::random(g.order(), seed);
}

struct ChiArgs {
    std::string graph_path;
    std::string method = "cliques";
    std::string morse_path;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool verify = false;
    bool time = false;
    long long budget = -1;
};

int run_chi(const ChiArgs& args) {
    Graph g = load_graph_file(args.graph_path);

    if (args.verify) {
        auto agreement = chi_agreement_suite(g, args.seed);
        if (!agreement.agree()) {
            save_graph_file("disagreement_witness.gr", g);
            std::cerr << "method disagreement: census=" << agreement.census_chi
                      << " gaussbonnet=" << agreement.gauss_bonnet_chi
                      << " hopf=" << agreement.hopf_chi << " fast=" << agreement.fast_chi
                      << "; witness graph written to disagreement_witness.gr\n";
            return kExitVerification;
        }
        if (args.time) {
            std::fprintf(stderr, "cliques %.1fus gaussbonnet %.1fus hopf %.1fus fast %.1fus\n",
                         agreement.census_us, agreement.gauss_bonnet_us, agreement.hopf_us,
                         agreement.fast_us);
        }
        std::cout << agreement.census_chi << "\n";
        return kExitOk;
    }

    auto t0 = std::chrono::steady_clock::now();
    long long chi = 0;
    if (args.method == "cliques") {
        if (args.budget >= 0) {
            auto census = clique_census_budgeted(g, args.budget);
            if (!census) {
                std::cerr << "census exceeded the clique-extension budget of " << args.budget
                          << "\n";
                return kExitVerification;
            }
            chi = euler_characteristic(*census);
        } else {
            chi = euler_characteristic(g);
        }
    } else if (args.method == "gaussbonnet") {
        Rational total = gauss_bonnet_report(g).total;
        std::cout << rational_to_string(total) << "\n";
        if (args.time) {
            std::fprintf(stderr, "%.1fus\n",
                         std::chrono::duration<double, std::micro>(
                             std::chrono::steady_clock::now() - t0)
                             .count());
        }
        return kExitOk;
    } else if (args.method == "hopf") {
        auto f = load_or_draw_morse(g, args.morse_path, args.seed_given, args.seed, "hopf");
        chi = index_report(g, f).index_sum;
    } else if (args.method == "fast") {
        chi = fast_euler(g);
    } else {
        throw UsageError("unknown method \"" + args.method +
                         "\" (choose cliques, gaussbonnet, hopf, fast)");
    }
    if (args.time) {
        std::fprintf(stderr, "%.1fus\n",
                     std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count());
    }
    std::cout << chi << "\n";
    return kExitOk;
}

int run_indices(const std::string& graph_path, const std::string& morse_path,
                const std::string& out_path) {
    Graph g = load_graph_file(graph_path);
    auto values = load_morse_file(morse_path, g.order());
    auto f = morse_from_values(g, values);
    auto report = index_report(g, f);
    OutputTarget out(out_path);
    emit_index_csv(out.stream(), report);
    std::cerr << "# index_sum=" << report.index_sum << " chi=" << euler_characteristic(g)
              << " critical=" << report.critical_count() << "\n";
    return kExitOk;
}

int run_curvature(const std::string& graph_path, const std::string& out_path) {
    Graph g = load_graph_file(graph_path);
    auto report = gauss_bonnet_report(g);
    OutputTarget out(out_path);
    emit_curvature_csv(out.stream(), report);
    std::cerr << "# total=" << rational_to_string(report.total) << "\n";
    return kExitOk;
}

int run_verify(const std::string& graph_path, long long trials, std::uint64_t seed) {
    Graph g = load_graph_file(graph_path);
    auto result = verify_poincare_hopf(g, trials, seed);
    std::cout << "trials=" << result.trials << " passed=" << result.passed
              << " chi=" << result.chi << " transfer=" << (result.transfer_ok ? "ok" : "FAIL")
              << "\n";
    if (!result.all_ok()) {
        std::cerr << "verification failed: " << result.failure << "\n";
        save_graph_file("verify_witness.gr", g);
        if (result.failed_function) {
            std::vector<std::string> notes{"failing morse function, seed " +
                                           std::to_string(*result.failed_seed)};
            save_morse_file("verify_witness.morse", *result.failed_function, notes);
            std::cerr << "witness written to verify_witness.gr / verify_witness.morse\n";
        }
        return kExitVerification;
    }
    return kExitOk;
}

int run_mc_critical(int n, double p, long long trials, std::uint64_t seed,
                    const std::string& out_path) {
    auto result = mc_critical(n, p, trials, seed);
    if (!out_path.empty()) {
        OutputTarget out(out_path);
        out.stream() << "trial,graph_seed,morse_seed,critical,vertices\n";
        for (std::size_t t = 0; t < result.log.size(); ++t) {
            const auto& row = result.log[t];
            out.stream() << t << "," << row.graph_seed << "," << row.morse_seed << ","
                         << row.critical << "," << row.vertices << "\n";
        }
    }
    double fraction = result.total_vertices
                          ? static_cast<double>(result.total_critical) /
                                static_cast<double>(result.total_vertices)
                          : 0.0;
    std::printf("trials=%lld vertices=%lld critical=%lld fraction=%.3f half_width=%.3f\n",
                result.trials, result.total_vertices, result.total_critical, fraction,
                result.half_width);
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> families;
    std::string params_csv;
    int n_min = 0;
    int n_max = 0;
    double p = 0.5;
    std::string methods_csv = "cliques,gaussbonnet,hopf,fast";
    std::uint64_t seed = 0;
    long long budget = 10'000'000;
    std::string out_path;
};

int cmd_bench(const BenchArgs& args) {
    std::vector<FamilySpec> instances;
    for (const auto& family : args.families) {
        if (args.n_min > 0) {
            int hi = args.n_max > 0 ? args.n_max : args.n_min;
            for (int n = args.n_min; n <= hi; ++n) {
                FamilySpec spec{family, {n}, args.p,
                                derive_seed(args.seed, static_cast<std::uint64_t>(n))};
                instances.push_back(std::move(spec));
            }
        } else if (!args.params_csv.empty()) {
            instances.push_back(FamilySpec{family, parse_param_csv(args.params_csv), args.p,
                                           args.seed});
        } else {
            throw UsageError("bench needs --n-min/--n-max or --params for family " + family);
        }
    }
    auto methods = split_csv(args.methods_csv);
    auto rows = morsegraph::run_bench(instances, methods, args.seed, args.budget);
    OutputTarget out(args.out_path);
    emit_bench_csv(out.stream(), rows);
    return kExitOk;
}

int run_m(const std::string& graph_path, int restarts, int moves, std::uint64_t seed,
          int exact_cap) {
    Graph g = load_graph_file(graph_path);
    MResult result;
    if (g.order() <= exact_cap) {
        result = m_exact(g, exact_cap);
    } else {
        result = m_search(g, SearchParams{restarts, moves, seed});
    }
    std::cerr << "m lower=" << result.lower << " upper=" << result.upper
              << " exact=" << (result.exact ? "yes" : "no") << "\n";
    std::vector<std::string> notes{
        "witness order: m lower=" + std::to_string(result.lower) +
        " upper=" + std::to_string(result.upper) + " exact=" + (result.exact ? "yes" : "no")};
    emit_morse(std::cout, result.witness, notes);
    return kExitOk;
}

int run_sphere_type(const std::string& graph_path, int restarts, int moves, std::uint64_t seed,
                    int exact_cap) {
    Graph g = load_graph_file(graph_path);
    SphereTypeParams params;
    params.exhaustive_cap = exact_cap;
    params.search = SearchParams{restarts, moves, seed};
    auto verdict = is_sphere_type(g, params);
    std::cout << "verdict: " << to_string(verdict.verdict) << "\n";
    for (const auto& line : verdict.trace) std::cout << line << "\n";
    return kExitOk;
}

int run_gen(const std::string& family, const std::string& params_csv, int n, double p,
            std::uint64_t seed, const std::string& out_path) {
    FamilySpec spec;
    spec.family = family;
    spec.params = parse_param_csv(params_csv);
    if (spec.params.empty() && n > 0) spec.params.push_back(n);
    spec.p = p;
    spec.seed = seed;
    Graph g = generate(spec);
    std::ostringstream provenance;
    provenance << "family=" << family;
    if (!spec.params.empty()) provenance << " params=" << spec.param_string();
    if (family == "erdos_renyi") provenance << " p=" << p;
    if (family == "erdos_renyi" || family == "tree") provenance << " seed=" << seed;
    std::vector<std::string> comments{provenance.str()};
    OutputTarget out(out_path);
    emit_graph(out.stream(), g, comments);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"morsegraph: Euler characteristic, Morse indices, curvature, and critical "
                 "point search on simple graphs"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 1 usage, 2 graph/morse parse error, 3 validation error, "
               "4 verification failure.\n"
               "Graph files: \"c\" comments, \"p edge <n> <m>\", \"e <u> <v>\" (1-based).\n"
               "Morse files: \"c\" comments, \"f <vertex> <value>\" (1-based).");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    std::string gen_family, gen_params, gen_out;
    int gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family, "family name")->required();
    gen->add_option("--params", gen_params, "integer parameters, comma separated");
    gen->add_option("--n", gen_n, "shorthand for --params <n>");
    gen->add_option("--p", gen_p, "edge probability (erdos_renyi)");
    auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "seed (tree, erdos_renyi)");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // chi
    auto* chi = app.add_subcommand("chi", "Euler characteristic by any method");
    ChiArgs chi_args;
    chi->add_option("--graph", chi_args.graph_path, "graph file")->required();
    chi->add_option("--method", chi_args.method, "cliques | gaussbonnet | hopf | fast");
    chi->add_option("--morse", chi_args.morse_path, "morse value file (hopf)");
    auto* chi_seed = chi->add_option("--seed", chi_args.seed, "seed for a random morse function");
    chi->add_flag("--verify", chi_args.verify, "compute all four methods and require agreement");
    chi->add_flag("--time", chi_args.time, "print wall time to stderr");
    chi->add_option("--budget", chi_args.budget, "clique-extension budget for the census");

    // indices
    auto* indices = app.add_subcommand("indices", "per-vertex index report as CSV");
    std::string idx_graph, idx_morse, idx_out;
    indices->add_option("--graph", idx_graph, "graph file")->required();
    indices->add_option("--morse", idx_morse, "morse value file")->required();
    indices->add_option("--out", idx_out, "output CSV (default stdout)");

    // curvature
    auto* curv = app.add_subcommand("curvature", "per-vertex curvature report as CSV");
    std::string curv_graph, curv_out;
    curv->add_option("--graph", curv_graph, "graph file")->required();
    curv->add_option("--out", curv_out, "output CSV (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "index-sum and counting-identity sweep");
    std::string ver_graph;
    long long ver_trials = 20;
    std::uint64_t ver_seed = 0;
    verify->add_option("--graph", ver_graph, "graph file")->required();
    verify->add_option("--trials", ver_trials, "number of random morse functions")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", ver_seed, "seed")->required();

    // mc-critical
    auto* mc = app.add_subcommand("mc-critical", "monte-carlo critical-vertex fraction");
    int mc_n = 10;
    double mc_p = 0.5;
    long long mc_trials = 1000;
    std::uint64_t mc_seed = 0;
    std::string mc_out;
    mc->add_option("--n", mc_n, "graph order")->check(CLI::PositiveNumber);
    mc->add_option("--p", mc_p, "edge probability");
    mc->add_option("--trials", mc_trials, "trials")->check(CLI::PositiveNumber);
    mc->add_option("--seed", mc_seed, "seed")->required();
    mc->add_option("--out", mc_out, "per-trial CSV log");

    // bench
    auto* bench = app.add_subcommand("bench", "benchmark chi methods, CSV output");
    BenchArgs bench_args;
    bench->add_option("--family", bench_args.families, "family name (repeatable)")->required();
    bench->add_option("--params", bench_args.params_csv, "fixed parameters, comma separated");
    bench->add_option("--n-min", bench_args.n_min, "range start for single-parameter families");
    bench->add_option("--n-max", bench_args.n_max, "range end");
    bench->add_option("--p", bench_args.p, "edge probability (erdos_renyi)");
    bench->add_option("--method", bench_args.methods_csv, "methods, comma separated");
    bench->add_option("--seed", bench_args.seed, "seed")->required();
    bench->add_option("--budget", bench_args.budget, "census clique-extension budget");
    bench->add_option("--out", bench_args.out_path, "output CSV (default stdout)");

    // m
    auto* m_cmd = app.add_subcommand("m", "minimal number of critical points");
    std::string m_graph;
    int m_restarts = 200, m_moves = 500, m_cap = 9;
    std::uint64_t m_seed = 0;
    m_cmd->add_option("--graph", m_graph, "graph file")->required();
    m_cmd->add_option("--restarts", m_restarts, "search restarts");
    m_cmd->add_option("--moves", m_moves, "moves per restart");
    m_cmd->add_option("--seed", m_seed, "search seed");
    m_cmd->add_option("--exact-cap", m_cap, "exhaustive search up to this order");

    // sphere-type
    auto* st = app.add_subcommand("sphere-type", "recursive sphere-type verdict");
    std::string st_graph;
    int st_restarts = 200, st_moves = 500, st_cap = 9;
    std::uint64_t st_seed = 0;
    st->add_option("--graph", st_graph, "graph file")->required();
    st->add_option("--restarts", st_restarts, "search restarts");
    st->add_option("--moves", st_moves, "moves per restart");
    st->add_option("--seed", st_seed, "search seed");
    st->add_option("--exact-cap", st_cap, "exhaustive search up to this order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            if ((gen_family == "tree" || gen_family == "erdos_renyi") &&
                gen_seed_opt->count() == 0) {
                throw UsageError("family " + gen_family + " requires --seed");
            }
            return run_gen(gen_family, gen_params, gen_n, gen_p, gen_seed, gen_out);
        }
        if (chi->parsed()) {
            chi_args.seed_given = chi_seed->count() > 0;
            if (chi_args.verify && !chi_args.seed_given) {
                throw UsageError("--verify draws a random morse function; provide --seed");
            }
            return run_chi(chi_args);
        }
        if (indices->parsed()) return run_indices(idx_graph, idx_morse, idx_out);
        if (curv->parsed()) return run_curvature(curv_graph, curv_out);
        if (verify->parsed()) return run_verify(ver_graph, ver_trials, ver_seed);
        if (mc->parsed()) return run_mc_critical(mc_n, mc_p, mc_trials, mc_seed, mc_out);
        if (bench->parsed()) return cmd_bench(bench_args);
        if (m_cmd->parsed()) return run_m(m_graph, m_restarts, m_moves, m_seed, m_cap);
        if (st->parsed()) return run_sphere_type(st_graph, st_restarts, st_moves, st_seed, st_cap);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const MorseError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const GeneratorError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const GraphError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
