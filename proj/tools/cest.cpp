#include "spechg/errors.hpp"
#include "spechg/generators.hpp"
#include "spechg/kernels.hpp"
#include "spechg/solver.hpp"
#include "spechg/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace spechg;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

TensorSelector parse_selector(const std::string& s) {
    if (s == "adj") return TensorSelector::Adjacency;
    if (s == "lap") return TensorSelector::Laplacian;
    if (s == "slap") return TensorSelector::SignlessLaplacian;
    throw CLI::ValidationError("--tensor", "expected adj, lap, or slap");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CEST_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

// A sunflower is recognizable from degrees alone: one center of degree m,
// everything else degree 1, n = (k-1)m + 1.
std::optional<Index> detect_sunflower_delta(const Hypergraph& h) {
    const Index m = h.m();
    if (h.n() != static_cast<Index>(h.k() - 1) * m + 1) return std::nullopt;
    Index centers = 0;
    for (Index d : h.degrees()) {
        if (d == m && m > 1) ++centers;
        else if (d != 1) return std::nullopt;
    }
    if (m > 1 && centers != 1) return std::nullopt;
    return m;
}

struct RunRecord {
    std::string family;
    Index n, m;
    int k;
    std::string selector, eig, dir;
    std::size_t starts;
    double best_lambda;
    std::optional<double> accuracy;
    std::size_t median_iters;
    double wall_time_s;
    std::uint64_t seed;
};

void append_csv(const std::string& path, const RunRecord& r) {
    const bool fresh = !std::filesystem::exists(path) ||
                       std::filesystem::file_size(path) == 0;
    std::ofstream f(path, std::ios::app);
    if (!f) throw spechg::Error("cannot open " + path);
    if (fresh)
        f << "family,n,m,k,selector,eig,dir,starts,best_lambda,accuracy,"
             "median_iters,wall_time_s,seed\r\n";
    f.precision(17);
    f << r.family << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.selector
      << ',' << r.eig << ',' << r.dir << ',' << r.starts << ',' << r.best_lambda
      << ',';
    if (r.accuracy) f << *r.accuracy;
    f << ',' << r.median_iters << ',' << r.wall_time_s << ',' << r.seed << "\r\n";
}

std::size_t median_iters(const MultiStartReport& rep) {
    std::vector<std::size_t> iters;
    iters.reserve(rep.runs.size());
    for (const auto& r : rep.runs) iters.push_back(r.iters);
    std::nth_element(iters.begin(), iters.begin() + iters.size() / 2, iters.end());
    return iters[iters.size() / 2];
}

struct SolveFlags {
    std::string tensor = "adj";
    std::string eig = "h";
    std::string dir = "min";
    std::size_t starts = 1;
    std::uint64_t seed = default_seed();
    unsigned jobs = 1;
    std::string kernel = "auto";
    std::string scale_tols = "auto";
    std::string gamma = "random";
    SolverConfig config;
    std::optional<double> reference;
    bool auto_reference = false;
    std::string csv;
    std::string family;
};

void add_solver_flags(CLI::App* cmd, SolveFlags& f) {
    cmd->add_option("--tensor", f.tensor, "Tensor: adj, lap, or slap")
        ->check(CLI::IsMember({"adj", "lap", "slap"}));
    cmd->add_option("--eig", f.eig, "Eigenpair kind: h or z")
        ->check(CLI::IsMember({"h", "z"}));
    cmd->add_option("--dir", f.dir, "Extreme sought: min or max")
        ->check(CLI::IsMember({"min", "max"}));
    cmd->add_option("--starts", f.starts, "Number of random starts");
    cmd->add_option("--seed", f.seed, "RNG seed (default: $CEST_SEED or 0)");
    cmd->add_option("--jobs", f.jobs, "Concurrent runs (default 1, bit-reproducible)");
    cmd->add_option("--kernel", f.kernel, "Kernel backend: auto, scalar, avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
    cmd->add_option("--lbfgs-memory", f.config.lbfgs_memory, "L-BFGS history size L");
    cmd->add_option("--eta", f.config.eta, "Sufficient-decrease coefficient");
    cmd->add_option("--beta", f.config.beta, "Backtracking ratio");
    cmd->add_option("--kappa-eps", f.config.kappa_eps, "Curvature floor");
    cmd->add_option("--grad-tol", f.config.grad_tol, "Gradient inf-norm tolerance");
    cmd->add_option("--step-tol", f.config.step_tol, "Step inf-norm stagnation tolerance");
    cmd->add_option("--fval-tol", f.config.fval_tol, "Relative f stagnation tolerance");
    cmd->add_option("--max-iter", f.config.max_iter, "Iteration cap");
    cmd->add_option("--scale-tols", f.scale_tols,
                    "Multiply tolerances by sqrt(n): auto, on, off")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    cmd->add_option("--gamma", f.gamma, "Initial scaling policy: bb1, bb2, dai, random")
        ->check(CLI::IsMember({"bb1", "bb2", "dai", "random"}));
}

void finalize_config(SolveFlags& f) {
    kernels::set_backend(kernels::parse_backend(f.kernel));
    f.config.rng_seed = f.seed;
    if (f.scale_tols == "on") f.config.scale_tols_by_sqrt_n = true;
    else if (f.scale_tols == "off") f.config.scale_tols_by_sqrt_n = false;
    if (f.gamma == "bb1") f.config.gamma_policy = GammaPolicy::BB1;
    else if (f.gamma == "bb2") f.config.gamma_policy = GammaPolicy::BB2;
    else if (f.gamma == "dai") f.config.gamma_policy = GammaPolicy::Dai;
    else f.config.gamma_policy = GammaPolicy::RandomMix;
}

int run_solve_like(const SolveFlags& flags_in, const Hypergraph& h,
                   const std::string& family, std::ostream& out) {
    SolveFlags flags = flags_in;
    finalize_config(flags);
    const TensorSelector sel = parse_selector(flags.tensor);
    const EigKind kind = flags.eig == "h" ? EigKind::H : EigKind::Z;
    const Direction dir = flags.dir == "min" ? Direction::Min : Direction::Max;

    std::optional<double> reference = flags.reference;
    if (flags.auto_reference && !reference && sel == TensorSelector::Laplacian &&
        kind == EigKind::H && dir == Direction::Max)
        if (auto delta = detect_sunflower_delta(h))
            reference = sunflower_lambda_star(h.k(), *delta);

    const auto t0 = std::chrono::steady_clock::now();
    MultiStartReport rep =
        multi_start(h, sel, kind, dir, flags.config, flags.starts, reference, flags.jobs);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    out.precision(17);
    out << "family      " << family << "  (n=" << h.n() << " m=" << h.m()
        << " k=" << h.k() << ")\n"
        << "problem     " << to_string(sel) << " " << to_string(kind) << "-eig "
        << to_string(dir) << ", " << flags.starts << " starts, seed " << flags.seed
        << "\n"
        << "best lambda " << rep.best_lambda << "\n"
        << "residual    " << rep.runs[rep.best_run].residual_inf << "\n"
        << "status      " << to_string(rep.runs[rep.best_run].status) << "\n";
    if (reference) {
        out << "reference   " << *reference << "  (RE "
            << std::fabs(rep.best_lambda - *reference) /
                   std::max(1e-300, std::fabs(*reference))
            << ")\n"
            << "accuracy    " << *rep.accuracy_rate * 100.0 << "%\n";
    }
    out << "time        " << secs << " s\n";

    if (!flags.csv.empty())
        append_csv(flags.csv, {family, h.n(), h.m(), h.k(), to_string(sel),
                               to_string(kind), to_string(dir), flags.starts,
                               rep.best_lambda, rep.accuracy_rate, median_iters(rep),
                               secs, flags.seed});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extreme H-/Z-eigenvalues of hypergraph tensors"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a hypergraph file");
    std::string gen_family, gen_out;
    int gen_k = 4, gen_s = 0;
    Index gen_delta = 1, gen_t = 1;
    gen->add_option("family", gen_family,
                    "squid | sunflower | grid | blowup-petersen | icosahedron")
        ->required()
        ->check(CLI::IsMember(
            {"squid", "sunflower", "grid", "blowup-petersen", "icosahedron"}));
    gen->add_option("--k", gen_k, "Edge cardinality (squid, sunflower)");
    gen->add_option("--delta", gen_delta, "Maximum degree (sunflower)");
    gen->add_option("--s", gen_s, "Subdivision order (grid, icosahedron)");
    gen->add_option("--t", gen_t, "Blow-up set size (blowup-petersen)");
    gen->add_option("-o,--out", gen_out, "Output path (default stdout)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Run multi-start CEST on a file");
    std::string solve_input;
    SolveFlags solve_flags;
    solve_cmd->add_option("input", solve_input, "Hypergraph file")->required();
    add_solver_flags(solve_cmd, solve_flags);
    solve_cmd->add_option("--reference", solve_flags.reference,
                          "Known extreme eigenvalue for the accuracy rate");
    solve_cmd->add_flag("--auto-reference", solve_flags.auto_reference,
                        "Derive the reference when possible (sunflower closed form)");
    solve_cmd->add_option("--csv", solve_flags.csv, "Append a record to this CSV");
    solve_cmd->add_option("--family", solve_flags.family, "Family label for the CSV");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the oracle suite");
    Index verify_max_n = 13;
    std::uint64_t verify_seed = 12345;
    verify_cmd->add_option("--max-n", verify_max_n, "Dense-oracle size cap")
        ->check(CLI::Range(Index{4}, Index{13}));
    verify_cmd->add_option("--seed", verify_seed, "RNG seed for random probes");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Timing sweep over the families");
    SolveFlags bench_flags;
    bench_flags.starts = 10;
    add_solver_flags(bench_cmd, bench_flags);
    bench_cmd->add_option("--csv", bench_flags.csv, "Append records to this CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) {
            Hypergraph h = [&] {
                if (gen_family == "squid") return gen_squid(gen_k);
                if (gen_family == "sunflower") return gen_sunflower(gen_k, gen_delta);
                if (gen_family == "grid") return gen_grid(gen_s);
                if (gen_family == "blowup-petersen")
                    return gen_blowup(gen_petersen(), gen_t);
                return gen_icosahedron(gen_s);
            }();
            if (gen_out.empty()) write_hypergraph(h, std::cout);
            else write_hypergraph(h, gen_out);
            return 0;
        }
        if (*solve_cmd) {
            const std::string family =
                !solve_flags.family.empty()
                    ? solve_flags.family
                    : std::filesystem::path(solve_input).stem().string();
            Hypergraph h = read_hypergraph(solve_input);
            return run_solve_like(solve_flags, h, family, std::cout);
        }
        if (*verify_cmd) {
            auto checks = run_oracle_suite(verify_max_n, verify_seed);
            bool all_pass = true;
            std::string first_fail;
            for (const auto& c : checks) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                          << "  worst " << c.worst_error << "  tol " << c.tol << "\n";
                if (!c.pass && all_pass) { all_pass = false; first_fail = c.name; }
            }
            if (!all_pass) {
                std::cerr << "verify failed at check: " << first_fail << "\n";
                return kExitNumeric;
            }
            return 0;
        }
        if (*bench_cmd) {
            struct Case {
                std::string family;
                Hypergraph h;
                std::string tensor, eig, dir;
            };
            std::vector<Case> cases;
            for (Index d : {Index{10}, Index{100}, Index{1000}})
                cases.push_back({"sunflower-d" + std::to_string(d), gen_sunflower(4, d),
                                 "lap", "h", "max"});
            for (int s : {1, 2, 3})
                cases.push_back({"grid-s" + std::to_string(s), gen_grid(s), "lap", "h",
                                 "max"});
            for (int s : {0, 1, 2})
                cases.push_back({"icosahedron-s" + std::to_string(s),
                                 gen_icosahedron(s), "lap", "z", "max"});
            for (const auto& c : cases) {
                SolveFlags f = bench_flags;
                f.tensor = c.tensor;
                f.eig = c.eig;
                f.dir = c.dir;
                run_solve_like(f, c.h, c.family, std::cout);
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const spechg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const spechg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
