#ifndef SPECHG_SOLVER_HPP
#define SPECHG_SOLVER_HPP

#include "spechg/cayley.hpp"
#include "spechg/lbfgs.hpp"
#include "spechg/merit.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace spechg {

struct SolverConfig {
    std::size_t lbfgs_memory = 5;  // L
    double eta = 0.01;
    double beta = 0.5;
    double kappa_eps = 1e-10;
    double grad_tol = 1e-6;   // ||g||_inf
    double step_tol = 1e-8;   // ||x_{c+1}-x_c||_inf
    double fval_tol = 1e-16;  // |f_{c+1}-f_c|/(1+|f_c|)
    std::size_t max_iter = 5000;
    // Enlarge all three tolerances by sqrt(n); engaged automatically for
    // n > 1e4 when not set explicitly.
    std::optional<bool> scale_tols_by_sqrt_n;
    GammaPolicy gamma_policy = GammaPolicy::RandomMix;
    std::uint64_t rng_seed = 0;
    int max_backtracks = 60;
    bool record_trace = true;

    bool tol_scaling_active(Index n) const {
        return scale_tols_by_sqrt_n.value_or(n > 10000);
    }
};

enum class SolveStatus { GradConverged, StagnationConverged, IterCap, Stalled };

std::string to_string(SolveStatus s);

struct SolveResult {
    double lambda = 0.0;       // eigenvalue estimate (un-negated ratio)
    std::vector<double> x;     // unit eigenvector estimate
    SolveStatus status = SolveStatus::IterCap;
    std::size_t iters = 0;
    std::vector<double> f_trace;
    double grad_inf = 0.0;
    double residual_inf = 0.0; // ||Tx^{k-1} - lambda Bx^{k-1}||_inf
};

// Algorithm CEST: L-BFGS direction, backtracking line search, Cayley
// retraction; stops on ||g||_inf < tol, on step+value stagnation, or at
// the iteration cap.
SolveResult solve(const Hypergraph& h, TensorSelector sel, EigKind kind,
                  Direction dir, const SolverConfig& config,
                  const std::vector<double>* x0 = nullptr);

// Standard-normal vector normalized to unit length (uniform on the sphere).
std::vector<double> sample_unit(std::mt19937_64& rng, Index n);

struct MultiStartReport {
    std::vector<SolveResult> runs;
    double best_lambda = 0.0;
    std::size_t best_run = 0;
    // |{i : |lambda_i - ref| / (1 + |ref|) <= 1e-8}| / N, when ref given.
    std::optional<double> accuracy_rate;
};

MultiStartReport multi_start(const Hypergraph& h, TensorSelector sel, EigKind kind,
                             Direction dir, const SolverConfig& config, std::size_t N,
                             std::optional<double> reference = std::nullopt,
                             unsigned jobs = 1);

// Largest Laplacian H-eigenvalue of the k-uniform sunflower with maximum
// degree delta: the unique real root of (1-x)^{k-1}(x-delta)+delta = 0
// in (delta, delta+1], by bisection.
double sunflower_lambda_star(int k, Index delta);

// Nonnegative-tensor power iteration (with a +1 diagonal shift for
// convergence on weakly irreducible tensors) for the largest H-eigenvalue
// of A or Q. Returns (lambda, positive unit-ish eigenvector).
struct PowerResult {
    double lambda;
    std::vector<double> x;
    std::size_t iters;
};
PowerResult ng_qi_zhou(const Hypergraph& h, TensorSelector sel, double tol = 1e-10,
                       std::size_t max_iter = 100000);

// Shifted power iteration on the same merit function (SS-HOPM style, with
// an adaptive shift keeping the objective monotone). Cross-validation only.
SolveResult shifted_power_method(const Hypergraph& h, TensorSelector sel, EigKind kind,
                                 Direction dir, const SolverConfig& config,
                                 const std::vector<double>* x0 = nullptr);

} // namespace spechg

#endif
