#include "spechg/solver.hpp"
#include "spechg/errors.hpp"
#include "spechg/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace spechg {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::GradConverged: return "grad-converged";
        case SolveStatus::StagnationConverged: return "stagnation-converged";
        case SolveStatus::IterCap: return "iter-cap";
        case SolveStatus::Stalled: return "stalled";
    }
    return "?";
}

std::vector<double> sample_unit(std::mt19937_64& rng, Index n) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x(n);
    double nrm2;
    do {
        for (double& v : x) v = normal(rng);
        nrm2 = kernels::dot(x, x);
    } while (!(nrm2 > 0.0));
    const double inv = 1.0 / std::sqrt(nrm2);
    for (double& v : x) v *= inv;
    return x;
}

SolveResult solve(const Hypergraph& h, TensorSelector sel, EigKind kind,
                  Direction dir, const SolverConfig& config,
                  const std::vector<double>* x0) {
    MeritFunction merit(h, sel, kind, dir);
    auto eval = [&merit](std::vector<double> x) { return merit.evaluate(std::move(x)); };

    const double scale = config.tol_scaling_active(h.n()) ? std::sqrt(double(h.n())) : 1.0;
    const double grad_tol = config.grad_tol * scale;
    const double step_tol = config.step_tol * scale;
    const double fval_tol = config.fval_tol * scale;

    std::mt19937_64 rng(config.rng_seed);
    MeritPoint cur = eval(x0 ? *x0 : sample_unit(rng, h.n()));

    LbfgsHistory hist(config.lbfgs_memory, config.kappa_eps);
    const LineSearchParams ls{config.eta, config.beta, config.max_backtracks};

    SolveResult res;
    if (config.record_trace) res.f_trace.push_back(cur.f);
    res.status = SolveStatus::IterCap;

    for (std::size_t c = 1; c <= config.max_iter; ++c) {
        if (kernels::inf_norm(cur.g) < grad_tol) {
            res.status = SolveStatus::GradConverged;
            break;
        }
        const double gamma = hist.gamma(config.gamma_policy, rng);
        std::vector<double> p = hist.two_loop(cur.g, gamma);
        if (!(kernels::dot(p, cur.g) < 0.0)) {
            // cannot happen with positive definite H_c; steepest descent fallback
            p.assign(cur.g.begin(), cur.g.end());
            for (double& v : p) v = -v;
        }

        BacktrackResult bt;
        try {
            bt = backtrack(eval, cur, p, ls);
        } catch (const LineSearchFailed&) {
            // gradient noise floor: accept the iterate if it stagnates
            const double amin = std::pow(config.beta, config.max_backtracks);
            MeritPoint trial = eval(retract(cur.x, p, amin));
            std::vector<double> d(cur.x.size());
            kernels::axpby(1.0, trial.x, -1.0, cur.x, d);
            const bool stagnant = kernels::inf_norm(d) < step_tol &&
                                  std::fabs(trial.f - cur.f) / (1.0 + std::fabs(cur.f)) <
                                      fval_tol;
            res.status = stagnant ? SolveStatus::StagnationConverged
                                  : SolveStatus::Stalled;
            break;
        }

        if (!(bt.point.f < cur.f)) {
            // no representable progress left
            res.status = SolveStatus::StagnationConverged;
            break;
        }

        std::vector<double> s(cur.x.size()), y(cur.x.size());
        kernels::axpby(1.0, bt.point.x, -1.0, cur.x, s);
        kernels::axpby(1.0, bt.point.g, -1.0, cur.g, y);
        const double step_inf = kernels::inf_norm(s);
        const double df = std::fabs(bt.point.f - cur.f) / (1.0 + std::fabs(cur.f));
        hist.push_pair(std::move(s), std::move(y));

        cur = std::move(bt.point);
        res.iters = c;
        if (config.record_trace) res.f_trace.push_back(cur.f);

        if (step_inf < step_tol && df < fval_tol) {
            res.status = SolveStatus::StagnationConverged;
            break;
        }
    }

    res.lambda = cur.lambda;
    res.grad_inf = kernels::inf_norm(cur.g);
    res.residual_inf = merit.residual_inf(cur.x, cur.lambda);
    res.x = std::move(cur.x);
    return res;
}

MultiStartReport multi_start(const Hypergraph& h, TensorSelector sel, EigKind kind,
                             Direction dir, const SolverConfig& config, std::size_t N,
                             std::optional<double> reference, unsigned jobs) {
    if (N < 1) throw Error("multi_start requires N >= 1");
    MultiStartReport report;
    report.runs.resize(N);

    auto run_one = [&](std::size_t i) {
        SolverConfig ci = config;
        ci.rng_seed = config.rng_seed + i; // independent, reproducible streams
        report.runs[i] = solve(h, sel, kind, dir, ci);
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < N; ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < N; i = next++) run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    report.best_run = 0;
    for (std::size_t i = 1; i < N; ++i) {
        const bool better = dir == Direction::Min
                                ? report.runs[i].lambda < report.runs[report.best_run].lambda
                                : report.runs[i].lambda > report.runs[report.best_run].lambda;
        if (better) report.best_run = i;
    }
    report.best_lambda = report.runs[report.best_run].lambda;

    if (reference) {
        std::size_t hits = 0;
        for (const auto& r : report.runs)
            if (std::fabs(r.lambda - *reference) / (1.0 + std::fabs(*reference)) <= 1e-8)
                ++hits;
        report.accuracy_rate = static_cast<double>(hits) / static_cast<double>(N);
    }
    return report;
}

double sunflower_lambda_star(int k, Index delta) {
    if (k < 4 || k % 2 != 0) throw OddOrder("sunflower closed form requires even k >= 4");
    if (delta < 1) throw Error("delta must be >= 1");
    const double d = static_cast<double>(delta);
    auto phi = [&](double lam) {
        double pw = 1.0;
        for (int j = 0; j < k - 1; ++j) pw *= (1.0 - lam);
        return pw * (lam - d) + d;
    };
    double a = d, b = d + 1.0;
    const double fa = phi(a), fb = phi(b);
    if (!(fa > 0.0) || !(fb <= 0.0))
        throw BracketFailure("no sign change on (delta, delta+1)");
    if (fb == 0.0) return b;
    while (b - a > 1e-14 * std::max(1.0, a)) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break; // hit the fp grid
        (phi(mid) > 0.0 ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

PowerResult ng_qi_zhou(const Hypergraph& h, TensorSelector sel, double tol,
                       std::size_t max_iter) {
    if (sel == TensorSelector::Laplacian)
        throw NotNonnegative("power iteration needs a nonnegative tensor (A or Q)");
    const int k = h.k();
    const Index n = h.n();
    const double shift = 1.0; // T + I is weakly primitive when G is connected

    std::vector<double> x(n, 1.0 / std::sqrt(double(n)));
    std::vector<double> y(n), xkm1(n);
    for (std::size_t it = 1; it <= max_iter; ++it) {
        ProductResult t = tensor_apply(h, sel, x);
        kernels::entry_pow(x, k - 1, xkm1);
        double low = std::numeric_limits<double>::infinity(), high = -low;
        for (Index i = 0; i < n; ++i) {
            y[i] = t.vec[i] + shift * xkm1[i];
            if (!(y[i] > 0.0))
                throw NotNonnegative("iterate left the positive cone; is G connected?");
            const double r = y[i] / xkm1[i];
            low = std::min(low, r);
            high = std::max(high, r);
        }
        if (high - low < tol)
            return {0.5 * (low + high) - shift, std::move(x), it};
        for (Index i = 0; i < n; ++i) x[i] = std::pow(y[i], 1.0 / (k - 1));
        const double inv = 1.0 / std::sqrt(kernels::dot(x, x));
        for (double& v : x) v *= inv;
    }
    throw NoConvergence("power iteration did not converge in " +
                        std::to_string(max_iter) + " iterations");
}

SolveResult shifted_power_method(const Hypergraph& h, TensorSelector sel, EigKind kind,
                                 Direction dir, const SolverConfig& config,
                                 const std::vector<double>* x0) {
    MeritFunction merit(h, sel, kind, dir);
    const int k = h.k();
    const Index n = h.n();
    const double scale = config.tol_scaling_active(n) ? std::sqrt(double(n)) : 1.0;
    const double grad_tol = config.grad_tol * scale;
    const double fval_tol = config.fval_tol * scale;

    std::mt19937_64 rng(config.rng_seed);
    MeritPoint cur = merit.evaluate(x0 ? *x0 : sample_unit(rng, n));
    // maximize m * ratio where m = -sigma
    const double m = -merit.sigma();

    SolveResult res;
    res.status = SolveStatus::IterCap;
    if (config.record_trace) res.f_trace.push_back(cur.f);

    double alpha = 1.0 + std::fabs(cur.lambda);
    std::vector<double> y(n);
    for (std::size_t it = 1; it <= config.max_iter; ++it) {
        if (kernels::inf_norm(cur.g) < grad_tol) {
            res.status = SolveStatus::GradConverged;
            break;
        }
        ProductResult t = tensor_apply(h, sel, cur.x);
        ProductResult b = b_apply(kind, k, cur.x);

        MeritPoint next;
        bool accepted = false;
        for (int tries = 0; tries < 60; ++tries) {
            kernels::axpby(m, t.vec, alpha, b.vec, y);
            if (kind == EigKind::H)
                for (double& v : y)
                    v = std::copysign(std::pow(std::fabs(v), 1.0 / (k - 1)), v);
            next = merit.evaluate(y);
            if (next.f <= cur.f) {
                accepted = true;
                break;
            }
            alpha *= 2.0; // restore monotonicity
        }
        if (!accepted) {
            res.status = SolveStatus::Stalled;
            break;
        }
        const double df = std::fabs(next.f - cur.f) / (1.0 + std::fabs(cur.f));
        cur = std::move(next);
        res.iters = it;
        if (config.record_trace) res.f_trace.push_back(cur.f);
        if (df < fval_tol) {
            res.status = SolveStatus::StagnationConverged;
            break;
        }
    }

    res.lambda = cur.lambda;
    res.grad_inf = kernels::inf_norm(cur.g);
    res.residual_inf = merit.residual_inf(cur.x, cur.lambda);
    res.x = std::move(cur.x);
    return res;
}

} // namespace spechg
