// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Thresholds are pinned here on purpose; do not loosen them to
// make a regression pass.

#include "spechg/generators.hpp"
#include "spechg/solver.hpp"
#include "spechg/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace spechg;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SolverConfig base_config(std::uint64_t seed) {
    SolverConfig c;
    c.rng_seed = seed;
    return c;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    // 1. squid minimum adjacency H-eigenvalue, 100 starts
    criteria.push_back({"squid-adjacency-min", [](std::string& detail) {
        const auto t0 = std::chrono::steady_clock::now();
        Hypergraph h = gen_squid(4);
        const double ref = -ng_qi_zhou(h, TensorSelector::Adjacency).lambda;
        auto rep = multi_start(h, TensorSelector::Adjacency, EigKind::H,
                               Direction::Min, base_config(1001), 100, ref);
        const double secs = seconds_since(t0);
        detail = fmt("best %.10f acc %.0f%%", rep.best_lambda,
                     *rep.accuracy_rate * 100.0) + fmt(" time %.1fs", secs);
        return std::fabs(rep.best_lambda - (-1.3320)) <= 5e-5 &&
               *rep.accuracy_rate >= 0.95 && secs <= 60.0;
    }});

    // 2. spectral symmetry: |min H-eig of A| equals the power-iteration max
    criteria.push_back({"squid-spectral-symmetry", [](std::string& detail) {
        Hypergraph h = gen_squid(4);
        const double pmax = ng_qi_zhou(h, TensorSelector::Adjacency).lambda;
        auto rep = multi_start(h, TensorSelector::Adjacency, EigKind::H,
                               Direction::Min, base_config(1002), 20);
        detail = fmt("|min| %.10f power max %.10f", std::fabs(rep.best_lambda), pmax);
        return std::fabs(std::fabs(rep.best_lambda) - pmax) <= 1e-4;
    }});

    // 3. Petersen blow-up: smallest signless-Laplacian H-eigenvalue is 1
    criteria.push_back({"petersen-blowup-q-min", [](std::string& detail) {
        Hypergraph h = gen_blowup(gen_petersen(), 2);
        auto rep = multi_start(h, TensorSelector::SignlessLaplacian, EigKind::H,
                               Direction::Min, base_config(1003), 100, 1.0);
        detail = fmt("best %.10f acc %.0f%%", rep.best_lambda,
                     *rep.accuracy_rate * 100.0);
        return std::fabs(rep.best_lambda - 1.0) <= 1e-6 && *rep.accuracy_rate >= 0.90;
    }});

    // 4. grid Laplacian maxima at three subdivision levels
    criteria.push_back({"grid-laplacian-max", [](std::string& detail) {
        const double want[] = {4.6344, 6.5754, 7.5293};
        bool ok = true;
        for (int s = 1; s <= 3; ++s) {
            Hypergraph h = gen_grid(s);
            // the high-precision reference comes from the nonnegative power
            // iteration on Q; L and Q share the max on these instances
            const double ref = ng_qi_zhou(h, TensorSelector::SignlessLaplacian).lambda;
            auto rep = multi_start(h, TensorSelector::Laplacian, EigKind::H,
                                   Direction::Max, base_config(1004 + s), 100, ref);
            detail += fmt("s=%.0f best %.6f", double(s), rep.best_lambda);
            ok = ok && std::fabs(rep.best_lambda - want[s - 1]) <= 5e-5;
            if (s == 3) {
                detail += fmt(" acc %.0f%%", *rep.accuracy_rate * 100.0);
                ok = ok && *rep.accuracy_rate >= 0.80;
            }
            detail += "  ";
        }
        return ok;
    }});

    // 5. sunflower closed form across sizes and orders
    criteria.push_back({"sunflower-closed-form", [](std::string& detail) {
        struct Case { int k; Index delta; std::size_t starts; };
        const Case cases[] = {{4, 10, 100}, {4, 100, 100}, {4, 1000, 100},
                              {6, 10, 200}, {6, 100, 200}};
        bool ok = true;
        for (const auto& c : cases) {
            Hypergraph h = gen_sunflower(c.k, c.delta);
            const double star = sunflower_lambda_star(c.k, c.delta);
            auto rep = multi_start(h, TensorSelector::Laplacian, EigKind::H,
                                   Direction::Max, base_config(1010 + c.k + c.delta),
                                   c.starts, star);
            const double re = std::fabs(rep.best_lambda - star) / (1.0 + std::fabs(star));
            detail += fmt("k=%.0f d=%.0f RE %.1e  ", double(c.k), double(c.delta), re);
            ok = ok && re <= 1e-8;
        }
        return ok;
    }});

    // 6. icosahedron Z-eigenvalues: L and Q maxima agree and hit 5 / 6
    criteria.push_back({"icosahedron-z-max", [](std::string& detail) {
        bool ok = true;
        for (int s = 0; s <= 3; ++s) {
            Hypergraph h = gen_icosahedron(s);
            const std::size_t starts = s <= 2 ? 20 : 10;
            auto l = multi_start(h, TensorSelector::Laplacian, EigKind::Z,
                                 Direction::Max, base_config(1100 + s), starts);
            auto q = multi_start(h, TensorSelector::SignlessLaplacian, EigKind::Z,
                                 Direction::Max, base_config(1200 + s), starts);
            const double want = s == 0 ? 5.0 : 6.0;
            detail += fmt("s=%.0f L %.7f Q %.7f  ", double(s), l.best_lambda,
                          q.best_lambda);
            ok = ok && std::fabs(l.best_lambda - want) <= 1e-5 &&
                 std::fabs(q.best_lambda - want) <= 1e-5 &&
                 std::fabs(l.best_lambda - q.best_lambda) <= 1e-6;
        }
        return ok;
    }});

    // 7. oracle suite: dense tensors, finite differences, dense BFGS,
    // explicit orthogonal-matrix retraction, trace monotonicity, residuals
    criteria.push_back({"oracle-suite", [](std::string& detail) {
        auto checks = run_oracle_suite();
        bool ok = true;
        for (const auto& c : checks) {
            if (!c.pass) {
                ok = false;
                detail += c.name + fmt(" worst %.2e tol %.0e  ", c.worst_error, c.tol);
            }
        }
        if (ok) detail = fmt("%.0f checks green", double(checks.size()));
        return ok;
    }});

    // 8. k=2 reduction against the exact Petersen spectrum:
    // A has eigenvalues {3, 1, -2}; L = 3I - A; Q = 3I + A
    criteria.push_back({"petersen-k2-spectrum", [](std::string& detail) {
        Hypergraph h = gen_blowup(gen_petersen(), 1);
        struct Case { TensorSelector sel; Direction dir; double want; };
        const Case cases[] = {
            {TensorSelector::Adjacency, Direction::Min, -2.0},
            {TensorSelector::Adjacency, Direction::Max, 3.0},
            {TensorSelector::Laplacian, Direction::Min, 0.0},
            {TensorSelector::Laplacian, Direction::Max, 5.0},
            {TensorSelector::SignlessLaplacian, Direction::Min, 1.0},
            {TensorSelector::SignlessLaplacian, Direction::Max, 6.0},
        };
        bool ok = true;
        double worst = 0.0;
        for (const auto& c : cases) {
            auto rep = multi_start(h, c.sel, EigKind::H, c.dir, base_config(1300), 20);
            worst = std::max(worst, std::fabs(rep.best_lambda - c.want));
        }
        ok = worst <= 1e-8;
        detail = fmt("worst |error| %.2e", worst);
        return ok;
    }});

    // 9. scale smoke: n = 30001 sunflower with sqrt(n)-scaled tolerances
    criteria.push_back({"scale-smoke-30001", [](std::string& detail) {
        const auto t0 = std::chrono::steady_clock::now();
        Hypergraph h = gen_sunflower(4, 10000);
        SolverConfig config = base_config(1400);
        SolveResult r =
            solve(h, TensorSelector::Laplacian, EigKind::H, Direction::Max, config);
        const double secs = seconds_since(t0);
        detail = fmt("lambda %.6f time %.1fs ", r.lambda, secs) + to_string(r.status);
        return r.status == SolveStatus::GradConverged && secs <= 300.0;
    }});

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool pass = false;
        try {
            pass = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %zu %s: %s\n", pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failed;
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failed == 0 ? 0 : 1;
}
