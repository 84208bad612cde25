#include "spechg/verify.hpp"
#include "spechg/cayley.hpp"
#include "spechg/dense_oracle.hpp"
#include "spechg/generators.hpp"
#include "spechg/kernels.hpp"
#include "spechg/lbfgs.hpp"
#include "spechg/merit.hpp"
#include "spechg/solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

namespace spechg {

namespace {

struct Check {
    CheckResult r;
    Check(std::string name, double tol) { r.name = std::move(name); r.tol = tol; }
    void observe(double err) { r.worst_error = std::max(r.worst_error, err); }
    CheckResult done() { r.pass = r.worst_error <= r.tol; return r; }
};

double rel_err(double got, double want) {
    return std::fabs(got - want) / (1.0 + std::fabs(want));
}

std::vector<Hypergraph> small_instances(Index max_n) {
    std::vector<Hypergraph> out;
    auto add = [&](Hypergraph h) {
        if (h.n() <= max_n) out.push_back(std::move(h));
    };
    add(gen_grid(0));
    add(gen_grid(1));
    add(gen_sunflower(4, 3));
    add(gen_squid(4));
    add(gen_blowup(gen_petersen(), 1)); // ordinary graph as a 2-graph
    add(gen_blowup(SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}), 2));
    return out;
}

constexpr TensorSelector kSelectors[] = {TensorSelector::Adjacency,
                                         TensorSelector::Laplacian,
                                         TensorSelector::SignlessLaplacian};

} // namespace

std::vector<CheckResult> run_oracle_suite(Index max_n, std::uint64_t seed) {
    std::vector<CheckResult> results;
    std::mt19937_64 rng(seed);
    const auto instances = small_instances(max_n);

    // sparse products vs the literal dense tensor
    for (TensorSelector sel : kSelectors) {
        Check chk("sparse-vs-dense-" + to_string(sel), 1e-12);
        for (const auto& h : instances) {
            DenseTensor dense = DenseTensor::from_hypergraph(h, sel);
            for (int rep = 0; rep < 20; ++rep) {
                auto x = sample_unit(rng, h.n());
                ProductResult sp = tensor_apply(h, sel, x);
                ProductResult dn = dense.apply(x);
                for (Index i = 0; i < h.n(); ++i) chk.observe(rel_err(sp.vec[i], dn.vec[i]));
                chk.observe(rel_err(sp.scalar, dn.scalar));
            }
        }
        results.push_back(chk.done());
    }

    {
        Check chk("scalar-identity", 1e-12);
        Check hom("homogeneity", 1e-12);
        for (const auto& h : instances)
            for (TensorSelector sel : kSelectors)
                for (int rep = 0; rep < 5; ++rep) {
                    auto x = sample_unit(rng, h.n());
                    ProductResult r = tensor_apply(h, sel, x);
                    chk.observe(rel_err(kernels::dot(x, r.vec), r.scalar));

                    const double t = rep % 2 ? 1.7 : -1.3;
                    std::vector<double> tx(x);
                    for (double& v : tx) v *= t;
                    double tk = 1.0;
                    for (int j = 0; j < h.k() - 1; ++j) tk *= t;
                    ProductResult rt = tensor_apply(h, sel, tx);
                    for (Index i = 0; i < h.n(); ++i)
                        hom.observe(rel_err(rt.vec[i], tk * r.vec[i]));
                }
        results.push_back(chk.done());
        results.push_back(hom.done());
    }

    // gradient vs projected central finite differences
    {
        Check chk("gradient-vs-finite-diff", 1e-6);
        const double fd_h = 1e-6;
        for (const auto& h : instances) {
            if (h.n() > 31) continue;
            for (TensorSelector sel : kSelectors)
                for (EigKind kind : {EigKind::H, EigKind::Z})
                    for (Direction dir : {Direction::Min, Direction::Max}) {
                        MeritFunction merit(h, sel, kind, dir);
                        MeritPoint p = merit.evaluate(sample_unit(rng, h.n()));
                        for (Index i = 0; i < h.n(); ++i) {
                            auto xp = p.x, xm = p.x;
                            xp[i] += fd_h;
                            xm[i] -= fd_h;
                            // evaluate() renormalizes, so this differentiates
                            // the sphere-restricted objective
                            const double fd = (merit.evaluate(xp).f -
                                               merit.evaluate(xm).f) /
                                              (2.0 * fd_h);
                            chk.observe(std::fabs(fd - p.g[i]));
                        }
                    }
        }
        results.push_back(chk.done());
    }

    // two-loop recursion vs the explicitly assembled BFGS matrix
    {
        Check chk("two-loop-vs-dense-bfgs", 1e-12);
        std::normal_distribution<double> normal;
        for (int rep = 0; rep < 10; ++rep) {
            const int n = 8;
            const std::size_t L = 3;
            LbfgsHistory hist(L, 1e-10);
            Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
            std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> pairs;
            for (std::size_t c = 0; c < L + 1; ++c) { // one eviction
                Eigen::VectorXd s(n), y(n);
                for (int i = 0; i < n; ++i) { s[i] = normal(rng); y[i] = normal(rng); }
                if (rep % 3 == 0 && c == 1) y = s * 1e-14; // skipped pair (rho = 0)
                else if (y.dot(s) < 0) y = -y;             // enforce curvature
                hist.push_pair({s.data(), s.data() + n}, {y.data(), y.data() + n});
                pairs.emplace_back(s, y);
                if (pairs.size() > L) pairs.erase(pairs.begin());
            }
            const double gamma = 0.7;
            Eigen::MatrixXd H = gamma * I;
            for (const auto& [s, y] : pairs) {
                const double ys = y.dot(s);
                if (ys < 1e-10) continue;
                const double rho = 1.0 / ys;
                Eigen::MatrixXd V = I - rho * y * s.transpose();
                H = V.transpose() * H * V + rho * s * s.transpose();
            }
            Eigen::VectorXd g(n);
            for (int i = 0; i < n; ++i) g[i] = normal(rng);
            Eigen::VectorXd want = -H * g;
            auto got = hist.two_loop({g.data(), static_cast<std::size_t>(n)}, gamma);
            for (int i = 0; i < n; ++i) chk.observe(rel_err(got[i], want[i]));
        }
        results.push_back(chk.done());
    }

    // closed-form retraction vs the explicit (I-W)(I+W)^{-1} x construction
    {
        Check chk("cayley-vs-explicit", 1e-12);
        std::normal_distribution<double> normal;
        for (int rep = 0; rep < 20; ++rep) {
            const int n = 5 + (rep % 4) * 15; // up to 50
            Eigen::VectorXd x(n), p(n);
            for (int i = 0; i < n; ++i) { x[i] = normal(rng); p[i] = normal(rng); }
            x.normalize();
            const double alpha = std::exp(normal(rng));
            Eigen::MatrixXd W = alpha * (x * p.transpose() - p * x.transpose());
            Eigen::VectorXd want =
                (Eigen::MatrixXd::Identity(n, n) - W) *
                (Eigen::MatrixXd::Identity(n, n) + W).partialPivLu().solve(x);
            auto got = retract({x.data(), static_cast<std::size_t>(n)},
                               {p.data(), static_cast<std::size_t>(n)}, alpha);
            for (int i = 0; i < n; ++i) chk.observe(rel_err(got[i], want[i]));
        }
        results.push_back(chk.done());
    }

    {
        Check chk("sphere-preservation", 1e-12);
        std::normal_distribution<double> normal;
        const int n = 16;
        for (int rep = 0; rep < 10000; ++rep) {
            auto x = sample_unit(rng, n);
            std::vector<double> p(n);
            for (double& v : p) v = normal(rng);
            const double alpha = std::exp(normal(rng));
            auto out = retract(x, p, alpha);
            chk.observe(std::fabs(std::sqrt(kernels::dot(out, out)) - 1.0));
        }
        results.push_back(chk.done());
    }

    // end-to-end: strictly decreasing traces and the residual certificate
    {
        Check mono("monotone-trace", 0.0);
        Check cert("residual-certificate", 0.0);
        SolverConfig config;
        for (const auto& h : instances) {
            if (h.k() % 2 != 0) continue;
            for (TensorSelector sel : kSelectors)
                for (EigKind kind : {EigKind::H, EigKind::Z}) {
                    config.rng_seed = rng();
                    SolveResult r = solve(h, sel, kind, Direction::Min, config);
                    for (std::size_t i = 1; i < r.f_trace.size(); ++i)
                        mono.observe(std::max(0.0, r.f_trace[i] - r.f_trace[i - 1]));
                    if (r.status == SolveStatus::GradConverged)
                        cert.observe(std::max(
                            0.0, r.residual_inf - 1e-5 * (1.0 + std::fabs(r.lambda))));
                }
        }
        results.push_back(mono.done());
        results.push_back(cert.done());
    }

    // k = 2 reduction: extreme H-eigenvalues match a dense matrix eigensolver
    {
        Check chk("k2-matrix-eigensolver", 1e-8);
        const Hypergraph h = gen_blowup(gen_petersen(), 1);
        const Index n = h.n();
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
        for (Index e = 0; e < h.m(); ++e) {
            auto row = h.edge(e);
            A(row[0], row[1]) = A(row[1], row[0]) = 1.0;
        }
        Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
        for (Index i = 0; i < n; ++i) D(i, i) = static_cast<double>(h.degrees()[i]);
        SolverConfig config;
        config.rng_seed = 20240817;
        for (TensorSelector sel : kSelectors) {
            Eigen::MatrixXd M = A;
            if (sel == TensorSelector::Laplacian) M = D - A;
            else if (sel == TensorSelector::SignlessLaplacian) M = D + A;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
            for (Direction dir : {Direction::Min, Direction::Max}) {
                const double want = dir == Direction::Min ? es.eigenvalues().minCoeff()
                                                          : es.eigenvalues().maxCoeff();
                auto rep = multi_start(h, sel, EigKind::H, dir, config, 10);
                chk.observe(std::fabs(rep.best_lambda - want));
            }
        }
        results.push_back(chk.done());
    }

    return results;
}

} // namespace spechg
