#include "spechg/cayley.hpp"
#include "spechg/errors.hpp"
#include "spechg/kernels.hpp"

#include <cmath>

namespace spechg {

std::vector<double> retract(std::span<const double> x, std::span<const double> p,
                            double alpha) {
    if (x.size() != p.size())
        throw DimensionMismatch("x and p have different lengths");
    const double xp = alpha * kernels::dot(x, p);
    const double pp = alpha * alpha * kernels::dot(p, p);
    const double denom = 1.0 + pp - xp * xp; // >= 1 for unit x
    const double cx = ((1.0 - xp) * (1.0 - xp) - pp) / denom;
    const double cp = 2.0 * alpha / denom;
    std::vector<double> out(x.size());
    kernels::axpby(cx, x, cp, p, out);

    const double nrm2 = kernels::dot(out, out);
    if (std::fabs(nrm2 - 1.0) > 2e-14) {
        const double inv = 1.0 / std::sqrt(nrm2);
        for (double& v : out) v *= inv;
    }
    return out;
}

double step_displacement(std::span<const double> x, std::span<const double> p,
                         double alpha) {
    const double xp = alpha * kernels::dot(x, p);
    const double pp = alpha * alpha * kernels::dot(p, p);
    const double num = std::max(0.0, pp - xp * xp);
    return 2.0 * std::sqrt(num / (1.0 + num));
}

BacktrackResult backtrack(const Evaluator& eval, const MeritPoint& at,
                          std::span<const double> p, const LineSearchParams& params) {
    const double pg = kernels::dot(p, at.g);
    if (!(pg < 0.0)) throw Error("backtrack requires a descent direction (p.g < 0)");

    double alpha = 1.0;
    for (int l = 0; l <= params.max_backtracks; ++l) {
        MeritPoint trial = eval(retract(at.x, p, alpha));
        if (trial.f <= at.f + params.eta * alpha * pg)
            return {alpha, std::move(trial)};
        alpha *= params.beta;
    }
    throw LineSearchFailed("no sufficient decrease within " +
                           std::to_string(params.max_backtracks) + " backtracks");
}

} // namespace spechg
