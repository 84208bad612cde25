#include "spechg/lbfgs.hpp"
#include "spechg/errors.hpp"
#include "spechg/kernels.hpp"

#include <cmath>

namespace spechg {

LbfgsHistory::LbfgsHistory(std::size_t capacity, double kappa_eps)
    : capacity_(capacity), kappa_eps_(kappa_eps) {
    if (!(kappa_eps > 0.0 && kappa_eps < 1.0))
        throw Error("kappa_eps must lie in (0,1)");
}

void LbfgsHistory::push_pair(std::vector<double> s, std::vector<double> y) {
    if (s.size() != y.size())
        throw DimensionMismatch("s and y have different lengths");
    if (!pairs_.empty() && pairs_.back().s.size() != s.size())
        throw DimensionMismatch("pair dimension changed mid-history");
    const double ys = kernels::dot(s, y);
    const double rho = ys >= kappa_eps_ ? 1.0 / ys : 0.0;
    pairs_.push_back({std::move(s), std::move(y), ys, rho});
    if (pairs_.size() > capacity_) pairs_.pop_front();
}

double LbfgsHistory::gamma(GammaPolicy policy, std::mt19937_64& rng) const {
    if (pairs_.empty()) return 1.0;
    const Pair& last = pairs_.back();
    if (last.ys < kappa_eps_) return 1.0;
    const double yy = kernels::dot(last.y, last.y);
    const double ss = kernels::dot(last.s, last.s);
    switch (policy) {
        case GammaPolicy::BB1: return last.ys / yy;
        case GammaPolicy::BB2: return ss / last.ys;
        case GammaPolicy::Dai: return std::sqrt(ss / yy);
        case GammaPolicy::RandomMix: {
            switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
                case 0: return last.ys / yy;
                case 1: return ss / last.ys;
                default: return std::sqrt(ss / yy);
            }
        }
    }
    return 1.0;
}

std::vector<double> LbfgsHistory::two_loop(std::span<const double> g,
                                           double gamma) const {
    std::vector<double> q(g.begin(), g.end());
    for (double& v : q) v = -v;

    std::vector<double> alpha(pairs_.size(), 0.0);
    for (std::size_t i = pairs_.size(); i-- > 0;) {
        const Pair& p = pairs_[i];
        if (p.rho == 0.0) continue;
        alpha[i] = p.rho * kernels::dot(p.s, q);
        kernels::axpby(1.0, q, -alpha[i], p.y, q);
    }
    for (double& v : q) v *= gamma;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const Pair& p = pairs_[i];
        if (p.rho == 0.0) continue;
        const double beta = p.rho * kernels::dot(p.y, q);
        kernels::axpby(1.0, q, alpha[i] - beta, p.s, q);
    }
    return q;
}

} // namespace spechg
