#ifndef SPECHG_CAYLEY_HPP
#define SPECHG_CAYLEY_HPP

#include "spechg/merit.hpp"

#include <functional>
#include <span>
#include <vector>

namespace spechg {

struct LineSearchParams {
    double eta = 0.01;       // sufficient-decrease coefficient, in (0,1)
    double beta = 0.5;       // backtracking ratio, in (0,1)
    int max_backtracks = 60; // alpha floor 2^-60 against fp stagnation
};

// Curvilinear update from the Cayley transform, in closed two-vector form:
//   x(a) = ([(1 - a x.p)^2 - |a p|^2] x + 2 a p) / (1 + |a p|^2 - (a x.p)^2).
// Never forms the skew matrix W or the orthogonal (I-W)(I+W)^{-1}; stays on
// the sphere up to rounding (renormalized past 1e-14 drift).
std::vector<double> retract(std::span<const double> x, std::span<const double> p,
                            double alpha);

// ||x(a) - x|| in closed form: 2 sqrt((|ap|^2 - (a x.p)^2) / (1 + |ap|^2 - (a x.p)^2)).
double step_displacement(std::span<const double> x, std::span<const double> p,
                         double alpha);

// Backtracking: alpha = beta^l for the smallest l >= 0 with
//   f(x(alpha)) <= f(x) + eta * alpha * p.g.
// Requires p.g < 0; throws LineSearchFailed after max_backtracks.
using Evaluator = std::function<MeritPoint(std::vector<double>)>;
struct BacktrackResult {
    double alpha = 0.0;
    MeritPoint point;
};
BacktrackResult backtrack(const Evaluator& eval, const MeritPoint& at,
                          std::span<const double> p, const LineSearchParams& params);

} // namespace spechg

#endif
