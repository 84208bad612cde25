#ifndef SPECHG_LBFGS_HPP
#define SPECHG_LBFGS_HPP

#include <cstddef>
#include <deque>
#include <random>
#include <span>
#include <vector>

namespace spechg {

enum class GammaPolicy { BB1, BB2, Dai, RandomMix };

// Limited-memory BFGS history with the curvature skip: a pair whose y.s
// falls below kappa_eps is stored with rho = 0 and skipped by the
// recursion (it still occupies a slot).
class LbfgsHistory {
public:
    explicit LbfgsHistory(std::size_t capacity = 5, double kappa_eps = 1e-10);

    void push_pair(std::vector<double> s, std::vector<double> y);

    // Initial scaling from the most recent pair: BB1 = y.s/|y|^2,
    // BB2 = |s|^2/y.s, Dai = |s|/|y|; 1 if empty or last y.s < kappa_eps.
    double gamma(GammaPolicy policy, std::mt19937_64& rng) const;

    // p = -H_c g via the two-loop recursion started from gamma*I.
    std::vector<double> two_loop(std::span<const double> g, double gamma) const;

    std::size_t size() const { return pairs_.size(); }
    std::size_t capacity() const { return capacity_; }
    double kappa_eps() const { return kappa_eps_; }
    void clear() { pairs_.clear(); }

    struct Pair {
        std::vector<double> s, y;
        double ys;  // y.s
        double rho; // 1/(y.s) or 0 when skipped
    };
    const std::deque<Pair>& pairs() const { return pairs_; }

private:
    std::size_t capacity_;
    double kappa_eps_;
    std::deque<Pair> pairs_; // back = most recent
};

} // namespace spechg

#endif
