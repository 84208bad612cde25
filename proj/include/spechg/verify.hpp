#ifndef SPECHG_VERIFY_HPP
#define SPECHG_VERIFY_HPP

#include "spechg/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spechg {

struct CheckResult {
    std::string name;
    double worst_error = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// Independent-oracle checks: sparse products vs the dense tensor, gradient
// vs projected finite differences, two-loop vs the dense BFGS formula,
// closed-form Cayley vs the explicit orthogonal-matrix construction, sphere
// preservation, monotone f-traces and the eigenpair residual certificate on
// converged runs, and the k=2 reduction against a dense matrix eigensolver.
std::vector<CheckResult> run_oracle_suite(Index max_n = 13,
                                          std::uint64_t seed = 12345);

} // namespace spechg

#endif
