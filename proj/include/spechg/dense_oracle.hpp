#ifndef SPECHG_DENSE_ORACLE_HPP
#define SPECHG_DENSE_ORACLE_HPP

#include "spechg/tensor_ops.hpp"

namespace spechg {

// Brute-force dense tensor for small instances: literal 1/(k-1)! entries at
// every permuted edge tuple plus the degree diagonal. Used to cross-check
// the implicit sparse products; capped at 1e7 entries.
class DenseTensor {
public:
    static DenseTensor from_hypergraph(const Hypergraph& h, TensorSelector sel);

    int k() const { return k_; }
    Index n() const { return n_; }
    const std::vector<double>& entries() const { return a_; }
    double nonzero_fraction() const;

    // Direct summation over all n^k entries.
    ProductResult apply(std::span<const double> x) const;

private:
    DenseTensor(int k, Index n) : k_(k), n_(n) {}
    int k_;
    Index n_;
    std::vector<double> a_;
};

} // namespace spechg

#endif
