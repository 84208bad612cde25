#ifndef SPECHG_TENSOR_OPS_HPP
#define SPECHG_TENSOR_OPS_HPP

#include "spechg/hypergraph.hpp"

#include <string>
#include <vector>

namespace spechg {

enum class TensorSelector { Adjacency, Laplacian, SignlessLaplacian };
enum class EigKind { H, Z };

std::string to_string(TensorSelector sel);
std::string to_string(EigKind kind);

// T x^{k-1} and T x^k from one pass; scalar == x . vec up to rounding.
struct ProductResult {
    std::vector<double> vec;
    double scalar = 0.0;
};

// Implicit products against the adjacency tensor: per edge, the k
// leave-one-out products via the prefix/suffix trick. Edges are visited in
// canonical order, slots ascending, so sequential results are reproducible.
ProductResult adjacency_apply(const Hypergraph& h, std::span<const double> x);

// Degree tensor: vec = d * x^[k-1], scalar = sum_i d(i) x_i^k.
ProductResult degree_apply(const Hypergraph& h, std::span<const double> x);

// A, L = D - A, or Q = D + A.
ProductResult tensor_apply(const Hypergraph& h, TensorSelector sel,
                           std::span<const double> x);

// B-tensor action: H selects the identity tensor (B x^{k-1} = x^[k-1]),
// Z selects E with B x^{k-1} = (x.x)^{k/2-1} x. Requires even k.
ProductResult b_apply(EigKind kind, int k, std::span<const double> x);

} // namespace spechg

#endif
