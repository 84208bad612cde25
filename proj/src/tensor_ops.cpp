#include "spechg/tensor_ops.hpp"
#include "spechg/errors.hpp"
#include "spechg/kernels.hpp"

#include <cmath>

namespace spechg {

std::string to_string(TensorSelector sel) {
    switch (sel) {
        case TensorSelector::Adjacency: return "adjacency";
        case TensorSelector::Laplacian: return "laplacian";
        case TensorSelector::SignlessLaplacian: return "signless-laplacian";
    }
    return "?";
}

std::string to_string(EigKind kind) { return kind == EigKind::H ? "H" : "Z"; }

namespace {
void check_dim(const Hypergraph& h, std::span<const double> x) {
    if (static_cast<Index>(x.size()) != h.n())
        throw DimensionMismatch("vector length " + std::to_string(x.size()) +
                                " != vertex count " + std::to_string(h.n()));
}
} // namespace

ProductResult adjacency_apply(const Hypergraph& h, std::span<const double> x) {
    check_dim(h, x);
    const int k = h.k();
    const Index m = h.m();
    ProductResult r;
    r.vec.assign(h.n(), 0.0);

    // prefix[j] = x_{e_0}...x_{e_{j-1}}, suffix[j] = x_{e_j}...x_{e_{k-1}}
    std::vector<double> prefix(k + 1), suffix(k + 1);
    double edge_sum = 0.0;
    const Index* e = h.edge_matrix().data();
    for (Index l = 0; l < m; ++l, e += k) {
        prefix[0] = 1.0;
        for (int j = 0; j < k; ++j) prefix[j + 1] = prefix[j] * x[e[j]];
        suffix[k] = 1.0;
        for (int j = k - 1; j >= 0; --j) suffix[j] = suffix[j + 1] * x[e[j]];
        edge_sum += prefix[k];
        for (int j = 0; j < k; ++j) r.vec[e[j]] += prefix[j] * suffix[j + 1];
    }
    r.scalar = k * edge_sum;
    return r;
}

ProductResult degree_apply(const Hypergraph& h, std::span<const double> x) {
    check_dim(h, x);
    ProductResult r;
    r.vec.resize(h.n());
    kernels::weighted_entry_pow(h.degrees_real(), x, h.k() - 1, r.vec);
    r.scalar = kernels::weighted_sum_pow(h.degrees_real(), x, h.k());
    return r;
}

ProductResult tensor_apply(const Hypergraph& h, TensorSelector sel,
                           std::span<const double> x) {
    if (sel == TensorSelector::Adjacency) return adjacency_apply(h, x);
    ProductResult d = degree_apply(h, x);
    ProductResult a = adjacency_apply(h, x);
    const double sign = sel == TensorSelector::Laplacian ? -1.0 : 1.0;
    ProductResult r;
    r.vec.resize(h.n());
    kernels::axpby(1.0, d.vec, sign, a.vec, r.vec);
    r.scalar = d.scalar + sign * a.scalar;
    return r;
}

ProductResult b_apply(EigKind kind, int k, std::span<const double> x) {
    if (k < 2 || k % 2 != 0) throw OddOrder("B-tensor action requires even k");
    ProductResult r;
    r.vec.resize(x.size());
    if (kind == EigKind::H) {
        kernels::entry_pow(x, k - 1, r.vec);
        r.scalar = kernels::sum_pow(x, k);
    } else {
        const double xx = kernels::dot(x, x);
        double c = 1.0;
        for (int i = 0; i < k / 2 - 1; ++i) c *= xx;
        kernels::axpby(c, x, 0.0, x, r.vec);
        r.scalar = c * xx;
    }
    return r;
}

} // namespace spechg
