#include "spechg/merit.hpp"
#include "spechg/errors.hpp"
#include "spechg/kernels.hpp"

#include <cmath>

namespace spechg {

std::string to_string(Direction dir) { return dir == Direction::Min ? "min" : "max"; }

MeritFunction::MeritFunction(const Hypergraph& h, TensorSelector sel, EigKind kind,
                             Direction dir)
    : h_(&h), sel_(sel), kind_(kind), dir_(dir) {
    if (h.k() % 2 != 0) throw OddOrder("merit function requires even k");
    if (kind == EigKind::H && sel == TensorSelector::Laplacian) {
        // L's diagonal is the degree vector; a zero degree breaks positivity
        // of the ratio denominator pairing. Guarded at construction.
        for (Index d : h.degrees())
            if (d == 0) throw IsolatedVertex("H-mode on L needs d(i) > 0 for all i");
    }
}

MeritPoint MeritFunction::evaluate(std::vector<double> x) const {
    if (static_cast<Index>(x.size()) != h_->n())
        throw DimensionMismatch("merit point has wrong dimension");
    const double nrm = std::sqrt(kernels::dot(x, x));
    if (!(nrm > 0.0) || !std::isfinite(nrm))
        throw NonPositiveB("cannot normalize a zero or non-finite vector");
    for (double& v : x) v /= nrm;

    const int k = h_->k();
    ProductResult t = tensor_apply(*h_, sel_, x);
    ProductResult b = b_apply(kind_, k, x);
    if (!(b.scalar > 0.0))
        throw NonPositiveB("Bx^k <= 0 on the unit sphere (corrupted input)");

    MeritPoint p;
    const double ratio = t.scalar / b.scalar;
    const double s = sigma();
    p.lambda = ratio;
    p.f = s * ratio;
    p.t_scalar = t.scalar;
    p.b_scalar = b.scalar;
    p.g.resize(x.size());
    const double c = s * k / b.scalar;
    // g = c * (Tx^{k-1} - ratio * Bx^{k-1})
    kernels::axpby(c, t.vec, -c * ratio, b.vec, p.g);
    p.x = std::move(x);
    return p;
}

double MeritFunction::residual_inf(std::span<const double> x, double lambda) const {
    ProductResult t = tensor_apply(*h_, sel_, x);
    ProductResult b = b_apply(kind_, h_->k(), x);
    std::vector<double> r(x.size());
    kernels::axpby(1.0, t.vec, -lambda, b.vec, r);
    return kernels::inf_norm(r);
}

} // namespace spechg
