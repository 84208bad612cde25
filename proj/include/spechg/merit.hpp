#ifndef SPECHG_MERIT_HPP
#define SPECHG_MERIT_HPP

#include "spechg/tensor_ops.hpp"

namespace spechg {

enum class Direction { Min, Max };

std::string to_string(Direction dir);

// One evaluated point of the spherical objective f(x) = sigma Tx^k / Bx^k,
// sigma = +1 (Min) or -1 (Max). lambda is the un-negated ratio, i.e. the
// eigenvalue estimate; x.g = 0 on the sphere.
struct MeritPoint {
    std::vector<double> x;
    double f = 0.0;      // minimized objective (sigma * ratio)
    double lambda = 0.0; // Tx^k / Bx^k
    std::vector<double> g;
    double t_scalar = 0.0;
    double b_scalar = 0.0;
};

class MeritFunction {
public:
    MeritFunction(const Hypergraph& h, TensorSelector sel, EigKind kind, Direction dir);

    // Renormalizes x to the sphere, then
    //   g = sigma (k / Bx^k) (Tx^{k-1} - (Tx^k / Bx^k) Bx^{k-1}).
    MeritPoint evaluate(std::vector<double> x) const;

    const Hypergraph& hypergraph() const { return *h_; }
    TensorSelector selector() const { return sel_; }
    EigKind kind() const { return kind_; }
    Direction direction() const { return dir_; }
    double sigma() const { return dir_ == Direction::Min ? 1.0 : -1.0; }

    // ||T x^{k-1} - lambda B x^{k-1}||_inf at a unit x.
    double residual_inf(std::span<const double> x, double lambda) const;

private:
    const Hypergraph* h_;
    TensorSelector sel_;
    EigKind kind_;
    Direction dir_;
};

} // namespace spechg

#endif
