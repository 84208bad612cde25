#include "spechg/kernels.hpp"

#include <cmath>

namespace spechg::kernels::scalar {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double inf_norm(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) s = std::max(s, std::fabs(v));
    return s;
}

namespace {
inline double ipow(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}
} // namespace

double sum_pow(std::span<const double> x, int p) {
    double s = 0.0;
    for (double v : x) s += ipow(v, p);
    return s;
}

void entry_pow(std::span<const double> x, int p, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = ipow(x[i], p);
}

void weighted_entry_pow(std::span<const double> w, std::span<const double> x, int p,
                        std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = w[i] * ipow(x[i], p);
}

double weighted_sum_pow(std::span<const double> w, std::span<const double> x, int p) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * ipow(x[i], p);
    return s;
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> z) {
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = a * x[i] + b * y[i];
}

} // namespace spechg::kernels::scalar
