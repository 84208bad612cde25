#ifndef SPECHG_KERNELS_HPP
#define SPECHG_KERNELS_HPP

#include <cstddef>
#include <span>
#include <string>

namespace spechg::kernels {

// Dense vector primitives behind the tensor products. Scalar versions are
// the reference; the AVX2 versions are selected at runtime when the CPU
// supports them and must agree with scalar to rounding (equivalence-tested).
// Per-edge gather/scatter kernels stay scalar so the accumulation order is
// fixed and results are bit-reproducible.

enum class Backend { Scalar, Avx2 };

bool avx2_supported();
Backend active_backend();
void set_backend(Backend b); // throws spechg::Error if unsupported
Backend parse_backend(const std::string& name); // "auto", "scalar", "avx2"

double dot(std::span<const double> a, std::span<const double> b);
double inf_norm(std::span<const double> a);
double sum_pow(std::span<const double> x, int p);                // sum x_i^p
void entry_pow(std::span<const double> x, int p, std::span<double> y); // y = x^[p]
// y = w * x^[p] (Hadamard), and sum_i w_i x_i^p
void weighted_entry_pow(std::span<const double> w, std::span<const double> x, int p,
                        std::span<double> y);
double weighted_sum_pow(std::span<const double> w, std::span<const double> x, int p);
// z = a*x + b*y
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> z);

namespace scalar {
double dot(std::span<const double> a, std::span<const double> b);
double inf_norm(std::span<const double> a);
double sum_pow(std::span<const double> x, int p);
void entry_pow(std::span<const double> x, int p, std::span<double> y);
void weighted_entry_pow(std::span<const double> w, std::span<const double> x, int p,
                        std::span<double> y);
double weighted_sum_pow(std::span<const double> w, std::span<const double> x, int p);
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> z);
} // namespace scalar

#ifdef SPECHG_HAVE_AVX2
namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b);
double inf_norm(std::span<const double> a);
double sum_pow(std::span<const double> x, int p);
void entry_pow(std::span<const double> x, int p, std::span<double> y);
void weighted_entry_pow(std::span<const double> w, std::span<const double> x, int p,
                        std::span<double> y);
double weighted_sum_pow(std::span<const double> w, std::span<const double> x, int p);
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> z);
} // namespace avx2
#endif

} // namespace spechg::kernels

#endif
