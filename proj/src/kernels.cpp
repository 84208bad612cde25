#include "spechg/kernels.hpp"
#include "spechg/errors.hpp"

namespace spechg::kernels {

bool avx2_supported() {
#if defined(SPECHG_HAVE_AVX2) && (defined(__x86_64__) || defined(_M_X64))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {
Backend g_backend = avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

Backend active_backend() { return g_backend; }

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_supported())
        throw Error("AVX2 kernels not supported on this CPU");
    g_backend = b;
}

Backend parse_backend(const std::string& name) {
    if (name == "auto") return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
    if (name == "scalar") return Backend::Scalar;
    if (name == "avx2") return Backend::Avx2;
    throw Error("unknown kernel backend '" + name + "'");
}

#ifdef SPECHG_HAVE_AVX2
#define SPECHG_DISPATCH(fn, ...)                         \
    (g_backend == Backend::Avx2 ? avx2::fn(__VA_ARGS__) \
                                : scalar::fn(__VA_ARGS__))
#else
#define SPECHG_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double dot(std::span<const double> a, std::span<const double> b) {
    return SPECHG_DISPATCH(dot, a, b);
}

double inf_norm(std::span<const double> a) { return SPECHG_DISPATCH(inf_norm, a); }

double sum_pow(std::span<const double> x, int p) { return SPECHG_DISPATCH(sum_pow, x, p); }

void entry_pow(std::span<const double> x, int p, std::span<double> y) {
    SPECHG_DISPATCH(entry_pow, x, p, y);
}

void weighted_entry_pow(std::span<const double> w, std::span<const double> x, int p,
                        std::span<double> y) {
    SPECHG_DISPATCH(weighted_entry_pow, w, x, p, y);
}

double weighted_sum_pow(std::span<const double> w, std::span<const double> x, int p) {
    return SPECHG_DISPATCH(weighted_sum_pow, w, x, p);
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> z) {
    SPECHG_DISPATCH(axpby, a, x, b, y, z);
}

} // namespace spechg::kernels
