#ifdef SPECHG_HAVE_AVX2

#include "spechg/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace spechg::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline __m256d ipow(__m256d x, int p) {
    __m256d r = _mm256_set1_pd(1.0);
    for (int i = 0; i < p; ++i) r = _mm256_mul_pd(r, x);
    return r;
}

inline double ipow1(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

} // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i),
                              _mm256_loadu_pd(b.data() + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double inf_norm(std::span<const double> a) {
    const std::size_t n = a.size();
    const __m256d mask = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_andnot_pd(mask, _mm256_loadu_pd(a.data() + i)));
    double s = hmax(acc);
    for (; i < n; ++i) s = std::max(s, std::fabs(a[i]));
    return s;
}

double sum_pow(std::span<const double> x, int p) {
    const std::size_t n = x.size();
    std::size_t i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, ipow(_mm256_loadu_pd(x.data() + i), p));
    double s = hsum(acc);
    for (; i < n; ++i) s += ipow1(x[i], p);
    return s;
}

void entry_pow(std::span<const double> x, int p, std::span<double> y) {
    const std::size_t n = x.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y.data() + i, ipow(_mm256_loadu_pd(x.data() + i), p));
    for (; i < n; ++i) y[i] = ipow1(x[i], p);
}

void weighted_entry_pow(std::span<const double> w, std::span<const double> x, int p,
                        std::span<double> y) {
    const std::size_t n = x.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y.data() + i,
                         _mm256_mul_pd(_mm256_loadu_pd(w.data() + i),
                                       ipow(_mm256_loadu_pd(x.data() + i), p)));
    for (; i < n; ++i) y[i] = w[i] * ipow1(x[i], p);
}

double weighted_sum_pow(std::span<const double> w, std::span<const double> x, int p) {
    const std::size_t n = x.size();
    std::size_t i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w.data() + i),
                              ipow(_mm256_loadu_pd(x.data() + i), p), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * ipow1(x[i], p);
    return s;
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> z) {
    const std::size_t n = x.size();
    const __m256d va = _mm256_set1_pd(a), vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(z.data() + i,
                         _mm256_fmadd_pd(va, _mm256_loadu_pd(x.data() + i),
                                         _mm256_mul_pd(vb, _mm256_loadu_pd(y.data() + i))));
    for (; i < n; ++i) z[i] = a * x[i] + b * y[i];
}

} // namespace spechg::kernels::avx2

#endif // SPECHG_HAVE_AVX2
