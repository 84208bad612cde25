#include "spechg/dense_oracle.hpp"
#include "spechg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spechg {

DenseTensor DenseTensor::from_hypergraph(const Hypergraph& h, TensorSelector sel) {
    const int k = h.k();
    const Index n = h.n();
    double size = 1.0;
    for (int j = 0; j < k; ++j) size *= static_cast<double>(n);
    if (size > 1e7) throw TooLarge("dense tensor would hold > 1e7 entries");
    const std::size_t total = static_cast<std::size_t>(size);

    DenseTensor t(k, n);
    t.a_.assign(total, 0.0);

    double fact = 1.0;
    for (int j = 2; j < k; ++j) fact *= j;
    const double adj_sign = sel == TensorSelector::Laplacian ? -1.0 : 1.0;
    const double off = sel == TensorSelector::Adjacency ? 1.0 / fact
                                                        : adj_sign / fact;

    if (sel != TensorSelector::Adjacency) {
        // degree diagonal; stride = 1 + n + ... + n^{k-1}
        std::size_t stride = 0;
        for (int j = 0; j < k; ++j) stride = stride * n + 1;
        for (Index i = 0; i < n; ++i)
            t.a_[static_cast<std::size_t>(i) * stride] =
                static_cast<double>(h.degrees()[i]);
    }

    std::vector<Index> perm(k);
    for (Index e = 0; e < h.m(); ++e) {
        auto row = h.edge(e);
        std::copy(row.begin(), row.end(), perm.begin());
        do {
            std::size_t idx = 0;
            for (int j = 0; j < k; ++j) idx = idx * n + perm[j];
            t.a_[idx] = off;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return t;
}

double DenseTensor::nonzero_fraction() const {
    std::size_t nz = 0;
    for (double v : a_) nz += v != 0.0;
    return static_cast<double>(nz) / static_cast<double>(a_.size());
}

ProductResult DenseTensor::apply(std::span<const double> x) const {
    if (static_cast<Index>(x.size()) != n_)
        throw DimensionMismatch("vector length mismatch in dense apply");
    ProductResult r;
    r.vec.assign(n_, 0.0);

    std::vector<Index> digits(k_, 0); // odometer over index tuples
    for (std::size_t idx = 0; idx < a_.size(); ++idx) {
        const double t = a_[idx];
        if (t != 0.0) {
            double tail = 1.0; // x_{i_2} ... x_{i_k}
            for (int j = 1; j < k_; ++j) tail *= x[digits[j]];
            r.vec[digits[0]] += t * tail;
            r.scalar += t * tail * x[digits[0]];
        }
        for (int j = k_ - 1; j >= 0; --j) {
            if (++digits[j] < n_) break;
            digits[j] = 0;
        }
    }
    return r;
}

} // namespace spechg
