#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flagsphere/complex.hpp"

namespace flagsphere {

namespace detail {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace detail

// (f_{-1}, f_0, ..., f_{dim}); the empty complex {∅} has f = (1).
inline std::vector<long long> f_vector(const SimplicialComplex& c) {
    std::vector<long long> f(static_cast<std::size_t>(c.dim() + 2), 0);
    f[0] = 1;
    auto by_size = faces_by_size(c);
    for (int s = 1; s <= c.dim() + 1; ++s)
        f[static_cast<std::size_t>(s)] =
            static_cast<long long>(by_size[static_cast<std::size_t>(s)].size());
    return f;
}

// h_k = sum_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}, for a (d-1)-complex.
inline std::vector<long long> h_from_f(const std::vector<long long>& f, int d) {
    if (static_cast<int>(f.size()) != d + 1)
        throw std::invalid_argument("f-vector length must be d+1");
    std::vector<long long> h(static_cast<std::size_t>(d + 1), 0);
    for (int k = 0; k <= d; ++k) {
        long long s = 0;
        for (int i = 0; i <= k; ++i) {
            long long term = detail::binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
            s += ((k - i) % 2 == 0) ? term : -term;
        }
        h[static_cast<std::size_t>(k)] = s;
    }
    return h;
}

// Inverse transform: f_{j-1} = sum_{k=0}^{j} C(d-k, j-k) h_k.
inline std::vector<long long> f_from_h(const std::vector<long long>& h, int d) {
    if (static_cast<int>(h.size()) != d + 1)
        throw std::invalid_argument("h-vector length must be d+1");
    std::vector<long long> f(static_cast<std::size_t>(d + 1), 0);
    for (int j = 0; j <= d; ++j) {
        long long s = 0;
        for (int k = 0; k <= j; ++k)
            s += detail::binomial(d - k, j - k) * h[static_cast<std::size_t>(k)];
        f[static_cast<std::size_t>(j)] = s;
    }
    return f;
}

// Solve h(t) = sum_i gamma_i t^i (1+t)^{d-2i} by successive elimination
// from gamma_0 = h_0. Returns nullopt when the remainder is nonzero, i.e.
// no such expansion exists (instead of rounding).
inline std::optional<std::vector<long long>> gamma_from_h(const std::vector<long long>& h, int d) {
    if (static_cast<int>(h.size()) != d + 1)
        throw std::invalid_argument("h-vector length must be d+1");
    std::vector<long long> rem = h;
    std::vector<long long> gamma;
    for (int i = 0; i <= d / 2; ++i) {
        long long gi = rem[static_cast<std::size_t>(i)];
        gamma.push_back(gi);
        // subtract gi * t^i (1+t)^{d-2i}
        for (int k = 0; k <= d - 2 * i; ++k)
            rem[static_cast<std::size_t>(i + k)] -= gi * detail::binomial(d - 2 * i, k);
    }
    for (long long r : rem)
        if (r != 0) return std::nullopt;
    return gamma;
}

inline std::vector<long long> h_from_gamma(const std::vector<long long>& gamma, int d) {
    std::vector<long long> h(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i < static_cast<int>(gamma.size()); ++i)
        for (int k = 0; k <= d - 2 * i; ++k)
            h[static_cast<std::size_t>(i + k)] +=
                gamma[static_cast<std::size_t>(i)] * detail::binomial(d - 2 * i, k);
    return h;
}

struct FHGammaVectors {
    std::vector<long long> f;
    std::vector<long long> h;
    std::optional<std::vector<long long>> gamma;  // nullopt: no integral expansion
};

inline FHGammaVectors compute_vectors(const SimplicialComplex& c) {
    FHGammaVectors v;
    v.f = f_vector(c);
    const int d = c.dim() + 1;
    v.h = h_from_f(v.f, d);
    v.gamma = gamma_from_h(v.h, d);
    return v;
}

inline bool is_palindromic(const std::vector<long long>& h) {
    for (std::size_t i = 0, j = h.size(); i < j; ++i)
        if (h[i] != h[h.size() - 1 - i]) return false;
    return true;
}

}  // namespace flagsphere
