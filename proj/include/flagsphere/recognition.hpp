#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/homology.hpp"
#include "flagsphere/isomorphism.hpp"

namespace flagsphere {

namespace detail {

// Union-find connectivity of the facet adjacency graph (facets sharing a
// ridge are adjacent).
inline bool facet_graph_connected(const SimplicialComplex& c) {
    const std::size_t n = c.facets.size();
    if (n <= 1) return true;
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const int d = c.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (c.facets[i].intersect(c.facets[j]).size() == d) parent[find(i)] = find(j);
    std::size_t root = find(0);
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

}  // namespace detail

inline bool is_closed_pseudomanifold(const SimplicialComplex& c) {
    if (!is_pure(c)) return false;
    const int d = c.dim();
    if (d < 0) return false;
    std::map<Face, int> ridge_count;
    for (const Face& f : c.facets)
        detail::for_each_subset_of_size(f.bits, d, [&](Face r) { ++ridge_count[r]; });
    for (const auto& [r, cnt] : ridge_count)
        if (cnt != 2) return false;
    return detail::facet_graph_connected(c);
}

// Connected, pure 1-dimensional, every vertex in exactly two edges.
inline bool is_cycle(const SimplicialComplex& c) {
    if (c.dim() != 1 || !is_pure(c)) return false;
    return is_closed_pseudomanifold(c);
}

inline bool is_2_sphere(const SimplicialComplex& c) {
    if (c.dim() != 2 || !is_pure(c)) return false;
    if (!is_closed_pseudomanifold(c)) return false;
    if (euler_characteristic(c) != 2) return false;
    for (int v = 0; v < c.universe.size(); ++v)
        if (!is_cycle(link(c, Face::singleton(v)))) return false;
    return true;
}

inline bool is_closed_3_manifold(const SimplicialComplex& c) {
    if (c.dim() != 3 || !is_pure(c)) return false;
    if (!is_closed_pseudomanifold(c)) return false;
    for (int v = 0; v < c.universe.size(); ++v)
        if (!is_2_sphere(link(c, Face::singleton(v)))) return false;
    return true;
}

// Codimension-1 sphere recognition, implemented for cycles and 2-spheres.
inline bool is_sphere_of_dim(const SimplicialComplex& c, int d) {
    if (d == 1) return is_cycle(c);
    if (d == 2) return is_2_sphere(c);
    throw std::invalid_argument("sphere recognition unsupported in dimension " +
                                std::to_string(d));
}

struct ShellingResult {
    bool ok = false;
    std::size_t first_failure = 0;  // index j of the first facet violating the condition
};

// F_j must meet the union of its predecessors in a nonempty pure
// (d-1)-dimensional subcomplex of the boundary of F_j.
inline ShellingResult verify_shelling(const SimplicialComplex& c,
                                      const std::vector<Face>& order) {
    if (!is_pure(c)) throw std::invalid_argument("shelling defined for pure complexes only");
    {
        std::set<Face> a(order.begin(), order.end());
        std::set<Face> b(c.facets.begin(), c.facets.end());
        if (a != b || order.size() != c.facets.size())
            throw std::invalid_argument("order is not a permutation of the facets");
    }
    const int d = c.dim();
    for (std::size_t j = 1; j < order.size(); ++j) {
        // ridges of F_j already covered by earlier facets
        std::set<Face> covered;
        detail::for_each_subset_of_size(order[j].bits, d, [&](Face r) {
            for (std::size_t i = 0; i < j; ++i)
                if (r.subset_of(order[i])) { covered.insert(r); break; }
        });
        if (covered.empty()) return {false, j};
        for (std::size_t i = 0; i < j; ++i) {
            Face inter = order[j].intersect(order[i]);
            bool inside = false;
            for (const Face& r : covered)
                if (inter.subset_of(r)) { inside = true; break; }
            if (!inside) return {false, j};
        }
    }
    return {true, 0};
}

inline ShellingResult verify_shelling(const SimplicialComplex& c) {
    return verify_shelling(c, c.facets);
}

// Returns d iff the complex is isomorphic to the boundary of the
// d-dimensional cross-polytope: the non-adjacency relation is a perfect
// matching and the facets are exactly the transversals of the pairs.
inline std::optional<int> is_diamond(const SimplicialComplex& c) {
    const int n = c.universe.size();
    if (n == 0 || n % 2 != 0) return std::nullopt;
    const int d = n / 2;
    if (static_cast<long long>(c.facets.size()) != (1LL << d)) return std::nullopt;
    Graph g = one_skeleton(c);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        if (g.degree(v) != n - 2) return std::nullopt;
        std::uint64_t non = ~g.neighbors(v) & ((n == 64) ? ~std::uint64_t{0}
                                                         : ((std::uint64_t{1} << n) - 1));
        non &= ~(std::uint64_t{1} << v);
        if (std::popcount(non) != 1) return std::nullopt;
        int w = std::countr_zero(non);
        if (seen[static_cast<std::size_t>(w)]) return std::nullopt;
        seen[static_cast<std::size_t>(v)] = seen[static_cast<std::size_t>(w)] = true;
        pairs.emplace_back(c.universe.label(v), c.universe.label(w));
    }
    SimplicialComplex model = cross_polytope(pairs);
    if (!same_complex(c, model)) return std::nullopt;
    return d;
}

// Composite 3-sphere certificate. Sphericity is only asserted when the
// shelling leg passes (a shellable simplicial manifold is a sphere);
// homology alone gives "homology sphere" strength.
struct SphereCertificate {
    bool closed_3_manifold = false;
    bool homology_gf2_ok = false;
    bool homology_rational_ok = false;
    std::optional<ShellingResult> shelling;
    bool homology_sphere() const {
        return closed_3_manifold && homology_gf2_ok && homology_rational_ok;
    }
    bool certified_sphere() const {
        return homology_sphere() && shelling && shelling->ok;
    }
};

inline SphereCertificate certify_3_sphere(const SimplicialComplex& c,
                                          const std::optional<std::vector<Face>>& order =
                                              std::nullopt) {
    SphereCertificate cert;
    cert.closed_3_manifold = is_closed_3_manifold(c);
    if (c.dim() == 3) {
        const std::vector<long long> expected{0, 0, 0, 1};
        cert.homology_gf2_ok = betti_numbers(c, FieldTag::GF2, true) == expected;
        cert.homology_rational_ok = betti_numbers(c, FieldTag::Rational, true) == expected;
    }
    if (order && is_pure(c)) cert.shelling = verify_shelling(c, *order);
    return cert;
}

}  // namespace flagsphere
