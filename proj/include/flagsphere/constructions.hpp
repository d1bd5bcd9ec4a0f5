#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagsphere/complex.hpp"

namespace flagsphere {

inline const std::vector<std::string>& delta_labels() {
    static const std::vector<std::string> labels{
        "x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3", "v1", "v2", "v3"};
    return labels;
}

// Γ₁: three cones over octahedra, glued pairwise along the triangles
// x1x2x3, y1y2y3 and z1z2z3; a solid torus with 24 tetrahedra.
inline SimplicialComplex gamma1() {
    SimplicialComplex a = cone("v1", cross_polytope({{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}}));
    SimplicialComplex b = cone("v2", cross_polytope({{"y1", "z1"}, {"y2", "z2"}, {"y3", "z3"}}));
    SimplicialComplex c = cone("v3", cross_polytope({{"x1", "z3"}, {"x2", "z1"}, {"x3", "z2"}}));
    return union_complexes(union_complexes(a, b), c);
}

// One prism of the product of a triangle with an edge, triangulated by
// the three monotone lattice paths from (1,1) to (3,2) in the 3x2 grid.
struct StaircaseSpec {
    std::array<std::string, 3> triangle_order;  // a < b < c
    std::pair<int, int> edge_order;             // s < t, an edge of the 3-cycle
};

inline std::vector<std::vector<std::string>> staircase_prism(const StaircaseSpec& spec) {
    const auto& [ta, tb, tc] = spec.triangle_order;
    if (ta == tb || tb == tc || ta == tc)
        throw std::invalid_argument("staircase triangle labels must be distinct");
    auto [s, t] = spec.edge_order;
    if (s == t) throw std::invalid_argument("staircase edge endpoints must be distinct");
    auto v = [](const std::string& l, int coord) { return l + "_" + std::to_string(coord); };
    return {
        {v(ta, s), v(tb, s), v(tc, s), v(tc, t)},
        {v(ta, s), v(tb, s), v(tb, t), v(tc, t)},
        {v(ta, s), v(ta, t), v(tb, t), v(tc, t)},
    };
}

// The 9 pre-image facets of Γ₂ on the product labels a_1 ... c_3, using
// the cyclic per-edge orders 1<2, 2<3, 3<1.
inline std::vector<std::vector<std::string>> gamma2_product_facets() {
    std::vector<std::vector<std::string>> fs;
    for (auto [s, t] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 1}}) {
        auto prism = staircase_prism({{"a", "b", "c"}, {s, t}});
        fs.insert(fs.end(), prism.begin(), prism.end());
    }
    return fs;
}

inline const LabelMap& phi() {
    static const LabelMap m{
        {"a_1", "z2"}, {"a_2", "z3"}, {"a_3", "z1"},
        {"b_1", "y3"}, {"b_2", "y1"}, {"b_3", "y2"},
        {"c_1", "x1"}, {"c_2", "x2"}, {"c_3", "x3"},
    };
    return m;
}

// Γ₂ = ⟨φ(F)⟩: the staircase solid torus relabelled onto the x/y/z
// vertices; no interior vertices, 9 facets.
inline SimplicialComplex gamma2() {
    std::vector<std::vector<std::string>> fs;
    for (const auto& facet : gamma2_product_facets()) {
        std::vector<std::string> mapped;
        for (const auto& l : facet) mapped.push_back(phi().at(l));
        fs.push_back(std::move(mapped));
    }
    std::vector<std::string> labels{"x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"};
    return from_facets(labels, fs);
}

// The 33 facets in the paper's order, which is also a shelling order.
inline const std::vector<std::vector<std::string>>& delta_12_33_facets() {
    static const std::vector<std::vector<std::string>> fs = [] {
        const std::vector<std::string> strings{
            "x1y2y3z1", "y2y3z1v2", "y1y2y3v2", "y1y2z3v2", "y2z1z3v2", "x3y2z1z3", "x1x3y2z1",
            "x1x3z1v3", "x3y1y2z3", "z1z2z3v2", "x3y1y2v1", "x2x3y1v1", "x3z1z3v3", "z1z2z3v3",
            "x1z1z2v3", "x1y3z1z2", "y3z1z2v2", "y1y3v2z2", "x1x3y2v1", "x1x2x3v1", "x1y2y3v1",
            "x2x3y1z3", "x2x3z3v3", "y1z2z3v2", "x2y1z2z3", "x2y1z2y3", "y1y2y3v1", "x2y1y3v1",
            "x1x2y3v1", "x1x2y3z2", "x1x2x3v3", "x1x2z2v3", "x2z2z3v3"};
        std::vector<std::vector<std::string>> out;
        for (const auto& s : strings) {
            std::vector<std::string> facet;
            for (std::size_t i = 0; i + 1 < s.size(); i += 2) facet.push_back(s.substr(i, 2));
            out.push_back(std::move(facet));
        }
        return out;
    }();
    return fs;
}

// Δ₁₂,₃₃ = Γ₁ ∪ Γ₂, with facets kept in the order of the published list.
inline SimplicialComplex delta_12_33() {
    return from_facets(delta_labels(), delta_12_33_facets());
}

// The automorphism (x3 y2 z1 x1 y3 z2 x2 y1 z3)(v2 v3 v1) of Δ₁₂,₃₃.
inline LabelMap tau() {
    LabelMap m;
    const std::vector<std::string> cycle9{"x3", "y2", "z1", "x1", "y3", "z2", "x2", "y1", "z3"};
    for (std::size_t i = 0; i < cycle9.size(); ++i) m[cycle9[i]] = cycle9[(i + 1) % 9];
    const std::vector<std::string> cycle3{"v2", "v3", "v1"};
    for (std::size_t i = 0; i < cycle3.size(); ++i) m[cycle3[i]] = cycle3[(i + 1) % 3];
    return m;
}

inline LabelMap compose(const LabelMap& outer, const LabelMap& inner) {
    LabelMap m;
    for (const auto& [k, v] : inner) m[k] = outer.at(v);
    return m;
}

inline LabelMap identity_map(const std::vector<std::string>& labels) {
    LabelMap m;
    for (const auto& l : labels) m[l] = l;
    return m;
}

// Iterated join of k disjoint relabelled copies; copy i gets suffix "#i".
inline SimplicialComplex k_fold_join(const SimplicialComplex& c, int k) {
    if (k < 1) throw std::invalid_argument("k_fold_join requires k >= 1");
    if (static_cast<long long>(c.universe.size()) * k > 64)
        throw std::invalid_argument("k_fold_join exceeds the 64-vertex budget");
    if (k == 1) return c;
    auto copy_with_suffix = [&](int i) {
        LabelMap m;
        for (const auto& l : c.universe.labels) m[l] = l + "#" + std::to_string(i);
        return apply_vertex_map(c, m);
    };
    SimplicialComplex out = copy_with_suffix(1);
    for (int i = 2; i <= k; ++i) out = join(out, copy_with_suffix(i));
    return out;
}

}  // namespace flagsphere
