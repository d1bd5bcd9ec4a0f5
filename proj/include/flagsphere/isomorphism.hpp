#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagsphere/complex.hpp"

namespace flagsphere {

namespace detail {

// Iterated refinement: color(v) <- (color(v), sorted multiset of neighbor
// colors) until stable. Returns the final color per vertex.
inline std::vector<int> refine_colors(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> nb;
            for (std::uint64_t m = g.neighbors(v); m; m &= m - 1)
                nb.push_back(color[static_cast<std::size_t>(std::countr_zero(m))]);
            std::sort(nb.begin(), nb.end());
            sig[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> relabel;
        std::vector<int> next(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) {
            auto it = relabel.find(sig[static_cast<std::size_t>(v)]);
            if (it == relabel.end())
                it = relabel.emplace(sig[static_cast<std::size_t>(v)],
                                     static_cast<int>(relabel.size())).first;
            next[static_cast<std::size_t>(v)] = it->second;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

}  // namespace detail

// Complex isomorphism by degree-partition refinement plus backtracking on
// the 1-skeletons, then a facet-set check on each full candidate map.
// Only intended for small inputs.
inline std::optional<LabelMap> is_isomorphic(const SimplicialComplex& a,
                                             const SimplicialComplex& b) {
    if (a.universe.size() > 16 || b.universe.size() > 16)
        throw std::invalid_argument("isomorphism search limited to 16 vertices");
    if (a.universe.size() != b.universe.size() || a.facets.size() != b.facets.size())
        return std::nullopt;

    Graph ga = one_skeleton(a), gb = one_skeleton(b);
    std::vector<int> ca = detail::refine_colors(ga), cb = detail::refine_colors(gb);
    {
        std::vector<int> sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::set<std::vector<int>> target;
    for (const Face& f : b.facets) {
        auto m = f.members();
        target.insert(m);
    }

    std::vector<int> map_ab(static_cast<std::size_t>(ga.n), -1);
    std::vector<bool> used(static_cast<std::size_t>(gb.n), false);
    // Backtrack over graph isomorphisms; for flag complexes a graph
    // isomorphism already maps facets to facets, otherwise retry.
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == ga.n) {
            std::set<std::vector<int>> image;
            for (const Face& f : a.facets) {
                std::vector<int> mapped;
                for (int i : f.members()) mapped.push_back(map_ab[static_cast<std::size_t>(i)]);
                std::sort(mapped.begin(), mapped.end());
                image.insert(std::move(mapped));
            }
            return image == target;
        }
        for (int w = 0; w < gb.n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (ca[static_cast<std::size_t>(v)] != cb[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (ga.adjacent(u, v) != gb.adjacent(map_ab[static_cast<std::size_t>(u)], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map_ab[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (go(v + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    LabelMap m;
    for (int v = 0; v < ga.n; ++v)
        m[a.universe.label(v)] = b.universe.label(map_ab[static_cast<std::size_t>(v)]);
    return m;
}

}  // namespace flagsphere
