#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/recognition.hpp"

namespace flagsphere {

namespace detail {

// A 4-subset S induces a 4-cycle iff the induced graph on S is a 4-cycle;
// any 3-subset of S then spans no triangle, so no higher face interferes.
inline bool induces_4cycle(const Graph& g, int a, int b, int c, int d) {
    // cycle a-b-c-d-a with non-edges {a,c}, {b,d}
    return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a) &&
           !g.adjacent(a, c) && !g.adjacent(b, d);
}

}  // namespace detail

// All 4-sets {u,v,p,q} inducing a 4-cycle through the edge {u,v}.
inline std::vector<std::vector<std::string>> induced_4cycles_containing(
    const SimplicialComplex& c, const std::string& u, const std::string& v) {
    const int ui = c.universe.index_of(u), vi = c.universe.index_of(v);
    Graph g = one_skeleton(c);
    if (!g.adjacent(ui, vi)) throw std::invalid_argument("{" + u + "," + v + "} is not an edge");
    std::vector<std::vector<std::string>> out;
    const int n = c.universe.size();
    for (int p = 0; p < n; ++p) {
        if (p == ui || p == vi) continue;
        for (int q = 0; q < n; ++q) {
            if (q == ui || q == vi || q == p) continue;
            // cycle u-v-p-q-u; p is the neighbor of v, q the neighbor of u,
            // so the roles are determined by the 4-set
            if (detail::induces_4cycle(g, ui, vi, p, q))
                out.push_back({u, v, c.universe.label(p), c.universe.label(q)});
        }
    }
    return out;
}

// Edges contained in no induced 4-cycle. For a flag sphere these are
// exactly the edges whose contraction preserves flagness.
inline std::vector<std::pair<std::string, std::string>> contractible_edges(
    const SimplicialComplex& c) {
    Graph g = one_skeleton(c);
    const int n = c.universe.size();
    std::vector<std::pair<std::string, std::string>> out;
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (int u = 0; u < n; ++u) {
        const std::uint64_t above = (u == 63) ? 0 : (~std::uint64_t{0} << (u + 1));
        for (std::uint64_t m = g.neighbors(u) & above; m; m &= m - 1) {
            int v = std::countr_zero(m);
            // p adjacent to v but not u, q adjacent to u but not v, p-q edge
            bool witness = false;
            std::uint64_t ps = g.neighbors(v) & ~g.neighbors(u) & all &
                               ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
            std::uint64_t qs = g.neighbors(u) & ~g.neighbors(v) & all &
                               ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
            for (std::uint64_t pm = ps; pm && !witness; pm &= pm - 1)
                if (g.neighbors(std::countr_zero(pm)) & qs) witness = true;
            if (!witness) out.emplace_back(c.universe.label(u), c.universe.label(v));
        }
    }
    return out;
}

// Returns a non-adjacent pair (u,w) with C = <{u},{w}> * C[V \ {u,w}],
// or nullopt. Candidates must have degree |V| - 2.
inline std::optional<std::pair<std::string, std::string>> is_suspension(
    const SimplicialComplex& c) {
    Graph g = one_skeleton(c);
    const int n = c.universe.size();
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != n - 2) continue;
        for (int w = u + 1; w < n; ++w) {
            if (g.degree(w) != n - 2 || g.adjacent(u, w)) continue;
            std::set<Face> fu, fw;
            bool every = true;
            for (const Face& f : c.facets) {
                const bool hu = f.contains(u), hw = f.contains(w);
                if (hu == hw) { every = false; break; }  // exactly one suspension point
                (hu ? fu : fw).insert(hu ? f.without(u) : f.without(w));
            }
            if (every && fu == fw)
                return std::make_pair(c.universe.label(u), c.universe.label(w));
        }
    }
    return std::nullopt;
}

struct EquatorRecord {
    std::vector<std::string> vertices;        // the inducing vertex set S, sorted
    std::optional<std::string> link_of;       // v with S = N(v), when one exists
    int sphere_dim = 0;
};

// Exhaustive scan of all vertex subsets of a d-sphere, d <= 3, for
// induced codimension-1 spheres. Cheap graph prefilters cut the bulk of
// the 2^n subsets before the recognizer runs.
inline std::vector<EquatorRecord> enumerate_induced_equators(const SimplicialComplex& c) {
    const int d = c.dim();
    if (d > 3) throw std::invalid_argument("equator enumeration limited to dimension <= 3");
    const int sphere_dim = d - 1;
    if (sphere_dim < 1) throw std::invalid_argument("complex dimension too small for equators");
    const int n = c.universe.size();
    if (n > 25) throw std::invalid_argument("equator enumeration limited to 25 vertices");
    Graph g = one_skeleton(c);
    const int min_degree = (sphere_dim == 1) ? 2 : 3;
    std::vector<EquatorRecord> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (std::popcount(s) < d + 2) continue;
        bool plausible = true;
        for (std::uint64_t m = s; m && plausible; m &= m - 1) {
            int v = std::countr_zero(m);
            int deg_in_s = std::popcount(g.neighbors(v) & s);
            if (deg_in_s < min_degree) plausible = false;
            if (sphere_dim == 1 && deg_in_s != 2) plausible = false;
        }
        if (!plausible) continue;
        SimplicialComplex sub = induced(c, Face{s});
        if (!is_sphere_of_dim(sub, sphere_dim)) continue;
        EquatorRecord rec;
        rec.sphere_dim = sphere_dim;
        rec.vertices = c.universe.labels_of(Face{s});
        for (int v = 0; v < n; ++v)
            if (g.neighbors(v) == s) { rec.link_of = c.universe.label(v); break; }
        out.push_back(std::move(rec));
    }
    return out;
}

// Confirms the solid-torus lemma on a concrete complex: no vertex subset
// induces a 2-sphere.
inline bool has_no_induced_2_sphere(const SimplicialComplex& c) {
    const int n = c.universe.size();
    if (n > 25) throw std::invalid_argument("induced 2-sphere scan limited to 25 vertices");
    Graph g = one_skeleton(c);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (std::popcount(s) < 4) continue;
        bool plausible = true;
        for (std::uint64_t m = s; m && plausible; m &= m - 1)
            if (std::popcount(g.neighbors(std::countr_zero(m)) & s) < 3) plausible = false;
        if (!plausible) continue;
        if (is_2_sphere(induced(c, Face{s}))) return false;
    }
    return true;
}

inline bool gamma2_has_no_equator(const SimplicialComplex& gamma2_complex) {
    return has_no_induced_2_sphere(gamma2_complex);
}

struct CertificationReport {
    bool flag = false;
    std::optional<std::pair<std::string, std::string>> suspension;
    std::vector<std::pair<std::string, std::string>> contractible;
    bool equators_checked = false;
    std::vector<EquatorRecord> equators;
    bool question_1_5 = false;
};

// Question-style report: (i) not a suspension, (ii) no contractible edge,
// (iii) every induced equator is a vertex link. (iii) is only evaluated
// in dimension <= 3 and is reported unchecked otherwise.
inline CertificationReport question_1_5_report(const SimplicialComplex& c,
                                               bool equator_check = true) {
    CertificationReport r;
    r.flag = is_flag(c);
    r.suspension = is_suspension(c);
    r.contractible = contractible_edges(c);
    if (equator_check && c.dim() <= 3) {
        r.equators_checked = true;
        r.equators = enumerate_induced_equators(c);
    }
    bool all_links = true;
    for (const auto& e : r.equators)
        if (!e.link_of) all_links = false;
    r.question_1_5 = r.flag && !r.suspension && r.contractible.empty() &&
                     (!r.equators_checked || all_links);
    return r;
}

}  // namespace flagsphere
