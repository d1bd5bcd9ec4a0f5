#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace flagsphere {

// A face is a subset of a vertex universe of at most 64 vertices.
struct Face {
    std::uint64_t bits = 0;

    static Face empty() { return Face{}; }
    static Face of(std::initializer_list<int> members) {
        Face f;
        for (int i : members) f.bits |= (std::uint64_t{1} << i);
        return f;
    }
    static Face singleton(int i) { return Face{std::uint64_t{1} << i}; }

    int size() const { return std::popcount(bits); }
    int dim() const { return size() - 1; }
    bool is_empty() const { return bits == 0; }
    bool contains(int i) const { return (bits >> i) & 1; }
    bool subset_of(Face o) const { return (bits & ~o.bits) == 0; }
    Face unite(Face o) const { return Face{bits | o.bits}; }
    Face intersect(Face o) const { return Face{bits & o.bits}; }
    Face minus(Face o) const { return Face{bits & ~o.bits}; }
    Face with(int i) const { return Face{bits | (std::uint64_t{1} << i)}; }
    Face without(int i) const { return Face{bits & ~(std::uint64_t{1} << i)}; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    auto operator<=>(const Face&) const = default;
};

struct VertexUniverse {
    std::vector<std::string> labels;

    static VertexUniverse from_labels(std::vector<std::string> ls) {
        if (ls.size() > 64) throw std::invalid_argument("vertex universe exceeds 64 vertices");
        VertexUniverse u;
        u.labels = std::move(ls);
        u.rebuild_index();
        return u;
    }

    int size() const { return static_cast<int>(labels.size()); }

    int index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw std::invalid_argument("unknown vertex label: " + label);
        return it->second;
    }
    std::optional<int> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    const std::string& label(int i) const { return labels.at(static_cast<std::size_t>(i)); }

    Face face_of(const std::vector<std::string>& ls) const {
        Face f;
        for (const auto& l : ls) f.bits |= (std::uint64_t{1} << index_of(l));
        return f;
    }
    std::vector<std::string> labels_of(Face f) const {
        std::vector<std::string> out;
        for (int i : f.members()) out.push_back(label(i));
        return out;
    }

    bool operator==(const VertexUniverse& o) const { return labels == o.labels; }

private:
    std::unordered_map<std::string, int> index_;

    void rebuild_index() {
        index_.clear();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!index_.emplace(labels[i], static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate vertex label: " + labels[i]);
        }
    }
};

// Undirected simple graph on [0, n), adjacency as one bitmask per vertex.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    explicit Graph(int n_ = 0) : n(n_), adj(static_cast<std::size_t>(n_), 0) {}

    void add_edge(int i, int j) {
        if (i == j) throw std::invalid_argument("self-loop");
        adj[static_cast<std::size_t>(i)] |= (std::uint64_t{1} << j);
        adj[static_cast<std::size_t>(j)] |= (std::uint64_t{1} << i);
    }
    bool adjacent(int i, int j) const { return (adj[static_cast<std::size_t>(i)] >> j) & 1; }
    std::uint64_t neighbors(int i) const { return adj[static_cast<std::size_t>(i)]; }
    int degree(int i) const { return std::popcount(adj[static_cast<std::size_t>(i)]); }
};

// Facets form an antichain; their order is preserved from construction
// (the input order may encode a shelling order). Immutable after
// construction; all operations below are pure functions.
struct SimplicialComplex {
    VertexUniverse universe;
    std::vector<Face> facets;

    int dim() const {
        int d = -1;
        for (const Face& f : facets) d = std::max(d, f.dim());
        return d;
    }

    bool contains(Face f) const {
        for (const Face& g : facets)
            if (f.subset_of(g)) return true;
        return false;
    }

    std::vector<std::vector<std::string>> facet_labels() const {
        std::vector<std::vector<std::string>> out;
        for (const Face& f : facets) out.push_back(universe.labels_of(f));
        return out;
    }
};

namespace detail {

// Keeps first occurrence order, drops duplicates and non-maximal sets.
inline std::vector<Face> antichain_reduce(std::vector<Face> in) {
    std::vector<Face> out;
    for (const Face& f : in) {
        bool dominated = false;
        for (const Face& g : in) {
            if (g.bits != f.bits && f.subset_of(g)) { dominated = true; break; }
        }
        if (dominated) continue;
        bool seen = false;
        for (const Face& g : out)
            if (g.bits == f.bits) { seen = true; break; }
        if (!seen) out.push_back(f);
    }
    return out;
}

inline SimplicialComplex make_complex(VertexUniverse u, std::vector<Face> facets) {
    SimplicialComplex c;
    c.universe = std::move(u);
    c.facets = antichain_reduce(std::move(facets));
    return c;
}

// Enumerate all subsets of `mask` with exactly `k` elements.
template <typename F>
void for_each_subset_of_size(std::uint64_t mask, int k, F&& visit) {
    std::vector<int> mem;
    for (std::uint64_t m = mask; m; m &= m - 1) mem.push_back(std::countr_zero(m));
    const int n = static_cast<int>(mem.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t sub = 0;
        for (int i : idx) sub |= (std::uint64_t{1} << mem[static_cast<std::size_t>(i)]);
        visit(Face{sub});
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

inline SimplicialComplex from_facets(const std::vector<std::string>& labels,
                                     const std::vector<std::vector<std::string>>& facet_lists) {
    if (facet_lists.empty()) throw std::invalid_argument("empty facet list");
    VertexUniverse u = VertexUniverse::from_labels(labels);
    std::vector<Face> fs;
    fs.reserve(facet_lists.size());
    for (const auto& fl : facet_lists) fs.push_back(u.face_of(fl));
    return detail::make_complex(std::move(u), std::move(fs));
}

inline std::vector<Face> faces_of_dim(const SimplicialComplex& c, int k) {
    if (k < -1 || k > c.dim()) throw std::invalid_argument("face dimension out of range");
    std::set<Face> seen;
    for (const Face& f : c.facets)
        detail::for_each_subset_of_size(f.bits, k + 1, [&](Face s) { seen.insert(s); });
    return {seen.begin(), seen.end()};
}

// Faces grouped by cardinality: result[s] holds all faces with s vertices.
inline std::vector<std::unordered_set<std::uint64_t>> faces_by_size(const SimplicialComplex& c) {
    std::vector<std::unordered_set<std::uint64_t>> by_size(static_cast<std::size_t>(c.dim() + 2));
    for (const Face& f : c.facets)
        for (int s = 0; s <= f.size(); ++s)
            detail::for_each_subset_of_size(f.bits, s, [&](Face g) {
                by_size[static_cast<std::size_t>(s)].insert(g.bits);
            });
    return by_size;
}

inline SimplicialComplex link(const SimplicialComplex& c, Face f) {
    if (!c.contains(f)) throw std::invalid_argument("face not in complex");
    std::vector<Face> lk;
    for (const Face& g : c.facets)
        if (f.subset_of(g)) lk.push_back(g.minus(f));
    // restrict the universe to vertices that actually appear
    std::uint64_t used = 0;
    for (const Face& g : lk) used |= g.bits;
    std::vector<std::string> labels;
    std::vector<int> remap(64, -1);
    for (int i : Face{used}.members()) {
        remap[static_cast<std::size_t>(i)] = static_cast<int>(labels.size());
        labels.push_back(c.universe.label(i));
    }
    std::vector<Face> remapped;
    for (const Face& g : lk) {
        Face h;
        for (int i : g.members()) h.bits |= (std::uint64_t{1} << remap[static_cast<std::size_t>(i)]);
        remapped.push_back(h);
    }
    return detail::make_complex(VertexUniverse::from_labels(std::move(labels)), std::move(remapped));
}

inline SimplicialComplex link(const SimplicialComplex& c, const std::string& v) {
    return link(c, Face::singleton(c.universe.index_of(v)));
}

inline SimplicialComplex induced(const SimplicialComplex& c, Face s) {
    std::vector<std::string> labels;
    std::vector<int> remap(64, -1);
    for (int i : s.members()) {
        remap[static_cast<std::size_t>(i)] = static_cast<int>(labels.size());
        labels.push_back(c.universe.label(i));
    }
    std::vector<Face> fs;
    for (const Face& f : c.facets) {
        Face g = f.intersect(s);
        Face h;
        for (int i : g.members()) h.bits |= (std::uint64_t{1} << remap[static_cast<std::size_t>(i)]);
        fs.push_back(h);
    }
    return detail::make_complex(VertexUniverse::from_labels(std::move(labels)), std::move(fs));
}

inline SimplicialComplex induced(const SimplicialComplex& c, const std::vector<std::string>& vs) {
    return induced(c, c.universe.face_of(vs));
}

inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::string> labels = a.universe.labels;
    for (const auto& l : b.universe.labels) {
        if (a.universe.find(l)) throw std::invalid_argument("join operands share label: " + l);
        labels.push_back(l);
    }
    const int shift = a.universe.size();
    std::vector<Face> fs;
    fs.reserve(a.facets.size() * b.facets.size());
    for (const Face& f : a.facets)
        for (const Face& g : b.facets) fs.push_back(Face{f.bits | (g.bits << shift)});
    return detail::make_complex(VertexUniverse::from_labels(std::move(labels)), std::move(fs));
}

inline SimplicialComplex cone(const std::string& apex, const SimplicialComplex& c) {
    return join(from_facets({apex}, {{apex}}), c);
}

inline SimplicialComplex suspension(const std::string& u, const std::string& w,
                                    const SimplicialComplex& c) {
    return join(from_facets({u, w}, {{u}, {w}}), c);
}

// ◇([x_1..x_d],[y_1..y_d]): join of d zero-spheres; {x_i, y_i} are the
// minimal non-faces.
inline SimplicialComplex cross_polytope(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("cross_polytope needs at least one pair");
    SimplicialComplex c = from_facets({pairs[0].first, pairs[0].second},
                                      {{pairs[0].first}, {pairs[0].second}});
    for (std::size_t i = 1; i < pairs.size(); ++i)
        c = join(c, from_facets({pairs[i].first, pairs[i].second},
                                {{pairs[i].first}, {pairs[i].second}}));
    return c;
}

inline SimplicialComplex cross_polytope(int d) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 1; i <= d; ++i)
        pairs.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
    return cross_polytope(pairs);
}

inline Graph one_skeleton(const SimplicialComplex& c) {
    Graph g(c.universe.size());
    for (const Face& f : c.facets) {
        auto mem = f.members();
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j) g.add_edge(mem[i], mem[j]);
    }
    return g;
}

namespace detail {

// Bron–Kerbosch with pivoting; visits every maximal clique once.
template <typename F>
void maximal_cliques(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x, F&& visit) {
    if (p == 0 && x == 0) {
        visit(Face{r});
        return;
    }
    std::uint64_t px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (std::uint64_t m = px; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int cnt = std::popcount(p & g.neighbors(v));
        if (cnt > best) { best = cnt; pivot = v; }
    }
    std::uint64_t cand = p & ~g.neighbors(pivot);
    for (std::uint64_t m = cand; m; m &= m - 1) {
        int v = std::countr_zero(m);
        std::uint64_t vb = std::uint64_t{1} << v;
        maximal_cliques(g, r | vb, p & g.neighbors(v), x & g.neighbors(v), visit);
        p &= ~vb;
        x |= vb;
    }
}

}  // namespace detail

inline SimplicialComplex clique_complex(const Graph& g, const std::vector<std::string>& labels) {
    if (static_cast<int>(labels.size()) != g.n)
        throw std::invalid_argument("label count does not match graph");
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    std::vector<Face> fs;
    detail::maximal_cliques(g, 0, all, 0, [&](Face f) { fs.push_back(f); });
    std::sort(fs.begin(), fs.end());
    return detail::make_complex(VertexUniverse::from_labels(labels), std::move(fs));
}

inline SimplicialComplex clique_complex(const SimplicialComplex& c) {
    return clique_complex(one_skeleton(c), c.universe.labels);
}

// All inclusion-minimal non-faces, of any cardinality. A minimal non-face
// of size k has every (k-1)-subset a face, so candidates are face+vertex.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
    auto by_size = faces_by_size(c);
    const int n = c.universe.size();
    const int max_size = c.dim() + 2;
    std::set<Face> out;
    for (int k = 2; k <= max_size; ++k) {
        const auto& below = by_size[static_cast<std::size_t>(k - 1)];
        auto is_face_k = [&](std::uint64_t b) {
            return static_cast<std::size_t>(k) < by_size.size() &&
                   by_size[static_cast<std::size_t>(k)].count(b) > 0;
        };
        for (std::uint64_t a : below) {
            for (int v = 0; v < n; ++v) {
                if ((a >> v) & 1) continue;
                std::uint64_t x = a | (std::uint64_t{1} << v);
                if (is_face_k(x)) continue;
                bool all_subfaces = true;
                for (std::uint64_t m = x; m; m &= m - 1) {
                    std::uint64_t sub = x & ~(m & (~m + 1));
                    if (!below.count(sub)) { all_subfaces = false; break; }
                }
                if (all_subfaces) out.insert(Face{x});
            }
        }
    }
    return {out.begin(), out.end()};
}

inline bool is_flag(const SimplicialComplex& c) {
    for (const Face& f : minimal_nonfaces(c))
        if (f.size() != 2) return false;
    return true;
}

inline bool is_pure(const SimplicialComplex& c) {
    for (const Face& f : c.facets)
        if (f.dim() != c.dim()) return false;
    return true;
}

// Complex generated by the ridges lying in exactly one facet.
inline SimplicialComplex boundary_complex(const SimplicialComplex& c) {
    if (!is_pure(c)) throw std::invalid_argument("boundary_complex requires a pure complex");
    const int d = c.dim();
    std::map<Face, int> ridge_count;
    for (const Face& f : c.facets)
        detail::for_each_subset_of_size(f.bits, d, [&](Face r) { ++ridge_count[r]; });
    std::vector<Face> bd;
    for (const auto& [r, cnt] : ridge_count)
        if (cnt == 1) bd.push_back(r);
    std::uint64_t used = 0;
    for (const Face& r : bd) used |= r.bits;
    std::vector<std::string> labels;
    std::vector<int> remap(64, -1);
    for (int i : Face{used}.members()) {
        remap[static_cast<std::size_t>(i)] = static_cast<int>(labels.size());
        labels.push_back(c.universe.label(i));
    }
    std::vector<Face> remapped;
    for (const Face& r : bd) {
        Face h;
        for (int i : r.members()) h.bits |= (std::uint64_t{1} << remap[static_cast<std::size_t>(i)]);
        remapped.push_back(h);
    }
    return detail::make_complex(VertexUniverse::from_labels(std::move(labels)), std::move(remapped));
}

// Union of two complexes; universes are merged by label.
inline SimplicialComplex union_complexes(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::string> labels = a.universe.labels;
    for (const auto& l : b.universe.labels)
        if (!a.universe.find(l)) labels.push_back(l);
    VertexUniverse u = VertexUniverse::from_labels(labels);
    std::vector<Face> fs;
    for (const Face& f : a.facets) fs.push_back(u.face_of(a.universe.labels_of(f)));
    for (const Face& f : b.facets) fs.push_back(u.face_of(b.universe.labels_of(f)));
    return detail::make_complex(std::move(u), std::move(fs));
}

using LabelMap = std::map<std::string, std::string>;

inline SimplicialComplex apply_vertex_map(const SimplicialComplex& c, const LabelMap& m) {
    std::vector<std::string> labels;
    for (const auto& l : c.universe.labels) {
        auto it = m.find(l);
        if (it == m.end()) throw std::invalid_argument("vertex map is not total: missing " + l);
        labels.push_back(it->second);
    }
    SimplicialComplex out;
    out.universe = VertexUniverse::from_labels(std::move(labels));
    out.facets = c.facets;
    return out;
}

// Facet sets compared by label, so the vertex order of the universes
// does not matter.
inline std::set<std::vector<std::string>> facet_label_sets(const SimplicialComplex& c) {
    std::set<std::vector<std::string>> out;
    for (const Face& f : c.facets) {
        auto ls = c.universe.labels_of(f);
        std::sort(ls.begin(), ls.end());
        out.insert(std::move(ls));
    }
    return out;
}

inline bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::set<std::string> la(a.universe.labels.begin(), a.universe.labels.end());
    std::set<std::string> lb(b.universe.labels.begin(), b.universe.labels.end());
    return la == lb && facet_label_sets(a) == facet_label_sets(b);
}

inline bool is_automorphism(const SimplicialComplex& c, const LabelMap& m) {
    return same_complex(c, apply_vertex_map(c, m));
}

}  // namespace flagsphere
