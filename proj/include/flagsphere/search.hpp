#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagsphere/certification.hpp"
#include "flagsphere/complex.hpp"
#include "flagsphere/recognition.hpp"
#include "flagsphere/vectors.hpp"

namespace flagsphere {

namespace detail {

inline void assert_flag_sphere_move(const SimplicialComplex& c, int expected_dim,
                                    const std::string& move) {
    if (c.dim() != expected_dim)
        throw std::runtime_error(move + " changed the dimension");
    if (!is_flag(c)) throw std::runtime_error(move + " broke flagness");
    if (expected_dim == 3 && !is_closed_3_manifold(c))
        throw std::runtime_error(move + " broke the 3-manifold property");
    if (expected_dim == 2 && !is_2_sphere(c))
        throw std::runtime_error(move + " broke the 2-sphere property");
    if (expected_dim == 1 && !is_cycle(c))
        throw std::runtime_error(move + " broke the cycle property");
}

inline std::string fresh_subdivision_label(const VertexUniverse& u) {
    for (int k = 1;; ++k) {
        std::string cand = "s" + std::to_string(k);
        if (!u.find(cand)) return cand;
    }
}

}  // namespace detail

// Replace each facet F containing the edge {u,v} by (F\{u})∪{w} and
// (F\{v})∪{w} for a fresh vertex w. Preserves flag spheres.
inline SimplicialComplex subdivide_edge(const SimplicialComplex& c, const std::string& u,
                                        const std::string& v) {
    const int ui = c.universe.index_of(u), vi = c.universe.index_of(v);
    Face e = Face::of({ui, vi});
    if (!c.contains(e)) throw std::invalid_argument("{" + u + "," + v + "} is not an edge");
    if (c.universe.size() >= 64) throw std::invalid_argument("vertex budget exceeded");
    const int expected_dim = c.dim();
    std::vector<std::string> labels = c.universe.labels;
    labels.push_back(detail::fresh_subdivision_label(c.universe));
    const int wi = static_cast<int>(labels.size()) - 1;
    std::vector<Face> fs;
    for (const Face& f : c.facets) {
        if (e.subset_of(f)) {
            fs.push_back(f.without(ui).with(wi));
            fs.push_back(f.without(vi).with(wi));
        } else {
            fs.push_back(f);
        }
    }
    SimplicialComplex out =
        detail::make_complex(VertexUniverse::from_labels(std::move(labels)), std::move(fs));
    detail::assert_flag_sphere_move(out, expected_dim, "edge subdivision");
    return out;
}

// Merge v into u (u the lexicographically smaller label); refused unless
// the edge is contractible, i.e. lies in no induced 4-cycle.
inline SimplicialComplex contract_edge(const SimplicialComplex& c, const std::string& a,
                                       const std::string& b) {
    const std::string u = std::min(a, b), v = std::max(a, b);
    const int ui = c.universe.index_of(u), vi = c.universe.index_of(v);
    Face e = Face::of({ui, vi});
    if (!c.contains(e)) throw std::invalid_argument("{" + a + "," + b + "} is not an edge");
    if (!induced_4cycles_containing(c, u, v).empty())
        throw std::invalid_argument("edge {" + a + "," + b + "} is not contractible");
    const int expected_dim = c.dim();
    std::vector<std::string> labels;
    for (const auto& l : c.universe.labels)
        if (l != v) labels.push_back(l);
    VertexUniverse nu = VertexUniverse::from_labels(std::move(labels));
    std::vector<Face> fs;
    for (const Face& f : c.facets) {
        Face g;
        for (int i : f.members()) {
            const std::string& l = (i == vi) ? u : c.universe.label(i);
            g.bits |= (std::uint64_t{1} << nu.index_of(l));
        }
        fs.push_back(g);
    }
    SimplicialComplex out = detail::make_complex(std::move(nu), std::move(fs));
    detail::assert_flag_sphere_move(out, expected_dim, "edge contraction");
    return out;
}

struct WalkProperties {
    bool no_suspension = true;
    bool no_contractible_edge = true;
    bool equators_are_links = true;
};

struct WalkConfig {
    std::uint64_t seed = 0;
    int n_subdivisions = 0;
    int n_contractions = 0;
    int max_vertices = 16;
    bool check_each_step = false;  // revalidate sphere invariants after every move
    WalkProperties target_properties;
};

struct Move {
    enum class Kind { Subdivide, Contract };
    Kind kind;
    std::string u, v;
    std::vector<long long> f;  // f-vector after the move
};

using MoveLog = std::vector<Move>;

struct WalkResult {
    SimplicialComplex complex;
    MoveLog log;
    CertificationReport report;
    bool truncated = false;  // vertex budget hit before all subdivisions ran
};

inline SimplicialComplex replay(const SimplicialComplex& start, const MoveLog& log) {
    SimplicialComplex c = start;
    for (const Move& m : log)
        c = (m.kind == Move::Kind::Subdivide) ? subdivide_edge(c, m.u, m.v)
                                              : contract_edge(c, m.u, m.v);
    return c;
}

namespace detail {

// Edges sorted by label pair; index selection by rng() % size keeps the
// walk reproducible across platforms (mt19937_64 output is specified).
inline std::vector<std::pair<std::string, std::string>> sorted_edges(
    const SimplicialComplex& c) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Face& e : faces_of_dim(c, 1)) {
        auto ls = c.universe.labels_of(e);
        std::sort(ls.begin(), ls.end());
        out.emplace_back(ls[0], ls[1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void per_step_invariants(const SimplicialComplex& c) {
    if (c.dim() == 3) {
        if (!is_closed_3_manifold(c)) throw std::runtime_error("walk step: not a 3-manifold");
        if (euler_characteristic(c) != 0)
            throw std::runtime_error("walk step: Euler characteristic nonzero");
        auto h = h_from_f(f_vector(c), 4);
        if (!is_palindromic(h))
            throw std::runtime_error("walk step: Dehn-Sommerville violated");
    }
    if (!is_flag(c)) throw std::runtime_error("walk step: not flag");
}

}  // namespace detail

inline WalkResult random_walk(const SimplicialComplex& start, const WalkConfig& cfg) {
    if (cfg.max_vertices > 64) throw std::invalid_argument("max_vertices exceeds 64");
    std::mt19937_64 rng(cfg.seed);
    WalkResult res;
    res.complex = start;
    for (int i = 0; i < cfg.n_subdivisions; ++i) {
        if (res.complex.universe.size() >= cfg.max_vertices) {
            res.truncated = true;
            break;
        }
        auto edges = detail::sorted_edges(res.complex);
        auto [u, v] = edges[static_cast<std::size_t>(rng() % edges.size())];
        res.complex = subdivide_edge(res.complex, u, v);
        res.log.push_back({Move::Kind::Subdivide, u, v, f_vector(res.complex)});
        if (cfg.check_each_step) detail::per_step_invariants(res.complex);
    }
    for (int i = 0; i < cfg.n_contractions; ++i) {
        auto candidates = contractible_edges(res.complex);
        if (candidates.empty()) break;
        std::sort(candidates.begin(), candidates.end());
        auto [u, v] = candidates[static_cast<std::size_t>(rng() % candidates.size())];
        res.complex = contract_edge(res.complex, u, v);
        res.log.push_back({Move::Kind::Contract, u, v, f_vector(res.complex)});
        if (cfg.check_each_step) detail::per_step_invariants(res.complex);
    }
    res.report = question_1_5_report(res.complex, res.complex.dim() <= 3 &&
                                                      res.complex.universe.size() <= 25);
    return res;
}

}  // namespace flagsphere
