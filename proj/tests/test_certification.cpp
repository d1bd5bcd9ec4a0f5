#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "flagsphere/certification.hpp"
#include "flagsphere/constructions.hpp"
#include "flagsphere/recognition.hpp"

using namespace flagsphere;

namespace {

// Brute-force oracle: scan every 4-subset containing the edge and test
// the induced complex with the cycle recognizer.
bool edge_in_induced_4cycle_oracle(const SimplicialComplex& c, const std::string& u,
                                   const std::string& v) {
    const int n = c.universe.size();
    const int ui = c.universe.index_of(u), vi = c.universe.index_of(v);
    for (int p = 0; p < n; ++p) {
        if (p == ui || p == vi) continue;
        for (int q = p + 1; q < n; ++q) {
            if (q == ui || q == vi) continue;
            Face s = Face::of({ui, vi, p, q});
            if (is_cycle(induced(c, s))) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("contractible edges") {
    auto delta = delta_12_33();
    SECTION("delta has none; every edge has a 4-cycle witness") {
        CHECK(contractible_edges(delta).empty());
        for (const Face& e : faces_of_dim(delta, 1)) {
            auto ls = delta.universe.labels_of(e);
            auto cycles = induced_4cycles_containing(delta, ls[0], ls[1]);
            CHECK_FALSE(cycles.empty());
            CHECK(edge_in_induced_4cycle_oracle(delta, ls[0], ls[1]));
        }
    }
    SECTION("the paper's witness for {v1,x1}") {
        auto cycles = induced_4cycles_containing(delta, "v1", "x1");
        bool found = false;
        for (auto c4 : cycles) {
            std::sort(c4.begin(), c4.end());
            if (c4 == std::vector<std::string>{"v1", "x1", "y1", "z2"}) found = true;
        }
        CHECK(found);
    }
    SECTION("octahedron: every edge lies in an induced 4-cycle") {
        auto oct = cross_polytope(3);
        CHECK(contractible_edges(oct).empty());
        for (const Face& e : faces_of_dim(oct, 1)) {
            auto ls = oct.universe.labels_of(e);
            CHECK(edge_in_induced_4cycle_oracle(oct, ls[0], ls[1]));
        }
    }
    SECTION("a non-edge is rejected") {
        CHECK_THROWS_AS(induced_4cycles_containing(delta, "x1", "y1"), std::invalid_argument);
    }
    SECTION("the 5-cycle has contractible edges") {
        auto c5 = from_facets({"a", "b", "c", "d", "e"},
                              {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
        CHECK(contractible_edges(c5).size() == 5);
    }
    SECTION("verdict is isomorphism-invariant: relabel by tau") {
        auto relabelled = apply_vertex_map(delta, tau());
        CHECK(contractible_edges(relabelled).empty());
    }
}

TEST_CASE("suspension detection") {
    SECTION("delta is not a suspension; degrees are 8 or 6") {
        auto delta = delta_12_33();
        CHECK_FALSE(is_suspension(delta).has_value());
        Graph g = one_skeleton(delta);
        for (int v = 0; v < g.n; ++v) CHECK((g.degree(v) == 8 || g.degree(v) == 6));
    }
    SECTION("cross-polytopes are suspensions, with a valid witness") {
        auto oct = cross_polytope(3);
        auto sus = is_suspension(oct);
        REQUIRE(sus.has_value());
        auto [u, w] = *sus;
        std::vector<std::string> rest;
        for (const auto& l : oct.universe.labels)
            if (l != u && l != w) rest.push_back(l);
        auto rebuilt = suspension(u, w, induced(oct, rest));
        CHECK(same_complex(rebuilt, oct));
    }
    SECTION("a constructed suspension of a 5-cycle is found") {
        auto c5 = from_facets({"a", "b", "c", "d", "e"},
                              {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
        auto s = suspension("n", "s", c5);
        auto sus = is_suspension(s);
        REQUIRE(sus.has_value());
        CHECK(std::set<std::string>{sus->first, sus->second} ==
              std::set<std::string>{"n", "s"});
    }
}

TEST_CASE("equator enumeration") {
    SECTION("delta: exactly 12 equators, all vertex links") {
        auto delta = delta_12_33();
        auto eq = enumerate_induced_equators(delta);
        REQUIRE(eq.size() == 12);
        std::set<std::string> linked;
        for (const auto& rec : eq) {
            REQUIRE(rec.link_of.has_value());
            linked.insert(*rec.link_of);
            CHECK(rec.sphere_dim == 2);
        }
        CHECK(linked.size() == 12);  // one equator per vertex
    }
    SECTION("the octahedron's equators are the three coordinate 4-cycles") {
        // each is the link of both vertices of the complementary pair, so
        // the octahedron satisfies (iii); it fails (i) instead
        auto oct = cross_polytope(3);
        auto eq = enumerate_induced_equators(oct);
        CHECK(eq.size() == 3);
        for (const auto& rec : eq) CHECK(rec.link_of.has_value());
        auto r = question_1_5_report(oct);
        CHECK(r.suspension.has_value());
        CHECK_FALSE(r.question_1_5);
    }
    SECTION("induced cycles of lk(x1) avoiding the v vertices") {
        auto lk = link(delta_12_33(), "x1");
        auto eq = enumerate_induced_equators(lk);
        std::set<std::set<std::string>> no_v;
        for (const auto& rec : eq) {
            bool has_v = false;
            for (const auto& l : rec.vertices)
                if (l[0] == 'v') has_v = true;
            if (!has_v) no_v.insert({rec.vertices.begin(), rec.vertices.end()});
        }
        // the two published cycles plus {x2,x3,z1,z2}, the link of v3
        // inside lk(x1); all three contain {x2,x3}
        std::set<std::set<std::string>> expect{{"x2", "x3", "y2", "y3"},
                                               {"x2", "x3", "y3", "z1"},
                                               {"x2", "x3", "z1", "z2"}};
        CHECK(no_v == expect);
    }
    SECTION("the restricted scan finds nothing outside the links") {
        // subsets avoiding v1,v2,v3 and containing none of the coordinate
        // triples reduce to subcomplexes of gamma2, which has no equator
        auto delta = delta_12_33();
        auto eq = enumerate_induced_equators(delta);
        for (const auto& rec : eq) {
            std::set<std::string> s(rec.vertices.begin(), rec.vertices.end());
            bool avoids_v = !s.count("v1") && !s.count("v2") && !s.count("v3");
            if (!avoids_v) continue;
            bool has_triple = false;
            for (char c : {'x', 'y', 'z'}) {
                std::string base(1, c);
                if (s.count(base + "1") && s.count(base + "2") && s.count(base + "3"))
                    has_triple = true;
            }
            CHECK(has_triple);  // otherwise gamma2 would have an equator
        }
    }
    SECTION("dimension limits") {
        CHECK_THROWS_AS(enumerate_induced_equators(k_fold_join(delta_12_33(), 2)),
                        std::invalid_argument);
    }
}

TEST_CASE("solid torus lemma") {
    CHECK(gamma2_has_no_equator(gamma2()));
    SECTION("gamma1, informationally: it does have induced 2-spheres") {
        // the lemma needs an interior-vertex-free torus, which gamma1 is
        // not: each coordinate octahedron is induced
        CHECK_FALSE(has_no_induced_2_sphere(gamma1()));
        auto oct = induced(gamma1(), {"x1", "y1", "x2", "y2", "x3", "y3"});
        CHECK(is_2_sphere(oct));
        CHECK(is_diamond(oct) == 3);
    }
    SECTION("a single 3-simplex, vacuously") {
        CHECK(has_no_induced_2_sphere(
            from_facets({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}})));
    }
}

TEST_CASE("question 1.5 report") {
    SECTION("delta answers the question positively") {
        auto r = question_1_5_report(delta_12_33());
        CHECK(r.flag);
        CHECK_FALSE(r.suspension.has_value());
        CHECK(r.contractible.empty());
        CHECK(r.equators_checked);
        CHECK(r.question_1_5);
    }
    SECTION("the 16-cell fails: it is a suspension") {
        auto r = question_1_5_report(cross_polytope(4));
        CHECK(r.suspension.has_value());
        CHECK_FALSE(r.question_1_5);
    }
    SECTION("links are always found among the equators of a flag sphere") {
        auto delta = delta_12_33();
        Graph g = one_skeleton(delta);
        auto eq = enumerate_induced_equators(delta);
        std::set<std::set<std::string>> sets;
        for (const auto& rec : eq) sets.insert({rec.vertices.begin(), rec.vertices.end()});
        for (int v = 0; v < g.n; ++v) {
            auto nb = delta.universe.labels_of(Face{g.neighbors(v)});
            CHECK(sets.count({nb.begin(), nb.end()}) == 1);
        }
    }
}
