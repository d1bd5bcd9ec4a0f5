#include <catch2/catch_amalgamated.hpp>

#include "flagsphere/complex.hpp"
#include "flagsphere/constructions.hpp"
#include "flagsphere/isomorphism.hpp"
#include "flagsphere/vectors.hpp"

using namespace flagsphere;

namespace {

SimplicialComplex two_simplex() { return from_facets({"a", "b", "c"}, {{"a", "b", "c"}}); }

}  // namespace

TEST_CASE("from_facets basics") {
    auto c = two_simplex();
    CHECK(c.dim() == 2);
    CHECK(f_vector(c) == std::vector<long long>{1, 3, 3, 1});

    SECTION("absorption of non-maximal input sets") {
        auto d = from_facets({"a", "b", "c"}, {{"a", "b"}, {"a", "b", "c"}});
        CHECK(d.facets.size() == 1);
        CHECK(facet_label_sets(d) == facet_label_sets(c));
    }
    SECTION("duplicates are removed") {
        auto d = from_facets({"a", "b"}, {{"a", "b"}, {"b", "a"}});
        CHECK(d.facets.size() == 1);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(from_facets({"a"}, {{"b"}}), std::invalid_argument);
        CHECK_THROWS_AS(from_facets({"a"}, {}), std::invalid_argument);
        std::vector<std::string> many;
        for (int i = 0; i < 65; ++i) many.push_back("w" + std::to_string(i));
        CHECK_THROWS_AS(from_facets(many, {{"w0"}}), std::invalid_argument);
        CHECK_THROWS_AS(from_facets({"a", "a"}, {{"a"}}), std::invalid_argument);
    }
}

TEST_CASE("faces_of_dim") {
    auto c = two_simplex();
    auto edges = faces_of_dim(c, 1);
    CHECK(edges.size() == 3);
    CHECK_THROWS_AS(faces_of_dim(c, 3), std::invalid_argument);
    CHECK(faces_of_dim(c, -1).size() == 1);  // the empty face

    auto delta = delta_12_33();
    CHECK(faces_of_dim(delta, 1).size() == 45);
    CHECK(faces_of_dim(delta, 2).size() == 66);
}

TEST_CASE("link") {
    auto delta = delta_12_33();
    SECTION("link of a facet is the empty complex") {
        auto lk = link(delta, delta.facets[0]);
        CHECK(lk.dim() == -1);
        CHECK(lk.facets.size() == 1);
        CHECK(lk.facets[0].is_empty());
    }
    SECTION("lk(v1) is an octahedron") {
        auto lk = link(delta, "v1");
        CHECK(lk.universe.size() == 6);
        CHECK(lk.facets.size() == 8);
        auto iso = is_isomorphic(lk, cross_polytope(3));
        CHECK(iso.has_value());
    }
    SECTION("link of a non-face is an error") {
        // {x1, y1} is one of the 21 missing edges
        CHECK_THROWS_AS(link(delta, delta.universe.face_of({"x1", "y1"})),
                        std::invalid_argument);
    }
}

TEST_CASE("induced") {
    auto delta = delta_12_33();
    SECTION("full vertex set gives the complex back") {
        auto same = induced(delta, delta.universe.labels);
        CHECK(same_complex(same, delta));
    }
    SECTION("the neighborhood of x3 induces lk(x3)") {
        // N(x3) = V minus {y3, z2, v2} and x3 itself
        std::vector<std::string> s;
        for (const auto& l : delta.universe.labels)
            if (l != "y3" && l != "z2" && l != "v2" && l != "x3") s.push_back(l);
        CHECK(facet_label_sets(induced(delta, s)) == facet_label_sets(link(delta, "x3")));
    }
}

TEST_CASE("join, cone, suspension") {
    auto s0a = from_facets({"p", "q"}, {{"p"}, {"q"}});
    auto s0b = from_facets({"r", "s"}, {{"r"}, {"s"}});
    SECTION("join of two 0-spheres is a 4-cycle") {
        auto c = join(s0a, s0b);
        CHECK(c.dim() == 1);
        CHECK(c.facets.size() == 4);
        CHECK(f_vector(c) == std::vector<long long>{1, 4, 4});
    }
    SECTION("label collision is an error") {
        CHECK_THROWS_AS(join(s0a, s0a), std::invalid_argument);
    }
    SECTION("f-vector of a join is the convolution of f-vectors") {
        auto a = two_simplex();
        auto b = cross_polytope({{"p", "q"}, {"r", "s"}});
        auto j = join(a, b);
        auto fa = f_vector(a), fb = f_vector(b), fj = f_vector(j);
        std::vector<long long> conv(fa.size() + fb.size() - 1, 0);
        for (std::size_t i = 0; i < fa.size(); ++i)
            for (std::size_t k = 0; k < fb.size(); ++k) conv[i + k] += fa[i] * fb[k];
        CHECK(fj == conv);
    }
    SECTION("cone over the first octahedron gives 8 tetrahedra") {
        auto c = cone("v1", cross_polytope({{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}}));
        CHECK(c.facets.size() == 8);
        CHECK(c.dim() == 3);
    }
}

TEST_CASE("cross_polytope") {
    SECTION("d=2 is a 4-cycle") {
        auto c = cross_polytope(2);
        CHECK(c.facets.size() == 4);
        CHECK(c.dim() == 1);
    }
    SECTION("d=3 is the octahedron boundary") {
        auto c = cross_polytope(3);
        CHECK(c.facets.size() == 8);
        CHECK(f_vector(c) == std::vector<long long>{1, 6, 12, 8});
        // each pair {x_i, y_i} is a non-face
        for (int i = 1; i <= 3; ++i) {
            Face f = c.universe.face_of({"x" + std::to_string(i), "y" + std::to_string(i)});
            CHECK_FALSE(c.contains(f));
        }
    }
    SECTION("paired non-adjacency follows the given tuples") {
        auto c = cross_polytope({{"x1", "z3"}, {"x2", "z1"}, {"x3", "z2"}});
        Graph g = one_skeleton(c);
        CHECK_FALSE(g.adjacent(c.universe.index_of("x1"), c.universe.index_of("z3")));
        CHECK_FALSE(g.adjacent(c.universe.index_of("x2"), c.universe.index_of("z1")));
        CHECK_FALSE(g.adjacent(c.universe.index_of("x3"), c.universe.index_of("z2")));
        CHECK(g.adjacent(c.universe.index_of("x1"), c.universe.index_of("z1")));
    }
    SECTION("duplicate labels are rejected") {
        CHECK_THROWS_AS(cross_polytope({{"a", "b"}, {"a", "c"}}), std::invalid_argument);
    }
}

TEST_CASE("flagness and minimal non-faces") {
    SECTION("delta is flag with 21 minimal non-faces") {
        auto delta = delta_12_33();
        CHECK(is_flag(delta));
        auto mnf = minimal_nonfaces(delta);
        // oracle: C(12,2) - 45 non-adjacent pairs
        Graph g = one_skeleton(delta);
        int non_adjacent = 0;
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                if (!g.adjacent(i, j)) ++non_adjacent;
        CHECK(non_adjacent == 66 - 45);
        CHECK(mnf.size() == 21);
        for (const Face& f : mnf) CHECK(f.size() == 2);
    }
    SECTION("boundary of the 3-simplex is not flag") {
        auto c = from_facets({"a", "b", "c", "d"},
                             {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
        CHECK_FALSE(is_flag(c));
        auto mnf = minimal_nonfaces(c);
        REQUIRE(mnf.size() == 1);
        CHECK(mnf[0].size() == 4);
    }
    SECTION("clique complex of the 1-skeleton contains the complex") {
        auto c = from_facets({"a", "b", "c", "d"},
                             {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
        auto cc = clique_complex(c);
        for (const Face& f : c.facets) {
            Face g = cc.universe.face_of(c.universe.labels_of(f));
            CHECK(cc.contains(g));
        }
        CHECK_FALSE(same_complex(c, cc));  // not flag, so strict containment
        auto delta = delta_12_33();
        CHECK(same_complex(delta, clique_complex(delta)));  // flag
    }
}

TEST_CASE("boundary_complex") {
    SECTION("single 3-simplex") {
        auto c = from_facets({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
        auto bd = boundary_complex(c);
        CHECK(bd.facets.size() == 4);
        CHECK(bd.dim() == 2);
    }
    SECTION("closed complexes have empty boundary") {
        auto bd = boundary_complex(delta_12_33());
        CHECK(bd.dim() == -1);
    }
    SECTION("non-pure input is rejected") {
        auto c = from_facets({"a", "b", "c"}, {{"a", "b"}, {"c"}});
        CHECK_THROWS_AS(boundary_complex(c), std::invalid_argument);
    }
}

TEST_CASE("vertex maps") {
    auto delta = delta_12_33();
    SECTION("identity is an automorphism") {
        CHECK(is_automorphism(delta, identity_map(delta.universe.labels)));
    }
    SECTION("partial map is rejected") {
        LabelMap m{{"x1", "x2"}};
        CHECK_THROWS_AS(apply_vertex_map(delta, m), std::invalid_argument);
    }
    SECTION("apply then apply inverse is the identity") {
        auto t = tau();
        LabelMap inv;
        for (const auto& [k, v] : t) inv[v] = k;
        CHECK(same_complex(apply_vertex_map(apply_vertex_map(delta, t), inv), delta));
    }
}

TEST_CASE("isomorphism search") {
    auto delta = delta_12_33();
    SECTION("lk(v1) vs the standard octahedron, with witness") {
        auto lk = link(delta, "v1");
        auto iso = is_isomorphic(lk, cross_polytope(3));
        REQUIRE(iso.has_value());
        CHECK(same_complex(apply_vertex_map(lk, *iso), cross_polytope(3)));
    }
    SECTION("cycle lengths distinguish") {
        auto c4 = cross_polytope(2);
        auto c5 = from_facets({"a", "b", "c", "d", "e"},
                              {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
        CHECK_FALSE(is_isomorphic(c4, c5).has_value());
    }
    SECTION("vertex cap") {
        auto big = k_fold_join(delta, 2);
        CHECK_THROWS_AS(is_isomorphic(big, big), std::invalid_argument);
    }
}
