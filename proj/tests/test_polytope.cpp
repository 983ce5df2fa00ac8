#include "doctest.h"

#include <algorithm>

#include "polyspec/polytope.hpp"

using namespace polyspec;

namespace {

LatticePolytope standard_triangle() {
    return LatticePolytope::from_vertices(2, {{1, 0}, {0, 1}, {-1, -1}});
}

LatticePolytope square() {
    return LatticePolytope::from_vertices(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
}

// Reduced simplex of weight (1,1,3).
LatticePolytope simplex_113() {
    return LatticePolytope::from_vertices(2, {{1, 0}, {-1, 3}, {0, -1}});
}

LatticePolytope simplex_112() {
    return LatticePolytope::from_vertices(2, {{1, 0}, {-1, 2}, {0, -1}});
}

}  // namespace

TEST_CASE("from_vertices: validation") {
    CHECK_NOTHROW(standard_triangle());
    CHECK(standard_triangle().facets().size() == 3);
    CHECK_THROWS_AS(LatticePolytope::from_vertices(2, {{1, 0}, {0, 1}}), dimension_error);
    CHECK_THROWS_AS(LatticePolytope::from_vertices(2, {{1, 0}, {0, 1}, {1, 1}}),
                    validation_error);
    CHECK_THROWS_AS(LatticePolytope::from_vertices(2, {{1, 0}, {2, 0}, {3, 0}}),
                    dimension_error);
    CHECK_THROWS_AS(LatticePolytope::from_vertices(2, {{1, 0}, {1, 0}, {0, 1}, {-1, -1}}),
                    validation_error);
    // point strictly inside the hull is not a vertex
    CHECK_THROWS_AS(LatticePolytope::from_vertices(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 0}}),
                    validation_error);
}

TEST_CASE("facets: triangle, square and the (1,1,3) simplex") {
    {
        auto p = standard_triangle();
        REQUIRE(p.facets().size() == 3);
        for (const Facet& f : p.facets()) {
            CHECK(f.vertex_indices.size() == 2);
            for (std::size_t i : f.vertex_indices)
                CHECK(dot(f.normal, p.vertices()[i]) == 1);
        }
        // deterministic order: sorted index sets
        CHECK(p.facets()[0].vertex_indices == std::vector<std::size_t>{0, 1});
        CHECK(p.facets()[1].vertex_indices == std::vector<std::size_t>{0, 2});
        CHECK(p.facets()[2].vertex_indices == std::vector<std::size_t>{1, 2});
    }
    {
        auto p = square();
        REQUIRE(p.facets().size() == 4);
        std::vector<RatVec> normals;
        for (const Facet& f : p.facets()) normals.push_back(f.normal);
        auto has = [&](Rat a, Rat b) {
            return std::find(normals.begin(), normals.end(), RatVec{a, b}) != normals.end();
        };
        CHECK(has(1, 0));
        CHECK(has(-1, 0));
        CHECK(has(0, 1));
        CHECK(has(0, -1));
    }
    CHECK(simplex_113().facets().size() == 3);
}

TEST_CASE("facets: a vertex on a supporting hyperplane outside the subset is non-simplicial") {
    // cube: every facet plane carries four vertices
    std::vector<IntVec> cube;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) cube.push_back(IntVec{x, y, z});
    CHECK_THROWS_AS(LatticePolytope::from_vertices(3, cube), simpliciality_error);
    // collinear configuration in dim 2
    CHECK_THROWS_AS(LatticePolytope::from_vertices(2, {{1, -1}, {1, 0}, {1, 1}, {-1, 0}}),
                    simpliciality_error);
}

TEST_CASE("is_reflexive") {
    CHECK(square().is_reflexive());
    CHECK(standard_triangle().is_reflexive());
    CHECK_FALSE(simplex_113().is_reflexive());
}

TEST_CASE("normalized_volume") {
    CHECK(standard_triangle().normalized_volume() == 3);
    CHECK(simplex_113().normalized_volume() == 5);
    CHECK(square().normalized_volume() == 8);
}

TEST_CASE("lattice_points: pinned counts and lexicographic order") {
    {
        auto pts = standard_triangle().lattice_points(1);
        CHECK(pts.size() == 4);
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        CHECK(std::find(pts.begin(), pts.end(), IntVec{0, 0}) != pts.end());
    }
    CHECK(square().lattice_points(1).size() == 9);
    CHECK(square().lattice_points(2).size() == 25);
    CHECK_THROWS_AS(square().lattice_points(0), domain_error);
}

TEST_CASE("delta_vector: pinned examples") {
    {
        auto d = square().delta_vector();
        CHECK(d.entries == std::vector<Int>{1, 6, 1});
    }
    {
        auto d = standard_triangle().delta_vector();
        CHECK(d.entries == std::vector<Int>{1, 1, 1});
    }
    {
        auto d = simplex_112().delta_vector();
        CHECK(d.entries == std::vector<Int>{1, 2, 1});
    }
}

namespace {

// Ehrhart-series inversion from brute-force lattice point counts; the
// independent oracle for the simplex fast path of delta_vector.
std::vector<Int> delta_by_inversion(const LatticePolytope& p) {
    const std::size_t n = p.dim();
    std::vector<Int> counts(n + 1);
    counts[0] = 1;
    for (std::size_t ell = 1; ell <= n; ++ell)
        counts[ell] = Int(p.lattice_points(Int(ell)).size());
    std::vector<Int> binom(n + 2);
    binom[0] = 1;
    for (std::size_t i = 1; i <= n + 1; ++i)
        binom[i] = binom[i - 1] * Int(n + 2 - i) / Int(i);
    std::vector<Int> d(n + 1, Int(0));
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i) {
            Int term = binom[i] * counts[j - i];
            d[j] += (i % 2 == 0) ? term : -term;
        }
    return d;
}

}  // namespace

TEST_CASE("delta_vector: simplex fast path agrees with series inversion") {
    for (const auto& p : {standard_triangle(), simplex_113(), simplex_112(),
                          LatticePolytope::from_vertices(
                              3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-2, -2, -3}})}) {
        CHECK(p.delta_vector().entries == delta_by_inversion(p));
    }
}

TEST_CASE("delta_vector: sum equals normalized volume, Hibi symmetry when reflexive") {
    for (const auto& p : {standard_triangle(), square(), simplex_113(), simplex_112()}) {
        auto d = p.delta_vector().entries;
        Int sum = 0;
        for (const Int& x : d) sum += x;
        CHECK(sum == p.normalized_volume());
        CHECK(d[0] == 1);
        if (p.is_reflexive()) {
            for (std::size_t j = 0; j < d.size(); ++j)
                CHECK(d[j] == d[d.size() - 1 - j]);
        }
    }
}

TEST_CASE("lattice point counts follow a degree-n polynomial") {
    for (const auto& p : {standard_triangle(), square(), simplex_113()}) {
        const std::size_t n = p.dim();
        // finite differences of order n+1 vanish for a degree-n polynomial
        std::vector<Int> vals;
        vals.push_back(1);  // L_P(0)
        for (std::size_t ell = 1; ell <= n + 2; ++ell)
            vals.push_back(Int(p.lattice_points(Int(ell)).size()));
        for (std::size_t round = 0; round <= n; ++round)
            for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
        vals.resize(vals.size() - (n + 1));
        for (const Int& x : vals) CHECK(x == 0);
    }
}
