#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geom/hull.hpp"
#include "geom/lp.hpp"

using namespace toric::geom;

namespace {

RatMat pts(std::initializer_list<std::initializer_list<long>> rows) {
    RatMat m;
    for (auto& r : rows) {
        RatVec v;
        for (long x : r) v.push_back(Rat(x));
        m.push_back(std::move(v));
    }
    return m;
}

} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(rat(4, 6)) == "2/3");
    CHECK(parse_rat("-7/2").value() == rat(-7, 2));
    CHECK(parse_rat("5").value() == rat(5));
    CHECK(!parse_rat("1.5").has_value());
    CHECK(!parse_rat("2/0").has_value());
    CHECK(!parse_rat(" 3").has_value());
}

TEST_CASE("elimination basics") {
    RatMat m = pts({{1, 2}, {2, 4}});
    CHECK(rank(m) == 1);
    CHECK(det(pts({{1, 2}, {3, 4}})) == rat(-2));
    auto x = solve_square(pts({{2, 0}, {0, 4}}), {rat(6), rat(8)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == rat(3));
    CHECK((*x)[1] == rat(2));
    auto ns = nullspace(pts({{1, 1, 0}}), 3);
    CHECK(ns.size() == 2);
}

TEST_CASE("lattice basis and primitive vectors") {
    auto b = lattice_basis({{Int(2), Int(0)}, {Int(0), Int(3)}, {Int(1), Int(1)}});
    REQUIRE(b.size() == 2);
    RatMat br;
    for (auto& v : b) br.push_back(to_rat(v));
    CHECK(cmp(abs(det(br)), 1) == 0); // these three generate all of Z^2

    auto prim = make_primitive({rat(-2, 3), rat(4, 3)});
    CHECK(prim == IntVec{Int(-1), Int(2)});
}

TEST_CASE("convex hull: triangle with non-vertex points") {
    // Hull of the conic configuration: 3 vertices, 3 edges, 1 top face.
    auto lat = convex_hull(pts({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
    CHECK(lat.faces_of_dim(0).size() == 3);
    CHECK(lat.faces_of_dim(1).size() == 3);
    CHECK(lat.faces_of_dim(2).size() == 1);
    CHECK(lat.facets.size() == 3);
    // Each edge of the doubled triangle carries 3 configuration points.
    for (int fi : lat.facets) CHECK(lat.faces[fi].points.size() == 3);
    // Inward normals are primitive and every point satisfies them.
    for (int fi : lat.facets) {
        const auto& f = lat.faces[fi];
        for (const auto& p : pts({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}))
            CHECK(cmp(dot(f.normal, p), f.offset) >= 0);
    }
}

TEST_CASE("convex hull: segment") {
    auto lat = convex_hull(pts({{0}, {2}}));
    CHECK(lat.faces_of_dim(0).size() == 2);
    CHECK(lat.top == static_cast<int>(lat.faces.size()) - 1);
}

TEST_CASE("convex hull rejects degenerate input") {
    CHECK_THROWS_AS(convex_hull(pts({{0, 0}, {1, 1}, {2, 2}})), toric::input_error);
    CHECK_THROWS_AS(convex_hull(pts({{0, 0}, {1}})), toric::input_error);
    CHECK_THROWS_AS(convex_hull(pts({{0, 0}, {0, 0}})), toric::input_error);
}

TEST_CASE("convex hull is idempotent on its vertices") {
    auto lat = convex_hull(pts({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
    auto verts = pts({{0, 0}, {0, 2}, {2, 0}});
    auto lat2 = convex_hull(verts);
    CHECK(lat2.faces.size() == lat.faces.size());
    for (int d = 0; d <= 2; ++d)
        CHECK(lat2.faces_of_dim(d).size() == lat.faces_of_dim(d).size());
}

TEST_CASE("smallest containing face") {
    auto lat = convex_hull(pts({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
    int f = lat.smallest_face_containing({0, 1});
    CHECK(lat.faces[f].dim == 1); // both points on the x = 0 edge
    f = lat.smallest_face_containing({0, 4});
    CHECK(lat.faces[f].dim == 2); // (1,1) is on the diagonal, (0,0) is not
    f = lat.smallest_face_containing({2});
    CHECK(lat.faces[f].dim == 0);
}

TEST_CASE("pulling triangulation") {
    // Doubled segment: coning from the smallest label skips the interior
    // point, giving the coarse cell.
    auto cells = pulling_triangulation(pts({{0}, {1}, {2}}), {0, 1, 2});
    CHECK(cells == std::vector<std::vector<int>>{{0, 2}});

    // A simplex is returned unchanged.
    cells = pulling_triangulation(pts({{0, 0}, {1, 0}, {0, 1}}), {5, 7, 9});
    CHECK(cells == std::vector<std::vector<int>>{{5, 7, 9}});

    // Unit square: pulling at label 0 picks the diagonal through it.
    cells = pulling_triangulation(pts({{0, 0}, {0, 1}, {1, 0}, {1, 1}}), {0, 1, 2, 3});
    CHECK(cells == std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}});
}

TEST_CASE("upper hull subdivision") {
    auto base = pts({{0}, {1}, {2}});
    SUBCASE("tent") {
        auto cells = upper_hull_subdivision(base, {rat(0), rat(1), rat(0)});
        REQUIRE(cells.size() == 2);
        CHECK(cells[0].points == std::vector<int>{0, 1});
        CHECK(cells[1].points == std::vector<int>{1, 2});
        // g(1/2) = 1/2 on the first cell.
        CHECK(cells[0].lift.eval({rat(1, 2)}) == rat(1, 2));
    }
    SUBCASE("flat") {
        auto cells = upper_hull_subdivision(base, {rat(0), rat(0), rat(0)});
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].points == std::vector<int>{0, 1, 2});
        CHECK(cells[0].lift.eval({rat(7, 3)}) == rat(0));
    }
    SUBCASE("affine but not constant") {
        auto cells = upper_hull_subdivision(base, {rat(3), rat(5), rat(7)});
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].lift.gradient[0] == rat(2));
        CHECK(cells[0].lift.constant == rat(3));
    }
}

TEST_CASE("strict LP feasibility") {
    AffineFunctional x{{rat(1)}, rat(0)};
    AffineFunctional negx{{rat(-1)}, rat(0)};
    SUBCASE("x > 0, x >= 0") {
        auto r = lp_feasible_strict({{x, true}, {x, false}}, 1);
        CHECK(r.feasible);
        CHECK(r.witness[0] == rat(1)); // slack maximizes to the gauge corner
        CHECK(r.slack == rat(1));
    }
    SUBCASE("x > 0, -x > 0") {
        auto r = lp_feasible_strict({{x, true}, {negx, true}}, 1);
        CHECK(!r.feasible);
        REQUIRE(r.gordan.size() == 2); // Gordan: y_0 x - y_1 x = 0
        CHECK(r.gordan[0] == rat(1, 2));
        CHECK(r.gordan[1] == rat(1, 2));
    }
    SUBCASE("no constraints") {
        auto r = lp_feasible_strict({}, 3);
        CHECK(r.feasible);
        CHECK(r.witness == RatVec{rat(0), rat(0), rat(0)});
    }
}

TEST_CASE("point in hull with certificates") {
    RatMat segment = {{rat(0), rat(8), rat(0)}, {rat(4), rat(0), rat(4)}};
    SUBCASE("midpoint") {
        auto m = point_in_hull({rat(2), rat(4), rat(2)}, segment);
        REQUIRE(m.inside);
        CHECK(m.coefficients == RatVec{rat(1, 2), rat(1, 2)});
    }
    SUBCASE("outside the affine hull") {
        auto m = point_in_hull({rat(1), rat(0), rat(0)}, segment);
        REQUIRE(!m.inside);
        // Separator is re-verified inside point_in_hull; check shape here.
        CHECK(m.separator.gradient.size() == 3);
    }
    SUBCASE("singleton") {
        auto m = point_in_hull({rat(5)}, {{rat(5)}});
        REQUIRE(m.inside);
        CHECK(m.coefficients == RatVec{rat(1)});
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(point_in_hull({rat(0)}, {{rat(0), rat(1)}}), toric::input_error);
    }
}

TEST_CASE("solve_lp basics") {
    // max x + y s.t. x + y <= 2, x <= 1, x,y >= 0
    Lp lp;
    lp.nvars = 2;
    lp.nonneg = {true, true};
    lp.c = {rat(1), rat(1)};
    lp.rows.push_back({{rat(1), rat(1)}, Rel::le, rat(2)});
    lp.rows.push_back({{rat(1), rat(0)}, Rel::le, rat(1)});
    auto r = solve_lp(lp);
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.value == rat(2));

    // Infeasible: x >= 1, x <= 0; the farkas certificate is verified inside.
    Lp bad;
    bad.nvars = 1;
    bad.nonneg = {false};
    bad.c = {rat(0)};
    bad.rows.push_back({{rat(1)}, Rel::ge, rat(1)});
    bad.rows.push_back({{rat(1)}, Rel::le, rat(0)});
    auto rb = solve_lp(bad);
    CHECK(rb.status == LpResult::Status::infeasible);

    // Unbounded: max x with x >= 0 only.
    Lp unb;
    unb.nvars = 1;
    unb.nonneg = {true};
    unb.c = {rat(1)};
    auto ru = solve_lp(unb);
    CHECK(ru.status == LpResult::Status::unbounded);
}
