#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace toric;
using namespace toric::points;
using geom::Rat;
using geom::rat;
using geom::RatVec;

TEST_CASE("conic configuration satisfies (*)") {
    auto pc = fixtures::conic();
    CHECK(pc.count() == 6);
    CHECK(pc.saturated());
    CHECK(pc.generates());
    CHECK(pc.delzant());
}

TEST_CASE("gappy segment is not saturated") {
    auto pc = PointConfiguration::load({{0}, {2}});
    CHECK(!pc.saturated());  // 1 is missing
    CHECK(!pc.generates()); // the differences only span 2Z
}

TEST_CASE("unit square flags") {
    auto pc = fixtures::unit_square();
    CHECK(pc.saturated());
    CHECK(pc.generates());
    CHECK(pc.count() == 4);
}

TEST_CASE("load rejects bad input") {
    CHECK_THROWS_AS(PointConfiguration::load({{0, 0}, {0, 0}}), input_error);
    CHECK_THROWS_AS(PointConfiguration::load({{0, 0}, {1, 1}, {2, 2}}), input_error);
    CHECK_THROWS_AS(PointConfiguration::load({}), input_error);
}

TEST_CASE("volumes and moments of the conic triangle") {
    auto pc = fixtures::conic();
    CHECK(pc.volume() == rat(2));
    CHECK(pc.boundary_volume() == rat(6));
    CHECK(pc.moment() == RatVec{rat(4, 3), rat(4, 3)});
    CHECK(pc.boundary_moment() == RatVec{rat(4), rat(4)});
    CHECK(pc.codim_moment(2) == RatVec{rat(2), rat(2)});
    // vol_Z = d! vol on every face.
    for (size_t fi = 0; fi < pc.hull().faces.size(); ++fi) {
        const auto& fd = pc.face_data(static_cast<int>(fi));
        CHECK(fd.vol_z == Rat(geom::factorial(pc.hull().faces[fi].dim)) * fd.vol);
        CHECK(sgn(fd.vol) > 0);
    }
}

TEST_CASE("unimodular simplex volume normalization") {
    auto pc = fixtures::unit_triangle();
    CHECK(pc.volume() == rat(1, 2));
    CHECK(pc.face_data(pc.hull().top).vol_z == rat(1));
}

TEST_CASE("dilation") {
    auto seg = fixtures::segment02();
    auto d1 = dilate(seg, 1);
    CHECK(d1.config.count() == 3);
    CHECK(d1.embedding == std::vector<int>{0, 1, 2});
    auto d2 = dilate(seg, 2);
    CHECK(d2.config.count() == 5);
    CHECK(d2.embedding == std::vector<int>{0, 2, 4});

    auto conic = fixtures::conic();
    CHECK(dilate(conic, 1).config.count() == 6);
    CHECK_THROWS_AS(dilate(conic, 0), input_error);

    auto gappy = PointConfiguration::load({{0}, {2}});
    CHECK_THROWS_AS(dilate(gappy, 1), input_error);
}

TEST_CASE("ehrhart coefficients") {
    auto conic = fixtures::conic();
    auto [lead, sub] = conic.ehrhart_coefficients();
    CHECK(lead == rat(2));
    CHECK(sub == rat(3));

    auto seg = fixtures::segment02();
    auto [l2, s2] = seg.ehrhart_coefficients();
    CHECK(l2 == rat(2));
    CHECK(s2 == rat(1));

    auto square = fixtures::unit_square();
    auto [l3, s3] = square.ehrhart_coefficients();
    CHECK(l3 == rat(1));
    CHECK(s3 == rat(2));
}

TEST_CASE("interpolated ehrhart polynomial matches counts and coefficients") {
    for (const auto& pc : {fixtures::conic(), fixtures::unit_square()}) {
        auto coeffs = ehrhart_interpolated(pc);
        const int n = pc.dim();
        CHECK(coeffs[n] == pc.volume());
        CHECK(coeffs[n - 1] == pc.boundary_volume() / 2);
        CHECK(coeffs[0] == rat(1));
        // Counts at a few more dilations agree with the polynomial.
        for (int t = 1; t <= n + 2; ++t) {
            Rat value = 0, power = 1;
            for (int k = 0; k <= n; ++k) {
                value += coeffs[k] * power;
                power *= t;
            }
            CHECK(value == Rat(ehrhart_count(pc, t)));
        }
    }
}

TEST_CASE("boundary face decomposition adds up") {
    auto pc = fixtures::conic();
    for (int j = 0; j <= 2; ++j) {
        RatVec total(2, rat(0));
        for (int fi : pc.hull().faces_of_codim(j))
            total = geom::add(total, pc.face_data(fi).moment);
        CHECK(total == pc.codim_moment(j));
    }
    CHECK(pc.hull().faces_of_codim(1).size() == 3);
    CHECK(pc.hull().faces_of_codim(2).size() == 3);
}

TEST_CASE("product with a simplex") {
    auto seg = fixtures::segment02();
    auto prism2d = product_with_simplex(seg, 1);
    CHECK(prism2d.dim() == 2);
    CHECK(prism2d.count() == 6);

    auto conic = fixtures::conic();
    auto q = product_with_simplex(conic, 1);
    CHECK(q.dim() == 3);
    CHECK(q.count() == 12);
    CHECK(q.saturated());
    // Vertex count of P x Delta_{n-1} is |V(P)| * n.
    CHECK(q.hull().faces_of_dim(0).size() == 6);
    CHECK_THROWS_AS(product_with_simplex(conic, 0), input_error);
}

TEST_CASE("product face volumes satisfy the binomial-weighted splitting") {
    using geom::binomial;
    using geom::factorial;
    auto conic = fixtures::conic();
    auto q = product_with_simplex(conic, 1); // n = 2, Q is 3-dimensional
    const int n = 2;
    for (int j = 0; j <= 2 * n - 1; ++j) {
        Rat expected = 0;
        for (int i = 0; i <= n; ++i) {
            int k = j - i;
            if (k < 0 || k > n - 1) continue;
            // vol(boundary^k of Delta_{n-1}) = C(n, n-k) / (n-k-1)!
            Rat simplex_part = Rat(binomial(n, n - k)) / Rat(factorial(n - k - 1));
            expected += conic.codim_volume(i) * simplex_part;
        }
        CHECK(q.codim_volume(j) == expected);
    }
}
