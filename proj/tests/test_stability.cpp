#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "stab/stability.hpp"

using namespace toric;
using namespace toric::stab;
using geom::Rat;
using geom::rat;
using geom::RatVec;

namespace {

RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(rat(x));
    return v;
}

} // namespace

TEST_CASE("degrees") {
    auto conic = fixtures::conic();
    auto d = compute_degrees(conic);
    CHECK(d.chow == rat(12));
    CHECK(d.hurwitz == rat(12));
    CHECK(d.discriminant == rat(3));

    auto seg = fixtures::segment02();
    auto ds = compute_degrees(seg);
    CHECK(ds.chow == rat(4));
    CHECK(ds.hurwitz == rat(2));
    CHECK(ds.discriminant == rat(2));

    auto tri = fixtures::unit_triangle();
    CHECK(compute_degrees(tri).hurwitz == rat(0)); // degenerate case
}

TEST_CASE("weight polytopes of the segment") {
    auto seg = fixtures::segment02();
    StabilityContext ctx(seg);
    REQUIRE(ctx.triangulations().size() == 2);
    CHECK(ctx.regular_count() == 2);

    auto chow = ctx.polytope(PolytopeKind::chow);
    CHECK(chow.distinct == std::vector<RatVec>{rv({1, 2, 1}), rv({2, 0, 2})});
    CHECK(chow.vertex_ids.size() == 2);
    CHECK(chow.affine_dim == 1); // N - n = 2 - 1

    auto hu = ctx.polytope(PolytopeKind::hurwitz);
    CHECK(hu.distinct == std::vector<RatVec>{rv({0, 2, 0}), rv({1, 0, 1})});
    CHECK(hu.vertex_ids.size() == 2);
}

TEST_CASE("discriminant polytope of the conic") {
    auto conic = fixtures::conic();
    StabilityContext ctx(conic);
    CHECK(ctx.triangulations().size() == 14);
    CHECK(ctx.regular_count() == 14);
    CHECK(ctx.d_class_count() == 5);

    auto disc = ctx.polytope(PolytopeKind::discriminant);
    REQUIRE(disc.distinct.size() == 5);
    CHECK(disc.vertex_ids.size() == 5); // all five are extreme
    std::set<RatVec> got(disc.distinct.begin(), disc.distinct.end());
    std::set<RatVec> expected = {rv({1, 0, 0, 0, 2, 0}), rv({0, 2, 0, 0, 0, 1}),
                                 rv({0, 0, 1, 2, 0, 0}), rv({0, 1, 0, 1, 1, 0}),
                                 rv({1, 0, 1, 0, 0, 1})};
    CHECK(got == expected);

    auto chow = ctx.polytope(PolytopeKind::chow);
    CHECK(chow.affine_dim == 3); // N - n = 5 - 2
    CHECK(chow.vertex_ids.size() == 14);
}

TEST_CASE("numerical semistability of the segment") {
    auto seg = fixtures::segment02();
    StabilityContext ctx(seg);
    auto r = check_numerical_ss(ctx);
    REQUIRE(r.status == VerdictStatus::pass);
    REQUIRE(r.certificates.size() == 2);
    // 2*(1,2,1) is the midpoint of 4*(0,2,0) and 4*(1,0,1).
    CHECK(r.certificates[0].point == rv({2, 4, 2}));
    CHECK(r.certificates[0].coefficients == RatVec{rat(1, 2), rat(1, 2)});
    CHECK(r.certificates[1].point == rv({4, 0, 4}));
}

TEST_CASE("numerical semistability of the conic and the symmetric square") {
    StabilityContext conic(fixtures::conic());
    CHECK(check_numerical_ss(conic).status == VerdictStatus::pass);

    StabilityContext square(fixtures::unit_square());
    CHECK(check_numerical_ss(square).status == VerdictStatus::pass);

    StabilityContext sym(fixtures::symmetric_square());
    CHECK(check_numerical_ss(sym).status == VerdictStatus::pass);
}

TEST_CASE("numerical semistability is skipped for degenerate Hurwitz degree") {
    StabilityContext ctx(fixtures::unit_triangle());
    auto r = check_numerical_ss(ctx);
    CHECK(r.status == VerdictStatus::skipped);
    CHECK(!r.reason.empty());
}

TEST_CASE("chow semistability") {
    auto seg = fixtures::segment02();
    StabilityContext ctx(seg);
    auto r = check_chow_ss(ctx);
    REQUIRE(r.status == VerdictStatus::pass);
    CHECK(r.constant == rat(4, 3));
    CHECK(r.coefficients == RatVec{rat(2, 3), rat(1, 3)});

    StabilityContext conic(fixtures::conic());
    auto rc = check_chow_ss(conic);
    REQUIRE(rc.status == VerdictStatus::pass);
    CHECK(rc.constant == rat(2));

    StabilityContext tri(fixtures::unit_triangle());
    auto rt = check_chow_ss(tri);
    REQUIRE(rt.status == VerdictStatus::pass);
    CHECK(rt.constant == rat(1)); // Ch is the single point (1,1,1)
}

TEST_CASE("barycenter condition") {
    CHECK(check_barycenter_condition(fixtures::conic()).status == VerdictStatus::pass);
    CHECK(check_barycenter_condition(fixtures::segment02()).status == VerdictStatus::pass);
    CHECK(check_barycenter_condition(fixtures::symmetric_square()).status ==
          VerdictStatus::pass);

    // A right triangle with a long leg is lopsided: the condition fails and
    // the returned linear height destabilizes.
    auto lopsided = points::PointConfiguration::load(
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}}, "strip");
    auto r = check_barycenter_condition(lopsided);
    if (r.status == VerdictStatus::fail) {
        CHECK(sgn(r.futaki_paul_value) < 0);
        StabilityContext ctx(lopsided);
        auto fp = futaki_paul(ctx, r.destabilizing_heights);
        CHECK(fp.value == r.futaki_paul_value);
    }
}

TEST_CASE("futaki-paul values on the segment") {
    auto seg = fixtures::segment02();
    StabilityContext ctx(seg);
    SUBCASE("tent") {
        auto fp = futaki_paul(ctx, {rat(0), rat(1), rat(0)});
        CHECK(fp.integral_p == rat(1));
        CHECK(fp.integral_dp == rat(0));
        CHECK(fp.value == rat(2));
        CHECK(fp.raw_weight_form == rat(-4)); // -(n+1)! n! F = -2*1*2
    }
    SUBCASE("affine heights vanish") {
        // phi = restriction of 3x + 5.
        auto fp = futaki_paul(ctx, {rat(5), rat(8), rat(11)});
        CHECK(fp.value == rat(0));
    }
    SUBCASE("constants vanish") {
        auto fp = futaki_paul(ctx, {rat(7), rat(7), rat(7)});
        CHECK(fp.value == rat(0));
    }
}

TEST_CASE("futaki-paul on the conic height at the diagonal midpoint") {
    // phi spikes at a_4 = (1,1), which lies on the boundary edge; the roof is
    // two cells and F = 6*(2/3) - 2*1 = 2.
    StabilityContext ctx(fixtures::conic());
    auto fp = futaki_paul(ctx, rv({0, 0, 0, 0, 1, 0}));
    CHECK(fp.integral_p == rat(2, 3));
    CHECK(fp.integral_dp == rat(1));
    CHECK(fp.value == rat(2));
}

TEST_CASE("k-check sweep over regular witnesses reproduces the verdict") {
    for (const auto& pc : {fixtures::segment02(), fixtures::conic()}) {
        StabilityContext ctx(pc);
        auto verdict = check_numerical_ss(ctx);
        std::vector<RatVec> sweep;
        for (const auto& t : ctx.triangulations())
            if (t.regularity == tri::Regularity::regular) sweep.push_back(t.witness);
        bool all_nonneg = true;
        for (const auto& fp : check_k_ss_functions(ctx, sweep))
            if (sgn(fp.value) < 0) all_nonneg = false;
        CHECK((verdict.status == VerdictStatus::pass) == all_nonneg);
    }
}

TEST_CASE("product degree identity") {
    auto seg = fixtures::segment02();
    auto r1 = verify_product_degree(seg);
    CHECK(r1.ok);
    CHECK(r1.face_sum == rat(2));

    auto conic = fixtures::conic();
    auto r2 = verify_product_degree(conic);
    CHECK(r2.ok);
    CHECK(r2.face_sum == rat(12));

    auto square = fixtures::unit_square();
    auto r3 = verify_product_degree(square);
    CHECK(r3.ok);
    CHECK(r3.face_sum == rat(4));
}

TEST_CASE("binomial identity from the degree computation") {
    using geom::binomial;
    using geom::Int;
    for (long m = 0; m <= 8; ++m) {
        for (long n = 0; n <= m; ++n) {
            Int sum = 0;
            for (long k = 1; k <= n; ++k) {
                Int term = binomial(n, k) * binomial(m + k, m + 1);
                sum += ((n - k) % 2 == 0) ? term : -term;
            }
            CHECK(sum == binomial(m, n - 1));
        }
    }
}

TEST_CASE("max pairing law on the Hurwitz polytope") {
    std::mt19937_64 rng(99);
    for (const auto& pc : {fixtures::conic(), fixtures::segment02()}) {
        StabilityContext ctx(pc);
        const int n = pc.dim();
        std::uniform_int_distribution<int> num(-8, 8);
        std::uniform_int_distribution<int> den(1, 4);
        for (int trial = 0; trial < 8; ++trial) {
            RatVec h(pc.count());
            for (auto& v : h) v = rat(num(rng), den(rng));
            Rat best;
            bool first = true;
            for (const auto& xi : ctx.xi()) {
                Rat p = geom::dot(h, xi);
                if (first || p > best) best = p;
                first = false;
            }
            auto conc = tri::concavify(pc, h);
            Rat ip = weights::integrate_pl(pc, conc.triangulation, h, 0);
            Rat ib = weights::integrate_pl(pc, conc.triangulation, h, 1);
            CHECK(best == Rat(n) * Rat(geom::factorial(n + 1)) * ip -
                              Rat(geom::factorial(n)) * ib);
        }
    }
}

TEST_CASE("verdicts require condition (*)") {
    auto gappy = points::PointConfiguration::load({{0}, {2}});
    StabilityContext ctx(gappy);
    CHECK_THROWS_AS(check_numerical_ss(ctx), input_error);
    CHECK_THROWS_AS(check_chow_ss(ctx), input_error);
}
