#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tsys/surface.hpp"

using namespace tsys;

TEST_CASE("fund heights") {
    CHECK(fund_height(0, 0) == -1);
    CHECK(fund_height(1, 0) == 0);
    CHECK(fund_height(-3, 2) == 0);
}

TEST_CASE("projected heights") {
    CHECK(proj_height({0, 0, 3}, 1, 1) == 1);
    CHECK(proj_height({0, 0, 3}, 0, 0) == 3);
    CHECK(proj_height({2, -1, 4}, 2, -1) == 4);
}

TEST_CASE("surface validation") {
    CHECK_THROWS_AS(SteppedSurface({{{0, 0}, 0}}), Error);     // parity
    CHECK_THROWS_AS(SteppedSurface({{{0, 0}, 3}}), Error);     // adjacency to fund
    SteppedSurface ok({{{0, 0}, 1}});
    CHECK(ok.height(0, 0) == 1);
    CHECK(ok.height(1, 0) == 0);
    // overrides equal to fund are dropped
    SteppedSurface same({{{2, 2}, -1}});
    CHECK(same.is_fund());
}

TEST_CASE("adjusted surface") {
    SteppedSurface f = SteppedSurface::fund();
    Point3 p{0, 0, 3};
    AdjustedSurface a = adjusted_surface(f, p);
    for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6; ++j)
            CHECK(a.height(i, j) == std::min(f.height(i, j), proj_height(p, i, j)));
    // gluing: near the apex the cone wins, far away fund does
    CHECK(a.height(0, 4) == -1);
    CHECK(a.height(0, 5) == -2);
    // a point on the surface leaves heights near the center unchanged
    AdjustedSurface b = adjusted_surface(f, {0, 0, -1});
    CHECK(b.height(0, 0) == -1);
    // idempotent
    AdjustedSurface c = adjusted_surface(a, p);
    for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6; ++j) CHECK(c.height(i, j) == a.height(i, j));
}

TEST_CASE("mutation") {
    SteppedSurface f = SteppedSurface::fund();
    SteppedSurface up = mutate(f, 0, 0);
    CHECK(up.height(0, 0) == 1);
    CHECK(mutate(up, 0, 0) == f);
    SteppedSurface down = mutate(f, 1, 0);
    CHECK(down.height(1, 0) == -2);
    SteppedSurface ridge({{{0, 0}, 1}});
    CHECK_THROWS_AS(mutate(ridge, 1, 0), Error);  // neighbors differ
}

TEST_CASE("shadow") {
    SteppedSurface f = SteppedSurface::fund();
    Shadow s = shadow(f, {0, 0, 3});
    CHECK(s.interior.size() == 13);
    CHECK(s.boundary.size() == 12);
    for (const auto& [i, j] : s.boundary) CHECK(std::abs(i) + std::abs(j) == 3);

    Shadow on = shadow(f, {0, 0, -1});
    CHECK(on.degenerate());
    CHECK(on.boundary == std::set<Site>{{0, 0}});

    Shadow tiny = shadow(f, {0, 0, 1});
    CHECK(tiny.interior == std::set<Site>{{0, 0}});
    CHECK(tiny.boundary == std::set<Site>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});

    CHECK_THROWS_AS(shadow(f, {0, 0, -3}), Error);
    // points off the odd lattice are rejected up front
    CHECK_THROWS_AS(shadow(f, {0, 0, 2}), Error);
    CHECK_THROWS_AS(in_scope(f, {1, 0, 1}), Error);
}

TEST_CASE("scope") {
    SteppedSurface f = SteppedSurface::fund();
    CHECK(in_scope(f, {0, 0, 3}));
    CHECK_FALSE(in_scope(f, {0, 0, -3}));
    // a dip below fund inside the shadow leaves scope
    SteppedSurface dip = mutate(f, 1, 0);
    CHECK_FALSE(in_scope(dip, {0, 0, 3}));
    // ... but is fine when the shadow misses it
    CHECK(in_scope(dip, {8, 0, 1}));
}

TEST_CASE("I and J coefficient monomials") {
    CHECK(render(coeff_J(0, 0, 5)) ==
          "c[0,-5]*c[0,-4]*c[0,-3]*c[0,-2]*c[0,-1]*c[0,0]*c[0,1]*c[0,2]*c[0,3]*c[0,4]*c[0,5]");
    CHECK(render(coeff_I(0, 0, -5)) ==
          "c[-4,0]*c[-3,0]*c[-2,0]*c[-1,0]*c[0,0]*c[1,0]*c[2,0]*c[3,0]*c[4,0]");
    CHECK(coeff_I(3, 7, 2) == LaurentPoly::one());
    CHECK(coeff_J(3, 7, -2) == LaurentPoly::one());
    for (int k = -4; k <= 4; ++k) {
        LaurentPoly m = k < 0 ? coeff_I(1, 2, k) : coeff_J(1, 2, k);
        CHECK(m.is_monomial());
        for (const auto& [v, e] : m.leading().exps) CHECK(e == 1);
    }
}

TEST_CASE("reflection") {
    SteppedSurface f = SteppedSurface::fund();
    auto [rf, rp] = reflect(f, {0, 0, -3});
    CHECK(rf == f);  // fund is fixed
    CHECK(rp == Point3{0, 1, 2});
    CHECK(in_scope(rf, rp));

    // reflecting twice is the unit translation (1,1,0)
    auto [rrf, rrp] = reflect(rf, rp);
    CHECK(rrp == Point3{1, 1, -3 + 0});
    CHECK(rrp.i == 1);
    CHECK(rrp.j == 1);
    CHECK(rrp.k == -3);
    CHECK(rrf == f);

    // a non-fund surface keeps validity and height law s'(i,j) = -s(j-1,i)-1
    SteppedSurface s({{{0, 0}, 1}});
    auto [rs, rq] = reflect(s, {0, 0, 3});
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) CHECK(rs.height(i, j) == -s.height(j - 1, i) - 1);
    (void)rq;
}
