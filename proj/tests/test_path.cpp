#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "support.hpp"
#include "tsys/oracle.hpp"
#include "tsys/path.hpp"

using namespace tsys;

TEST_CASE("Phi and Psi are inverse bijections") {
    for (Point3 p : {Point3{0, 0, 1}, Point3{0, 0, 3}}) {
        OpenFaceGraph g = build_graph(SteppedSurface::fund(), p);
        auto ms = enumerate_matchings(g);
        std::set<PathFamily> images;
        for (const auto& m : ms) {
            PathFamily fam = phi(g, m);
            CHECK(psi(g, fam) == m);
            images.insert(fam);
            // membership flip on M0
            std::set<int> mset(m.begin(), m.end());
            std::set<int> fset(fam.begin(), fam.end());
            for (int e : m0(g)) CHECK(mset.count(e) != fset.count(e));
        }
        CHECK(images.size() == ms.size());
    }
}

TEST_CASE("PhiBar on the closure") {
    SteppedSurface r = tsys_tests::ridge_surface();
    OpenFaceGraph gbar = build_closure(r, {0, 0, 3});
    auto ms = enumerate_matchings(gbar);

    // PhiBar(Mbar) minus Phi(M) is the fixed boundary set Pbar0 of
    // white-black horizontal and black-white diagonal closure edges
    std::vector<int> pbar0;
    for (const auto& e : gbar.edges) {
        if (e.in_g || e.cls == EdgeClass::Vertical) continue;
        bool take = e.cls == EdgeClass::Horizontal ? e.white_black : !e.white_black;
        if (take) pbar0.push_back(e.id);
    }
    std::sort(pbar0.begin(), pbar0.end());

    std::set<PathFamily> images;
    for (const auto& m : ms) {
        Matching mbar = extend_matching(gbar, m);
        PathFamily fam = phi_bar(gbar, mbar);
        CHECK(psi_bar(gbar, fam) == mbar);
        images.insert(fam);
        std::set<int> mset(mbar.begin(), mbar.end());
        std::set<int> fset(fam.begin(), fam.end());
        for (int e : mbar0(gbar)) CHECK(mset.count(e) != fset.count(e));
        // the in-G part of the family is Phi of the plain matching, the rest
        // is exactly Pbar0
        PathFamily in_g_part, closure_part;
        for (int e : fam)
            (gbar.edges[e].in_g ? in_g_part : closure_part).push_back(e);
        CHECK(closure_part == pbar0);
    }
    CHECK(images.size() == ms.size());
}

TEST_CASE("path families have sources at leftmost south, no cycles") {
    SteppedSurface r = tsys_tests::ridge_surface();
    OpenFaceGraph gbar = build_closure(r, {0, 0, 3});
    for (const auto& fam : enumerate_paths(gbar)) {
        auto paths = family_paths(gbar, fam);
        size_t covered = 0;
        for (const auto& path : paths) {
            covered += path.size();
            // consecutive edges chain head-to-tail
            for (size_t i = 0; i + 1 < path.size(); ++i)
                CHECK(gbar.edges[path[i]].head == gbar.edges[path[i + 1]].tail);
        }
        CHECK(covered == fam.size());
    }
}

TEST_CASE("direct enumeration agrees with PhiBar images") {
    tsys_tests::Lcg rng(21);
    std::vector<Instance> suite = {
        {SteppedSurface::fund(), {0, 0, 1}},
        {SteppedSurface::fund(), {0, 0, 3}},
        {tsys_tests::ridge_surface(), {0, 0, 3}},
        {tsys_tests::random_mutated(rng, {0, 0, 3}, 2), {0, 0, 3}},
    };
    for (const auto& inst : suite) {
        OpenFaceGraph gbar = build_closure(inst.surface, inst.point);
        auto via_phi = enumerate_paths(gbar);
        auto via_dfs = enumerate_paths_dfs(gbar, false);
        CHECK(via_phi == via_dfs);
        CHECK(via_phi.size() == enumerate_matchings(gbar).size());
    }
}

TEST_CASE("per-matching weight identity w_e(Mbar) = w_e'(PhiBar(Mbar)) w_e(Mbar0)") {
    SteppedSurface r = tsys_tests::ridge_surface();
    for (Point3 p : {Point3{0, 0, 3}, Point3{0, 0, 1}}) {
        OpenFaceGraph gbar = build_closure(r, p);
        LaurentPoly we_m0 = edge_weight_set(gbar, mbar0(gbar));
        for (const auto& m : enumerate_matchings(gbar)) {
            Matching mbar = extend_matching(gbar, m);
            LaurentPoly lhs = edge_weight_set(gbar, mbar);
            LaurentPoly rhs = modified_weight_set(gbar, phi_bar(gbar, mbar)) * we_m0;
            CHECK(normalize_tails(lhs) == normalize_tails(rhs));
        }
    }
}

TEST_CASE("solve_path agrees with the other solvers") {
    SteppedSurface f = SteppedSurface::fund();
    CHECK(solve_path({f, {0, 0, 1}}) == solve_oracle({f, {0, 0, 1}}));
    CHECK(solve_path({f, {0, 0, 3}}) == solve_oracle({f, {0, 0, 3}}));
    SteppedSurface r = tsys_tests::ridge_surface();
    CHECK(solve_path({r, {0, 0, 3}}) == solve_oracle({r, {0, 0, 3}}));
    CHECK(solve_path({f, {0, 0, -1}}) == LaurentPoly::var(tvar(0, 0)));
}
