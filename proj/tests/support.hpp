#ifndef TSYS_TESTS_SUPPORT_HPP
#define TSYS_TESTS_SUPPORT_HPP

#include <cstdlib>
#include <map>
#include <vector>

#include "tsys/surface.hpp"

namespace tsys_tests {

// The ridge surface |i+j|-1 glued into fund (finite overrides); near the
// origin it equals |i+j|-1 on every face any k0 <= 9 construction can see.
inline tsys::SteppedSurface ridge_surface() {
    std::map<tsys::Site, int> o;
    for (int i = -16; i <= 16; ++i)
        for (int j = -16; j <= 16; ++j) {
            int h = std::max(tsys::fund_height(i, j),
                             std::min(std::abs(i + j) - 1, 13 - std::abs(i) - std::abs(j)));
            if (h != tsys::fund_height(i, j)) o[{i, j}] = h;
        }
    return tsys::SteppedSurface(std::move(o));
}

struct Lcg {
    uint64_t s;
    explicit Lcg(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

// fund raised by `count` random valid upward mutations strictly inside the
// shadow of p, keeping the instance in scope.
inline tsys::SteppedSurface random_mutated(Lcg& rng, const tsys::Point3& p, int count) {
    tsys::SteppedSurface s = tsys::SteppedSurface::fund();
    int attempts = 0;
    for (int done = 0; done < count && attempts < 100; ++attempts) {
        tsys::Shadow sh = tsys::shadow(s, p);
        std::vector<tsys::Site> candidates;
        for (const auto& site : sh.interior) {
            auto [i, j] = site;
            int k = s.height(i, j);
            int up = s.height(i, j + 1), dn = s.height(i, j - 1);
            int le = s.height(i - 1, j), ri = s.height(i + 1, j);
            if (up == dn && up == le && up == ri && up == k + 1)
                candidates.push_back(site);
        }
        if (candidates.empty()) break;
        auto [i, j] = candidates[rng.range(0, static_cast<int>(candidates.size()) - 1)];
        tsys::SteppedSurface next = tsys::mutate(s, i, j);
        if (!tsys::in_scope(next, p)) continue;
        s = next;
        ++done;
    }
    return s;
}

}  // namespace tsys_tests

#endif
