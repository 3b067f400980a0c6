#include "tsys/surface.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace tsys {

int fund_height(int i, int j) {
    int m = (i + j) % 2;
    if (m < 0) m += 2;
    return m - 1;
}

int proj_height(const Point3& p, int i, int j) {
    return p.k - std::abs(i - p.i) - std::abs(j - p.j);
}

namespace {
std::string site_str(int i, int j) {
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    return os.str();
}
}  // namespace

SteppedSurface::SteppedSurface(std::map<Site, int> overrides) {
    for (auto it = overrides.begin(); it != overrides.end();) {
        if (it->second == fund_height(it->first.first, it->first.second))
            it = overrides.erase(it);
        else
            ++it;
    }
    overrides_ = std::move(overrides);
    validate();
}

void SteppedSurface::validate() const {
    for (const auto& [site, k] : overrides_) {
        auto [i, j] = site;
        int want = 1 - i - j;
        if (((k - want) % 2 + 2) % 2 != 0)
            throw Error(Errc::BadInput, "height parity violated at " + site_str(i, j));
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            int nk = height(i + di[d], j + dj[d]);
            if (std::abs(nk - k) != 1)
                throw Error(Errc::BadInput,
                            "adjacency violated between " + site_str(i, j) + " and " +
                                site_str(i + di[d], j + dj[d]));
        }
    }
}

AdjustedSurface adjusted_surface(const SteppedSurface& s, const Point3& p) {
    return {s, {p}};
}

AdjustedSurface adjusted_surface(const AdjustedSurface& s, const Point3& p) {
    AdjustedSurface r = s;
    r.apexes.push_back(p);
    return r;
}

SteppedSurface mutate(const SteppedSurface& s, int i, int j) {
    int k = s.height(i, j);
    int up = s.height(i, j + 1), down = s.height(i, j - 1);
    int left = s.height(i - 1, j), right = s.height(i + 1, j);
    if (up != down || up != left || up != right)
        throw Error(Errc::NotMutable, "neighbors of " + site_str(i, j) + " differ in height");
    std::map<Site, int> o = s.overrides();
    o[{i, j}] = (up == k + 1) ? k + 2 : k - 2;
    return SteppedSurface(std::move(o));
}

static void require_odd_lattice(const Point3& p) {
    if ((((p.i + p.j + p.k) % 2) + 2) % 2 != 1) {
        std::ostringstream os;
        os << "point (" << p.i << "," << p.j << "," << p.k
           << ") is not on the odd lattice (i+j+k must be odd)";
        throw Error(Errc::BadInput, os.str());
    }
}

Shadow shadow(const SteppedSurface& s, const Point3& p) {
    require_odd_lattice(p);
    if (p.k < s.height(p.i, p.j))
        throw Error(Errc::PointBelowSurface,
                    "k0 < k(i0,j0) at " + site_str(p.i, p.j));
    Shadow sh;
    if (p.k == s.height(p.i, p.j)) {
        sh.boundary.insert({p.i, p.j});
        return sh;
    }
    // interior is contained in the diamond where the cone is above fund - 1
    std::deque<Site> queue{{p.i, p.j}};
    std::set<Site> seen{{p.i, p.j}};
    auto inside = [&](int i, int j) {
        return std::abs(i - p.i) + std::abs(j - p.j) < p.k - s.height(i, j);
    };
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        if (!inside(i, j)) continue;
        sh.interior.insert({i, j});
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            Site n{i + di[d], j + dj[d]};
            if (seen.insert(n).second) queue.push_back(n);
        }
    }
    for (const auto& [i, j] : sh.interior) {
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            Site n{i + di[d], j + dj[d]};
            if (!sh.interior.count(n)) sh.boundary.insert(n);
        }
    }
    return sh;
}

bool in_scope(const SteppedSurface& s, const Point3& p) {
    require_odd_lattice(p);
    if (p.k < s.height(p.i, p.j)) return false;
    Shadow sh = shadow(s, p);
    auto ok = [&](const std::set<Site>& faces) {
        for (const auto& [i, j] : faces)
            if (s.height(i, j) < fund_height(i, j)) return false;
        return true;
    };
    return ok(sh.interior) && ok(sh.boundary);
}

void require_in_scope(const SteppedSurface& s, const Point3& p) {
    require_odd_lattice(p);
    if (p.k < s.height(p.i, p.j))
        throw Error(Errc::ScopeViolation, "k_0 >= k(i_0,j_0) fails");
    Shadow sh = shadow(s, p);
    auto check = [&](const std::set<Site>& faces) {
        for (const auto& [i, j] : faces)
            if (s.height(i, j) < fund_height(i, j))
                throw Error(Errc::ScopeViolation,
                            "k(i,j) >= fund(i,j) fails on the shadow at " + site_str(i, j));
    };
    check(sh.interior);
    check(sh.boundary);
}

LaurentPoly coeff_I(int i, int j, int k) {
    if (k >= 0) return LaurentPoly::one();
    Monomial m = Monomial::one();
    for (int a = k + 1; a <= -(k + 1); ++a) m = m * Monomial::var(cvar(i + a, j));
    return LaurentPoly(m);
}

LaurentPoly coeff_J(int i, int j, int k) {
    if (k < 0) return LaurentPoly::one();
    Monomial m = Monomial::one();
    for (int a = -k; a <= k; ++a) m = m * Monomial::var(cvar(i, j + a));
    return LaurentPoly(m);
}

std::pair<SteppedSurface, Point3> reflect(const SteppedSurface& s, const Point3& p) {
    Point3 q{p.j, p.i + 1, -p.k - 1};
    // s'(i,j) = -s(j-1, i) - 1: overrides land at the transposed-and-shifted
    // sites of s's overrides (fund maps to fund).
    std::map<Site, int> o;
    for (const auto& [site, k] : s.overrides()) o[{site.second, site.first + 1}] = -k - 1;
    return {SteppedSurface(std::move(o)), q};
}

LaurentPoly reflect_relabel(const LaurentPoly& p) {
    std::map<ExpVec, BigInt> m;
    for (const auto& t : p.terms()) {
        ExpVec e;
        for (const auto& [v, x] : t.exps) {
            if (v.kind == VarKind::T || v.kind == VarKind::Coef)
                e.push_back({{v.kind, v.b, v.a + 1}, x});
            else
                e.push_back({v, x});
        }
        std::sort(e.begin(), e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        m[e] += t.coeff;
    }
    return LaurentPoly::from_map(std::move(m));
}

}  // namespace tsys
