#ifndef TSYS_SURFACE_HPP
#define TSYS_SURFACE_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tsys/error.hpp"
#include "tsys/laurent.hpp"

namespace tsys {

using Site = std::pair<int, int>;

struct Point3 {
    int i = 0, j = 0, k = 0;
    friend bool operator==(const Point3& a, const Point3& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k;
    }
};

// Height of the fundamental stepped surface: (i+j mod 2) - 1.
int fund_height(int i, int j);
// Height of the cone projected from p: k0 - |i-i0| - |j-j0|.
int proj_height(const Point3& p, int i, int j);

// A stepped surface stored as a finite override of fund. Heights must keep
// the odd-lattice parity and unit steps between lattice neighbors; both are
// validated eagerly on the override region and its boundary.
class SteppedSurface {
public:
    SteppedSurface() = default;
    explicit SteppedSurface(std::map<Site, int> overrides);

    static SteppedSurface fund() { return SteppedSurface(); }

    int height(int i, int j) const {
        auto it = overrides_.find({i, j});
        return it == overrides_.end() ? fund_height(i, j) : it->second;
    }
    const std::map<Site, int>& overrides() const { return overrides_; }
    bool is_fund() const { return overrides_.empty(); }

    friend bool operator==(const SteppedSurface& a, const SteppedSurface& b) {
        return a.overrides_ == b.overrides_;
    }

private:
    void validate() const;
    std::map<Site, int> overrides_;  // only heights differing from fund
};

struct Shadow {
    std::set<Site> interior;  // closed faces
    std::set<Site> boundary;  // open faces
    bool degenerate() const { return interior.empty(); }
};

// Pointwise minimum of a stepped surface and one or more projected cones.
// The cone dips below fund on an infinite region, so the adjusted surface is
// not a finite override of fund; it carries its apexes instead.
struct AdjustedSurface {
    SteppedSurface base;
    std::vector<Point3> apexes;

    int height(int i, int j) const {
        int h = base.height(i, j);
        for (const auto& p : apexes) h = std::min(h, proj_height(p, i, j));
        return h;
    }
};

AdjustedSurface adjusted_surface(const SteppedSurface& s, const Point3& p);
AdjustedSurface adjusted_surface(const AdjustedSurface& s, const Point3& p);

// Height at (i,j) moves by +-2 toward the far side of its four neighbors.
// Requires all four neighbors at equal height.
SteppedSurface mutate(const SteppedSurface& s, int i, int j);

// Closed faces |i-i0|+|j-j0| < k0-k(i,j) plus the ring of their lattice
// neighbors. Degenerates to boundary = {(i0,j0)} when the point lies on the
// surface. Throws PointBelowSurface when k0 < k(i0,j0).
Shadow shadow(const SteppedSurface& s, const Point3& p);

// k0 >= k(i0,j0) and k >= fund on the shadow (the relaxed scope condition).
bool in_scope(const SteppedSurface& s, const Point3& p);

// Coefficient monomials of the octahedron recurrence with principal
// coefficients. I is nontrivial only for k < 0, J only for k >= 0.
LaurentPoly coeff_I(int i, int j, int k);
LaurentPoly coeff_J(int i, int j, int k);

// The {i<->j, k<->-k-1} symmetry of the recurrence, embedded back into the
// odd lattice: point (i0,j0,k0) -> (j0, i0+1, -k0-1) and surface
// s'(i,j) = -s(j-1, i) - 1. fund is fixed; applying twice translates by
// (1,1,0). Variables relabel as t/c_{x,y} -> t/c_{y, x+1}.
std::pair<SteppedSurface, Point3> reflect(const SteppedSurface& s, const Point3& p);

// The variable relabeling matching reflect, applied to a polynomial.
LaurentPoly reflect_relabel(const LaurentPoly& p);

struct Instance {
    SteppedSurface surface;
    Point3 point;
};

// Validates the scope conditions, naming the failed one.
void require_in_scope(const SteppedSurface& s, const Point3& p);

}  // namespace tsys

#endif
