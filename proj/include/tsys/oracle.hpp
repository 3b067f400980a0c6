#ifndef TSYS_ORACLE_HPP
#define TSYS_ORACLE_HPP

#include <map>
#include <tuple>

#include "tsys/laurent.hpp"
#include "tsys/surface.hpp"

namespace tsys {

// Memoized evaluation of the octahedron recurrence with principal
// coefficients down to the initial data on the surface. Each solve owns its
// memo table; distinct solves may run concurrently.
class OracleSolver {
public:
    explicit OracleSolver(SteppedSurface s) : surface_(std::move(s)) {}

    const LaurentPoly& value(int i, int j, int k);
    const std::map<std::tuple<int, int, int>, LaurentPoly>& memo() const { return memo_; }
    const SteppedSurface& surface() const { return surface_; }

private:
    SteppedSurface surface_;
    std::map<std::tuple<int, int, int>, LaurentPoly> memo_;
};

LaurentPoly solve_oracle(const Instance& inst);

// The coefficient y_{(i,j)} at a surface vertex, a Laurent monomial in the
// c variables. `second_branch` evaluates the equivalent upper form; the two
// agree on every valid local height pattern.
LaurentPoly coefficient_at_vertex(const SteppedSurface& s, int i, int j,
                                  bool second_branch = false);

}  // namespace tsys

#endif
