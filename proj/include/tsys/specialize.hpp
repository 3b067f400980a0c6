#ifndef TSYS_SPECIALIZE_HPP
#define TSYS_SPECIALIZE_HPP

#include <functional>
#include <string>

#include "tsys/laurent.hpp"
#include "tsys/surface.hpp"

namespace tsys {

// A choice of cluster coefficients: every c_{i,j} is sent to a Laurent
// monomial y_{i,j} in the scheme's own variables.
struct CoeffScheme {
    std::string name;
    std::function<Monomial(int, int)> map;
};

// Speyer's octahedron recurrence: y = BD/AC on even sites and the shifted
// AC/BD ratio on odd ones, with A,B,C,D indexed on the even sublattice.
CoeffScheme speyer_scheme();
// Generalized lambda-determinant: y = lam_i/mu_j resp. mu_j/lam_i.
CoeffScheme lambda_scheme();
// Higher pentagram map: c_{i,j} -> the p/q variable pi(i,j), indices mod n.
CoeffScheme pentagram_scheme(int n, int kappa);

// The pi assignment itself (pi(0,0) = p_n).
VarId pentagram_pi(int n, int kappa, int i, int j);

// Separation formula over the fundamental initial surface: substitute the
// scheme into T, divide by the tropical evaluation of the t=1 specialization.
LaurentPoly separation_eval(const LaurentPoly& T, const CoeffScheme& scheme);

// One pentagram variable after the k-th iterate, as an exact ratio.
struct PentagramValue {
    LaurentPoly num, den;
};

// q^(k)_ell for even k at a q-labeled site, and for odd k the reciprocal
// coefficient at a p-labeled site (the parity of the lattice forces this
// split). p^(k) = 1 / q^(k+1).
PentagramValue pentagram_q(int ell, int k, int n, int kappa);
PentagramValue pentagram_p(int ell, int k, int n, int kappa);

}  // namespace tsys

#endif
