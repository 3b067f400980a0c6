#ifndef TSYS_MATCHING_HPP
#define TSYS_MATCHING_HPP

#include <vector>

#include "tsys/graph.hpp"
#include "tsys/laurent.hpp"

namespace tsys {

// A matching is a sorted set of edge ids of the graph it was produced on.
using Matching = std::vector<int>;

struct AllowedPair {
    Site s_face;  // S(i, j1): black-white edge below face (i, j1)
    Site n_face;  // N(i, j2): white-black edge below... named by the face under it
    int s_edge = -1, n_edge = -1;
};
using PairingSet = std::vector<AllowedPair>;

// All perfect matchings of the in-G part, in lexicographic order on the
// sorted edge-id sets. The empty graph yields the single empty matching.
std::vector<Matching> enumerate_matchings(const OpenFaceGraph& g);

// Product over all closed and open faces of t^(ceil((b-a)/2) - 1) resp.
// t^ceil((b-a)/2), a/b = matched/unmatched sides. On a closure every face
// uses the closed-face exponent.
LaurentPoly face_weight(const OpenFaceGraph& g, const Matching& m);

// Per column, bottom-to-top stack pairing of matched horizontal edges.
PairingSet perfect_pairing(const OpenFaceGraph& g, const Matching& m);

// Product over pairs of the c-interval from j1-k(i,j1)-1 to j2+k(i,j2)+1.
LaurentPoly pairing_weight(const SteppedSurface& s, const PairingSet& pairs);

// The matching extended by all diagonal closure edges.
Matching extend_matching(const OpenFaceGraph& gbar, const Matching& m);
// All white-black horizontal and white-black diagonal edges of the closure.
Matching mbar0(const OpenFaceGraph& gbar);

// Edge weight on the closure: inverse t of the bounding faces, times the
// tail p_a on an S-edge under a closed face a, divided by the tail pbar_b on
// an N-edge over a closed face b.
LaurentPoly edge_weight(const OpenFaceGraph& gbar, const EdgeRec& e);
LaurentPoly edge_weight_set(const OpenFaceGraph& gbar, const Matching& edges);

// Tail of the S-side of face (i,j): tau_{i, j-k-1}; of the N-side:
// tau_{i, j+k+2}.
Monomial tail_p(const OpenFaceGraph& gbar, const Site& face);
Monomial tail_pbar(const OpenFaceGraph& gbar, const Site& face);

// T as the sum of w_p * w_f over all perfect matchings of G.
LaurentPoly solve_matching(const Instance& inst);
// T as the sum of w_e(Mbar) over matchings, divided by w_e(Mbar0) at c=1.
LaurentPoly solve_edge(const Instance& inst);

}  // namespace tsys

#endif
