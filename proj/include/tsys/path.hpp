#ifndef TSYS_PATH_HPP
#define TSYS_PATH_HPP

#include <vector>

#include "tsys/graph.hpp"
#include "tsys/laurent.hpp"
#include "tsys/matching.hpp"

namespace tsys {

// A non-intersecting path family: a sorted set of oriented edge ids forming
// vertex-disjoint directed paths from the leftmost vertices of the south
// rows to the rightmost ones.
using PathFamily = std::vector<int>;

// M0 of the open-face graph: white-black horizontal and diagonal edges of G.
Matching m0(const OpenFaceGraph& g);

// Phi(M) = M symmetric-difference M0; Psi is its inverse. Both validate
// their output shape.
PathFamily phi(const OpenFaceGraph& g, const Matching& m);
Matching psi(const OpenFaceGraph& g, const PathFamily& p);

// PhiBar(Mbar) = Mbar symmetric-difference Mbar0 on the closure.
PathFamily phi_bar(const OpenFaceGraph& gbar, const Matching& mbar);
Matching psi_bar(const OpenFaceGraph& gbar, const PathFamily& p);

// Checks the family shape: sources/sinks saturated, interior degrees 1/1,
// no shared vertices, no cycles. use_g restricts to the in-G subgraph.
void validate_family(const OpenFaceGraph& g, const PathFamily& p, bool use_g);

// Decomposes into directed paths, each a list of edge ids source-to-sink.
std::vector<std::vector<int>> family_paths(const OpenFaceGraph& g, const PathFamily& p);

// All families on the closure, via PhiBar over the matchings of G.
std::vector<PathFamily> enumerate_paths(const OpenFaceGraph& gbar);
// Independent direct enumeration by depth-first search (test oracle).
std::vector<PathFamily> enumerate_paths_dfs(const OpenFaceGraph& g, bool use_g);

// Modified edge weight: the edge weight, inverted on Mbar0 members.
LaurentPoly modified_edge_weight(const OpenFaceGraph& gbar, const EdgeRec& e);
LaurentPoly modified_weight_set(const OpenFaceGraph& gbar, const PathFamily& p);

// The product of pbar over all N-type horizontal edges of the closure.
LaurentPoly path_denominator(const OpenFaceGraph& gbar);

// T as the path partition function on the closure.
LaurentPoly solve_path(const Instance& inst);

}  // namespace tsys

#endif
