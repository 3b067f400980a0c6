#ifndef TSYS_IO_HPP
#define TSYS_IO_HPP

#include <string>

#include "tsys/graph.hpp"
#include "tsys/matching.hpp"
#include "tsys/network.hpp"
#include "tsys/path.hpp"
#include "tsys/surface.hpp"

namespace tsys {

// {"base":"fund","overrides":[[i,j,k],...]}; rejects parity or adjacency
// violations naming the offending site.
SteppedSurface surface_from_json(const std::string& text);
std::string surface_to_json(const SteppedSurface& s);

// Graphviz export; deterministic ordering. `family` highlights path edges.
std::string dot_graph(const OpenFaceGraph& g, const PathFamily* family = nullptr);

// Edge-id lists plus the three weights per matching, canonical text.
std::string dump_matchings(const OpenFaceGraph& g, const SteppedSurface& s);

// Ordered chip list with variants, anchors and labels, each elementary
// matrix, and the full network matrix.
std::string dump_network(const OpenFaceGraph& gbar, const SteppedSurface& s);

std::string matrix_to_text(const NetworkMatrix& m);

// Term list mirroring the canonical text one-to-one.
std::string poly_to_json(const LaurentPoly& p);

}  // namespace tsys

#endif
