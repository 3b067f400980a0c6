#ifndef TSYS_GRAPH_HPP
#define TSYS_GRAPH_HPP

#include <array>
#include <map>
#include <set>
#include <vector>

#include "tsys/surface.hpp"

namespace tsys {

// A vertex of the bipartite graph is a face of the quiver: either a whole
// unit square or one of the two triangles a diagonal arrow cuts it into.
enum class Part : uint8_t { Whole, UL, LR, LL, UR };

struct FaceKey {
    int sqx = 0, sqy = 0;  // square with corners (sqx..sqx+1, sqy..sqy+1)
    Part part = Part::Whole;
    friend bool operator==(const FaceKey& a, const FaceKey& b) {
        return a.sqx == b.sqx && a.sqy == b.sqy && a.part == b.part;
    }
    friend bool operator<(const FaceKey& a, const FaceKey& b) {
        if (a.sqx != b.sqx) return a.sqx < b.sqx;
        if (a.sqy != b.sqy) return a.sqy < b.sqy;
        return a.part < b.part;
    }
};

struct Vertex {
    int id = -1;
    FaceKey key;
    bool black = false;
    int qx = 0, qy = 0;  // quarter-integer plane position
    int row = 0;
    bool in_g = false;  // belongs to the open-face graph G (not only Gbar)
};

enum class EdgeClass : uint8_t { Horizontal, Vertical, Diagonal };

struct EdgeRec {
    int id = -1;
    int tail = -1, head = -1;  // orientation: left-to-right, vertical black-to-white
    EdgeClass cls = EdgeClass::Horizontal;
    bool white_black = false;  // reading left to right (N-type when horizontal)
    Site hface{0, 0};          // horizontal only: the face naming N(i,j)/S(i,j)
    std::array<Site, 2> sides{};  // the two quiver-vertex faces it bounds
    bool in_g = false;
};

// The finite bipartite graph with open faces G and its closure Gbar, built
// over the adjusted surface and stored as one object: G is the in_g-flagged
// subgraph generated by the closed faces.
struct OpenFaceGraph {
    Site center{0, 0};
    std::set<Site> closed_faces;  // F ring (interior)
    std::set<Site> open_faces;    // boundary ring
    std::map<Site, int> face_heights;  // heights on closed+open faces
    std::vector<Vertex> vertices;
    std::vector<EdgeRec> edges;
    std::map<Site, std::vector<int>> face_sides;  // face -> bounding edge ids
    std::vector<std::vector<int>> vertex_edges;   // vertex id -> edge ids
    int rmin = 0, rmax = 0;
    bool closure = false;

    bool face_known(const Site& f) const {
        return closed_faces.count(f) || open_faces.count(f);
    }
    bool face_closed(const Site& f) const { return closed_faces.count(f) != 0; }
    int face_height(const Site& f) const { return face_heights.at(f); }

    // Side edges of a face restricted to E(G).
    std::vector<int> face_sides_in_g(const Site& f) const;
};

// The graph with open faces generated by the shadow interior. Throws
// DegenerateShadow when the point lies on the surface.
OpenFaceGraph build_graph(const SteppedSurface& s, const Point3& p);
// The closure: same construction generated by interior + boundary faces.
OpenFaceGraph build_closure(const SteppedSurface& s, const Point3& p);

struct BoundarySets {
    std::vector<int> left_sw, right_se, left_nw, right_ne;
};

// Extreme vertices of the left/right chains: one per row, south rows feed
// leftSW/rightSE, north rows leftNW/rightNE.
BoundarySets boundary_sets(const OpenFaceGraph& g);

// Row assignment for every vertex plus the row range.
std::map<int, int> rows(const OpenFaceGraph& g, int* rmin = nullptr, int* rmax = nullptr);

}  // namespace tsys

#endif
