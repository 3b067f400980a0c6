#include "tsys/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <tuple>

namespace tsys {

namespace {

struct SquareShape {
    bool split = false;
    bool diag_ac = false;  // split along A(SW)-C(NE); otherwise B(SE)-D(NW)
    bool whole_black = false;
    bool ul_black = false, lr_black = false, ll_black = false, ur_black = false;
};

SquareShape classify_square(const std::function<int(int, int)>& h, int x, int y) {
    int hA = h(x, y), hB = h(x + 1, y), hC = h(x + 1, y + 1), hD = h(x, y + 1);
    SquareShape s;
    if (hA == hC && hB == hD) {
        s.whole_black = hA < hB;
        return s;
    }
    s.split = true;
    if (hB == hD) {
        // mids B, D; low/high at A, C
        s.diag_ac = false;
        bool low_a = hA < hC;
        s.ll_black = low_a;   // low SW: ABD black, BCD white
        s.ur_black = !low_a;  // low NE: BCD black, ABD white
    } else if (hA == hC) {
        s.diag_ac = true;
        bool low_d = hD < hB;
        s.lr_black = low_d;   // low NW: ABC black, ACD white
        s.ul_black = !low_d;  // low SE: ACD black, ABC white
    } else {
        throw Error(Errc::UnrecognizedLocalPattern, "square heights out of pattern");
    }
    return s;
}

enum class Side { Bottom, Top, Left, Right };

Part side_part(const SquareShape& s, Side side) {
    if (!s.split) return Part::Whole;
    if (s.diag_ac) {
        switch (side) {
            case Side::Bottom:
            case Side::Right: return Part::LR;  // ABC
            case Side::Top:
            case Side::Left: return Part::UL;  // ACD
        }
    } else {
        switch (side) {
            case Side::Bottom:
            case Side::Left: return Part::LL;  // ABD
            case Side::Top:
            case Side::Right: return Part::UR;  // BCD
        }
    }
    return Part::Whole;
}

bool part_black(const SquareShape& s, Part p) {
    switch (p) {
        case Part::Whole: return s.whole_black;
        case Part::UL: return s.ul_black;
        case Part::LR: return s.lr_black;
        case Part::LL: return s.ll_black;
        case Part::UR: return s.ur_black;
    }
    return false;
}

void part_pos(const FaceKey& k, int& qx, int& qy) {
    switch (k.part) {
        case Part::Whole: qx = 4 * k.sqx + 2; qy = 4 * k.sqy + 2; break;
        case Part::UL: qx = 4 * k.sqx + 1; qy = 4 * k.sqy + 3; break;
        case Part::LR: qx = 4 * k.sqx + 3; qy = 4 * k.sqy + 1; break;
        case Part::LL: qx = 4 * k.sqx + 1; qy = 4 * k.sqy + 1; break;
        case Part::UR: qx = 4 * k.sqx + 3; qy = 4 * k.sqy + 3; break;
    }
}

// lattice arrow between neighbor sites (kind 0) or square diagonal (kind 1)
struct ArrowKey {
    int kind;
    int a, b, c, d;
    friend bool operator<(const ArrowKey& x, const ArrowKey& y) {
        return std::tie(x.kind, x.a, x.b, x.c, x.d) < std::tie(y.kind, y.a, y.b, y.c, y.d);
    }
};

struct Builder {
    std::function<int(int, int)> h;
    Site center;
    std::map<std::pair<int, int>, SquareShape> shapes;

    const SquareShape& shape(int x, int y) {
        auto it = shapes.find({x, y});
        if (it != shapes.end()) return it->second;
        return shapes.emplace(std::make_pair(x, y), classify_square(h, x, y)).first->second;
    }

    OpenFaceGraph build(const Shadow& sh, bool closure) {
        OpenFaceGraph g;
        g.center = center;
        g.closed_faces = sh.interior;
        g.open_faces = sh.boundary;
        g.closure = closure;
        for (const auto& f : sh.interior) g.face_heights[f] = h(f.first, f.second);
        for (const auto& f : sh.boundary) g.face_heights[f] = h(f.first, f.second);

        std::set<Site> faceset = sh.interior;
        if (closure)
            for (const auto& f : sh.boundary) faceset.insert(f);

        std::set<ArrowKey> arrows;
        for (const auto& [fi, fj] : faceset) {
            arrows.insert({0, fi, fj, fi + 1, fj});
            arrows.insert({0, fi - 1, fj, fi, fj});
            arrows.insert({0, fi, fj, fi, fj + 1});
            arrows.insert({0, fi, fj - 1, fi, fj});
            // diagonals through (fi,fj) in the four containing squares
            const std::pair<int, int> sq[4] = {
                {fi, fj}, {fi - 1, fj}, {fi - 1, fj - 1}, {fi, fj - 1}};
            for (const auto& [sx, sy] : sq) {
                const SquareShape& s = shape(sx, sy);
                if (!s.split) continue;
                bool on_diag;
                if (s.diag_ac)
                    on_diag = (fi == sx && fj == sy) || (fi == sx + 1 && fj == sy + 1);
                else
                    on_diag = (fi == sx + 1 && fj == sy) || (fi == sx && fj == sy + 1);
                if (on_diag) arrows.insert({1, sx, sy, 0, 0});
            }
        }

        struct ProtoEdge {
            FaceKey u, v;  // u = tail after orientation
            EdgeClass cls;
            bool wb = false;
            Site hface{0, 0};
            std::array<Site, 2> sides;
            bool in_g = false;
        };
        std::vector<ProtoEdge> protos;
        auto in_closed = [&](int i, int j) { return sh.interior.count({i, j}) != 0; };

        for (const auto& ar : arrows) {
            ProtoEdge e{};
            if (ar.kind == 1) {
                const SquareShape& s = shape(ar.a, ar.b);
                e.cls = EdgeClass::Diagonal;
                if (s.diag_ac) {
                    e.u = {ar.a, ar.b, Part::UL};
                    e.v = {ar.a, ar.b, Part::LR};
                    e.wb = !s.ul_black;
                    e.sides = {Site{ar.a, ar.b}, Site{ar.a + 1, ar.b + 1}};
                } else {
                    e.u = {ar.a, ar.b, Part::LL};
                    e.v = {ar.a, ar.b, Part::UR};
                    e.wb = !s.ll_black;
                    e.sides = {Site{ar.a + 1, ar.b}, Site{ar.a, ar.b + 1}};
                }
                e.in_g = in_closed(e.sides[0].first, e.sides[0].second) ||
                         in_closed(e.sides[1].first, e.sides[1].second);
            } else if (ar.b == ar.d) {
                // lattice-horizontal pair -> vertical edge between the squares
                // above and below it
                int x = ar.a, j = ar.b;
                const SquareShape& above = shape(x, j);
                const SquareShape& below = shape(x, j - 1);
                FaceKey up{x, j, side_part(above, Side::Bottom)};
                FaceKey dn{x, j - 1, side_part(below, Side::Top)};
                bool up_black = part_black(above, up.part);
                e.cls = EdgeClass::Vertical;
                e.u = up_black ? up : dn;
                e.v = up_black ? dn : up;
                e.sides = {Site{ar.a, ar.b}, Site{ar.c, ar.d}};
                e.in_g = in_closed(ar.a, ar.b) || in_closed(ar.c, ar.d);
            } else {
                // lattice-vertical pair -> horizontal edge
                int i = ar.a, y = ar.b;  // lower site (i, y), upper (i, y+1)
                const SquareShape& left = shape(i - 1, y);
                const SquareShape& right = shape(i, y);
                FaceKey lf{i - 1, y, side_part(left, Side::Right)};
                FaceKey rf{i, y, side_part(right, Side::Left)};
                e.cls = EdgeClass::Horizontal;
                e.u = lf;
                e.v = rf;
                e.wb = !part_black(left, lf.part);
                if (h(i, y) < h(i, y + 1)) {
                    if (!e.wb)
                        throw Error(Errc::UnrecognizedLocalPattern, "N-edge color mismatch");
                    e.hface = {i, y};
                } else {
                    if (e.wb)
                        throw Error(Errc::UnrecognizedLocalPattern, "S-edge color mismatch");
                    e.hface = {i, y + 1};
                }
                e.sides = {Site{i, y}, Site{i, y + 1}};
                e.in_g = in_closed(i, y) || in_closed(i, y + 1);
            }
            protos.push_back(e);
        }

        // vertices in sorted position order
        std::map<FaceKey, int> ids;
        for (const auto& e : protos) {
            ids.emplace(e.u, -1);
            ids.emplace(e.v, -1);
        }
        std::vector<FaceKey> keys;
        for (const auto& [k, unused] : ids) keys.push_back(k);
        std::sort(keys.begin(), keys.end(), [](const FaceKey& a, const FaceKey& b) {
            int ax, ay, bx, by;
            part_pos({a.sqx, a.sqy, a.part}, ax, ay);
            part_pos({b.sqx, b.sqy, b.part}, bx, by);
            return std::tie(ax, ay) < std::tie(bx, by);
        });
        g.vertices.reserve(keys.size());
        for (const auto& k : keys) {
            Vertex v;
            v.id = static_cast<int>(g.vertices.size());
            v.key = k;
            v.black = part_black(shape(k.sqx, k.sqy), k.part);
            part_pos(k, v.qx, v.qy);
            v.row = k.sqy - center.second;
            ids[k] = v.id;
            g.vertices.push_back(v);
        }

        std::sort(protos.begin(), protos.end(), [&](const ProtoEdge& a, const ProtoEdge& b) {
            return std::tie(ids[a.u], ids[a.v]) < std::tie(ids[b.u], ids[b.v]);
        });
        g.vertex_edges.assign(g.vertices.size(), {});
        for (const auto& pe : protos) {
            EdgeRec e;
            e.id = static_cast<int>(g.edges.size());
            e.tail = ids[pe.u];
            e.head = ids[pe.v];
            e.cls = pe.cls;
            e.white_black = pe.wb;
            e.hface = pe.hface;
            e.sides = pe.sides;
            e.in_g = pe.in_g;
            g.vertex_edges[e.tail].push_back(e.id);
            g.vertex_edges[e.head].push_back(e.id);
            for (const auto& f : e.sides)
                if (g.face_known(f)) g.face_sides[f].push_back(e.id);
            g.edges.push_back(e);
        }
        for (auto& v : g.vertices) v.in_g = false;
        for (const auto& e : g.edges)
            if (e.in_g) {
                g.vertices[e.tail].in_g = true;
                g.vertices[e.head].in_g = true;
            }

        g.rmin = g.rmax = g.vertices.empty() ? 0 : g.vertices.front().row;
        for (const auto& v : g.vertices) {
            g.rmin = std::min(g.rmin, v.row);
            g.rmax = std::max(g.rmax, v.row);
        }

        validate(g);
        return g;
    }

    void validate(const OpenFaceGraph& g) {
        for (const auto& e : g.edges) {
            const Vertex& t = g.vertices[e.tail];
            const Vertex& h2 = g.vertices[e.head];
            if (t.black == h2.black)
                throw Error(Errc::UnrecognizedLocalPattern, "graph not bipartite");
            if (e.cls == EdgeClass::Vertical) {
                if (!t.black)
                    throw Error(Errc::UnrecognizedLocalPattern, "vertical edge not black->white");
                if (std::abs(t.row - h2.row) != 1)
                    throw Error(Errc::InconsistentRow, "vertical edge skips rows");
            } else {
                if (t.row != h2.row)
                    throw Error(Errc::InconsistentRow, "left-right edge changes row");
                if (t.qx >= h2.qx)
                    throw Error(Errc::InconsistentRow, "edge orientation not left-to-right");
                if (e.white_black == t.black)
                    throw Error(Errc::UnrecognizedLocalPattern, "edge color tag mismatch");
            }
        }
    }
};

}  // namespace

std::vector<int> OpenFaceGraph::face_sides_in_g(const Site& f) const {
    std::vector<int> r;
    auto it = face_sides.find(f);
    if (it == face_sides.end()) return r;
    for (int e : it->second)
        if (edges[e].in_g) r.push_back(e);
    return r;
}

static OpenFaceGraph build_impl(const SteppedSurface& s, const Point3& p, bool closure) {
    require_in_scope(s, p);
    Shadow sh = shadow(s, p);
    if (sh.degenerate())
        throw Error(Errc::DegenerateShadow, "point lies on the surface");
    AdjustedSurface adj = adjusted_surface(s, p);
    Builder b;
    b.h = [adj](int i, int j) { return adj.height(i, j); };
    b.center = {p.i, p.j};
    if (!closure) {
        Shadow only_interior;
        only_interior.interior = sh.interior;
        only_interior.boundary = sh.boundary;
        OpenFaceGraph g = b.build(only_interior, false);
        for (auto& e : g.edges) e.in_g = true;
        for (auto& v : g.vertices) v.in_g = true;
        return g;
    }
    return b.build(sh, true);
}

OpenFaceGraph build_graph(const SteppedSurface& s, const Point3& p) {
    return build_impl(s, p, false);
}

OpenFaceGraph build_closure(const SteppedSurface& s, const Point3& p) {
    return build_impl(s, p, true);
}

BoundarySets boundary_sets(const OpenFaceGraph& g) {
    std::map<int, std::pair<int, int>> extremes;  // row -> (leftmost id, rightmost id)
    for (const auto& v : g.vertices) {
        auto it = extremes.find(v.row);
        if (it == extremes.end()) {
            extremes[v.row] = {v.id, v.id};
            continue;
        }
        if (v.qx < g.vertices[it->second.first].qx) it->second.first = v.id;
        if (v.qx > g.vertices[it->second.second].qx) it->second.second = v.id;
    }
    BoundarySets b;
    for (const auto& [row, lr] : extremes) {
        if (row <= -1) {
            b.left_sw.push_back(lr.first);
            b.right_se.push_back(lr.second);
        } else {
            b.left_nw.push_back(lr.first);
            b.right_ne.push_back(lr.second);
        }
    }
    return b;
}

std::map<int, int> rows(const OpenFaceGraph& g, int* rmin, int* rmax) {
    std::map<int, int> r;
    for (const auto& v : g.vertices) r[v.id] = v.row;
    if (rmin) *rmin = g.rmin;
    if (rmax) *rmax = g.rmax;
    return r;
}

}  // namespace tsys
