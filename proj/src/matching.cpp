#include "tsys/matching.hpp"

#include <algorithm>
#include <map>

namespace tsys {

std::vector<Matching> enumerate_matchings(const OpenFaceGraph& g) {
    std::vector<int> verts;
    for (const auto& v : g.vertices)
        if (v.in_g) verts.push_back(v.id);
    std::vector<Matching> out;
    std::vector<char> covered(g.vertices.size(), 0);
    Matching cur;

    std::function<void()> rec = [&]() {
        int pick = -1;
        for (int v : verts)
            if (!covered[v]) { pick = v; break; }
        if (pick < 0) {
            Matching m = cur;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        for (int eid : g.vertex_edges[pick]) {
            const EdgeRec& e = g.edges[eid];
            if (!e.in_g) continue;
            int other = e.tail == pick ? e.head : e.tail;
            if (covered[other]) continue;
            covered[pick] = covered[other] = 1;
            cur.push_back(eid);
            rec();
            cur.pop_back();
            covered[pick] = covered[other] = 0;
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

LaurentPoly face_weight(const OpenFaceGraph& g, const Matching& m) {
    std::vector<char> in_m(g.edges.size(), 0);
    for (int e : m) in_m[e] = 1;
    Monomial w = Monomial::one();
    auto face_term = [&](const Site& f, bool closed) {
        std::vector<int> sides = g.closure ? g.face_sides.at(f) : g.face_sides_in_g(f);
        int a = 0;
        for (int e : sides) a += in_m[e];
        int b = static_cast<int>(sides.size()) - a;
        int diff = b - a;
        int expo = (diff >= 0 ? (diff + 1) / 2 : -((-diff) / 2)) - (closed ? 1 : 0);
        if (expo != 0) w = w * Monomial::var(tvar(f.first, f.second), expo);
    };
    for (const auto& f : g.closed_faces) face_term(f, true);
    for (const auto& f : g.open_faces) face_term(f, g.closure);
    return LaurentPoly(w);
}

PairingSet perfect_pairing(const OpenFaceGraph& g, const Matching& m) {
    // column -> matched horizontal edges, keyed bottom-to-top
    std::map<int, std::map<int, int>> columns;
    for (int eid : m) {
        const EdgeRec& e = g.edges[eid];
        if (e.cls != EdgeClass::Horizontal) continue;
        int col = e.hface.first;
        int ykey = e.white_black ? 2 * e.hface.second + 1 : 2 * e.hface.second - 1;
        columns[col][ykey] = eid;
    }
    PairingSet pairs;
    for (const auto& [col, seq] : columns) {
        std::vector<int> stack;  // unpaired S edges, nearest last
        for (const auto& [ykey, eid] : seq) {
            const EdgeRec& e = g.edges[eid];
            if (!e.white_black) {
                stack.push_back(eid);
                continue;
            }
            if (stack.empty())
                throw Error(Errc::UnbalancedColumn,
                            "N edge without an S edge below in column " + std::to_string(col));
            int s = stack.back();
            stack.pop_back();
            pairs.push_back({g.edges[s].hface, e.hface, s, eid});
        }
        if (!stack.empty())
            throw Error(Errc::UnbalancedColumn,
                        "unpaired S edge remains in column " + std::to_string(col));
    }
    std::sort(pairs.begin(), pairs.end(), [](const AllowedPair& a, const AllowedPair& b) {
        return std::tie(a.s_face, a.n_face) < std::tie(b.s_face, b.n_face);
    });
    return pairs;
}

LaurentPoly pairing_weight(const SteppedSurface& s, const PairingSet& pairs) {
    Monomial w = Monomial::one();
    for (const auto& pr : pairs) {
        int i = pr.s_face.first;
        int j1 = pr.s_face.second, j2 = pr.n_face.second;
        int lo = j1 - s.height(i, j1) - 1;
        int hi = j2 + s.height(i, j2) + 1;
        for (int a = lo; a <= hi; ++a) w = w * Monomial::var(cvar(i, a));
    }
    return LaurentPoly(w);
}

Matching extend_matching(const OpenFaceGraph& gbar, const Matching& m) {
    Matching r = m;
    for (const auto& e : gbar.edges)
        if (!e.in_g && e.cls == EdgeClass::Diagonal) r.push_back(e.id);
    std::sort(r.begin(), r.end());
    return r;
}

Matching mbar0(const OpenFaceGraph& gbar) {
    Matching r;
    for (const auto& e : gbar.edges)
        if (e.white_black && e.cls != EdgeClass::Vertical) r.push_back(e.id);
    return r;
}

Monomial tail_p(const OpenFaceGraph& gbar, const Site& face) {
    int k = gbar.face_height(face);
    return Monomial::var(tauvar(face.first, face.second - k - 1));
}

Monomial tail_pbar(const OpenFaceGraph& gbar, const Site& face) {
    int k = gbar.face_height(face);
    return Monomial::var(tauvar(face.first, face.second + k + 2));
}

LaurentPoly edge_weight(const OpenFaceGraph& gbar, const EdgeRec& e) {
    Monomial w = Monomial::one();
    for (const auto& f : e.sides)
        if (gbar.face_known(f)) w = w * Monomial::var(tvar(f.first, f.second), -1);
    if (e.cls == EdgeClass::Horizontal && gbar.face_closed(e.hface)) {
        if (e.white_black)
            w = w * tail_pbar(gbar, e.hface).inverse_vars();
        else
            w = w * tail_p(gbar, e.hface);
    }
    return LaurentPoly(w);
}

LaurentPoly edge_weight_set(const OpenFaceGraph& gbar, const Matching& edges) {
    Monomial w = Monomial::one();
    for (int eid : edges) w = w * edge_weight(gbar, gbar.edges[eid]).leading();
    return normalize_tails(LaurentPoly(w));
}

LaurentPoly solve_matching(const Instance& inst) {
    require_in_scope(inst.surface, inst.point);
    Shadow sh = shadow(inst.surface, inst.point);
    if (sh.degenerate())
        return LaurentPoly::var(tvar(inst.point.i, inst.point.j));
    OpenFaceGraph g = build_graph(inst.surface, inst.point);
    PolyAccum acc;
    for (const auto& m : enumerate_matchings(g)) {
        PairingSet pairs = perfect_pairing(g, m);
        acc.add(pairing_weight(inst.surface, pairs) * face_weight(g, m));
    }
    return acc.take();
}

LaurentPoly solve_edge(const Instance& inst) {
    require_in_scope(inst.surface, inst.point);
    Shadow sh = shadow(inst.surface, inst.point);
    if (sh.degenerate())
        return LaurentPoly::var(tvar(inst.point.i, inst.point.j));
    OpenFaceGraph gbar = build_closure(inst.surface, inst.point);

    // w_e(Mbar0) at c = 1 is a pure t monomial
    Monomial denom = Monomial::one();
    for (int eid : mbar0(gbar)) {
        const EdgeRec& e = gbar.edges[eid];
        for (const auto& f : e.sides)
            if (gbar.face_known(f)) denom = denom * Monomial::var(tvar(f.first, f.second), -1);
    }
    PolyAccum acc;
    for (const auto& m : enumerate_matchings(gbar)) {
        Matching mbar = extend_matching(gbar, m);
        acc.add_scaled(edge_weight_set(gbar, mbar), {BigInt(1), exp_inv(denom.exps)});
    }
    LaurentPoly sum = normalize_tails(acc.take());
    assert_tail_free(sum);
    return sum;
}

}  // namespace tsys
