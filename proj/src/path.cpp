#include "tsys/path.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tsys {

namespace {

std::vector<int> sym_diff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(r));
    return r;
}

struct Ends {
    std::set<int> sources, sinks;
};

Ends terminal_sets(const OpenFaceGraph& g, bool use_g) {
    // leftmost / rightmost vertex of every south row, within the chosen
    // subgraph
    std::map<int, std::pair<int, int>> extremes;
    for (const auto& v : g.vertices) {
        if (use_g && !v.in_g) continue;
        if (v.row > -1) continue;
        auto it = extremes.find(v.row);
        if (it == extremes.end()) {
            extremes[v.row] = {v.id, v.id};
            continue;
        }
        if (v.qx < g.vertices[it->second.first].qx) it->second.first = v.id;
        if (v.qx > g.vertices[it->second.second].qx) it->second.second = v.id;
    }
    Ends e;
    for (const auto& [row, lr] : extremes) {
        e.sources.insert(lr.first);
        e.sinks.insert(lr.second);
    }
    return e;
}

}  // namespace

Matching m0(const OpenFaceGraph& g) {
    Matching r;
    for (const auto& e : g.edges)
        if (e.in_g && e.white_black && e.cls != EdgeClass::Vertical) r.push_back(e.id);
    return r;
}

void validate_family(const OpenFaceGraph& g, const PathFamily& p, bool use_g) {
    Ends ends = terminal_sets(g, use_g);
    std::map<int, int> indeg, outdeg;
    for (int eid : p) {
        const EdgeRec& e = g.edges[eid];
        ++outdeg[e.tail];
        ++indeg[e.head];
    }
    for (const auto& v : g.vertices) {
        if (use_g && !v.in_g) continue;
        int in = indeg.count(v.id) ? indeg[v.id] : 0;
        int out = outdeg.count(v.id) ? outdeg[v.id] : 0;
        bool src = ends.sources.count(v.id), snk = ends.sinks.count(v.id);
        if (src) {
            if (in != 0 || out != 1)
                throw Error(Errc::NotAPathFamily, "source degree wrong");
        } else if (snk) {
            if (in != 1 || out != 0)
                throw Error(Errc::NotAPathFamily, "sink degree wrong");
        } else if (!((in == 0 && out == 0) || (in == 1 && out == 1))) {
            throw Error(Errc::NotAPathFamily, "interior vertex degree wrong");
        }
    }
    // all left-right edges advance qx and verticals are finite, so any cycle
    // would need a right-to-left step; still check structurally
    std::map<int, int> next;
    for (int eid : p) next[g.edges[eid].tail] = g.edges[eid].head;
    std::set<int> done;
    for (const auto& [start, unused] : next) {
        if (done.count(start)) continue;
        std::set<int> seen;
        int cur = start;
        while (next.count(cur)) {
            if (!seen.insert(cur).second)
                throw Error(Errc::NotAPathFamily, "cycle in family");
            cur = next[cur];
        }
        for (int v : seen) done.insert(v);
    }
}

PathFamily phi(const OpenFaceGraph& g, const Matching& m) {
    PathFamily p = sym_diff(m, m0(g));
    validate_family(g, p, true);
    return p;
}

Matching psi(const OpenFaceGraph& g, const PathFamily& p) {
    Matching m = sym_diff(p, m0(g));
    std::vector<int> deg(g.vertices.size(), 0);
    for (int eid : m) {
        ++deg[g.edges[eid].tail];
        ++deg[g.edges[eid].head];
    }
    for (const auto& v : g.vertices)
        if (v.in_g && deg[v.id] != 1)
            throw Error(Errc::NotPerfect, "Psi image is not a perfect matching");
    return m;
}

PathFamily phi_bar(const OpenFaceGraph& gbar, const Matching& mbar) {
    PathFamily p = sym_diff(mbar, mbar0(gbar));
    validate_family(gbar, p, false);
    return p;
}

Matching psi_bar(const OpenFaceGraph& gbar, const PathFamily& p) {
    return sym_diff(p, mbar0(gbar));
}

std::vector<std::vector<int>> family_paths(const OpenFaceGraph& g, const PathFamily& p) {
    std::map<int, int> out_edge;
    std::map<int, int> indeg;
    for (int eid : p) {
        out_edge[g.edges[eid].tail] = eid;
        ++indeg[g.edges[eid].head];
    }
    std::vector<std::vector<int>> paths;
    for (int eid : p) {
        int tail = g.edges[eid].tail;
        if (indeg.count(tail)) continue;  // not a path start
        std::vector<int> path;
        int cur = tail;
        while (out_edge.count(cur)) {
            int e = out_edge[cur];
            path.push_back(e);
            cur = g.edges[e].head;
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

std::vector<PathFamily> enumerate_paths(const OpenFaceGraph& gbar) {
    std::vector<PathFamily> out;
    for (const auto& m : enumerate_matchings(gbar))
        out.push_back(phi_bar(gbar, extend_matching(gbar, m)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PathFamily> enumerate_paths_dfs(const OpenFaceGraph& g, bool use_g) {
    Ends ends = terminal_sets(g, use_g);
    std::vector<int> sources(ends.sources.begin(), ends.sources.end());
    std::vector<PathFamily> out;
    std::set<int> used_vertices;
    std::vector<int> cur;

    std::function<void(size_t, int)> extend = [&](size_t si, int at) {
        if (ends.sinks.count(at)) {
            if (si + 1 == sources.size()) {
                PathFamily f = cur;
                std::sort(f.begin(), f.end());
                out.push_back(std::move(f));
            } else {
                int s = sources[si + 1];
                used_vertices.insert(s);
                extend(si + 1, s);
                used_vertices.erase(s);
            }
            return;
        }
        for (int eid : g.vertex_edges[at]) {
            const EdgeRec& e = g.edges[eid];
            if (use_g && !e.in_g) continue;
            if (e.tail != at) continue;
            if (used_vertices.count(e.head)) continue;
            used_vertices.insert(e.head);
            cur.push_back(eid);
            extend(si, e.head);
            cur.pop_back();
            used_vertices.erase(e.head);
        }
    };
    if (sources.empty()) return {PathFamily{}};
    used_vertices.insert(sources[0]);
    extend(0, sources[0]);
    used_vertices.erase(sources[0]);
    std::sort(out.begin(), out.end());
    return out;
}

LaurentPoly modified_edge_weight(const OpenFaceGraph& gbar, const EdgeRec& e) {
    LaurentPoly w = edge_weight(gbar, e);
    bool in_mbar0 = e.white_black && e.cls != EdgeClass::Vertical;
    if (!in_mbar0) return w;
    return LaurentPoly(w.leading().inverse_vars());
}

LaurentPoly modified_weight_set(const OpenFaceGraph& gbar, const PathFamily& p) {
    Monomial w = Monomial::one();
    for (int eid : p) w = w * modified_edge_weight(gbar, gbar.edges[eid]).leading();
    return normalize_tails(LaurentPoly(w));
}

LaurentPoly path_denominator(const OpenFaceGraph& gbar) {
    Monomial q = Monomial::one();
    for (const auto& e : gbar.edges)
        if (e.cls == EdgeClass::Horizontal && e.white_black && gbar.face_closed(e.hface))
            q = q * tail_pbar(gbar, e.hface);
    return normalize_tails(LaurentPoly(q));
}

LaurentPoly solve_path(const Instance& inst) {
    require_in_scope(inst.surface, inst.point);
    Shadow sh = shadow(inst.surface, inst.point);
    if (sh.degenerate())
        return LaurentPoly::var(tvar(inst.point.i, inst.point.j));
    OpenFaceGraph gbar = build_closure(inst.surface, inst.point);
    LaurentPoly q = path_denominator(gbar);
    Monomial qinv = q.leading().inverse_vars();
    PolyAccum acc;
    for (const auto& fam : enumerate_paths(gbar))
        acc.add_scaled(modified_weight_set(gbar, fam), qinv);
    LaurentPoly sum = normalize_tails(acc.take());
    assert_tail_free(sum);
    return sum;
}

}  // namespace tsys
