#include "tsys/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "tsys/matching.hpp"
#include "tsys/path.hpp"

namespace tsys {

const char* chip_variant_name(ChipVariant v) {
    switch (v) {
        case ChipVariant::U: return "U";
        case ChipVariant::Uprime: return "U'";
        case ChipVariant::V: return "V";
        case ChipVariant::Vprime: return "V'";
        case ChipVariant::W: return "W";
    }
    return "?";
}

NetworkMatrix NetworkMatrix::identity(int rmin, int dim) {
    NetworkMatrix r;
    r.rmin = rmin;
    r.m.assign(dim, std::vector<LaurentPoly>(dim));
    for (int i = 0; i < dim; ++i) r.m[i][i] = LaurentPoly::one();
    return r;
}

NetworkMatrix operator*(const NetworkMatrix& x, const NetworkMatrix& y) {
    int n = x.dim();
    NetworkMatrix r;
    r.rmin = x.rmin;
    r.m.assign(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (x.m[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (y.m[k][j].is_zero()) continue;
                r.m[i][j] += x.m[i][k] * y.m[k][j];
            }
        }
    return r;
}

bool operator==(const NetworkMatrix& x, const NetworkMatrix& y) {
    return x.rmin == y.rmin && x.m == y.m;
}

Network build_network(const OpenFaceGraph& gbar) {
    Network net;
    net.rmin = gbar.rmin;
    net.rmax = gbar.rmax;

    std::map<int, int> chip_of_black;  // vertex id -> chip index
    for (const auto& v : gbar.vertices) {
        if (!v.black) continue;
        Chip c;
        switch (v.key.part) {
            case Part::Whole: c.variant = ChipVariant::W; break;
            case Part::LR: c.variant = ChipVariant::Uprime; break;
            case Part::UL: c.variant = ChipVariant::V; break;
            case Part::LL: c.variant = ChipVariant::U; break;
            case Part::UR: c.variant = ChipVariant::Vprime; break;
        }
        c.row = v.row;
        c.vertex = v.id;
        c.qx = v.qx;
        int x = v.key.sqx, y = v.key.sqy;
        c.a = {x, y};
        c.b = {x + 1, y};
        c.c = {x, y + 1};
        c.d = {x + 1, y + 1};
        chip_of_black[v.id] = static_cast<int>(net.chips.size());
        net.chips.push_back(c);
    }

    // Chips sharing a wire (row) are ordered along it by crossing position;
    // chips on disjoint rows have commuting matrices. Two verticals meeting
    // the same white cross at the same position — that pair commutes and is
    // left unordered (the split-choice ambiguity).
    std::map<int, std::vector<std::pair<int, int>>> wires;  // row -> (x, chip)
    for (const auto& [black, ci] : chip_of_black) {
        const Chip& c = net.chips[ci];
        wires[c.row].push_back({c.qx, ci});
        bool has_down = c.variant != ChipVariant::V && c.variant != ChipVariant::Vprime;
        bool has_up = c.variant != ChipVariant::U && c.variant != ChipVariant::Uprime;
        int down_x = c.qx, up_x = c.qx;  // phantom stubs cross at the black
        for (int eid : gbar.vertex_edges[black]) {
            const EdgeRec& e = gbar.edges[eid];
            if (e.cls != EdgeClass::Vertical || e.tail != black) continue;
            const Vertex& w = gbar.vertices[e.head];
            (w.row == c.row - 1 ? down_x : up_x) = w.qx;
        }
        if (has_down) wires[c.row - 1].push_back({down_x, ci});
        if (has_up) wires[c.row + 1].push_back({up_x, ci});
    }
    std::set<std::pair<int, int>> prec;
    for (auto& [row, xs] : wires) {
        std::sort(xs.begin(), xs.end());
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = i + 1; j < xs.size(); ++j)
                if (xs[i].first < xs[j].first) prec.insert({xs[i].second, xs[j].second});
    }
    net.order.assign(prec.begin(), prec.end());

    // canonical linear extension: Kahn with (column, row, id) priority
    size_t n = net.chips.size();
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (const auto& [a, b] : net.order) {
        succ[a].push_back(b);
        ++indeg[b];
    }
    auto prio = [&](int i) {
        return std::make_tuple(net.chips[i].qx, net.chips[i].row, net.chips[i].vertex);
    };
    auto cmp = [&](int a, int b) { return prio(a) > prio(b); };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(static_cast<int>(i));
    std::vector<Chip> ordered;
    ordered.reserve(n);
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        ordered.push_back(net.chips[i]);
        for (int s : succ[i])
            if (--indeg[s] == 0) ready.push(s);
    }
    if (ordered.size() != n)
        throw Error(Errc::UnrecognizedLocalPattern, "chip precedence has a cycle");

    // remap precedence pairs to the new positions
    std::map<int, int> newpos;
    for (size_t i = 0; i < ordered.size(); ++i) newpos[ordered[i].vertex] = static_cast<int>(i);
    std::vector<std::pair<int, int>> order2;
    for (const auto& [a, b] : net.order)
        order2.push_back({newpos[net.chips[a].vertex], newpos[net.chips[b].vertex]});
    std::sort(order2.begin(), order2.end());
    net.chips = std::move(ordered);
    net.order = std::move(order2);
    return net;
}

namespace {

LaurentPoly face_t(const OpenFaceGraph& g, const Site& f, int e = 1) {
    if (!g.face_known(f)) return LaurentPoly::one();
    return LaurentPoly::var(tvar(f.first, f.second), e);
}

Monomial face_p(const OpenFaceGraph& g, const Site& f) {
    if (!g.face_closed(f)) return Monomial::one();
    return tail_p(g, f);
}

Monomial face_pbar(const OpenFaceGraph& g, const Site& f) {
    if (!g.face_closed(f)) return Monomial::one();
    return tail_pbar(g, f);
}

}  // namespace

NetworkMatrix chip_matrix(const Chip& chip, const OpenFaceGraph& gbar, int rmin, int rmax,
                          bool modified) {
    int dim = rmax - rmin + 1;
    NetworkMatrix mat = NetworkMatrix::identity(rmin, dim);
    int r = chip.row;
    LaurentPoly ta = face_t(gbar, chip.a), tb = face_t(gbar, chip.b);
    LaurentPoly tc = face_t(gbar, chip.c), td = face_t(gbar, chip.d);
    LaurentPoly tb_inv = face_t(gbar, chip.b, -1), td_inv = face_t(gbar, chip.d, -1);
    LaurentPoly pa(face_pbar(gbar, chip.a));
    LaurentPoly pd(face_p(gbar, chip.d));
    LaurentPoly pa_inv(face_pbar(gbar, chip.a).inverse_vars());

    auto put = [&](int row, int col, const LaurentPoly& v) {
        if (row < rmin || row > rmax || col < rmin || col > rmax) return;
        mat.at(row, col) = v;
    };
    switch (chip.variant) {
        case ChipVariant::U:
            put(r, r - 1, pa * tc * tb_inv);
            put(r, r, pa * ta * tb_inv);
            break;
        case ChipVariant::Uprime:
            put(r, r - 1, td * tb_inv);
            put(r, r, pd * ta * tb_inv);
            break;
        case ChipVariant::V:
            put(r, r, pa * tc * td_inv);
            put(r, r + 1, pa * ta * td_inv);
            break;
        case ChipVariant::Vprime:
            put(r, r, pd * tc * td_inv);
            put(r, r + 1, tb * td_inv);
            break;
        case ChipVariant::W:
            put(r, r - 1, pa * tc * tb_inv);
            put(r, r, pa * pd * ta * tc * tb_inv * td_inv);
            put(r, r + 1, pa * ta * td_inv);
            break;
    }
    // the modified elementary matrix divides the whole matrix by pbar_a
    // (U', V' carry no pbar and are unchanged)
    if (modified && chip.variant != ChipVariant::Uprime &&
        chip.variant != ChipVariant::Vprime) {
        for (auto& row_vec : mat.m)
            for (auto& entry : row_vec)
                if (!entry.is_zero()) entry = entry.scaled(pa_inv.leading());
    }
    return mat;
}

NetworkMatrix network_matrix(const Network& net, const OpenFaceGraph& gbar, bool modified,
                             const std::vector<int>* extension) {
    NetworkMatrix acc = NetworkMatrix::identity(net.rmin, net.dim());
    if (extension) {
        for (int idx : *extension)
            acc = acc * chip_matrix(net.chips[idx], gbar, net.rmin, net.rmax, modified);
    } else {
        for (const auto& chip : net.chips)
            acc = acc * chip_matrix(chip, gbar, net.rmin, net.rmax, modified);
    }
    return acc;
}

LaurentPoly principal_minor(const NetworkMatrix& m, int rlo, int rhi) {
    int k = rhi - rlo + 1;
    if (k <= 0) return LaurentPoly::one();
    std::vector<std::vector<const LaurentPoly*>> sub(k, std::vector<const LaurentPoly*>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = &m.at(rlo + i, rlo + j);
    std::map<uint32_t, LaurentPoly> memo;
    std::function<LaurentPoly(int, uint32_t)> det = [&](int row, uint32_t cols) -> LaurentPoly {
        if (row == k) return LaurentPoly::one();
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        LaurentPoly acc;
        int sign = 1;
        for (int j = 0; j < k; ++j) {
            if (!(cols & (1u << j))) continue;
            if (!sub[row][j]->is_zero()) {
                LaurentPoly term = *sub[row][j] * det(row + 1, cols & ~(1u << j));
                acc += sign > 0 ? term : -term;
            }
            sign = -sign;
        }
        return memo[cols] = acc;
    };
    return det(0, (k >= 32 ? ~0u : ((1u << k) - 1)));
}

LaurentPoly solve_network(const Instance& inst) {
    require_in_scope(inst.surface, inst.point);
    Shadow sh = shadow(inst.surface, inst.point);
    if (sh.degenerate())
        return LaurentPoly::var(tvar(inst.point.i, inst.point.j));
    OpenFaceGraph gbar = build_closure(inst.surface, inst.point);
    Network net = build_network(gbar);
    NetworkMatrix m = network_matrix(net, gbar, false);
    LaurentPoly minor = principal_minor(m, net.rmin, -1);
    Monomial qinv = path_denominator(gbar).leading().inverse_vars();
    LaurentPoly t = normalize_tails(minor.scaled(qinv));
    assert_tail_free(t);
    return t;
}

LaurentPoly solve_network_modified(const Instance& inst) {
    require_in_scope(inst.surface, inst.point);
    Shadow sh = shadow(inst.surface, inst.point);
    if (sh.degenerate())
        return LaurentPoly::var(tvar(inst.point.i, inst.point.j));
    OpenFaceGraph gbar = build_closure(inst.surface, inst.point);
    Network net = build_network(gbar);
    NetworkMatrix m = network_matrix(net, gbar, false);
    // Absorb the tail factor into a single row of the matrix: the minor is
    // linear in each row, so this equals Q^{-1} times the plain minor.
    // Scaling chip matrices one by one instead double-counts the factor
    // whenever a family of paths crosses a chip's rows more than once.
    Monomial qinv = path_denominator(gbar).leading().inverse_vars();
    for (int col = net.rmin; col <= net.rmax; ++col) {
        LaurentPoly& e = m.at(net.rmin, col);
        if (!e.is_zero()) e = e.scaled(qinv);
    }
    LaurentPoly t = normalize_tails(principal_minor(m, net.rmin, -1));
    assert_tail_free(t);
    return t;
}

std::vector<int> alternate_extension(const Network& net) {
    size_t n = net.chips.size();
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (const auto& [a, b] : net.order) {
        succ[a].push_back(b);
        ++indeg[b];
    }
    auto prio = [&](int i) {
        return std::make_tuple(net.chips[i].row, net.chips[i].qx, net.chips[i].vertex);
    };
    auto cmp = [&](int a, int b) { return prio(a) > prio(b); };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(static_cast<int>(i));
    std::vector<int> out;
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        out.push_back(i);
        for (int s : succ[i])
            if (--indeg[s] == 0) ready.push(s);
    }
    return out;
}

bool flatness_check(int i, int j, int k, const LaurentPoly& tc_prime, std::string* diff_entry) {
    LaurentPoly tl = LaurentPoly::var(tvar(i - 1, j));
    LaurentPoly tr = LaurentPoly::var(tvar(i + 1, j));
    LaurentPoly tu = LaurentPoly::var(tvar(i, j + 1));
    LaurentPoly td = LaurentPoly::var(tvar(i, j - 1));
    LaurentPoly tc = LaurentPoly::var(tvar(i, j));
    LaurentPoly tc_inv = LaurentPoly::var(tvar(i, j), -1);
    LaurentPoly tr_inv = LaurentPoly::var(tvar(i + 1, j), -1);
    // tails on the pre-mutation surface (face u at height k, face d at k) and
    // at the mutated face c' (height k-1)
    LaurentPoly p_u = LaurentPoly::var(tauvar(i, j - k));
    LaurentPoly pbar_d = LaurentPoly::var(tauvar(i, j + k + 1), -1);  // inverse
    LaurentPoly p_cp = LaurentPoly::var(tauvar(i, j - k));
    LaurentPoly pbar_cp_inv = LaurentPoly::var(tauvar(i, j + k + 1), -1);

    // LHS = Ubar'_{k+1}(t_l, t_c, t_u) * Vbar_k(t_d, t_c, t_r), rows {0,1}
    // block scaling puts pbar^{-1} on the whole V block.
    LaurentPoly L00 = tc * tr_inv;
    LaurentPoly L01 = td * tr_inv;
    LaurentPoly L10 = tu * tc_inv * tc * tr_inv;                  // = tu/tr
    LaurentPoly L11 = tu * tc_inv * td * tr_inv + p_u * tl * tc_inv * pbar_d;

    // RHS cleared of t_c': multiply V'bar by t_c' and substitute the given
    // polynomial. Ubar's block also carries t_c' in its (1,1) entry.
    LaurentPoly u00 = pbar_cp_inv;
    LaurentPoly u10 = tu * tr_inv;
    LaurentPoly u11 = tc_prime * tr_inv;
    LaurentPoly v00 = p_cp * tl;
    LaurentPoly v01 = td;
    LaurentPoly v11 = tc_prime;

    LaurentPoly R00 = v00 * u00 + v01 * u10;
    LaurentPoly R01 = v01 * u11;
    LaurentPoly R10 = v11 * u10;
    LaurentPoly R11 = v11 * u11;

    auto eq = [&](const LaurentPoly& lhs_entry, const LaurentPoly& rhs, const char* name) {
        LaurentPoly l = normalize_tails(lhs_entry * tc_prime);
        LaurentPoly r = normalize_tails(rhs);
        if (l == r) return true;
        if (diff_entry) *diff_entry = name;
        return false;
    };
    return eq(L00, R00, "(k,k)") && eq(L01, R01, "(k,k+1)") && eq(L10, R10, "(k+1,k)") &&
           eq(L11, R11, "(k+1,k+1)");
}

}  // namespace tsys
