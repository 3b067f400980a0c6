#include "tsys/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace tsys {

SteppedSurface surface_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Errc::BadInput, std::string("surface JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("base", "") != "fund")
        throw Error(Errc::BadInput, "surface JSON must set \"base\":\"fund\"");
    std::map<Site, int> o;
    for (const auto& row : j.value("overrides", nlohmann::json::array())) {
        if (!row.is_array() || row.size() != 3)
            throw Error(Errc::BadInput, "override entries are [i,j,k] triples");
        o[{row[0].get<int>(), row[1].get<int>()}] = row[2].get<int>();
    }
    return SteppedSurface(std::move(o));
}

std::string surface_to_json(const SteppedSurface& s) {
    nlohmann::ordered_json j;
    j["base"] = "fund";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [site, k] : s.overrides())
        arr.push_back({site.first, site.second, k});
    j["overrides"] = arr;
    return j.dump();
}

std::string dot_graph(const OpenFaceGraph& g, const PathFamily* family) {
    std::ostringstream os;
    os << "digraph tsystem {\n  rankdir=LR;\n  node [shape=circle, style=filled];\n";
    os << "  // closed faces:";
    for (const auto& f : g.closed_faces) os << " (" << f.first << "," << f.second << ")";
    os << "\n  // open faces:";
    for (const auto& f : g.open_faces) os << " (" << f.first << "," << f.second << ")";
    os << "\n";
    std::set<int> fam;
    if (family) fam.insert(family->begin(), family->end());
    for (const auto& v : g.vertices) {
        os << "  v" << v.id << " [label=\"" << (v.black ? "B" : "W") << v.id << " r"
           << v.row << "\", fillcolor=" << (v.black ? "gray20, fontcolor=white" : "white")
           << ", pos=\"" << v.qx << "," << v.qy << "!\"];\n";
    }
    for (const auto& e : g.edges) {
        os << "  v" << e.tail << " -> v" << e.head << " [";
        switch (e.cls) {
            case EdgeClass::Horizontal:
                os << "style=solid, label=\"" << (e.white_black ? "N(" : "S(")
                   << e.hface.first << "," << e.hface.second << ")\"";
                break;
            case EdgeClass::Vertical: os << "style=dashed"; break;
            case EdgeClass::Diagonal: os << "style=dotted"; break;
        }
        if (!e.in_g) os << ", color=gray";
        if (fam.count(e.id)) os << ", color=red, penwidth=2";
        os << "];\n";
    }
    if (family) {
        os << "  // sources and sinks of the highlighted family\n";
    }
    os << "}\n";
    return os.str();
}

std::string dump_matchings(const OpenFaceGraph& g, const SteppedSurface& s) {
    std::ostringstream os;
    auto ms = enumerate_matchings(g);
    os << "matchings " << ms.size() << "\n";
    for (size_t idx = 0; idx < ms.size(); ++idx) {
        const auto& m = ms[idx];
        os << "M" << idx << " edges";
        for (int e : m) os << " " << e;
        os << "\n";
        os << "  w_f = " << render(face_weight(g, m)) << "\n";
        os << "  w_p = " << render(pairing_weight(s, perfect_pairing(g, m))) << "\n";
        if (g.closure) {
            Matching mbar = extend_matching(g, m);
            os << "  w_e = " << render(edge_weight_set(g, mbar)) << "\n";
        }
    }
    return os.str();
}

std::string matrix_to_text(const NetworkMatrix& m) {
    std::ostringstream os;
    int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const LaurentPoly& p = m.m[i][j];
            if (p.is_zero()) continue;
            os << "  [" << (m.rmin + i) << "," << (m.rmin + j) << "] " << render(p) << "\n";
        }
    return os.str();
}

std::string dump_network(const OpenFaceGraph& gbar, const SteppedSurface& s) {
    (void)s;
    std::ostringstream os;
    Network net = build_network(gbar);
    os << "rows " << net.rmin << ".." << net.rmax << "\n";
    os << "chips " << net.chips.size() << "\n";
    for (size_t i = 0; i < net.chips.size(); ++i) {
        const Chip& c = net.chips[i];
        os << "chip " << i << " " << chip_variant_name(c.variant) << " row " << c.row
           << " square (" << c.a.first << "," << c.a.second << ")\n";
        os << matrix_to_text(chip_matrix(c, gbar, net.rmin, net.rmax, false));
    }
    os << "network matrix\n" << matrix_to_text(network_matrix(net, gbar, false));
    return os.str();
}

std::string poly_to_json(const LaurentPoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : p.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = t.coeff.to_string();
        auto vars = nlohmann::ordered_json::array();
        for (const auto& [v, e] : t.exps)
            vars.push_back({var_name(v), e});
        term["vars"] = vars;
        terms.push_back(term);
    }
    nlohmann::ordered_json j;
    j["terms"] = terms;
    j["text"] = render(p);
    return j.dump();
}

}  // namespace tsys
