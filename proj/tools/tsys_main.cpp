#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "tsys/io.hpp"
#include "tsys/matching.hpp"
#include "tsys/network.hpp"
#include "tsys/oracle.hpp"
#include "tsys/path.hpp"
#include "tsys/specialize.hpp"

namespace {

tsys::SteppedSurface load_surface(const std::string& spec) {
    if (spec == "fund") return tsys::SteppedSurface::fund();
    std::ifstream in(spec);
    if (!in) throw tsys::Error(tsys::Errc::BadInput, "cannot open surface file " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return tsys::surface_from_json(ss.str());
}

tsys::LaurentPoly run_method(const std::string& method, const tsys::Instance& inst) {
    if (method == "oracle") return tsys::solve_oracle(inst);
    if (method == "matching") return tsys::solve_matching(inst);
    if (method == "edge") return tsys::solve_edge(inst);
    if (method == "path") return tsys::solve_path(inst);
    if (method == "network") return tsys::solve_network(inst);
    throw tsys::Error(tsys::Errc::BadInput, "unknown method " + method);
}

void emit(std::ostream& os, const tsys::LaurentPoly& p, const std::string& format) {
    if (format == "json")
        os << tsys::poly_to_json(p) << "\n";
    else
        os << tsys::render(p) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for the octahedron recurrence with principal coefficients"};
    app.require_subcommand(1);

    std::vector<int> point;
    std::string surface = "fund";
    std::string method = "oracle";
    std::string format = "text";
    std::string scheme_name = "speyer";
    std::string what = "graph";
    std::string out_path;
    int pen_n = 9, pen_kappa = 3;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--point", point, "target point i j k")->expected(3)->required();
        cmd->add_option("--surface", surface, "surface JSON file or 'fund'");
    };

    CLI::App* compute = app.add_subcommand("compute", "solve T at a point");
    add_common(compute);
    compute->add_option("--method", method, "oracle|matching|edge|path|network|all");
    compute->add_option("--format", format, "text|json");

    CLI::App* exp = app.add_subcommand("export", "export graphs, matchings or the network");
    add_common(exp);
    exp->add_option("--what", what, "graph|closure|network|matchings")->required();
    exp->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* spc = app.add_subcommand("specialize", "separation-formula specialization");
    add_common(spc);
    spc->add_option("--scheme", scheme_name, "speyer|lambda|pentagram")->required();
    spc->add_option("--n", pen_n, "pentagram polygon size");
    spc->add_option("--kappa", pen_kappa, "pentagram diagonal parameter");
    spc->add_option("--format", format, "text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        tsys::Instance inst;
        inst.surface = load_surface(surface);
        inst.point = {point[0], point[1], point[2]};
        tsys::require_in_scope(inst.surface, inst.point);

        if (compute->parsed()) {
            if (method == "all") {
                tsys::LaurentPoly ref = tsys::solve_oracle(inst);
                const char* names[] = {"matching", "edge", "path", "network"};
                int agree = 1;
                for (const char* m : names) {
                    if (run_method(m, inst) != ref)
                        throw tsys::Error(tsys::Errc::NotDivisible,
                                          std::string("method ") + m + " disagrees with oracle");
                    ++agree;
                }
                emit(std::cout, ref, format);
                std::cout << agree << "/5 methods agree\n";
            } else {
                emit(std::cout, run_method(method, inst), format);
            }
        } else if (exp->parsed()) {
            std::ostringstream os;
            if (what == "graph") {
                os << tsys::dot_graph(tsys::build_graph(inst.surface, inst.point));
            } else if (what == "closure") {
                os << tsys::dot_graph(tsys::build_closure(inst.surface, inst.point));
            } else if (what == "matchings") {
                // closure-based so the dump carries w_e next to w_f and w_p
                os << tsys::dump_matchings(tsys::build_closure(inst.surface, inst.point),
                                           inst.surface);
            } else if (what == "network") {
                os << tsys::dump_network(tsys::build_closure(inst.surface, inst.point),
                                         inst.surface);
            } else {
                throw tsys::Error(tsys::Errc::BadInput, "unknown export " + what);
            }
            if (out_path.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream f(out_path, std::ios::binary);
                f << os.str();
            }
        } else if (spc->parsed()) {
            if (!inst.surface.is_fund())
                throw tsys::Error(tsys::Errc::ScopeViolation,
                                  "specialization is defined over the fund surface only");
            tsys::CoeffScheme scheme;
            if (scheme_name == "speyer") scheme = tsys::speyer_scheme();
            else if (scheme_name == "lambda") scheme = tsys::lambda_scheme();
            else if (scheme_name == "pentagram")
                scheme = tsys::pentagram_scheme(pen_n, pen_kappa);
            else
                throw tsys::Error(tsys::Errc::BadInput, "unknown scheme " + scheme_name);
            tsys::LaurentPoly T = tsys::solve_oracle(inst);
            emit(std::cout, tsys::separation_eval(T, scheme), format);
        }
    } catch (const tsys::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_user_error() ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
