#ifndef TSYS_NETWORK_HPP
#define TSYS_NETWORK_HPP

#include <optional>
#include <vector>

#include "tsys/graph.hpp"
#include "tsys/laurent.hpp"

namespace tsys {

enum class ChipVariant : uint8_t { U, Uprime, V, Vprime, W };

const char* chip_variant_name(ChipVariant v);

// One elementary network chip: the piece of the network around one black
// vertex, cut at the white vertices. Face labels a,b,c,d are the SW, SE, NW,
// NE corners of the unit square the black vertex sits in.
struct Chip {
    ChipVariant variant;
    int row = 0;          // anchor row r (the black vertex row)
    int vertex = -1;      // black vertex id in the closure
    Site a, b, c, d;      // face labels
    int qx = 0;           // column position, used for the canonical order
};

struct Network {
    std::vector<Chip> chips;                  // canonical linear extension
    std::vector<std::pair<int, int>> order;   // precedence pairs (chip idx < chip idx)
    int rmin = 0, rmax = 0;
    int dim() const { return rmax - rmin + 1; }
};

// Square matrix of Laurent polynomials indexed by network rows.
struct NetworkMatrix {
    int rmin = 0;
    std::vector<std::vector<LaurentPoly>> m;

    static NetworkMatrix identity(int rmin, int dim);
    int dim() const { return static_cast<int>(m.size()); }
    LaurentPoly& at(int r, int c) { return m[r - rmin][c - rmin]; }
    const LaurentPoly& at(int r, int c) const { return m[r - rmin][c - rmin]; }
    friend NetworkMatrix operator*(const NetworkMatrix& x, const NetworkMatrix& y);
    friend bool operator==(const NetworkMatrix& x, const NetworkMatrix& y);
};

// Chip decomposition of the closure, one chip per black vertex, ordered by a
// deterministic linear extension of the junction precedence order
// (leftmost column first, then bottom row).
Network build_network(const OpenFaceGraph& gbar);

// The elementary network matrix of one chip over rows rmin..rmax. When
// `modified` is set the nontrivial block is divided by the chip's pbar_a
// (U', V' are unchanged).
NetworkMatrix chip_matrix(const Chip& chip, const OpenFaceGraph& gbar, int rmin, int rmax,
                          bool modified);

// Ordered product of the elementary matrices. `extension` overrides the
// canonical chip order (must be a linear extension; used by invariance tests).
NetworkMatrix network_matrix(const Network& net, const OpenFaceGraph& gbar, bool modified,
                             const std::vector<int>* extension = nullptr);

// Principal minor on rows rmin..-1 by Laplace expansion with memoization.
LaurentPoly principal_minor(const NetworkMatrix& m, int rlo, int rhi);

// T via the plain network matrix and the global tail factor Q.
LaurentPoly solve_network(const Instance& inst);
// T via the modified network matrix (must agree with solve_network).
LaurentPoly solve_network_modified(const Instance& inst);

// Alternative linear extension (bottom row first, then column); for the
// order-invariance tests.
std::vector<int> alternate_extension(const Network& net);

// Symbolic flatness check at a downward-mutable cell: substituting
// t'_c = (J t_l t_r + t_u t_d) / t_c makes
// Ubar'_{k+1} Vbar_k = Vbar'_k Ubar_{k+1}. Heights: k(c) = k+1, all four
// neighbors at k. Returns false (with the differing entry) when fed any
// other substitution.
bool flatness_check(int i, int j, int k, const LaurentPoly& tc_prime,
                    std::string* diff_entry = nullptr);

}  // namespace tsys

#endif
