#include "tsys/oracle.hpp"

#include <sstream>

namespace tsys {

const LaurentPoly& OracleSolver::value(int i, int j, int k) {
    auto key = std::make_tuple(i, j, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int h = surface_.height(i, j);
    if (k < h) {
        std::ostringstream os;
        os << "cell (" << i << "," << j << "," << k << ") below the surface";
        throw Error(Errc::ScopeViolation, os.str());
    }
    LaurentPoly result;
    if (k == h) {
        result = LaurentPoly::var(tvar(i, j));
    } else {
        // T_{k-2} T_k = J_{k-1} T_left T_right + I_{k-1} T_down T_up
        LaurentPoly lhs = coeff_J(i, j, k - 1) * value(i - 1, j, k - 1) * value(i + 1, j, k - 1) +
                          coeff_I(i, j, k - 1) * value(i, j - 1, k - 1) * value(i, j + 1, k - 1);
        result = exact_div(lhs, value(i, j, k - 2));
    }
    return memo_[key] = std::move(result);
}

LaurentPoly solve_oracle(const Instance& inst) {
    require_in_scope(inst.surface, inst.point);
    OracleSolver solver(inst.surface);
    return solver.value(inst.point.i, inst.point.j, inst.point.k);
}

LaurentPoly coefficient_at_vertex(const SteppedSurface& s, int i, int j, bool second_branch) {
    int k = s.height(i, j);
    int e1 = s.height(i, j - 1) - k;
    int e2 = s.height(i, j + 1) - k;
    int e3 = s.height(i - 1, j) - k;
    int e4 = s.height(i + 1, j) - k;
    for (int e : {e1, e2, e3, e4})
        if (e != 1 && e != -1)
            throw Error(Errc::InvalidNeighborHeights, "neighbor height step is not +-1");
    auto pos = [](int x) { return x > 0 ? 1 : 0; };
    auto pw = [](const LaurentPoly& m, int e) {
        return e ? m : LaurentPoly::one();
    };
    LaurentPoly num, den;
    if (!second_branch) {
        num = coeff_I(i, j, k - 1) * pw(coeff_J(i, j - 1, k), pos(e1)) *
              pw(coeff_J(i, j + 1, k), pos(e2));
        den = coeff_J(i, j, k - 1) * pw(coeff_I(i - 1, j, k), pos(e3)) *
              pw(coeff_I(i + 1, j, k), pos(e4));
    } else {
        num = coeff_J(i, j, k + 1) * pw(coeff_I(i - 1, j, k), pos(-e3)) *
              pw(coeff_I(i + 1, j, k), pos(-e4));
        den = coeff_I(i, j, k + 1) * pw(coeff_J(i, j - 1, k), pos(-e1)) *
              pw(coeff_J(i, j + 1, k), pos(-e2));
    }
    return num * LaurentPoly(den.leading().inverse_vars());
}

}  // namespace tsys
