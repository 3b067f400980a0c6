#include "tsys/specialize.hpp"

#include <cstdlib>

#include "tsys/oracle.hpp"

namespace tsys {

namespace {
bool even_site(int i, int j) { return ((i + j) % 2 + 2) % 2 == 0; }
}  // namespace

CoeffScheme speyer_scheme() {
    CoeffScheme s;
    s.name = "speyer";
    s.map = [](int i, int j) {
        Monomial m = Monomial::one();
        if (even_site(i, j)) {
            m = m * Monomial::var({VarKind::SpeyerB, i, j}) *
                Monomial::var({VarKind::SpeyerD, i, j}) *
                Monomial::var({VarKind::SpeyerA, i, j}, -1) *
                Monomial::var({VarKind::SpeyerC, i, j}, -1);
        } else {
            m = m * Monomial::var({VarKind::SpeyerA, i - 1, j}) *
                Monomial::var({VarKind::SpeyerC, i + 1, j}) *
                Monomial::var({VarKind::SpeyerB, i, j - 1}, -1) *
                Monomial::var({VarKind::SpeyerD, i, j + 1}, -1);
        }
        return m;
    };
    return s;
}

CoeffScheme lambda_scheme() {
    CoeffScheme s;
    s.name = "lambda";
    s.map = [](int i, int j) {
        if (even_site(i, j))
            return Monomial::var({VarKind::Lambda, i, 0}) *
                   Monomial::var({VarKind::Mu, j, 0}, -1);
        return Monomial::var({VarKind::Mu, j, 0}) *
               Monomial::var({VarKind::Lambda, i, 0}, -1);
    };
    return s;
}

VarId pentagram_pi(int n, int kappa, int i, int j) {
    if (kappa < 3 || kappa > n - 1)
        throw Error(Errc::InvalidKappa, "need 3 <= kappa <= n-1");
    int rp = (kappa - 1) / 2;  // r' = ceil((kappa-2)/2)
    auto modn = [n](long long v) {
        int m = static_cast<int>(((v % n) + n) % n);
        return m == 0 ? n : m;
    };
    if (even_site(i, j)) {
        // p-site; pi(0,0) = p_n
        long long idx = n - ((long long)(kappa - 2) * i + (long long)kappa * j) / 2;
        return {VarKind::PenP, modn(idx), 0};
    }
    long long idx = n - rp - ((long long)(kappa - 2) * (i - 1) + (long long)kappa * j) / 2;
    return {VarKind::PenQ, modn(idx), 0};
}

CoeffScheme pentagram_scheme(int n, int kappa) {
    if (kappa < 3 || kappa > n - 1)
        throw Error(Errc::InvalidKappa, "need 3 <= kappa <= n-1");
    CoeffScheme s;
    s.name = "pentagram";
    s.map = [n, kappa](int i, int j) { return Monomial::var(pentagram_pi(n, kappa, i, j)); };
    return s;
}

LaurentPoly separation_eval(const LaurentPoly& T, const CoeffScheme& scheme) {
    LaurentPoly num = substitute_c(T, scheme.map);
    Monomial den = tropical_min_eval(eval_t_one(num));
    return num.scaled(den.inverse_vars());
}

namespace {

Site locate(int n, int kappa, VarKind kind, int ell) {
    for (int radius = 0; radius <= 2 * n + 2; ++radius)
        for (int i = -radius; i <= radius; ++i) {
            int rem = radius - std::abs(i);
            for (int j : {-rem, rem}) {
                bool want_even = kind == VarKind::PenP;
                if (even_site(i, j) != want_even) continue;
                VarId v = pentagram_pi(n, kappa, i, j);
                if (v.kind == kind && v.a == ell) return {i, j};
                if (j == 0) break;
            }
        }
    throw Error(Errc::SiteNotLocated, "no lattice site carries the requested variable");
}

}  // namespace

PentagramValue pentagram_q(int ell, int k, int n, int kappa) {
    CoeffScheme pi = pentagram_scheme(n, kappa);
    if (ell < 1 || ell > n)
        throw Error(Errc::SiteNotLocated, "index out of range");
    // even k: local maxima sit at q-labeled sites; odd k: at p-labeled ones
    VarKind kind = (k % 2 == 0) ? VarKind::PenQ : VarKind::PenP;
    Site site = locate(n, kappa, kind, ell);
    int i = site.first, j = site.second;

    OracleSolver solver(SteppedSurface::fund());
    auto tval = [&](int x, int y) {
        return substitute_c(eval_t_one(solver.value(x, y, k - 1)), pi.map);
    };
    LaurentPoly t_left = tval(i - 1, j), t_right = tval(i + 1, j);
    LaurentPoly t_down = tval(i, j - 1), t_up = tval(i, j + 1);
    LaurentPoly ic = substitute_c(coeff_I(i, j, k - 1), pi.map);
    LaurentPoly jc = substitute_c(coeff_J(i, j, k - 1), pi.map);

    PentagramValue v;
    v.num = ic * t_down * t_up;
    v.den = jc * t_left * t_right;
    return v;
}

PentagramValue pentagram_p(int ell, int k, int n, int kappa) {
    PentagramValue q = pentagram_q(ell, k + 1, n, kappa);
    return {q.den, q.num};
}

}  // namespace tsys
