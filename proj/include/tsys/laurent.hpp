#ifndef TSYS_LAURENT_HPP
#define TSYS_LAURENT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tsys/bigint.hpp"
#include "tsys/error.hpp"

namespace tsys {

// Variable universe. T and Coef are the cluster variables t_{i,j} and the
// principal coefficients c_{i,j}; TailCoef(i,a) is the column tail
// tau_{i,a} = prod_{alpha>=a} c_{i,alpha}. The remaining kinds are the
// specialization alphabets (Speyer A/B/C/D, lambda-determinant lam/mu,
// pentagram p/q).
enum class VarKind : uint8_t {
    T = 0, Coef, TailCoef, SpeyerA, SpeyerB, SpeyerC, SpeyerD, Lambda, Mu, PenP, PenQ
};

struct VarId {
    VarKind kind;
    int32_t a = 0;  // i  (or the single index for Lambda/Mu/PenP/PenQ)
    int32_t b = 0;  // j  (or tail base index)

    friend bool operator==(const VarId& x, const VarId& y) {
        return x.kind == y.kind && x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const VarId& x, const VarId& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

inline VarId tvar(int i, int j) { return {VarKind::T, i, j}; }
inline VarId cvar(int i, int j) { return {VarKind::Coef, i, j}; }
inline VarId tauvar(int i, int a) { return {VarKind::TailCoef, i, a}; }

std::string var_name(const VarId& v);

// Sparse exponent vector, strictly sorted by VarId, no zero exponents.
using ExpVec = std::vector<std::pair<VarId, int32_t>>;

long long grade(const ExpVec& e);
// Graded-lexicographic group order on exponent vectors.
bool grlex_less(const ExpVec& x, const ExpVec& y);
ExpVec exp_mul(const ExpVec& x, const ExpVec& y);
ExpVec exp_div(const ExpVec& x, const ExpVec& y);
ExpVec exp_inv(const ExpVec& x);

struct Monomial {
    BigInt coeff;
    ExpVec exps;

    static Monomial one() { return {BigInt(1), {}}; }
    static Monomial var(VarId v, int e = 1) {
        if (e == 0) return one();
        return {BigInt(1), {{v, e}}};
    }
    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        return {x.coeff * y.coeff, exp_mul(x.exps, y.exps)};
    }
    Monomial inverse_vars() const { return {coeff, exp_inv(exps)}; }
    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.coeff == y.coeff && x.exps == y.exps;
    }
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Monomial& m) {
        if (!m.coeff.is_zero()) terms_.push_back(m);
    }
    explicit LaurentPoly(long long n) {
        if (n != 0) terms_.push_back({BigInt(n), {}});
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }
    static LaurentPoly var(VarId v, int e = 1) { return LaurentPoly(Monomial::var(v, e)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].exps.empty() && terms_[0].coeff.is_one();
    }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    const Monomial& leading() const { return terms_.back(); }

    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !(x == y); }

    // Built from a coefficient map; drops zeros, sorts by grlex.
    static LaurentPoly from_map(std::map<ExpVec, BigInt>&& m);

    // Multiplication by a single monomial (no tail normalization).
    LaurentPoly scaled(const Monomial& m) const;

    // All variables set to 1; the integer sum of coefficients.
    BigInt value_at_one() const;

private:
    friend LaurentPoly mul_raw(const LaurentPoly& x, const LaurentPoly& y);
    std::vector<Monomial> terms_;  // grlex ascending
};

// --- module operations ------------------------------------------------------

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
// Canonical product; runs normalize_tails on the result.
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

// Multivariate Laurent long division with grlex leading-term matching.
// Throws NotDivisible when the quotient is not an exact Laurent polynomial.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

// Rewrites tau_{i,a} = c_{i,a} * tau_{i,a+1} so that within every column the
// single largest base index present is used. Net tail exponents preserved.
LaurentPoly normalize_tails(const LaurentPoly& p);

// Identity when no TailCoef variable occurs; throws ResidualTail otherwise.
const LaurentPoly& assert_tail_free(const LaurentPoly& p);

// Replaces every c_{i,j} by scheme(i,j). The input must be tail-free.
LaurentPoly substitute_c(const LaurentPoly& p,
                         const std::function<Monomial(int, int)>& scheme);

// Componentwise-minimum monomial over the support (tropical semifield sum).
// Requires a nonzero, subtraction-free, t-free polynomial.
Monomial tropical_min_eval(const LaurentPoly& p);

// All T variables set to 1.
LaurentPoly eval_t_one(const LaurentPoly& p);

// Expands every tail up to column index `horizon` (test helper; requires all
// tail exponents to telescope within the horizon).
LaurentPoly expand_tails(const LaurentPoly& p, int horizon);

// Linear-time accumulator for large sums of polynomials (partition
// functions); avoids the quadratic cost of repeated operator+.
class PolyAccum {
public:
    void add(const LaurentPoly& p) {
        for (const auto& t : p.terms()) m_[t.exps] += t.coeff;
    }
    void add_scaled(const LaurentPoly& p, const Monomial& s) {
        for (const auto& t : p.terms()) m_[exp_mul(t.exps, s.exps)] += t.coeff * s.coeff;
    }
    LaurentPoly take() { return LaurentPoly::from_map(std::move(m_)); }

private:
    std::map<ExpVec, BigInt> m_;
};

// Canonical text form, the single normal form used by goldens and the CLI.
std::string render(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& text);

}  // namespace tsys

#endif
