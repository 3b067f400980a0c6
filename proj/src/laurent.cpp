#include "tsys/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace tsys {

std::string var_name(const VarId& v) {
    std::ostringstream os;
    switch (v.kind) {
        case VarKind::T: os << "t[" << v.a << "," << v.b << "]"; return os.str();
        case VarKind::Coef: os << "c[" << v.a << "," << v.b << "]"; return os.str();
        case VarKind::TailCoef: os << "tau[" << v.a << "," << v.b << "]"; return os.str();
        case VarKind::SpeyerA: os << "A[" << v.a << "," << v.b << "]"; return os.str();
        case VarKind::SpeyerB: os << "B[" << v.a << "," << v.b << "]"; return os.str();
        case VarKind::SpeyerC: os << "C[" << v.a << "," << v.b << "]"; return os.str();
        case VarKind::SpeyerD: os << "D[" << v.a << "," << v.b << "]"; return os.str();
        case VarKind::Lambda: os << "lam[" << v.a << "]"; return os.str();
        case VarKind::Mu: os << "mu[" << v.a << "]"; return os.str();
        case VarKind::PenP: os << "p[" << v.a << "]"; return os.str();
        case VarKind::PenQ: os << "q[" << v.a << "]"; return os.str();
    }
    return "?";
}

long long grade(const ExpVec& e) {
    long long g = 0;
    for (const auto& [v, x] : e) g += x;
    return g;
}

bool grlex_less(const ExpVec& x, const ExpVec& y) {
    long long gx = grade(x), gy = grade(y);
    if (gx != gy) return gx < gy;
    // lex on the merged variable walk; missing entries are zero
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            // y has exponent 0 here
            if (x[i].second != 0) return x[i].second < 0;
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            if (y[j].second != 0) return y[j].second > 0;
            ++j;
        } else {
            if (x[i].second != y[j].second) return x[i].second < y[j].second;
            ++i;
            ++j;
        }
    }
    return false;
}

ExpVec exp_mul(const ExpVec& x, const ExpVec& y) {
    ExpVec r;
    r.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            r.push_back(y[j++]);
        } else {
            int32_t e = x[i].second + y[j].second;
            if (e != 0) r.push_back({x[i].first, e});
            ++i;
            ++j;
        }
    }
    return r;
}

ExpVec exp_inv(const ExpVec& x) {
    ExpVec r = x;
    for (auto& [v, e] : r) e = -e;
    return r;
}

ExpVec exp_div(const ExpVec& x, const ExpVec& y) { return exp_mul(x, exp_inv(y)); }

namespace {
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return grlex_less(a, b); }
};
}  // namespace

LaurentPoly LaurentPoly::from_map(std::map<ExpVec, BigInt>&& m) {
    std::vector<Monomial> terms;
    terms.reserve(m.size());
    for (auto& [e, c] : m)
        if (!c.is_zero()) terms.push_back({std::move(c), e});
    std::sort(terms.begin(), terms.end(),
              [](const Monomial& a, const Monomial& b) { return grlex_less(a.exps, b.exps); });
    LaurentPoly p;
    p.terms_ = std::move(terms);
    return p;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
    // both inputs sorted: linear merge
    std::vector<Monomial> out;
    out.reserve(x.terms_.size() + y.terms_.size());
    size_t i = 0, j = 0;
    while (i < x.terms_.size() || j < y.terms_.size()) {
        bool take_x;
        if (j == y.terms_.size()) take_x = true;
        else if (i == x.terms_.size()) take_x = false;
        else if (x.terms_[i].exps == y.terms_[j].exps) {
            BigInt c = x.terms_[i].coeff + y.terms_[j].coeff;
            if (!c.is_zero()) out.push_back({std::move(c), x.terms_[i].exps});
            ++i;
            ++j;
            continue;
        } else {
            take_x = grlex_less(x.terms_[i].exps, y.terms_[j].exps);
        }
        if (take_x) out.push_back(x.terms_[i++]);
        else out.push_back(y.terms_[j++]);
    }
    LaurentPoly r;
    r.terms_ = std::move(out);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return x + (-y); }

LaurentPoly mul_raw(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.is_zero() || y.is_zero()) return LaurentPoly();
    // large products: build all cross terms, sort once, collapse runs
    std::vector<Monomial> prod;
    prod.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& a : x.terms_)
        for (const auto& b : y.terms_)
            prod.push_back({a.coeff * b.coeff, exp_mul(a.exps, b.exps)});
    std::sort(prod.begin(), prod.end(),
              [](const Monomial& a, const Monomial& b) { return grlex_less(a.exps, b.exps); });
    std::vector<Monomial> out;
    out.reserve(prod.size());
    for (auto& t : prod) {
        if (!out.empty() && out.back().exps == t.exps) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    LaurentPoly r;
    r.terms_ = std::move(out);
    return r;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    return normalize_tails(mul_raw(x, y));
}

LaurentPoly LaurentPoly::scaled(const Monomial& m) const {
    if (m.coeff.is_zero()) return LaurentPoly();
    std::map<ExpVec, BigInt> r;
    for (const auto& t : terms_) r[exp_mul(t.exps, m.exps)] = t.coeff * m.coeff;
    return from_map(std::move(r));
}

BigInt LaurentPoly::value_at_one() const {
    BigInt s;
    for (const auto& t : terms_) s += t.coeff;
    return s;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

namespace {

// Per-variable exponent window of the exact quotient num/den: for each
// variable v, min_v(q) = min_v(num) - min_v(den) and max_v(q) = max_v(num) -
// max_v(den). A quotient term escaping the window proves non-divisibility.
struct ExpBox {
    std::map<VarId, std::pair<int64_t, int64_t>> window;

    static std::map<VarId, std::pair<int64_t, int64_t>> ranges(const LaurentPoly& p) {
        std::map<VarId, std::pair<int64_t, int64_t>> r;
        for (const auto& t : p.terms())
            for (const auto& [v, e] : t.exps) r[v] = {0, 0};
        for (const auto& t : p.terms()) {
            std::map<VarId, int32_t> row;
            for (const auto& [v, e] : t.exps) row[v] = e;
            for (auto& [v, lohi] : r) {
                auto it = row.find(v);
                int64_t e = it == row.end() ? 0 : it->second;
                if (&t == &p.terms().front()) { lohi = {e, e}; continue; }
                lohi.first = std::min(lohi.first, e);
                lohi.second = std::max(lohi.second, e);
            }
        }
        return r;
    }

    ExpBox(const LaurentPoly& num, const LaurentPoly& den) {
        auto rn = ranges(num), rd = ranges(den);
        std::map<VarId, std::pair<int64_t, int64_t>> all;
        for (const auto& [v, lohi] : rn) all[v] = lohi;
        for (const auto& [v, lohi] : rd) {
            auto it = all.find(v);
            if (it == all.end()) all[v] = {0 - lohi.second, 0 - lohi.first};
            else it->second = {it->second.first - lohi.second, it->second.second - lohi.first};
        }
        window = std::move(all);
    }

    bool contains(const ExpVec& e) const {
        for (const auto& [v, x] : e) {
            auto it = window.find(v);
            if (it == window.end()) return false;
            if (x < it->second.first || x > it->second.second) return false;
        }
        for (const auto& [v, lohi] : window)
            if (lohi.first > 0 || lohi.second < 0) {
                bool present = false;
                for (const auto& [w, x] : e)
                    if (w == v) { present = true; break; }
                if (!present) return false;
            }
        return true;
    }
};

}  // namespace

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw Error(Errc::NotDivisible, "division by zero polynomial");
    if (num.is_zero()) return LaurentPoly();
    if (den.is_monomial()) {
        const Monomial& m = den.leading();
        std::map<ExpVec, BigInt> r;
        for (const auto& t : num.terms()) {
            BigInt q, rem;
            BigInt::divmod(t.coeff, m.coeff, q, rem);
            if (!rem.is_zero())
                throw Error(Errc::NotDivisible, "coefficient not divisible");
            r[exp_div(t.exps, m.exps)] = q;
        }
        return LaurentPoly::from_map(std::move(r));
    }

    ExpBox box(num, den);
    const Monomial& dl = den.leading();
    // in-place remainder keyed by the term order; leading term at rbegin.
    // num.terms() is already sorted, so hinted insertion builds it linearly.
    std::map<ExpVec, BigInt, GrlexLess> rem;
    for (const auto& t : num.terms()) rem.emplace_hint(rem.end(), t.exps, t.coeff);
    std::map<ExpVec, BigInt> qacc;
    size_t steps = 0;
    while (!rem.empty()) {
        if (++steps > 1000000)
            throw Error(Errc::NotDivisible, "division does not terminate");
        auto lead = std::prev(rem.end());
        BigInt qc, qrem;
        BigInt::divmod(lead->second, dl.coeff, qc, qrem);
        if (!qrem.is_zero())
            throw Error(Errc::NotDivisible, "leading coefficient not divisible");
        ExpVec qe = exp_div(lead->first, dl.exps);
        if (!box.contains(qe))
            throw Error(Errc::NotDivisible, "nonzero remainder survives");
        qacc[qe] += qc;
        for (const auto& t : den.terms()) {
            ExpVec e = exp_mul(t.exps, qe);
            auto it = rem.find(e);
            if (it == rem.end()) {
                BigInt v = -(t.coeff * qc);
                if (!v.is_zero()) rem.emplace(std::move(e), std::move(v));
            } else {
                it->second -= t.coeff * qc;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return LaurentPoly::from_map(std::move(qacc));
}

LaurentPoly normalize_tails(const LaurentPoly& p) {
    // largest tail base present per column
    std::map<int32_t, int32_t> max_base;
    bool has_tail = false;
    for (const auto& t : p.terms())
        for (const auto& [v, e] : t.exps)
            if (v.kind == VarKind::TailCoef) {
                has_tail = true;
                auto it = max_base.find(v.a);
                if (it == max_base.end()) max_base[v.a] = v.b;
                else it->second = std::max(it->second, v.b);
            }
    if (!has_tail) return p;

    std::map<ExpVec, BigInt> m;
    for (const auto& t : p.terms()) {
        ExpVec e;
        ExpVec extra;  // c factors produced by raising tail bases
        std::map<VarId, int64_t> tail_net;
        for (const auto& [v, x] : t.exps) {
            if (v.kind != VarKind::TailCoef) {
                e.push_back({v, x});
                continue;
            }
            int32_t top = max_base[v.a];
            // tau_{i,b} = (prod_{alpha=b}^{top-1} c_{i,alpha}) * tau_{i,top}
            for (int32_t al = v.b; al < top; ++al)
                extra.push_back({cvar(v.a, al), x});
            tail_net[tauvar(v.a, top)] += x;
        }
        ExpVec tails;
        for (const auto& [v, x] : tail_net)
            if (x != 0) tails.push_back({v, static_cast<int32_t>(x)});
        std::sort(extra.begin(), extra.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ExpVec cpart;
        for (const auto& [v, x] : extra) {
            if (!cpart.empty() && cpart.back().first == v) {
                cpart.back().second += x;
                if (cpart.back().second == 0) cpart.pop_back();
            } else if (x != 0) {
                cpart.push_back({v, x});
            }
        }
        m[exp_mul(exp_mul(e, cpart), tails)] += t.coeff;
    }
    return LaurentPoly::from_map(std::move(m));
}

const LaurentPoly& assert_tail_free(const LaurentPoly& p) {
    for (const auto& t : p.terms())
        for (const auto& [v, e] : t.exps)
            if (v.kind == VarKind::TailCoef)
                throw Error(Errc::ResidualTail, "tail generator " + var_name(v) + " survives");
    return p;
}

LaurentPoly substitute_c(const LaurentPoly& p,
                         const std::function<Monomial(int, int)>& scheme) {
    assert_tail_free(p);
    std::map<ExpVec, BigInt> m;
    for (const auto& t : p.terms()) {
        Monomial acc{t.coeff, {}};
        for (const auto& [v, e] : t.exps) {
            if (v.kind == VarKind::Coef) {
                Monomial img = scheme(v.a, v.b);
                ExpVec pw = img.exps;
                for (auto& [w, x] : pw) x *= e;
                BigInt cpow(1);
                if (!img.coeff.is_one()) {
                    if (e < 0)
                        throw Error(Errc::MissingScheme,
                                    "non-unit scheme coefficient under negative exponent");
                    for (int k = 0; k < e; ++k) cpow *= img.coeff;
                }
                acc = {acc.coeff * cpow, exp_mul(acc.exps, pw)};
            } else {
                acc = {acc.coeff, exp_mul(acc.exps, ExpVec{{v, e}})};
            }
        }
        m[acc.exps] += acc.coeff;
    }
    return LaurentPoly::from_map(std::move(m));
}

Monomial tropical_min_eval(const LaurentPoly& p) {
    if (p.is_zero())
        throw Error(Errc::NegativeCoefficient, "tropical evaluation of zero");
    std::map<VarId, int32_t> mins;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (t.coeff.negative())
            throw Error(Errc::NegativeCoefficient, "not subtraction-free");
        std::map<VarId, int32_t> row;
        for (const auto& [v, e] : t.exps) {
            if (v.kind == VarKind::T)
                throw Error(Errc::NotTFree, "t variable " + var_name(v) + " present");
            row[v] = e;
        }
        if (first) {
            mins = std::move(row);
            first = false;
            continue;
        }
        for (auto it = mins.begin(); it != mins.end();) {
            auto jt = row.find(it->first);
            int32_t other = jt == row.end() ? 0 : jt->second;
            it->second = std::min(it->second, other);
            if (it->second == 0) it = mins.erase(it);
            else ++it;
        }
        for (const auto& [v, e] : row)
            if (e < 0 && !mins.count(v)) mins[v] = std::min(e, 0);
    }
    Monomial r = Monomial::one();
    for (const auto& [v, e] : mins)
        if (e != 0) r.exps.push_back({v, e});
    return r;
}

LaurentPoly eval_t_one(const LaurentPoly& p) {
    std::map<ExpVec, BigInt> m;
    for (const auto& t : p.terms()) {
        ExpVec e;
        for (const auto& [v, x] : t.exps)
            if (v.kind != VarKind::T) e.push_back({v, x});
        m[e] += t.coeff;
    }
    return LaurentPoly::from_map(std::move(m));
}

LaurentPoly expand_tails(const LaurentPoly& p, int horizon) {
    std::map<ExpVec, BigInt> m;
    for (const auto& t : p.terms()) {
        ExpVec e;
        ExpVec extra;
        for (const auto& [v, x] : t.exps) {
            if (v.kind != VarKind::TailCoef) {
                e.push_back({v, x});
                continue;
            }
            if (v.b > horizon)
                throw Error(Errc::BadInput, "tail base beyond expansion horizon");
            for (int32_t al = v.b; al <= horizon; ++al) extra.push_back({cvar(v.a, al), x});
        }
        std::sort(extra.begin(), extra.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ExpVec cpart;
        for (const auto& [v, x] : extra) {
            if (!cpart.empty() && cpart.back().first == v) {
                cpart.back().second += x;
                if (cpart.back().second == 0) cpart.pop_back();
            } else if (x != 0) {
                cpart.push_back({v, x});
            }
        }
        m[exp_mul(e, cpart)] += t.coeff;
    }
    return LaurentPoly::from_map(std::move(m));
}

std::string render(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (!first) os << " + ";
        first = false;
        bool wrote = false;
        if (!t.coeff.is_one() || t.exps.empty()) {
            os << t.coeff.to_string();
            wrote = true;
        }
        for (const auto& [v, e] : t.exps) {
            if (wrote) os << "*";
            os << var_name(v);
            if (e != 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    LaurentPoly parse() {
        skip_ws();
        LaurentPoly p = parse_term();
        skip_ws();
        while (pos_ < s_.size() && s_[pos_] == '+') {
            ++pos_;
            skip_ws();
            p = p + parse_term();
            skip_ws();
        }
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw Error(Errc::BadInput, "polynomial parse error at " + std::to_string(pos_) +
                                        ": " + why);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek_digit_or_sign() {
        return pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-');
    }
    long long parse_int() {
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }
    BigInt parse_big() {
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return BigInt::from_string(s_.substr(start, pos_ - start));
    }
    std::string parse_ident() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected variable name");
        return s_.substr(start, pos_ - start);
    }
    VarId parse_var() {
        std::string name = parse_ident();
        if (pos_ >= s_.size() || s_[pos_] != '[') fail("expected [");
        ++pos_;
        int a = static_cast<int>(parse_int());
        int b = 0;
        bool two = false;
        if (pos_ < s_.size() && s_[pos_] == ',') {
            ++pos_;
            b = static_cast<int>(parse_int());
            two = true;
        }
        if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ]");
        ++pos_;
        VarKind k;
        bool needs_two = true;
        if (name == "t") k = VarKind::T;
        else if (name == "c") k = VarKind::Coef;
        else if (name == "tau") k = VarKind::TailCoef;
        else if (name == "A") k = VarKind::SpeyerA;
        else if (name == "B") k = VarKind::SpeyerB;
        else if (name == "C") k = VarKind::SpeyerC;
        else if (name == "D") k = VarKind::SpeyerD;
        else if (name == "lam") { k = VarKind::Lambda; needs_two = false; }
        else if (name == "mu") { k = VarKind::Mu; needs_two = false; }
        else if (name == "p") { k = VarKind::PenP; needs_two = false; }
        else if (name == "q") { k = VarKind::PenQ; needs_two = false; }
        else fail("unknown variable family " + name);
        if (two != needs_two) fail("wrong index arity for " + name);
        return {k, a, b};
    }
    LaurentPoly parse_term() {
        BigInt coeff(1);
        ExpVec e;
        bool any = false;
        if (peek_digit_or_sign()) {
            coeff = parse_big();
            any = true;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
            } else {
                return LaurentPoly({coeff, {}});
            }
        }
        while (true) {
            VarId v = parse_var();
            int32_t ex = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                ex = static_cast<int32_t>(parse_int());
            }
            e = exp_mul(e, ExpVec{{v, ex}});
            any = true;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        return LaurentPoly({coeff, e});
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
    Parser p(text);
    return p.parse();
}

}  // namespace tsys
