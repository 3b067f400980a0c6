#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tsys/laurent.hpp"

using namespace tsys;

namespace {

// deterministic small-poly generator for property checks
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

LaurentPoly random_poly(Rng& rng, int max_terms, bool positive = false, bool tfree = false) {
    const VarId vars[] = {tvar(0, 0), tvar(1, 0), cvar(0, 0), cvar(0, 1), cvar(1, 1)};
    LaurentPoly p;
    int n = rng.range(1, max_terms);
    for (int t = 0; t < n; ++t) {
        int c = positive ? rng.range(1, 4) : rng.range(-3, 3);
        if (c == 0) c = 1;
        Monomial m{BigInt(c), {}};
        for (const VarId& v : vars) {
            if (tfree && v.kind == VarKind::T) continue;
            int e = rng.range(-2, 2);
            if (e != 0) m.exps = exp_mul(m.exps, ExpVec{{v, e}});
        }
        p += LaurentPoly(m);
    }
    return p;
}

}  // namespace

TEST_CASE("addition") {
    LaurentPoly p = parse_poly("c[0,0]*t[0,0] + t[1,0]");
    CHECK(LaurentPoly::zero() + p == p);
    CHECK(p + (-p) == LaurentPoly::zero());

    LaurentPoly sum = parse_poly("c[0,0]*t[0,0]") + parse_poly("t[0,0]");
    CHECK(sum.term_count() == 2);
    CHECK(render(sum) == "t[0,0] + t[0,0]*c[0,0]");
}

TEST_CASE("multiplication") {
    CHECK(LaurentPoly::var(tvar(0, 0)) * LaurentPoly::var(tvar(0, 0), -1) ==
          LaurentPoly::one());

    // tail ratio reduces to a finite c product
    LaurentPoly ratio = LaurentPoly::var(tauvar(0, 4)) * LaurentPoly::var(tauvar(0, 10), -1);
    CHECK(render(ratio) == "c[0,4]*c[0,5]*c[0,6]*c[0,7]*c[0,8]*c[0,9]");

    LaurentPoly x = LaurentPoly::var(tvar(0, 0)), y = LaurentPoly::var(tvar(1, 0));
    CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("exact division") {
    // the one-step recurrence numerator over t_{0,0}
    LaurentPoly num = parse_poly("c[0,0]*t[-1,0]*t[1,0] + t[0,-1]*t[0,1]");
    LaurentPoly q = exact_div(num, LaurentPoly::var(tvar(0, 0)));
    CHECK(render(q) == "t[0,-1]*t[0,0]^-1*t[0,1] + t[-1,0]*t[0,0]^-1*t[1,0]*c[0,0]");

    CHECK(exact_div(num, LaurentPoly::one()) == num);

    LaurentPoly x = LaurentPoly::var(tvar(0, 0)), y = LaurentPoly::var(tvar(1, 0));
    CHECK(exact_div(x * x - y * y, x + y) == x - y);

    CHECK_THROWS_AS(exact_div(x + y, x + y + LaurentPoly::one()), Error);
    CHECK_THROWS_AS(exact_div(x, x + y), Error);
}

TEST_CASE("division roundtrip on random inputs") {
    Rng rng(7);
    for (int it = 0; it < 60; ++it) {
        LaurentPoly a = random_poly(rng, 6), b = random_poly(rng, 6);
        if (b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("ring laws on random inputs") {
    Rng rng(11);
    for (int it = 0; it < 40; ++it) {
        LaurentPoly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("normalize_tails") {
    LaurentPoly two_tails(Monomial{BigInt(1), ExpVec{{tauvar(0, 4), 1}, {tauvar(0, 10), -1}}});
    CHECK(render(normalize_tails(two_tails)) == "c[0,4]*c[0,5]*c[0,6]*c[0,7]*c[0,8]*c[0,9]");

    // a single tail is already at the largest base present
    LaurentPoly lone = LaurentPoly::var(tauvar(0, 4));
    CHECK(normalize_tails(lone) == lone);

    LaurentPoly no_tails = parse_poly("c[0,0]*t[0,1] + 2*t[1,0]");
    CHECK(normalize_tails(no_tails) == no_tails);

    // idempotence and value preservation under finite expansion
    Rng rng(13);
    for (int it = 0; it < 20; ++it) {
        LaurentPoly base = random_poly(rng, 3);
        LaurentPoly p = base * LaurentPoly::var(tauvar(0, rng.range(-2, 2))) +
                        base * LaurentPoly::var(tauvar(0, rng.range(3, 5)), 1);
        LaurentPoly n = normalize_tails(p);
        CHECK(normalize_tails(n) == n);
        CHECK(expand_tails(p, 9) == expand_tails(n, 9));
    }
}

TEST_CASE("assert_tail_free") {
    LaurentPoly clean = parse_poly("c[0,0]*t[0,1]");
    CHECK(assert_tail_free(clean) == clean);
    LaurentPoly dirty = LaurentPoly::var(tauvar(0, 4)) * LaurentPoly::var(cvar(1, 1));
    CHECK_THROWS_AS(assert_tail_free(dirty), Error);
}

TEST_CASE("substitute_c") {
    LaurentPoly p = parse_poly("c[0,0]*t[1,0]");
    auto speyer00 = [](int i, int j) {
        return Monomial::var({VarKind::SpeyerB, i, j}) * Monomial::var({VarKind::SpeyerD, i, j}) *
               Monomial::var({VarKind::SpeyerA, i, j}, -1) *
               Monomial::var({VarKind::SpeyerC, i, j}, -1);
    };
    CHECK(render(substitute_c(p, speyer00)) ==
          "t[1,0]*A[0,0]^-1*B[0,0]*C[0,0]^-1*D[0,0]");

    auto identity = [](int i, int j) { return Monomial::var(cvar(i, j)); };
    LaurentPoly q = parse_poly("c[0,0]*t[0,-1] + 2*c[1,1]^-1");
    CHECK(substitute_c(q, identity) == q);

    auto ones = [](int, int) { return Monomial::one(); };
    CHECK(render(substitute_c(q, ones)) == "2 + t[0,-1]");
}

TEST_CASE("tropical_min_eval") {
    LaurentPoly p = parse_poly("B[0,0]*D[0,0]*A[0,0]^-1*C[0,0]^-1 + 1");
    Monomial m = tropical_min_eval(p);
    CHECK(render(LaurentPoly(m)) == "A[0,0]^-1*C[0,0]^-1");

    Monomial single = tropical_min_eval(parse_poly("5*c[0,0]^2*c[0,1]^-1"));
    CHECK(render(LaurentPoly(single)) == "c[0,0]^2*c[0,1]^-1");

    CHECK(render(LaurentPoly(tropical_min_eval(parse_poly("c[0,0] + c[0,0]*c[0,1]")))) ==
          "c[0,0]");

    CHECK_THROWS_AS(tropical_min_eval(parse_poly("c[0,0] + -1*c[0,1]")), Error);
    CHECK_THROWS_AS(tropical_min_eval(parse_poly("t[0,0] + c[0,1]")), Error);
}

TEST_CASE("tropical evaluation is multiplicative") {
    Rng rng(17);
    for (int it = 0; it < 40; ++it) {
        LaurentPoly p = random_poly(rng, 4, true, true);
        LaurentPoly q = random_poly(rng, 4, true, true);
        Monomial lhs = tropical_min_eval(p * q);
        Monomial rhs = tropical_min_eval(p) * tropical_min_eval(q);
        rhs.coeff = BigInt(1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("eval_t_one") {
    CHECK(eval_t_one(LaurentPoly::var(tvar(0, 0), -1)) == LaurentPoly::one());
    CHECK(render(eval_t_one(parse_poly("3*t[0,0]^2 + 5*t[1,0]"))) == "8");
    LaurentPoly p = parse_poly("c[0,0]*t[-1,0]*t[0,0]^-1*t[1,0] + t[0,-1]*t[0,0]^-1*t[0,1]");
    CHECK(render(eval_t_one(p)) == "1 + c[0,0]");
}

TEST_CASE("canonical text roundtrip") {
    Rng rng(23);
    for (int it = 0; it < 50; ++it) {
        LaurentPoly p = random_poly(rng, 6);
        CHECK(parse_poly(render(p)) == p);
    }
    CHECK(render(LaurentPoly::zero()) == "0");
    CHECK(parse_poly("0") == LaurentPoly::zero());
    CHECK(render(parse_poly("-1*t[0,0] + 1")) == "1 + -1*t[0,0]");
}

TEST_CASE("bigint arithmetic") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-987654321098765432109876543210");
    CHECK((a * b).to_string() == "-121932631137021795226185032733622923332237463801111263526900");
    BigInt q, r;
    BigInt::divmod(b, a, q, r);
    CHECK((q * a + r) == b);
    CHECK(BigInt((long long)1) + BigInt(-1) == BigInt(0));
}
