#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qrr/factor_bag.hpp"
#include "qrr/qfuncs.hpp"
#include "qrr/series.hpp"

using namespace qrr;

namespace {
const Exponent O20 = Exponent::integer(20);

Series random_series(std::mt19937_64& rng, Exponent order) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Series s(Exponent::integer(-2), order);
    for (Exponent e = s.floor(); e <= order; e += Exponent::from_steps(1))
        s.set(e, mpq_class(coeff(rng)));
    return s;
}
}  // namespace

TEST_CASE("exponent grid and printing") {
    CHECK(Exponent::half(7).str() == "7/2");
    CHECK(Exponent::integer(-3).str() == "-3");
    CHECK(Exponent::half(7) + Exponent::half(1) == Exponent::integer(4));
    CHECK(Exponent::half(7).is_integral() == false);
}

TEST_CASE("series ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        Series a = random_series(rng, O20), b = random_series(rng, O20), c = random_series(rng, O20);
        CHECK(Series::agree(a + b, b + a));
        CHECK(Series::agree(a * b, b * a));
        CHECK(Series::agree((a + b) + c, a + (b + c)));
        CHECK(Series::agree((a * b) * c, a * (b * c)));
        CHECK(Series::agree(a * (b + c), a * b + a * c));
    }
}

TEST_CASE("mul_one_minus and div_one_minus are inverse, exact order") {
    std::mt19937_64 rng(777);
    Series a = random_series(rng, O20);
    Series b = a;
    b.mul_one_minus(SignedAtom::neg_q_pow(Exponent::half(3)));
    CHECK(b.order() == a.order());
    b.div_one_minus(SignedAtom::neg_q_pow(Exponent::half(3)));
    CHECK(Series::agree(a, b));
}

TEST_CASE("series inversion") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        Series a = random_series(rng, O20);
        if (!a.min_exponent()) continue;
        Series inv = a.inverted();
        Series prod = a * inv;
        CHECK(Series::agree(prod, Series::one(prod.order())));
    }
    CHECK_THROWS_AS(Series::zero(O20).inverted(), ZeroLeadingTerm);
}

TEST_CASE("truncation is monotone") {
    std::mt19937_64 rng(9);
    Series a = random_series(rng, O20), b = random_series(rng, O20);
    Series full = a * b;
    Series trunc = a.truncated(Exponent::integer(10)) * b;
    CHECK(!Series::first_mismatch(full, trunc).has_value());
    CHECK(trunc.order() >= Exponent::integer(8));
}

TEST_CASE("(q;q)_inf through the pentagonal number theorem") {
    // Euler: (q;q)_inf = sum (-1)^k q^{k(3k-1)/2}
    Series e = poch_inf(SignedAtom::q_pow(Exponent::integer(1)), Exponent::integer(1), Exponent::integer(60));
    Series pent = Series::zero(Exponent::integer(60));
    for (std::int64_t k = -10; k <= 10; ++k) {
        std::int64_t g = k * (3 * k - 1) / 2;
        if (g <= 60) pent.add_at(Exponent::integer(g), mpq_class(k % 2 ? -1 : 1));
    }
    CHECK(Series::agree(e, pent));
    // Leading window: 1 - q - q^2 + q^5 + ...
    CHECK(e.at(Exponent::integer(0)) == 1);
    CHECK(e.at(Exponent::integer(1)) == -1);
    CHECK(e.at(Exponent::integer(2)) == -1);
    CHECK(e.at(Exponent::integer(3)) == 0);
    CHECK(e.at(Exponent::integer(5)) == 1);
}

TEST_CASE("1/(q;q)_inf counts partitions") {
    Series e = poch_inf(SignedAtom::q_pow(Exponent::integer(1)), Exponent::integer(1), Exponent::integer(30));
    Series p = e.inverted();
    int expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(p.at(Exponent::integer(n)) == expect[n]);
}

TEST_CASE("finite Pochhammer composition (a)_{k+l} = (a)_k (a q^k)_l incl. negatives") {
    Exponent base = Exponent::integer(1);
    Exponent ord = Exponent::integer(24);
    for (int sign : {1, -1})
        for (int es : {1, 3})  // atom exponents 1/2 and 3/2
            for (int k = -3; k <= 3; ++k)
                for (int l = -3; l <= 3; ++l) {
                    SignedAtom a{sign, Exponent::half(es)};
                    Series lhs = poch(a, base, k + l, ord);
                    SignedAtom aqk{sign, a.exp + k * base};
                    Series rhs = poch(a, base, k, ord) * poch(aqk, base, l, ord);
                    CHECK(!Series::first_mismatch(lhs, rhs).has_value());
                }
}

TEST_CASE("1/(q;q)_k vanishes for negative k (via the extended Pochhammer)") {
    // (q;q)_{-j} has a factor bag with 1/(1-q^0): its reciprocal is exactly 0.
    FactorBag bag;
    bag.mul_poch(SignedAtom::q_pow(Exponent::integer(1)), Exponent::integer(1), -2, -1);
    CHECK(bag.is_zero());
    CHECK(bag.to_series(O20).is_zero());
    // while (q;q)_{-j} itself is singular
    FactorBag bag2;
    bag2.mul_poch(SignedAtom::q_pow(Exponent::integer(1)), Exponent::integer(1), -2, 1);
    CHECK(bag2.is_singular());
    CHECK_THROWS_AS(bag2.to_series(O20), SingularPochhammer);
}

TEST_CASE("factor bag normalises negative exponents and cancels poles") {
    // (1 - q^{-2}) = -q^{-2}(1 - q^2)
    FactorBag bag;
    bag.mul_factor(SignedAtom::q_pow(Exponent::integer(-2)), 1);
    Series s = bag.to_series(O20);
    CHECK(s.at(Exponent::integer(-2)) == -1);
    CHECK(s.at(Exponent::integer(0)) == 1);
    // (1 + q^0) = 2
    FactorBag bag2;
    bag2.mul_factor(SignedAtom::neg_q_pow(Exponent::integer(0)), 3);
    CHECK(bag2.to_series(O20).at(Exponent::integer(0)) == 8);
    // difference of equal atoms is exactly zero
    FactorBag bag3;
    bag3.mul_difference(SignedAtom::q_pow(Exponent::integer(2)), SignedAtom::q_pow(Exponent::integer(2)), 1);
    CHECK(bag3.is_zero());
    // a pole cancelled by a matching zero leaves a finite value: (1-q^0)/(1-q^0) -> 1
    FactorBag bag4;
    bag4.mul_factor(SignedAtom::q_pow(Exponent::integer(0)), 1);
    bag4.mul_factor(SignedAtom::q_pow(Exponent::integer(0)), -1);
    CHECK(bag4.to_series(O20).at(Exponent::integer(0)) == 1);
}

TEST_CASE("gaussian binomials") {
    Series b = qbinom(4, 2, Exponent::integer(1), O20);
    // [4,2]_q = 1 + q + 2q^2 + q^3 + q^4
    int expect[] = {1, 1, 2, 1, 1};
    for (int n = 0; n <= 4; ++n) CHECK(b.at(Exponent::integer(n)) == expect[n]);
    CHECK(b.at(Exponent::integer(5)) == 0);
    CHECK(qbinom(4, 5, Exponent::integer(1), O20).is_zero());
    CHECK(qbinom(4, -1, Exponent::integer(1), O20).is_zero());
    // oracle: sum over 2x2 box lattice paths  sum_{la in 2x2} q^{|la|} = [4,2]_q
    Series oracle = Series::zero(O20);
    for (int a = 0; a <= 2; ++a)
        for (int b2 = 0; b2 <= a; ++b2) oracle.add_at(Exponent::integer(a + b2), 1);
    CHECK(Series::agree(b, oracle));
    // Pascal rule [n,m] = [n-1,m] + q^{n-m} [n-1,m-1]
    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m <= n; ++m) {
            Series lhs = qbinom(n, m, Exponent::integer(1), O20);
            Series rhs = qbinom(n - 1, m, Exponent::integer(1), O20) +
                         qbinom(n - 1, m - 1, Exponent::integer(1), O20).shifted(Exponent::integer(n - m));
            CHECK(!Series::first_mismatch(lhs, rhs).has_value());
        }
}

TEST_CASE("theta symmetry theta(q^b; q^a) = theta(q^{a-b}; q^a)") {
    Exponent ord = Exponent::integer(60);
    for (int a = 2; a <= 12; ++a)
        for (int b = 1; b < a; ++b) {
            Series lhs = theta(SignedAtom::q_pow(Exponent::integer(b)), Exponent::integer(a), ord);
            Series rhs = theta(SignedAtom::q_pow(Exponent::integer(a - b)), Exponent::integer(a), ord);
            CHECK(!Series::first_mismatch(lhs, rhs).has_value());
        }
}

TEST_CASE("jacobi triple product against the bilateral sum") {
    Exponent ord = Exponent::integer(40);
    struct Case { SignedAtom a; Exponent base; };
    Case cases[] = {
        {SignedAtom::q_pow(Exponent::integer(1)), Exponent::integer(3)},
        {SignedAtom::neg_q_pow(Exponent::integer(1)), Exponent::integer(1)},
        {SignedAtom::neg_q_pow(Exponent::integer(0)), Exponent::integer(1)},
        {SignedAtom::q_pow(Exponent::half(3)), Exponent::integer(1)},
        {SignedAtom::q_pow(Exponent::integer(2)), Exponent::integer(5)},
        {SignedAtom::neg_q_pow(Exponent::half(1)), Exponent::half(1)},
    };
    for (const auto& c : cases) {
        Series lhs = triple_product_sum(c.a, c.base, ord);
        Series eta = poch_inf(SignedAtom::q_pow(c.base), c.base, ord);
        Series rhs = eta * theta(c.a, c.base, ord);
        CHECK(!Series::first_mismatch(lhs, rhs).has_value());
    }
}

TEST_CASE("theta vanishes exactly when the argument is a power of the base") {
    Series z = theta(SignedAtom::q_pow(Exponent::integer(3)), Exponent::integer(3), O20);
    CHECK(z.is_zero());
    Series z2 = theta(SignedAtom::q_pow(Exponent::integer(6)), Exponent::integer(3), O20);
    CHECK(z2.is_zero());
    Series nz = theta(SignedAtom::neg_q_pow(Exponent::integer(3)), Exponent::integer(3), O20);
    CHECK(!nz.is_zero());
}

TEST_CASE("theta base-splitting and square laws") {
    Exponent ord = Exponent::integer(40);
    // theta(a; q) = theta(a; q^2) * theta(a q; q^2)
    for (int es : {1, 2, 3, 5})
        for (int sign : {1, -1}) {
            SignedAtom a{sign, Exponent::half(es)};
            Series lhs = theta(a, Exponent::integer(1), ord);
            Series rhs = theta(a, Exponent::integer(2), ord) *
                         theta(SignedAtom{sign, a.exp + Exponent::integer(1)}, Exponent::integer(2), ord);
            CHECK(!Series::first_mismatch(lhs, rhs).has_value());
        }
    // theta(z; q) theta(-z; q) = theta(z^2; q^2)
    for (int es : {1, 2, 3}) {
        SignedAtom z{1, Exponent::half(es)};
        Series lhs = theta(z, Exponent::integer(1), ord) *
                     theta(SignedAtom{-1, z.exp}, Exponent::integer(1), ord);
        Series rhs = theta(SignedAtom{1, z.exp + z.exp}, Exponent::integer(2), ord);
        CHECK(!Series::first_mismatch(lhs, rhs).has_value());
    }
}
