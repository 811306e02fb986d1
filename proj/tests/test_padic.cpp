#include <doctest.h>

#include "phg/errors.hpp"
#include "phg/padic.hpp"

#include <random>

using namespace phg;

namespace {
const PrimeContext q5 = PrimeContext::make(5, 6);

Rational rat(long n, long d = 1) { return Rational(Int(n), Int(d)); }

// Legendre sum: ord_p(n!) = sum_k floor(n/p^k) -- independent of the digit formula.
Int legendre(Int n, std::int64_t p) {
    Int acc = 0;
    while (n > 0) {
        n /= p;
        acc += n;
    }
    return acc;
}
} // namespace

TEST_CASE("from_rational valuation and unit") {
    PAdic x = PAdic::from_rational(75, q5);
    CHECK(x.val() == 2);
    CHECK(x.unit() % 5 == 3);
    CHECK(x.rep_mod(3) == 75);

    PAdic y = PAdic::from_rational(rat(7, 5), q5);
    CHECK(y.val() == -1);

    // 1/2 = (5^6+1)/2 mod 5^6
    PAdic h = PAdic::from_rational(rat(1, 2), q5);
    CHECK(h.val() == 0);
    CHECK(h.unit() == 7813);
}

TEST_CASE("from_rational errors") {
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(PrimeContext::make(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(PrimeContext::make(5, 0), std::invalid_argument);
}

TEST_CASE("additive identity keeps the other operand's precision") {
    PAdic z = PAdic::exact_zero(q5);
    PAdic y = PAdic::from_rational(rat(7, 3), q5);
    PAdic s = z + y;
    CHECK(s.abs_prec() == y.abs_prec());
    CHECK(s.congruent_mod(y, 6));
}

TEST_CASE("valuation additivity under multiplication") {
    PAdic x = PAdic::from_rational(5, q5);
    PAdic y = PAdic::from_rational(50, q5);
    CHECK((x * y).val() == 3);
}

TEST_CASE("field arithmetic matches rational arithmetic") {
    PAdic x = PAdic::from_rational(rat(1, 2), q5);
    PAdic y = PAdic::from_rational(rat(1, 3), q5);
    CHECK((x + y).congruent_mod(PAdic::from_rational(rat(5, 6), q5), 6));
    CHECK((x * y).congruent_mod(PAdic::from_rational(rat(1, 6), q5), 6));
    CHECK((x / y).congruent_mod(PAdic::from_rational(rat(3, 2), q5), 6));
}

TEST_CASE("division by zero-like values") {
    PAdic y = PAdic::from_rational(3, q5);
    CHECK_THROWS_AS(y / PAdic::exact_zero(q5), precision_error);
    CHECK_THROWS_AS(y / PAdic::zero_mod(q5, 4), precision_error);
}

TEST_CASE("context mismatch is rejected") {
    PAdic x = PAdic::from_rational(1, q5);
    PAdic y = PAdic::from_rational(1, PrimeContext::make(7, 6));
    CHECK_THROWS_AS(x + y, std::invalid_argument);
}

TEST_CASE("cancellation tracks lost digits") {
    PAdic x = PAdic::from_rational(126, q5); // 1 + 5^3
    PAdic y = PAdic::from_rational(-1, q5);
    PAdic d = x + y;
    CHECK(d.val() == 3);
    CHECK(d.abs_prec() == 6); // absolute knowledge unchanged, relative digits fewer
    CHECK(d.rel_prec() == 3);
}

TEST_CASE("digit sums") {
    CHECK(s_p(10, 3) == 2);
    CHECK(s_p(7, 2) == 3);
    CHECK(s_p(0, 5) == 0);
}

TEST_CASE("ord of factorial") {
    CHECK(ord_factorial(4, 2) == 3);
    CHECK(ord_factorial(5, 5) == 1);
    CHECK(ord_factorial(10, 3) == legendre(10, 3));
    for (std::int64_t p : {2, 3, 5, 7, 11})
        for (Int n = 0; n <= 2000; ++n)
            REQUIRE(ord_factorial(n, p) == legendre(n, p));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(rat(7, 3), 0) == 1);
    CHECK(pochhammer(rat(2), 3) == 24);
    CHECK(pochhammer(rat(-5), 7) == 0);
    PAdic s = PAdic::from_rational(2, q5);
    CHECK(pochhammer(s, 3).congruent_mod(PAdic::from_rational(24, q5), 6));
}

TEST_CASE("teichmuller representatives") {
    CHECK(teichmuller(PAdic::one(q5)).congruent_mod(PAdic::one(q5), 6));

    PAdic w2 = teichmuller(PAdic::from_rational(2, q5));
    CHECK(w2.rep_mod(2) == 7); // 2^5 mod 25

    PAdic w4 = teichmuller(PAdic::from_rational(4, q5));
    CHECK(w4.congruent_mod(PAdic::from_rational(-1, q5), 6));

    CHECK_THROWS_AS(teichmuller(PAdic::from_rational(5, q5)), std::invalid_argument);
}

TEST_CASE("teichmuller is torsion and congruent to the unit") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 50; ++i) {
        long u = static_cast<long>(rng() % 10000) + 1;
        if (u % 5 == 0)
            ++u;
        PAdic x = PAdic::from_rational(u, q5);
        PAdic w = teichmuller(x);
        CHECK(w.pow(4).congruent_mod(PAdic::one(q5), 6));
        CHECK(w.congruent_mod(x, 1));
    }
}

TEST_CASE("valuation laws on random samples") {
    std::mt19937 rng(777);
    auto sample = [&]() {
        long num = static_cast<long>(rng() % 4000) + 1;
        long den = static_cast<long>(rng() % 400) + 1;
        if (rng() % 2)
            num = -num;
        return Rational(Int(num), Int(den));
    };
    for (int i = 0; i < 200; ++i) {
        Rational a = sample(), b = sample();
        PAdic x = PAdic::from_rational(a, q5), y = PAdic::from_rational(b, q5);
        CHECK((x * y).val() == x.val() + y.val());
        PAdic s = x + y;
        if (a + b != 0) {
            auto min_val = std::min(x.val(), y.val());
            if (!s.is_zeroish())
                CHECK(s.val() >= min_val);
            if (x.val() != y.val())
                CHECK(s.val() == min_val);
        }
    }
}

TEST_CASE("from_rational is a ring homomorphism on samples") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 100; ++i) {
        Rational a(Int(static_cast<long>(rng() % 999) - 499),
                   Int(static_cast<long>(rng() % 40) + 1));
        Rational b(Int(static_cast<long>(rng() % 999) - 499),
                   Int(static_cast<long>(rng() % 40) + 1));
        PAdic lhs_add = PAdic::from_rational(a + b, q5);
        PAdic lhs_mul = PAdic::from_rational(a * b, q5);
        PAdic rhs_add = PAdic::from_rational(a, q5) + PAdic::from_rational(b, q5);
        PAdic rhs_mul = PAdic::from_rational(a, q5) * PAdic::from_rational(b, q5);
        std::int64_t k_add = std::min<std::int64_t>(lhs_add.abs_prec(), rhs_add.abs_prec());
        std::int64_t k_mul = std::min<std::int64_t>(lhs_mul.abs_prec(), rhs_mul.abs_prec());
        CHECK(lhs_add.congruent_mod(rhs_add, k_add));
        CHECK(lhs_mul.congruent_mod(rhs_mul, k_mul));
    }
}

TEST_CASE("rendering format") {
    CHECK(PAdic::from_rational(24, q5).render() == "4 + 4*5 + O(5^6)");
    CHECK(PAdic::from_rational(rat(7, 5), q5).render() == "2*5^-1 + 1 + O(5^5)");
    CHECK(PAdic::exact_zero(q5).render() == "0");
    CHECK(PAdic::zero_mod(q5, 4).render() == "O(5^4)");
    CHECK(PAdic::from_rational(1, q5).render() == "1 + O(5^6)");
}
