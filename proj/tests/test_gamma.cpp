#include <doctest.h>

#include "phg/analytic.hpp"
#include "phg/errors.hpp"
#include "phg/gamma.hpp"

#include <random>

using namespace phg;

namespace {
const PrimeContext q5 = PrimeContext::make(5, 6);

PAdic fr(const Rational& q, const PrimeContext& c = q5) { return PAdic::from_rational(q, c); }
}

TEST_CASE("gamma at small integers") {
    CHECK(morita_gamma(Rational(1), q5).congruent_mod(fr(-1), 6)); // empty product
    CHECK(morita_gamma(Rational(6), q5).congruent_mod(fr(24), 6)); // (-1)^6 * 1*2*3*4
    CHECK(morita_gamma(Rational(2), q5).congruent_mod(fr(1), 6));
}

TEST_CASE("gamma is unit-valued on Z_p samples") {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        long num = static_cast<long>(rng() % 100000) - 50000;
        long den = static_cast<long>(rng() % 60) + 1;
        if (den % 5 == 0)
            ++den;
        PAdic g = morita_gamma(Rational(Int(num), Int(den)), q5);
        CHECK(g.val() == 0);
    }
}

TEST_CASE("gamma rejects negative valuation and caps p^N") {
    CHECK_THROWS_AS(morita_gamma(Rational(1, 5), q5), hypothesis_error);
    setenv("PADIC_HG_MAX_PN", "100", 1);
    CHECK_THROWS_AS(morita_gamma(Rational(3), q5), precision_error);
    unsetenv("PADIC_HG_MAX_PN");
}

TEST_CASE("step relation from the product definition") {
    for (long m : {1, 2, 3, 4, 5, 9, 10, 24, 25, 26, 114}) {
        PAdic ratio = morita_gamma(Rational(m + 1), q5) / morita_gamma(Rational(m), q5);
        if (m % 5 == 0)
            CHECK(ratio.congruent_mod(fr(-1), 6));
        else
            CHECK(ratio.congruent_mod(fr(-m), 6));
    }
}

TEST_CASE("continuity bound |G(x)-G(y)| <= |x-y|") {
    std::mt19937 rng(57);
    for (int i = 0; i < 60; ++i) {
        long x = static_cast<long>(rng() % 100000) + 1;
        int k = static_cast<int>(rng() % 5) + 1;
        long y = x + static_cast<long>(pow_int(5, k).convert_to<long>());
        PAdic gx = morita_gamma(Rational(x), q5);
        PAdic gy = morita_gamma(Rational(y), q5);
        PAdic d = gx - gy;
        CHECK((d.is_zeroish() || d.val() >= k));
    }
}

TEST_CASE("reflection on the principal disk: G(1+t)G(1-t) = 1") {
    for (long j = 1; j <= 20; ++j) {
        PAdic prod = morita_gamma(Rational(1 + 5 * j), q5) * morita_gamma(Rational(1 - 5 * j), q5);
        CHECK(prod.congruent_mod(fr(1), 6));
    }
}

TEST_CASE("gamma ratio degenerate and symmetric cases") {
    Rational s(5), t(25, 2);
    CHECK(gamma_phi_ratio(GammaRatioSpec::make(s, s, s, s, 5), q5).congruent_mod(fr(1), 6));
    CHECK(gamma_phi_ratio(GammaRatioSpec::make(s, t, t, s, 5), q5).congruent_mod(fr(1), 6));
}

TEST_CASE("gamma ratio invariants") {
    Rational s1(5), s2(15, 2), s3(10, 3), s4 = s1 + s2 - s3;
    PAdic r = gamma_phi_ratio(GammaRatioSpec::make(s1, s2, s3, s4, 5), q5);
    PAdic rinv = gamma_phi_ratio(GammaRatioSpec::make(s3, s4, s1, s2, 5), q5);
    CHECK((r * rinv).congruent_mod(fr(1), 6));
    // reflection at ratio level
    PAdic rneg = gamma_phi_ratio(GammaRatioSpec::make(-s1, -s2, -s3, -s4, 5), q5);
    CHECK((r * rneg).congruent_mod(fr(1), 6));
}

TEST_CASE("gamma ratio validates its invariants") {
    CHECK_THROWS_AS(GammaRatioSpec::make(Rational(5), Rational(5), Rational(5), Rational(10), 5),
                    hypothesis_error);
    CHECK_THROWS_AS(GammaRatioSpec::make(Rational(1), Rational(9), Rational(5), Rational(5), 5),
                    hypothesis_error);
}

TEST_CASE("gauss product degenerates to 1 at alpha = 0 and is symmetric") {
    HGParams degenerate{0, Rational(5, 2), Rational(8, 3)};
    CHECK(gauss_rhs(degenerate, q5).product.congruent_mod(fr(1), 6));

    HGParams ab{-5, Rational(5, 2), Rational(8, 3)};
    HGParams ba{Rational(5, 2), -5, Rational(8, 3)};
    CHECK(gauss_rhs(ab, q5).product.congruent_mod(gauss_rhs(ba, q5).product, 6));
}

TEST_CASE("log of the gamma ratio decomposes into log sums") {
    Rational mu(5, 3), nu(25, 6);
    Rational s1 = mu, s2 = nu, s3 = Rational(20, 3), s4 = Rational(-5, 6);
    PAdic ratio = gamma_phi_ratio(GammaRatioSpec::make(s1, s2, s3, s4, 5), q5);
    PAdic lhs = plog(ratio, Branch{});
    PAdic rhs = gamma_log_sum(s3, q5) + gamma_log_sum(s4, q5) - gamma_log_sum(s1, q5) -
                gamma_log_sum(s2, q5);
    PAdic d = lhs - rhs;
    CHECK((d.is_zeroish() || d.val() >= 6));
}

TEST_CASE("zeta extraction at p=5, N=6: zeros at available precision") {
    ZetaReport a = zeta_p_values(q5, 3, {1, 2});
    ZetaReport b = zeta_p_values(q5, 3, {3, 4});
    for (const auto& sum : a.even_part_sums)
        CHECK((sum.is_zeroish() && sum.abs_prec() >= 5));
    for (const auto& est : a.even)
        CHECK((est.value.is_zeroish() && est.value.abs_prec() >= 3));
    // stability across disjoint sample sets, at the joint tracked precision
    for (std::size_t i = 0; i < a.odd.size(); ++i) {
        std::int64_t k = std::min(a.odd[i].value.abs_prec(), b.odd[i].value.abs_prec());
        CHECK(k >= 3);
        CHECK(a.odd[i].value.congruent_mod(b.odd[i].value, k));
    }
}

TEST_CASE("zeta extraction at p=3, N=12: nonzero digits, stable across sets") {
    PrimeContext q3 = PrimeContext::make(3, 12);
    ZetaReport a = zeta_p_values(q3, 5, {1, 2, 4});
    ZetaReport b = zeta_p_values(q3, 5, {5, 7, 8});
    // zeta_3(3) = 2*3^2 + 3^3 + 2*3^5 + 3^6 mod 3^7: two disjoint sample sets
    // agree on four significant digits
    REQUIRE(a.odd.size() == 2);
    CHECK(a.odd[0].n == 3);
    CHECK_FALSE(a.odd[0].value.is_zeroish());
    CHECK(a.odd[0].value.val() == 2);
    CHECK(a.odd[0].value.abs_prec() >= 7);
    CHECK(a.odd[0].value.rep_mod(7) == 1260);
    std::int64_t k3 = std::min(a.odd[0].value.abs_prec(), b.odd[0].value.abs_prec());
    CHECK(a.odd[0].value.congruent_mod(b.odd[0].value, k3));
    // zeta_3(5): consistent with valuation >= 4 at the model-limited precision
    CHECK((a.odd[1].value.is_zeroish() && a.odd[1].value.abs_prec() >= 4));
    // even coefficients vanish at their tracked precisions
    REQUIRE(a.even.size() == 2);
    CHECK((a.even[0].value.is_zeroish() && a.even[0].value.abs_prec() >= 6));
    CHECK((a.even[1].value.is_zeroish() && a.even[1].value.abs_prec() >= 4));
    for (const auto& sum : a.even_part_sums)
        CHECK((sum.is_zeroish() && sum.abs_prec() >= 9));
}

TEST_CASE("zeta extraction refuses hopeless precision") {
    PrimeContext tiny = PrimeContext::make(5, 2);
    CHECK_THROWS_AS(zeta_p_values(tiny, 5, {1, 2, 3}), precision_error);
}
