#pragma once

#include "phg/hg_params.hpp"
#include "phg/padic.hpp"

#include <vector>

namespace phg {

// p^N cap for the factorial-product evaluation; PADIC_HG_MAX_PN overrides.
std::int64_t morita_pn_cap();

// Gamma_p at the integer representative m in [1, p^N], computed modulo p^N
// as (-1)^m * prod_{0<j<m, p !| j} j.
Int morita_gamma_int(const Int& m, const PrimeContext& ctx);

// One sweep of the factorial product collecting values at many integer
// representatives (each in [1, p^N]).
std::vector<Int> morita_gamma_batch(const std::vector<Int>& ms, const PrimeContext& ctx);

// Morita's p-adic gamma on Z_p, by continuity |G(x)-G(y)| <= |x-y| from the
// integer reduction.
PAdic morita_gamma(const PAdic& x);
PAdic morita_gamma(const Rational& x, const PrimeContext& ctx);

// Arguments of the ratio G(s1)G(s2) / (G(s3)G(s4)) of the exp/zeta-series
// gamma. The sum condition s1+s2 = s3+s4 removes the Euler-constant factor;
// every argument needs valuation >= 1 so the product over k telescopes in
// precision.
struct GammaRatioSpec {
    Rational s1, s2, s3, s4;

    static GammaRatioSpec make(const Rational& s1, const Rational& s2, const Rational& s3,
                               const Rational& s4, std::int64_t p);
};

// prod_{k>=1} [Gamma_p(1+p^k s3) Gamma_p(1+p^k s4)] /
//             [Gamma_p(1+p^k s1) Gamma_p(1+p^k s2)]
// truncated at k = N - min val(s_i); the first dropped factor is asserted
// to be 1 mod p^N at runtime.
PAdic gamma_phi_ratio(const GammaRatioSpec& spec, const PrimeContext& ctx);

// The limit-at-1 product with mu = 1-gamma, nu = alpha+beta+1-gamma:
//   prod_k Gamma_p(1+p^k mu+p^k alpha) Gamma_p(1+p^k mu+p^k beta)
//        / (Gamma_p(1+p^k mu) Gamma_p(1+p^k nu)),
// returned together with its reciprocal so callers can resolve which
// orientation agrees with independent evaluations.
struct GaussRhs {
    PAdic product;
    PAdic reciprocal;
};
GaussRhs gauss_rhs(const HGParams& params, const PrimeContext& ctx);

// log of the unit part: F(s) = sum_k log(-Gamma_p(1+p^k s)). The ratio above
// satisfies log ratio = F(s3)+F(s4)-F(s1)-F(s2).
PAdic gamma_log_sum(const Rational& s, const PrimeContext& ctx);

struct ZetaEstimate {
    int n = 0;
    PAdic value;
};

struct ZetaReport {
    std::vector<ZetaEstimate> odd;       // zeta_p(3) [, zeta_p(5)]
    std::vector<ZetaEstimate> even;      // zeta_p(2) [, zeta_p(4)] -- expected 0
    std::vector<PAdic> even_part_sums;   // F(s)+F(-s) per sample -- expected 0
};

// Extracts zeta_p(3), zeta_p(5), ... from samples s = j*p by antisymmetrizing
// F (killing the even part and isolating the unknown linear term in the odd
// part) and solving the small linear system; the symmetric part yields the
// even coefficients, which must vanish. Reported precisions are clamped by
// the bound on the first model term beyond n_max.
ZetaReport zeta_p_values(const PrimeContext& ctx, int n_max, const std::vector<int>& sample_js);

} // namespace phg
