#include "phg/gamma.hpp"

#include "phg/analytic.hpp"
#include "phg/digits.hpp"
#include "phg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace phg {

std::int64_t morita_pn_cap() {
    if (const char* env = std::getenv("PADIC_HG_MAX_PN")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<std::int64_t>(v);
        throw std::invalid_argument("PADIC_HG_MAX_PN: not a positive integer");
    }
    return 100000000; // 10^8
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pn_u64_checked(const PrimeContext& ctx) {
    Int pN = ctx.pN();
    std::int64_t cap = morita_pn_cap();
    if (pN > cap)
        throw precision_error("morita_gamma: p^N = " + pN.str() + " exceeds cap " +
                              std::to_string(cap) + " (PADIC_HG_MAX_PN)");
    return pN.convert_to<std::uint64_t>();
}

} // namespace

std::vector<Int> morita_gamma_batch(const std::vector<Int>& ms, const PrimeContext& ctx) {
    std::uint64_t pN = pn_u64_checked(ctx);
    // sort breakpoints, one sweep of the blocked modular product
    std::vector<std::pair<std::uint64_t, std::size_t>> order;
    order.reserve(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i] < 1 || ms[i] > Int(pN))
            throw std::invalid_argument("morita_gamma_batch: representative out of [1, p^N]");
        order.emplace_back(ms[i].convert_to<std::uint64_t>(), i);
    }
    std::sort(order.begin(), order.end());
    std::vector<Int> out(ms.size());
    std::uint64_t prod = 1;
    std::uint64_t j = 1;
    auto p = static_cast<std::uint64_t>(ctx.p);
    for (const auto& [m, idx] : order) {
        for (; j < m; ++j)
            if (j % p)
                prod = mulmod(prod, j, pN);
        std::uint64_t value = (m % 2 == 0) ? prod : (pN - prod) % pN;
        out[idx] = Int(value);
    }
    return out;
}

Int morita_gamma_int(const Int& m, const PrimeContext& ctx) {
    return morita_gamma_batch({m}, ctx)[0];
}

PAdic morita_gamma(const PAdic& x) {
    const auto& ctx = x.context();
    if (!x.is_exact_zero() && !x.is_zeroish() && x.val() < 0)
        throw hypothesis_error("x in Z_p", "morita_gamma needs nonnegative valuation");
    int known = static_cast<int>(std::min<std::int64_t>(x.abs_prec(), ctx.N));
    if (known < 1)
        throw precision_error("morita_gamma: argument has no known digits");
    Int m = x.is_exact_zero() ? Int(0) : x.rep_mod(known);
    // lift the representative into [1, p^N]
    if (m == 0)
        m = ctx.pN();
    Int g = morita_gamma_int(m, ctx);
    // |Gamma_p(x) - Gamma_p(m)| <= |x - m| <= p^-known
    return PAdic::from_parts(ctx, 0, g, known);
}

PAdic morita_gamma(const Rational& x, const PrimeContext& ctx) {
    return morita_gamma(PAdic::from_rational(x, ctx));
}

GammaRatioSpec GammaRatioSpec::make(const Rational& s1, const Rational& s2, const Rational& s3,
                                    const Rational& s4, std::int64_t p) {
    if (s1 + s2 != s3 + s4)
        throw hypothesis_error("s1+s2 = s3+s4",
                               "gamma ratio argument sums differ; the Euler-constant factor "
                               "would not cancel");
    for (const Rational* s : {&s1, &s2, &s3, &s4})
        if (ord_rational(*s, p).value_or(1) < 1)
            throw hypothesis_error("val(s_i) >= 1",
                                   "gamma ratio argument " + to_string(*s) +
                                       " has valuation < 1");
    return GammaRatioSpec{s1, s2, s3, s4};
}

PAdic gamma_phi_ratio(const GammaRatioSpec& spec, const PrimeContext& ctx) {
    std::int64_t minval = ctx.N;
    for (const Rational* s : {&spec.s1, &spec.s2, &spec.s3, &spec.s4}) {
        auto v = ord_rational(*s, ctx.p);
        if (v)
            minval = std::min(minval, *v);
    }
    int kmax = static_cast<int>(ctx.N - minval);
    // batch all gamma arguments: k = 1..kmax for the product, kmax+1 for the
    // tail obligation
    std::vector<Int> reps;
    auto push_arg = [&](const Rational& s, int k) {
        Rational arg = 1 + Rational(pow_int(ctx.p, k)) * s;
        Int m = reduce_mod_pk(arg, ctx.p, ctx.N);
        reps.push_back(m == 0 ? ctx.pN() : m);
    };
    for (int k = 1; k <= kmax + 1; ++k)
        for (const Rational* s : {&spec.s1, &spec.s2, &spec.s3, &spec.s4})
            push_arg(*s, k);
    std::vector<Int> g = morita_gamma_batch(reps, ctx);

    Int pN = ctx.pN();
    Int acc = 1;
    for (int k = 1; k <= kmax + 1; ++k) {
        std::size_t base = static_cast<std::size_t>(k - 1) * 4;
        Int num = g[base + 2] * g[base + 3] % pN;
        Int den = g[base + 0] * g[base + 1] % pN;
        Int factor = num * inv_mod(den, pN) % pN;
        if (k <= kmax) {
            acc = acc * factor % pN;
        } else if (factor != 1) {
            // every dropped factor must already be 1 mod p^N
            throw precision_error("gamma_phi_ratio: tail factor at k = " + std::to_string(k) +
                                  " is not 1 mod p^N; truncation bound violated");
        }
    }
    return PAdic::from_parts(ctx, 0, acc, ctx.N);
}

GaussRhs gauss_rhs(const HGParams& params, const PrimeContext& ctx) {
    auto f = params.flags(ctx.p);
    if (!f.alpha_in_pZ)
        throw hypothesis_error("alpha_in_pZ", "gauss_rhs requires |alpha|_p < 1");
    if (!f.beta_in_pZ)
        throw hypothesis_error("beta_in_pZ", "gauss_rhs requires |beta|_p < 1");
    if (!f.c_minus_1_in_pZ)
        throw hypothesis_error("c_minus_1_in_pZ", "gauss_rhs requires |gamma-1|_p < 1");
    Rational mu = params.mu(), nu = params.nu();
    // displayed product: numerator args mu+alpha, mu+beta; denominator mu, nu
    auto spec = GammaRatioSpec::make(mu, nu, mu + params.alpha, mu + params.beta, ctx.p);
    PAdic product = gamma_phi_ratio(spec, ctx);
    return GaussRhs{product, product.inverse()};
}

PAdic gamma_log_sum(const Rational& s, const PrimeContext& ctx) {
    auto vs = ord_rational(s, ctx.p);
    if (!vs || *vs < 1)
        throw hypothesis_error("val(s) >= 1", "gamma_log_sum domain");
    int kmax = static_cast<int>(ctx.N - *vs);
    std::vector<Int> reps;
    for (int k = 1; k <= kmax; ++k) {
        Rational arg = 1 + Rational(pow_int(ctx.p, k)) * s;
        Int m = reduce_mod_pk(arg, ctx.p, ctx.N);
        reps.push_back(m == 0 ? ctx.pN() : m);
    }
    std::vector<Int> g = morita_gamma_batch(reps, ctx);
    PAdic acc = PAdic::exact_zero(ctx);
    Branch trivial; // principal units: no branch dependence
    Int pN = ctx.pN();
    for (const Int& gv : g) {
        Int u = (pN - gv) % pN; // -Gamma_p(1 + p^k s), a principal unit
        acc = acc + plog(PAdic::from_parts(ctx, 0, u, ctx.N), trivial);
    }
    return acc + PAdic::zero_mod(ctx, ctx.N);
}

ZetaReport zeta_p_values(const PrimeContext& ctx, int n_max, const std::vector<int>& sample_js) {
    if (n_max != 3 && n_max != 5)
        throw std::invalid_argument("zeta_p_values: n_max must be 3 or 5");
    std::size_t need = (n_max == 5) ? 3 : 2;
    if (sample_js.size() < need)
        throw std::invalid_argument("zeta_p_values: not enough sample points");

    // Precision guard: the first model term beyond n_max enters each parity's
    // data at a bounded depth (PD-ideal bound ord zeta_p(n) >= n - ord_p(n!));
    // clamp the measured sums there so reported precisions stay honest.
    // Odd part drops n_max+2 first, even part n_max+1.
    std::int64_t min_vs = ctx.N;
    for (int j : sample_js) {
        auto v = ord_rational(Rational(Int(j) * ctx.p), ctx.p);
        min_vs = std::min(min_vs, *v);
    }
    auto model_bound = [&](int n0) {
        Int b = Int(n0) - ord_factorial(Int(n0), ctx.p) + Int(n0) * min_vs -
                floor_log_p(n0, ctx.p);
        return b > ctx.N ? ctx.N : b.convert_to<std::int64_t>();
    };
    std::int64_t clamp_odd = model_bound(n_max + 2);
    std::int64_t clamp_even = model_bound(n_max + 1);
    if (clamp_even < min_vs + 2 || clamp_odd < min_vs + 2)
        throw precision_error("zeta_p_values: insufficient precision for requested n_max");

    ZetaReport report;
    PAdic half = PAdic::from_rational(Rational(1, 2), ctx);
    std::vector<PAdic> G_odd, F_even;
    std::vector<Rational> svals;
    for (std::size_t i = 0; i < need; ++i) {
        Rational s = Rational(Int(sample_js[i]) * ctx.p);
        svals.push_back(s);
        PAdic Fp = gamma_log_sum(s, ctx);
        PAdic Fm = gamma_log_sum(-s, ctx);
        report.even_part_sums.push_back(Fp + Fm + PAdic::zero_mod(ctx, clamp_even));
        PAdic Fo = (Fp - Fm) * half + PAdic::zero_mod(ctx, clamp_odd);
        PAdic Fe = (Fp + Fm) * half + PAdic::zero_mod(ctx, clamp_even);
        G_odd.push_back(Fo / PAdic::from_rational(s, ctx));
        F_even.push_back(Fe);
    }

    auto from_rat = [&](const Rational& q) { return PAdic::from_rational(q, ctx); };

    if (n_max == 3) {
        // G(j) = u1 + u3 s_j^2; difference the junk linear term away
        PAdic u3 = (G_odd[1] - G_odd[0]) / from_rat(svals[1] * svals[1] - svals[0] * svals[0]);
        report.odd.push_back({3, u3 * from_rat(3)});
        // F_even(s) = u2 s^2 (first even unknown only)
        PAdic u2 = F_even[0] / from_rat(svals[0] * svals[0]);
        report.even.push_back({2, -(u2 * from_rat(2))});
        return report;
    }

    // n_max == 5: G(j) = u1 + u3 s_j^2 + u5 s_j^4
    PAdic D21 = G_odd[1] - G_odd[0];
    PAdic D32 = G_odd[2] - G_odd[1];
    PAdic A21 = from_rat(svals[1] * svals[1] - svals[0] * svals[0]);
    PAdic B21 = from_rat(svals[1] * svals[1] * svals[1] * svals[1] -
                         svals[0] * svals[0] * svals[0] * svals[0]);
    PAdic A32 = from_rat(svals[2] * svals[2] - svals[1] * svals[1]);
    PAdic B32 = from_rat(svals[2] * svals[2] * svals[2] * svals[2] -
                         svals[1] * svals[1] * svals[1] * svals[1]);
    PAdic det = A21 * B32 - A32 * B21;
    PAdic u3 = (D21 * B32 - D32 * B21) / det;
    PAdic u5 = (A21 * D32 - A32 * D21) / det;
    report.odd.push_back({3, u3 * from_rat(3)});
    report.odd.push_back({5, u5 * from_rat(5)});

    // F_even(s) = u2 s^2 + u4 s^4
    Rational s0sq = svals[0] * svals[0], s1sq = svals[1] * svals[1];
    PAdic a0 = from_rat(s0sq), b0 = from_rat(s0sq * s0sq);
    PAdic a1 = from_rat(s1sq), b1 = from_rat(s1sq * s1sq);
    PAdic det2 = a0 * b1 - a1 * b0;
    PAdic u2 = (F_even[0] * b1 - F_even[1] * b0) / det2;
    PAdic u4 = (a0 * F_even[1] - a1 * F_even[0]) / det2;
    report.even.push_back({2, -(u2 * from_rat(2))});
    report.even.push_back({4, -(u4 * from_rat(4))});
    return report;
}

} // namespace phg
