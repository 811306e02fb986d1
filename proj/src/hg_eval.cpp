#include "phg/hg_eval.hpp"

#include "phg/errors.hpp"

#include <algorithm>

namespace phg {

Disk classify_disk(const Rational& z, std::int64_t p) {
    auto vz = ord_rational(z, p);
    auto vz1 = ord_rational(z - 1, p);
    if (!vz || *vz > 0)
        return Disk::Zero;
    if (*vz < 0)
        return Disk::Infinity;
    if (!vz1 || *vz1 > 0)
        return Disk::One;
    return Disk::Unsupported;
}

const char* disk_name(Disk d) {
    switch (d) {
    case Disk::Zero: return "0";
    case Disk::One: return "1";
    case Disk::Infinity: return "infinity";
    default: return "unsupported";
    }
}

namespace {

// Certified bound on the valuation deficit ord((gamma)_m / m!) <=
// 2 floor(log_p m) + maxgap + 3 for all m, from the digit-position gaps of
// -gamma. Used to stop the disk-0 series once every future term certifiably
// lies beyond p^(N+1).
struct TailGuard {
    std::int64_t maxgap;
    std::int64_t vz;
    const PrimeContext* ctx;

    bool tail_clear(std::int64_t n) const {
        // all m > n must satisfy m*vz - 2 floor(log_p m) - maxgap - 3 > N + 1;
        // m*vz - 2 log_p m is increasing for m >= 3, so the first m suffices.
        std::int64_t m = n + 1;
        if (m < 3)
            return false;
        Int lhs_exp = Int(m) * vz - maxgap - 4 - ctx->N;
        if (lhs_exp <= 0)
            return false;
        // p^(lhs_exp) > m^2  <=>  m*vz - 2 log_p m - maxgap - 4 > N
        Int pw = 1;
        Int bound = Int(m) * m;
        std::int64_t e = lhs_exp.convert_to<std::int64_t>();
        for (std::int64_t i = 0; i < e; ++i) {
            pw *= ctx->p;
            if (pw > bound)
                return true;
        }
        return pw > bound;
    }
};

void check_disk0_pre(const HGParams& params, const PrimeContext& ctx) {
    auto f = params.flags(ctx.p);
    if (!f.gamma_not_nonpositive_integer)
        throw hypothesis_error("gamma_not_nonpositive_integer",
                               "series coefficients hit a pole at gamma = " +
                                   to_string(params.gamma));
    if (!f.alpha_in_Zp || !f.beta_in_Zp)
        throw hypothesis_error("alpha_in_Zp, beta_in_Zp",
                               "disk-0 convergence needs integral upper parameters");
    if (!f.gamma_in_Zp)
        throw hypothesis_error("gamma_in_Zp", "lower parameter must lie in Z_(p)");
}

} // namespace

Rational hg_disk0_exact_sum(const HGParams& params, const Rational& z, const PrimeContext& ctx,
                            int extra_digits) {
    check_disk0_pre(params, ctx);
    auto vz = ord_rational(z, ctx.p);
    if (!vz)
        return 1; // F(...; 0) = 1
    if (*vz < 1)
        throw hypothesis_error("|z|_p < 1", "disk-0 series needs val(z) >= 1, got " +
                                                std::to_string(*vz));
    DigitProfile prof = digit_profile(params.gamma, ctx, 4);
    TailGuard guard{prof.max_position_gap + extra_digits, *vz, &ctx};

    Rational acc = 0, term = 1;
    for (std::int64_t n = 0;; ++n) {
        acc += term;
        // every term from n+1 on certifiably lies beyond p^(N+1)
        if (guard.tail_clear(n))
            return acc;
        Rational fac_num = (params.alpha + n) * (params.beta + n);
        if (fac_num == 0)
            return acc; // terminating series: sum is exact
        Rational fac_den = (params.gamma + n) * Rational(n + 1);
        term = term * fac_num / fac_den * z;
        // realized term valuation must respect the certified deficit bound
        auto tv = ord_rational(term, ctx.p);
        if (tv) {
            std::int64_t bound = (n + 1) * *vz - 2 * floor_log_p(n + 1, ctx.p) -
                                 prof.max_position_gap - 3;
            if (*tv < bound)
                throw precision_error("hg_disk0: realized term valuation " +
                                      std::to_string(*tv) + " below certified bound " +
                                      std::to_string(bound));
        }
        if (n > 64 * (ctx.N + prof.max_position_gap + 8))
            throw precision_error("hg_disk0: cutoff not reached (unexpected)");
    }
}

PAdic hg_disk0_eval(const HGParams& params, const Rational& z, const PrimeContext& ctx) {
    Rational acc = hg_disk0_exact_sum(params, z, ctx);
    // dropped tail lies beyond p^(N+1)
    return PAdic::from_rational(acc, ctx) + PAdic::zero_mod(ctx, ctx.N + 1);
}

PAdic hg_disk0_eval(const HGParams& params, const PAdic& z) {
    const auto& ctx = z.context();
    check_disk0_pre(params, ctx);
    if (z.is_exact_zero())
        return PAdic::one(ctx);
    std::int64_t vz = z.is_zeroish() ? z.abs_prec() : z.val();
    if (vz < 1)
        throw hypothesis_error("|z|_p < 1", "disk-0 series needs val(z) >= 1");
    DigitProfile prof = digit_profile(params.gamma, ctx, 4);
    TailGuard guard{prof.max_position_gap, vz, &ctx};

    PAdic acc = PAdic::exact_zero(ctx);
    PAdic term = PAdic::one(ctx);
    for (std::int64_t n = 0;; ++n) {
        acc = acc + term;
        if (guard.tail_clear(n))
            return acc + PAdic::zero_mod(ctx, ctx.N + 1);
        Rational fac_num = (params.alpha + n) * (params.beta + n);
        if (fac_num == 0)
            return acc;
        Rational fac_den = (params.gamma + n) * Rational(n + 1);
        term = term * PAdic::from_rational(fac_num / fac_den, ctx) * z;
        if (n > 64 * (ctx.N + prof.max_position_gap + 8))
            throw precision_error("hg_disk0: cutoff not reached (unexpected)");
    }
}

RadiusReport radius_report(const HGParams& params, const PrimeContext& ctx, std::int64_t n_max) {
    auto f = params.flags(ctx.p);
    if (!f.gamma_not_nonpositive_integer)
        throw hypothesis_error("gamma_not_nonpositive_integer", "radius_report");
    RadiusReport report;
    DigitProfile prof = digit_profile(params.gamma, ctx,
                                      floor_log_p(std::max<std::int64_t>(n_max, 1), ctx.p) + 8);
    report.s_zero_exact = prof.s_zero_exact;
    report.T_undefined = prof.eta_nonnegative_integer;
    report.radius_bound_log = 0; // S = 0 for every gamma in Z_(p)
    report.all_closed_match = true;

    Int ord_alpha = 0, ord_beta = 0, ord_gamma = 0, ord_fact = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        ord_alpha += ord_rational(params.alpha + (n - 1), ctx.p).value_or(0);
        ord_beta += ord_rational(params.beta + (n - 1), ctx.p).value_or(0);
        ord_gamma += *ord_rational(params.gamma + (n - 1), ctx.p);
        ord_fact += ord_int(Int(n), ctx.p);

        RadiusRow row;
        row.n = n;
        row.ord_gamma_poch = ord_gamma;
        // d_n = (alpha)_n (beta)_n / ((gamma)_n n!)
        row.ord_coeff = Int(ord_alpha + ord_beta - ord_gamma - ord_fact);

        std::int64_t k = floor_log_p(n, ctx.p);
        row.l_n = prof.t(k);
        if (!report.T_undefined) {
            row.L_n = prof.T(k);
            Int Ln = row.L_n;
            row.m_n = 0;
            {
                Int pw = ctx.p;
                while (pw <= Ln) {
                    pw *= ctx.p;
                    ++row.m_n;
                }
            }
            Int num = Int(n) - s_p(Ln, ctx.p) + s_p(Ln - n, ctx.p);
            row.closed_form = num / (ctx.p - 1);
            row.closed_matches = (num % (ctx.p - 1) == 0) && (row.closed_form == ord_gamma);
        } else {
            row.closed_matches = false;
        }
        report.all_closed_match = report.all_closed_match && row.closed_matches;

        // latest digit-position ratio at or below m_n
        Rational latest = 0;
        for (std::size_t i = 1; i < prof.positions.size(); ++i)
            if (prof.positions[i] <= row.m_n)
                latest = prof.partial_s[i - 1];
        row.partial_S = latest;
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

void check_disk1_pre(const HGParams& params, const Branch& branch, const PrimeContext& ctx) {
    if (ctx.p < 3)
        throw hypothesis_error("p >= 3", "disk-1 machinery requires an odd prime");
    auto f = params.flags(ctx.p);
    if (!f.alpha_in_pZ)
        throw hypothesis_error("alpha_in_pZ", "|alpha|_p < 1 required");
    if (!f.beta_in_pZ)
        throw hypothesis_error("beta_in_pZ", "|beta|_p < 1 required");
    if (!f.c_minus_1_in_pZ)
        throw hypothesis_error("c_minus_1_in_pZ", "|gamma-1|_p < 1 required");
    if (!f.apb_minus_c_not_nonzero_integer)
        throw hypothesis_error("apb_minus_c_not_nonzero_integer",
                               "alpha+beta-gamma = " + to_string(params.alpha + params.beta -
                                                                 params.gamma) +
                                   " must avoid nonzero integers");
    if (!branch.lambda_in_Zp(ctx.p))
        throw hypothesis_error("Log(p) in Z_p", "branch value " + to_string(branch.lambda));
}

} // namespace

Disk1Eval hg_disk1_eval(const HGParams& params, const Rational& z, const Branch& branch,
                        const PrimeContext& ctx) {
    check_disk1_pre(params, branch, ctx);
    Rational w = 1 - z;
    auto vw = ord_rational(w, ctx.p);
    if (!vw)
        throw hypothesis_error("0 < |z-1|_p", "z = 1 is outside the domain");
    if (*vw < 1)
        throw hypothesis_error("|z-1|_p < 1", "val(z-1) = " + std::to_string(*vw));

    Rational mu = params.mu(), nu = params.nu();
    Disk1Eval out;
    out.r1 = gamma_phi_ratio(
        GammaRatioSpec::make(-mu, -nu, -mu - params.alpha, -mu - params.beta, ctx.p), ctx);
    out.r2 = gamma_phi_ratio(
        GammaRatioSpec::make(mu, -nu, -params.alpha, -params.beta, ctx.p), ctx);

    HGParams first{params.alpha, params.beta, nu};
    out.s1 = hg_disk0_eval(first, w, ctx);

    HGParams second{params.gamma - params.alpha, params.gamma - params.beta,
                    params.gamma - params.alpha - params.beta + 1};
    PAdic wp = PAdic::from_rational(w, ctx);
    PAdic power = ppow(wp, PAdic::from_rational(-nu, ctx), branch);
    out.s2 = power * wp * hg_disk0_eval(second, w, ctx);

    out.addend1 = out.r1 * out.s1;
    out.addend2 = out.r2 * out.s2;
    out.value = out.addend1 + out.addend2;
    return out;
}

LimitAt1 hg_limit_at_1(const HGParams& params, const PrimeContext& ctx) {
    check_disk1_pre(params, Branch{}, ctx);
    Rational mu = params.mu(), nu = params.nu();
    LimitAt1 out;
    out.r1 = gamma_phi_ratio(
        GammaRatioSpec::make(-mu, -nu, -mu - params.alpha, -mu - params.beta, ctx.p), ctx);
    out.gauss = gauss_rhs(params, ctx);
    out.matches_product = out.r1.congruent_mod(out.gauss.product, ctx.N);
    out.matches_reciprocal = out.r1.congruent_mod(out.gauss.reciprocal, ctx.N);
    return out;
}

DiskInftyBasis hg_diskinfty_basis(const HGParams& params, const Rational& z, const Branch& branch,
                                  const PrimeContext& ctx) {
    auto f = params.flags(ctx.p);
    if (!f.alpha_in_pZ || !f.beta_in_pZ || !f.c_minus_1_in_pZ)
        throw hypothesis_error("alpha_in_pZ, beta_in_pZ, c_minus_1_in_pZ",
                               "disk-infinity prolongation hypotheses");
    if (!f.beta_nonzero)
        throw hypothesis_error("beta_nonzero", "beta = 0 degenerates the basis");
    if (!f.a_minus_b_not_nonzero_integer)
        throw hypothesis_error("a_minus_b_not_nonzero_integer",
                               "alpha-beta = " + to_string(params.alpha - params.beta));
    auto vz = ord_rational(z, ctx.p);
    if (!vz || *vz >= 0)
        throw hypothesis_error("|z|_p > 1", "disk-infinity needs val(z) < 0");
    int dom = exp_domain_valuation(ctx.p);
    auto lb = ord_rational(branch.lambda, ctx.p);
    for (const Rational* lam : {&params.alpha, &params.beta}) {
        auto vl = ord_rational(*lam, ctx.p);
        if (vl && lb && *vl + *lb < dom)
            throw hypothesis_error("|alpha*Log(p)|_p, |beta*Log(p)|_p < p^(-1/(p-1))",
                                   "branch too large for exponent " + to_string(*lam));
    }

    Rational w = 1 / z;
    PAdic zp = PAdic::from_rational(z, ctx);
    HGParams first{params.alpha, params.alpha + 1 - params.gamma,
                   params.alpha - params.beta + 1};
    HGParams second{params.beta, params.beta + 1 - params.gamma,
                    params.beta - params.alpha + 1};
    DiskInftyBasis out;
    out.first = ppow(zp, -params.alpha, branch) * hg_disk0_eval(first, w, ctx);
    out.second = ppow(zp, -params.beta, branch) * hg_disk0_eval(second, w, ctx);
    return out;
}

FitResult fit_connection_constants(const std::vector<PAdic>& lhs,
                                   const std::vector<PAdic>& basis1,
                                   const std::vector<PAdic>& basis2) {
    if (lhs.size() < 3 || basis1.size() != lhs.size() || basis2.size() != lhs.size())
        throw std::invalid_argument("fit_connection_constants: need >= 3 aligned sample points");
    FitResult out;
    out.det = basis1[0] * basis2[1] - basis1[1] * basis2[0];
    if (out.det.is_zeroish())
        throw precision_error("fit_connection_constants: degenerate sample geometry "
                              "(determinant has no usable digits)");
    out.c1 = (lhs[0] * basis2[1] - lhs[1] * basis2[0]) / out.det;
    out.c2 = (basis1[0] * lhs[1] - basis1[1] * lhs[0]) / out.det;
    for (std::size_t i = 2; i < lhs.size(); ++i)
        out.residuals.push_back(lhs[i] - (out.c1 * basis1[i] + out.c2 * basis2[i]));
    return out;
}

Rational terminating_hg_value(const HGParams& params, const Rational& z) {
    if (!is_nonpositive_integer(params.alpha))
        throw hypothesis_error("alpha in Z_<=0",
                               "exact evaluation needs a terminating series");
    std::int64_t m = (-numerator(params.alpha)).convert_to<std::int64_t>();
    Rational acc = 0, term = 1;
    for (std::int64_t n = 0; n <= m; ++n) {
        acc += term;
        term = term * (params.alpha + n) * (params.beta + n) /
               ((params.gamma + n) * Rational(n + 1)) * z;
    }
    return acc;
}

} // namespace phg
