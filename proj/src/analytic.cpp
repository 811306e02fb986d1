#include "phg/analytic.hpp"

#include "phg/digits.hpp"
#include "phg/errors.hpp"

namespace phg {

int exp_domain_valuation(std::int64_t p) {
    return p == 2 ? 2 : 1;
}

namespace {

// log(1+m) for val(m) >= 1; term i has valuation >= i*val(m) - ord_p(i).
PAdic log_one_plus(const PAdic& m) {
    const auto& ctx = m.context();
    PAdic acc = PAdic::exact_zero(ctx);
    if (m.is_exact_zero())
        return acc;
    if (m.is_zeroish())
        return PAdic::zero_mod(ctx, m.abs_prec());
    std::int64_t vm = m.val();
    PAdic power = m;
    for (std::int64_t i = 1;; ++i) {
        PAdic term = power * PAdic::from_rational(Rational(Int((i % 2) ? 1 : -1), Int(i)), ctx);
        acc = acc + term;
        if (term.has_finite_prec() && !term.is_exact_zero()) {
            // realized valuation must respect the certified bound
            std::int64_t bound = i * vm - floor_log_p(i, ctx.p);
            if (!term.is_zeroish() && term.val() < bound)
                throw precision_error("plog: term below certified valuation bound");
        }
        std::int64_t next_bound = (i + 1) * vm - floor_log_p(i + 1, ctx.p);
        if (next_bound > ctx.N)
            break;
        power = power * m;
    }
    return acc + PAdic::zero_mod(ctx, ctx.N + 1);
}

} // namespace

PAdic plog(const PAdic& z, const Branch& branch) {
    if (z.is_exact_zero())
        throw hypothesis_error("z != 0", "plog of exact zero");
    if (z.is_zeroish())
        throw precision_error("plog: argument has no known digits");
    const auto& ctx = z.context();
    std::int64_t r = z.val();
    PAdic unit = PAdic::from_parts(ctx, 0, z.unit(), z.rel_prec());
    PAdic omega = teichmuller(unit);
    PAdic m = unit / omega - PAdic::one(ctx);
    PAdic log_unit = log_one_plus(m);
    PAdic branch_part =
        PAdic::from_rational(branch.lambda, ctx) * PAdic::from_rational(Rational(r), ctx);
    return branch_part + log_unit;
}

PAdic pexp(const PAdic& x) {
    const auto& ctx = x.context();
    int dom = exp_domain_valuation(ctx.p);
    if (x.is_exact_zero())
        return PAdic::one(ctx);
    if (x.val() < dom)
        throw hypothesis_error("|x|_p < p^(-1/(p-1))",
                               "pexp domain requires val >= " + std::to_string(dom) +
                                   ", got val = " + std::to_string(x.val()));
    if (x.is_zeroish())
        return PAdic::one(ctx) + PAdic::zero_mod(ctx, x.abs_prec());
    std::int64_t vx = x.val();
    PAdic acc = PAdic::one(ctx);
    PAdic term = PAdic::one(ctx);
    for (std::int64_t i = 1;; ++i) {
        term = term * x * PAdic::from_rational(Rational(1, Int(i)), ctx);
        acc = acc + term;
        // val(x^m / m!) >= m*vx - (m - s_p(m))/(p-1) >= m*(vx - 1/(p-1));
        // the linear form is monotone in m, unlike the digit-sum bound, so it
        // certifies every dropped term at once
        if (Int(i + 1) * (vx * (ctx.p - 1) - 1) > Int(ctx.N) * (ctx.p - 1))
            break;
    }
    return acc + PAdic::zero_mod(ctx, ctx.N + 1);
}

PAdic ppow(const PAdic& z, const PAdic& lambda, const Branch& branch) {
    const auto& ctx = z.context();
    if (z.is_exact_zero())
        throw hypothesis_error("z != 0", "power map undefined at 0");
    if (lambda.is_exact_zero())
        return PAdic::one(ctx);
    if (!lambda.is_zeroish() && lambda.val() < 1)
        throw hypothesis_error("|lambda|_p < 1",
                               "power map requires val(lambda) >= 1, got " +
                                   std::to_string(lambda.val()));
    auto lam_branch_ord = ord_rational(branch.lambda, ctx.p);
    if (lam_branch_ord.has_value()) {
        std::int64_t v = lambda.is_zeroish() ? lambda.abs_prec() : lambda.val();
        if (v + *lam_branch_ord < exp_domain_valuation(ctx.p))
            throw hypothesis_error("|lambda*Log(p)|_p < p^(-1/(p-1))",
                                   "branch value too large for this exponent");
    }
    PAdic arg = lambda * plog(z, branch);
    if (!arg.is_exact_zero() && arg.val() < exp_domain_valuation(ctx.p))
        throw hypothesis_error("|lambda*Log(z)|_p < p^(-1/(p-1))",
                               "composite argument outside exponential disk");
    return pexp(arg);
}

PAdic ppow(const PAdic& z, const Rational& lambda, const Branch& branch) {
    return ppow(z, PAdic::from_rational(lambda, z.context()), branch);
}

} // namespace phg
