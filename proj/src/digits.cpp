#include "phg/digits.hpp"

#include "phg/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace phg {

namespace {

// One digit step of the expansion of a rational in Z_(p):
// e = x mod p in [0, p-1], then x <- (x - e) / p.
int digit_step(Rational& x, std::int64_t p) {
    int e = static_cast<int>(reduce_mod_pk(x, p, 1));
    x = (x - e) / p;
    return e;
}

} // namespace

int DigitProfile::digit_at(std::int64_t k) const {
    if (k < static_cast<std::int64_t>(digit_stream.size()))
        return digit_stream[static_cast<std::size_t>(k)];
    Rational x = eta;
    int e = 0;
    for (std::int64_t i = 0; i <= k; ++i)
        e = digit_step(x, p);
    return e;
}

Int DigitProfile::t(std::int64_t k) const {
    Int acc = 0, pw = 1;
    Rational x = eta;
    for (std::int64_t i = 0; i <= k; ++i) {
        acc += Int(digit_step(x, p)) * pw;
        pw *= p;
    }
    return acc;
}

Int DigitProfile::T(std::int64_t k) const {
    Int tk = t(k);
    Rational x = eta;
    for (std::int64_t i = 0; i <= k; ++i)
        digit_step(x, p);
    // A nonzero digit recurs within one preperiod + period window unless the
    // expansion is finite (eta a nonnegative integer).
    std::int64_t limit = k + 2 + (period_len > 0 ? period_start + 2 * period_len : 64);
    for (std::int64_t h = k + 1; h <= limit; ++h) {
        int e = digit_step(x, p);
        if (e != 0)
            return tk + Int(e) * pow_int(p, static_cast<int>(h));
    }
    if (eta_nonnegative_integer)
        throw std::domain_error(
            "T(eta;k): eta is a nonnegative integer and k is past its top digit");
    throw precision_error("T(eta;k): no further nonzero digit found within scan window");
}

DigitProfile digit_profile(const Rational& gamma, const PrimeContext& ctx, int depth) {
    Rational eta = -gamma;
    if (ord_rational(eta, ctx.p).value_or(1) < 0)
        throw std::invalid_argument("digit_profile: gamma must lie in Z_(p)");

    DigitProfile prof;
    prof.p = ctx.p;
    prof.gamma = gamma;
    prof.eta = eta;
    prof.eta_padic = PAdic::from_rational(eta, ctx);
    prof.eta_nonnegative_integer = is_integer(eta) && numerator(eta) >= 0;

    // cycle of the digit recurrence (states are rationals, finitely many)
    {
        std::map<Rational, std::int64_t> seen;
        Rational y = eta;
        std::int64_t i = 0;
        while (true) {
            auto it = seen.find(y);
            if (it != seen.end()) {
                prof.period_start = it->second;
                prof.period_len = i - it->second;
                break;
            }
            seen.emplace(y, i);
            digit_step(y, ctx.p);
            ++i;
        }
    }

    std::int64_t scan =
        std::max<std::int64_t>(depth, prof.period_start + 2 * prof.period_len + 1);
    Rational x = eta;
    for (std::int64_t k = 0; k <= scan; ++k) {
        int e = digit_step(x, ctx.p);
        prof.digit_stream.push_back(e);
        if (e != 0 && k <= depth) {
            if (!prof.positions.empty()) {
                Rational ratio(Int(k), pow_int(ctx.p, static_cast<int>(prof.positions.back())));
                prof.partial_s.push_back(ratio);
            }
            prof.positions.push_back(k);
            prof.nonzero_digits.push_back(e);
        }
    }

    // nonzero positions of an eventually periodic expansion grow linearly,
    // so m_n / p^(m_{n-1}) -> 0
    prof.s_zero_exact = !prof.eta_nonnegative_integer;

    // max gap between consecutive nonzero digit positions over a window
    // covering the preperiod and a full period
    std::int64_t gap = 0, last = -1;
    bool has_nonzero = false;
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(prof.digit_stream.size()); ++k) {
        if (prof.digit_stream[static_cast<std::size_t>(k)] != 0) {
            gap = std::max(gap, has_nonzero ? k - last : k + 1);
            last = k;
            has_nonzero = true;
        }
    }
    prof.max_position_gap = has_nonzero ? std::max<std::int64_t>(gap, 1) : 0;
    return prof;
}

DigitProfile digit_profile_from_eta(const PAdic& eta, int depth) {
    DigitProfile prof;
    prof.p = eta.context().p;
    prof.eta_padic = eta;
    if (eta.is_exact_zero()) {
        prof.eta = 0;
        prof.eta_nonnegative_integer = true;
        return prof;
    }
    if (eta.val() < 0)
        throw std::invalid_argument("digit_profile_from_eta: eta must lie in Z_p");
    const auto& ctx = eta.context();
    if (depth >= eta.abs_prec())
        throw precision_error("digit_profile_from_eta: depth exceeds known digits");
    Int rep = eta.rep_mod(static_cast<int>(std::min<std::int64_t>(eta.abs_prec(), ctx.N)));
    prof.eta = Rational(rep); // representative: t/T valid only within depth
    Int x = rep;
    for (int k = 0; k <= depth; ++k) {
        int e = static_cast<int>(x % ctx.p);
        prof.digit_stream.push_back(e);
        x /= ctx.p;
        if (e != 0) {
            if (!prof.positions.empty()) {
                Rational ratio(Int(k), pow_int(ctx.p, static_cast<int>(prof.positions.back())));
                prof.partial_s.push_back(ratio);
            }
            prof.positions.push_back(k);
            prof.nonzero_digits.push_back(e);
        }
    }
    return prof;
}

std::int64_t floor_log_p(std::int64_t n, std::int64_t p) {
    if (n < 1)
        throw std::invalid_argument("floor_log_p: n must be positive");
    std::int64_t k = 0, pw = 1;
    while (pw <= n / p) {
        pw *= p;
        ++k;
    }
    return k;
}

} // namespace phg
