#include "phg/padic.hpp"

#include "phg/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace phg {

namespace {
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
}

PrimeContext PrimeContext::make(std::int64_t p, int N) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimeContext: p must be prime");
    if (N < 1)
        throw std::invalid_argument("PrimeContext: N must be >= 1");
    return PrimeContext{p, N};
}

PAdic PAdic::exact_zero(const PrimeContext& ctx) {
    PAdic z;
    z.ctx_ = ctx;
    z.kind_ = Kind::ExactZero;
    return z;
}

PAdic PAdic::zero_mod(const PrimeContext& ctx, std::int64_t abs_prec) {
    PAdic z;
    z.ctx_ = ctx;
    z.kind_ = Kind::Zeroish;
    z.val_ = abs_prec;
    return z;
}

PAdic PAdic::from_rational(const Rational& q, const PrimeContext& ctx) {
    if (q == 0)
        return exact_zero(ctx);
    auto v = *ord_rational(q, ctx.p);
    Rational unit = q;
    if (v >= 0)
        unit /= Rational(pow_int(ctx.p, static_cast<int>(v)));
    else
        unit *= Rational(pow_int(ctx.p, static_cast<int>(-v)));
    return from_parts(ctx, v, reduce_mod_pk(unit, ctx.p, ctx.N), ctx.N);
}

PAdic PAdic::from_parts(const PrimeContext& ctx, std::int64_t val, Int unit, int prec) {
    if (prec <= 0)
        return zero_mod(ctx, val);
    prec = std::min(prec, ctx.N);
    Int m = ctx.pk(prec);
    unit %= m;
    if (unit < 0)
        unit += m;
    if (unit % ctx.p == 0)
        throw std::invalid_argument("PAdic::from_parts: unit not coprime to p");
    PAdic x;
    x.ctx_ = ctx;
    x.kind_ = Kind::Regular;
    x.val_ = val;
    x.unit_ = std::move(unit);
    x.prec_ = prec;
    return x;
}

std::int64_t PAdic::val() const {
    if (kind_ == Kind::ExactZero)
        throw precision_error("val(): exact zero has infinite valuation");
    return val_;
}

std::int64_t PAdic::abs_prec() const {
    switch (kind_) {
    case Kind::ExactZero: return kInf;
    case Kind::Zeroish: return val_;
    default: return val_ + prec_;
    }
}

void PAdic::require_same_context(const PAdic& x, const PAdic& y) {
    if (!(x.ctx_ == y.ctx_))
        throw std::invalid_argument("PAdic: context mismatch");
}

PAdic PAdic::operator-() const {
    if (kind_ != Kind::Regular)
        return *this;
    PAdic r = *this;
    r.unit_ = ctx_.pk(prec_) - unit_;
    return r;
}

PAdic operator+(const PAdic& x, const PAdic& y) {
    PAdic::require_same_context(x, y);
    if (x.is_exact_zero())
        return y;
    if (y.is_exact_zero())
        return x;
    const auto& ctx = x.ctx_;
    std::int64_t A = std::min(x.abs_prec(), y.abs_prec());
    std::int64_t v = std::min(x.val_, y.val_);
    if (A - v <= 0)
        return PAdic::zero_mod(ctx, A);
    int digits = static_cast<int>(std::min<std::int64_t>(A - v, ctx.N));
    Int m = ctx.pk(digits);
    Int s = 0;
    if (x.kind_ == PAdic::Kind::Regular)
        s += x.unit_ * ctx.pk(static_cast<int>(x.val_ - v)) % m;
    if (y.kind_ == PAdic::Kind::Regular)
        s += y.unit_ * ctx.pk(static_cast<int>(y.val_ - v)) % m;
    s %= m;
    if (s == 0)
        return PAdic::zero_mod(ctx, v + digits);
    auto t = ord_int(s, ctx.p);
    if (t >= digits)
        return PAdic::zero_mod(ctx, v + digits);
    return PAdic::from_parts(ctx, v + t, s / ctx.pk(static_cast<int>(t)),
                             digits - static_cast<int>(t));
}

PAdic operator-(const PAdic& x, const PAdic& y) {
    return x + (-y);
}

PAdic operator*(const PAdic& x, const PAdic& y) {
    PAdic::require_same_context(x, y);
    const auto& ctx = x.ctx_;
    if (x.is_exact_zero() || y.is_exact_zero())
        return PAdic::exact_zero(ctx);
    if (x.kind_ != PAdic::Kind::Regular || y.kind_ != PAdic::Kind::Regular)
        return PAdic::zero_mod(ctx, x.val_ + y.val_);
    int prec = std::min(x.prec_, y.prec_);
    return PAdic::from_parts(ctx, x.val_ + y.val_, x.unit_ * y.unit_, prec);
}

PAdic PAdic::inverse() const {
    if (kind_ == Kind::ExactZero)
        throw precision_error("inverse(): division by exact zero");
    if (kind_ == Kind::Zeroish)
        throw precision_error("inverse(): division by a value with no known digits (O(p^" +
                              std::to_string(val_) + "))");
    return from_parts(ctx_, -val_, inv_mod(unit_, ctx_.pk(prec_)), prec_);
}

PAdic operator/(const PAdic& x, const PAdic& y) {
    return x * y.inverse();
}

PAdic PAdic::pow(std::int64_t e) const {
    if (e < 0)
        return inverse().pow(-e);
    PAdic r = PAdic::from_rational(1, ctx_);
    PAdic b = *this;
    while (e > 0) {
        if (e & 1)
            r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Int PAdic::rep_mod(int k) const {
    if (abs_prec() < k)
        throw precision_error("rep_mod: value not known modulo p^" + std::to_string(k));
    if (is_zeroish())
        return 0;
    if (val_ < 0)
        throw precision_error("rep_mod: negative valuation");
    if (val_ >= k)
        return 0;
    Int m = ctx_.pk(k);
    return unit_ * ctx_.pk(static_cast<int>(val_)) % m;
}

bool PAdic::congruent_mod(const PAdic& y, std::int64_t k) const {
    PAdic d = *this - y;
    if (d.abs_prec() < k)
        throw precision_error("congruent_mod: operands not known modulo p^" + std::to_string(k));
    return d.is_zeroish() || d.val() >= k;
}

std::string PAdic::render() const {
    if (kind_ == Kind::ExactZero)
        return "0";
    std::ostringstream out;
    auto term = [&](const Int& digit, std::int64_t e) {
        if (digit == 0)
            return;
        if (out.tellp() > 0)
            out << " + ";
        if (e == 0) {
            out << digit;
        } else {
            if (digit != 1)
                out << digit << "*";
            out << ctx_.p;
            if (e != 1)
                out << "^" << e;
        }
    };
    if (kind_ == Kind::Regular) {
        Int u = unit_;
        for (std::int64_t e = val_; e < val_ + prec_; ++e) {
            term(u % ctx_.p, e);
            u /= ctx_.p;
        }
    }
    if (out.tellp() > 0)
        out << " + ";
    out << "O(" << ctx_.p << "^" << abs_prec() << ")";
    return out.str();
}

std::int64_t s_p(Int n, std::int64_t p) {
    if (n < 0)
        throw std::invalid_argument("s_p: n must be nonnegative");
    std::int64_t s = 0;
    while (n > 0) {
        s += static_cast<std::int64_t>(n % p);
        n /= p;
    }
    return s;
}

Int ord_factorial(const Int& n, std::int64_t p) {
    if (n < 0)
        throw std::invalid_argument("ord_factorial: n must be nonnegative");
    Int num = n - s_p(n, p);
    return num / (p - 1);
}

PAdic pochhammer(const PAdic& s, std::int64_t n) {
    PAdic r = PAdic::from_rational(1, s.context());
    PAdic term = s;
    for (std::int64_t j = 0; j < n; ++j) {
        r = r * term;
        term = term + PAdic::from_rational(1, s.context());
    }
    return r;
}

PAdic teichmuller(const PAdic& x) {
    if (x.is_zeroish() || x.val() != 0)
        throw std::invalid_argument("teichmuller: argument must be a unit");
    const auto& ctx = x.context();
    int prec = x.rel_prec();
    Int m = ctx.pk(prec);
    Int y = x.unit();
    // y -> y^p gains one digit of agreement per round; cap at N+2 rounds.
    for (int round = 0; round < ctx.N + 2; ++round) {
        Int z = powm(y, ctx.p, m);
        if (z == y)
            return PAdic::from_parts(ctx, 0, y, prec);
        y = z;
    }
    throw precision_error("teichmuller: iteration did not stabilize (non-unit input?)");
}

} // namespace phg
