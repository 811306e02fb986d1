#pragma once

#include "phg/rational.hpp"

#include <cstdint>
#include <string>

namespace phg {

// Working prime and absolute target precision: arithmetic below is carried
// out modulo p^N, with the trusted number of digits tracked per value.
struct PrimeContext {
    std::int64_t p = 0;
    int N = 0;

    static PrimeContext make(std::int64_t p, int N);

    Int pk(int k) const { return pow_int(p, k); }
    Int pN() const { return pk(N); }

    friend bool operator==(const PrimeContext&, const PrimeContext&) = default;
};

// A p-adic number p^val * unit with `prec` trusted digits of the unit.
// Exact zero is a separate state (valuation +infinity); an inexact zero
// ("O(p^a)", nothing known beyond the bound) has prec = 0 and val = a.
class PAdic {
public:
    PAdic() = default;

    static PAdic exact_zero(const PrimeContext& ctx);
    static PAdic zero_mod(const PrimeContext& ctx, std::int64_t abs_prec);
    static PAdic from_rational(const Rational& q, const PrimeContext& ctx);
    static PAdic from_parts(const PrimeContext& ctx, std::int64_t val, Int unit, int prec);
    static PAdic one(const PrimeContext& ctx) { return from_rational(1, ctx); }

    const PrimeContext& context() const { return ctx_; }

    bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
    // True when no digit of the value is known (exact zero or O(p^a)).
    bool is_zeroish() const { return kind_ != Kind::Regular; }

    // Valuation; calling this on an exact zero is an error.
    std::int64_t val() const;
    // Smallest k for which nothing is known modulo p^k; +infinity for exact zero.
    std::int64_t abs_prec() const;
    bool has_finite_prec() const { return kind_ != Kind::ExactZero; }
    int rel_prec() const { return kind_ == Kind::Regular ? prec_ : 0; }
    const Int& unit() const { return unit_; }

    PAdic operator-() const;
    friend PAdic operator+(const PAdic& x, const PAdic& y);
    friend PAdic operator-(const PAdic& x, const PAdic& y);
    friend PAdic operator*(const PAdic& x, const PAdic& y);
    friend PAdic operator/(const PAdic& x, const PAdic& y);

    PAdic inverse() const;
    PAdic pow(std::int64_t e) const;

    // Representative of the value in [0, p^k); requires val >= 0 and abs_prec >= k.
    Int rep_mod(int k) const;

    // x == y modulo p^k, as far as both are known (requires abs precisions >= k).
    bool congruent_mod(const PAdic& y, std::int64_t k) const;
    bool is_unit() const { return kind_ == Kind::Regular && val_ == 0; }

    // "d0 + d1*p + ... + O(p^k)" with digits in [0, p-1]; negative valuations
    // rendered with explicit p^-j terms.
    std::string render() const;

private:
    enum class Kind { ExactZero, Zeroish, Regular };

    PrimeContext ctx_{};
    Kind kind_ = Kind::ExactZero;
    std::int64_t val_ = 0;
    Int unit_ = 0;
    int prec_ = 0;

    static void require_same_context(const PAdic& x, const PAdic& y);
};

// Digit sum of n in base p.
std::int64_t s_p(Int n, std::int64_t p);

// ord_p(n!) = (n - s_p(n)) / (p - 1).
Int ord_factorial(const Int& n, std::int64_t p);

// Rising factorial over PAdic values.
PAdic pochhammer(const PAdic& s, std::int64_t n);

// Unique (p-1)-st root of unity congruent to x mod p; requires val(x) = 0.
PAdic teichmuller(const PAdic& x);

} // namespace phg
