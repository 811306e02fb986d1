#include "phg/rational.hpp"

#include <stdexcept>

namespace phg {

std::int64_t ord_int(const Int& n, std::int64_t p) {
    if (n == 0)
        throw std::invalid_argument("ord_int: zero has no finite valuation");
    Int m = abs(n);
    std::int64_t v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

std::optional<std::int64_t> ord_rational(const Rational& q, std::int64_t p) {
    if (q == 0)
        return std::nullopt;
    return ord_int(numerator(q), p) - ord_int(denominator(q), p);
}

Int reduce_mod_pk(const Rational& q, std::int64_t p, int k) {
    Int pk = pow_int(p, k);
    Int num = numerator(q) % pk;
    if (num < 0)
        num += pk;
    Int den = denominator(q) % pk;
    if (den % p == 0)
        throw std::invalid_argument("reduce_mod_pk: denominator divisible by p");
    return num * inv_mod(den, pk) % pk;
}

Int pow_int(std::int64_t base, int exp) {
    Int r = 1;
    Int b = base;
    while (exp > 0) {
        if (exp & 1)
            r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r0 = m, r1 = a % m;
    if (r1 < 0)
        r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1)
        throw std::invalid_argument("inv_mod: argument not invertible");
    if (t0 < 0)
        t0 += m;
    return t0;
}

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Rational pochhammer(const Rational& s, std::int64_t n) {
    Rational r = 1;
    for (std::int64_t j = 0; j < n; ++j)
        r *= (s + j);
    return r;
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

bool is_nonpositive_integer(const Rational& q) {
    return is_integer(q) && numerator(q) <= 0;
}

bool is_nonzero_integer(const Rational& q) {
    return is_integer(q) && numerator(q) != 0;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: expected \"n\" or \"n/d\", got \"" + text + "\"");
    }
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace phg
