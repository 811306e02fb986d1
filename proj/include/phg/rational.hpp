#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace phg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// p-adic valuation of a nonzero integer.
std::int64_t ord_int(const Int& n, std::int64_t p);

// p-adic valuation of a rational; std::nullopt encodes ord(0) = +infinity.
std::optional<std::int64_t> ord_rational(const Rational& q, std::int64_t p);

// q with ord_p(q) >= 0, reduced modulo p^k into [0, p^k).
Int reduce_mod_pk(const Rational& q, std::int64_t p, int k);

Int pow_int(std::int64_t base, int exp);

// Modular inverse via extended Euclid; requires gcd(a, m) = 1.
Int inv_mod(const Int& a, const Int& m);

bool is_prime(std::int64_t n);

// Rising factorial s(s+1)...(s+n-1), exact.
Rational pochhammer(const Rational& s, std::int64_t n);

bool is_integer(const Rational& q);
bool is_nonpositive_integer(const Rational& q);
bool is_nonzero_integer(const Rational& q);

// Accepts "n" or "n/d" with optional leading minus.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

} // namespace phg
