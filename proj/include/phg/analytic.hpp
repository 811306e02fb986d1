#pragma once

#include "phg/padic.hpp"

namespace phg {

// Chosen value of Log(p), extending the principal-unit logarithm to Q_p^x.
// lambda = 0 is the default branch; it lies in Z_p and satisfies every
// smallness condition the power map needs.
struct Branch {
    Rational lambda = 0;

    bool lambda_in_Zp(std::int64_t p) const {
        return ord_rational(lambda, p).value_or(1) >= 0;
    }
};

// Branched p-adic logarithm on Q_p^x: z = p^r * omega * (1+m) maps to
// r*lambda + log(1+m), the alternating series with certified tail bound.
PAdic plog(const PAdic& z, const Branch& branch);

// Exponential sum x^i/i!; domain val(x) >= 1 for p >= 3, val(x) >= 2 for p = 2.
PAdic pexp(const PAdic& x);

// <z>^lambda = exp(lambda * Log(z)). Requires |lambda|_p < 1 and
// |lambda * Log(p)|_p < p^(-1/(p-1)); the composite lambda*Log(z) must land
// in the exponential's disk. Branch-dependent exactly when val(z) != 0.
PAdic ppow(const PAdic& z, const PAdic& lambda, const Branch& branch);
PAdic ppow(const PAdic& z, const Rational& lambda, const Branch& branch);

// Smallest integer valuation v with p^-v < p^(-1/(p-1)): 2 for p = 2, else 1.
int exp_domain_valuation(std::int64_t p);

} // namespace phg
