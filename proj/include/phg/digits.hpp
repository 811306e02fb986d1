#pragma once

#include "phg/padic.hpp"
#include "phg/rational.hpp"

#include <cstdint>
#include <vector>

namespace phg {

// Digit data of eta = -gamma: positions of nonzero digits, the digits
// themselves, and the ratios positions[i] / p^positions[i-1] whose limsup
// controls the disk-0 radius of convergence.
struct DigitProfile {
    std::int64_t p = 0;
    Rational gamma;
    Rational eta; // -gamma
    PAdic eta_padic;

    std::vector<int> digit_stream;           // e_0, e_1, ..., zeros included
    std::vector<std::int64_t> positions;     // m_0 < m_1 < ... with nonzero digit
    std::vector<int> nonzero_digits;         // c_i in [1, p-1]
    std::vector<Rational> partial_s;         // positions[i] / p^positions[i-1], i >= 1

    bool eta_nonnegative_integer = false;    // finite expansion; T undefined past top digit
    bool s_zero_exact = false;               // eventually periodic digits force S = 0
    std::int64_t period_start = 0;           // cycle of the digit recurrence (rational eta)
    std::int64_t period_len = 0;
    std::int64_t max_position_gap = 0;       // max gap between consecutive nonzero positions

    // t(eta; k) = e_0 + e_1 p + ... + e_k p^k. Digits beyond the stored stream
    // are regenerated from the rational recurrence, so any k is allowed.
    Int t(std::int64_t k) const;

    // T(eta; k): the next partial sum distinct from t(eta; k).
    // Throws std::domain_error when eta is a nonnegative integer and k is at
    // or beyond its top digit (no further distinct partial sum exists).
    Int T(std::int64_t k) const;

    int digit_at(std::int64_t k) const;
};

// Digit profile of -gamma for rational gamma in Z_(p), to the given depth
// (depth = highest digit position stored; t/T remain exact beyond it).
DigitProfile digit_profile(const Rational& gamma, const PrimeContext& ctx, int depth);

// Profile from a PAdic value of -gamma directly; depth is capped by the
// known precision and t/T beyond it raise precision_error.
DigitProfile digit_profile_from_eta(const PAdic& eta, int depth);

std::int64_t floor_log_p(std::int64_t n, std::int64_t p);

} // namespace phg
