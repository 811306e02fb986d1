#pragma once

#include "phg/analytic.hpp"
#include "phg/digits.hpp"
#include "phg/gamma.hpp"
#include "phg/hg_params.hpp"
#include "phg/padic.hpp"

#include <vector>

namespace phg {

enum class Disk { Zero, One, Infinity, Unsupported };

// Exactly one of val(z) > 0, val(z-1) > 0, val(z) < 0,
// val(z) = val(z-1) = 0 holds; the last is the unsupported root-of-unity case.
Disk classify_disk(const Rational& z, std::int64_t p);
const char* disk_name(Disk d);

// Series on |z|_p < 1: exact-rational terms, certified tail cutoff, single
// reduction mod p^N at the end.
PAdic hg_disk0_eval(const HGParams& params, const Rational& z, const PrimeContext& ctx);
// Same series with PAdic term accumulation (for arguments only known as
// p-adic approximations).
PAdic hg_disk0_eval(const HGParams& params, const PAdic& z);
// The exact partial sum itself (oracle-grade; extra_digits widens the cutoff).
Rational hg_disk0_exact_sum(const HGParams& params, const Rational& z, const PrimeContext& ctx,
                            int extra_digits = 0);

struct RadiusRow {
    std::int64_t n = 0;
    Int ord_coeff;          // ord_p(d_n), exact
    Int ord_gamma_poch;     // ord_p((gamma)_n), exact
    Int closed_form;        // (n - s_p(L_n) + s_p(L_n - n)) / (p-1)
    bool closed_matches = false;
    Int l_n;
    Int L_n;
    std::int64_t m_n = 0;   // floor log_p L_n
    Rational partial_S;     // latest ratio positions[i]/p^positions[i-1]
};

struct RadiusReport {
    std::vector<RadiusRow> rows;
    bool s_zero_exact = false;        // gamma in Z_(p): digit positions grow linearly
    bool all_closed_match = false;
    bool T_undefined = false;         // -gamma a nonnegative integer
    Rational radius_bound_log;        // S/(p-1) as a rational (0 when exact)
};

RadiusReport radius_report(const HGParams& params, const PrimeContext& ctx, std::int64_t n_max);

struct Disk1Eval {
    PAdic value;     // addend1 + addend2
    PAdic addend1;   // r1 * F(alpha, beta; nu; 1-z)
    PAdic addend2;   // r2 * <1-z>^{-nu} (1-z) F(gamma-alpha, gamma-beta; ...; 1-z)
    PAdic r1, r2;
    PAdic s1, s2;
};

Disk1Eval hg_disk1_eval(const HGParams& params, const Rational& z, const Branch& branch,
                        const PrimeContext& ctx);

struct LimitAt1 {
    PAdic r1;                 // the limit value: the gamma ratio at (-mu,-nu;-mu-a,-mu-b)
    GaussRhs gauss;           // the displayed product and its reciprocal
    bool matches_product = false;
    bool matches_reciprocal = false;
};

LimitAt1 hg_limit_at_1(const HGParams& params, const PrimeContext& ctx);

struct DiskInftyBasis {
    PAdic first;   // <z>^{-alpha} F(alpha, alpha+1-gamma; alpha-beta+1; 1/z)
    PAdic second;  // <z>^{-beta}  F(beta,  beta+1-gamma;  beta-alpha+1; 1/z)
};

DiskInftyBasis hg_diskinfty_basis(const HGParams& params, const Rational& z, const Branch& branch,
                                  const PrimeContext& ctx);

struct FitResult {
    PAdic c1, c2;
    PAdic det;
    std::vector<PAdic> residuals; // at the points beyond the first two
};

// Solve lhs = c1*basis1 + c2*basis2 at the first two sample points and
// report residuals at the rest. Degenerate geometry (determinant with no
// usable digits) raises precision_error.
FitResult fit_connection_constants(const std::vector<PAdic>& lhs,
                                   const std::vector<PAdic>& basis1,
                                   const std::vector<PAdic>& basis2);

// Exact value of the terminating series (alpha a nonpositive integer).
Rational terminating_hg_value(const HGParams& params, const Rational& z);

} // namespace phg
