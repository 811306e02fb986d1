#pragma once

#include "phg/series.hpp"
#include "phg/word.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace phg {

enum class MplMethod { DefiningSum, OdeRecursion };

// Multiple polylogarithm Li_{k_1,...,k_n}(w) truncated to the w-order cap,
// by the defining nested sum or by integrating the recursive differential
// system (the two must agree; tests and `verify --check mpl-ode` compare them).
TruncSeries mpl_series(const std::vector<int>& index, SeriesCaps caps,
                       MplMethod method = MplMethod::DefiningSum);

// Linear extension of Li over a combination of words in M' (unit part must
// vanish).
TruncSeries li_of_ncpoly(const NCPoly& poly, SeriesCaps caps);

// Coefficient J(W)(w) of the normalized fundamental solution
// G = 1 + sum_W J(W) W:
//   (a) W in M':        (-1)^dp(W) Li_W
//   (b) W = V T0^r:     sum_{s+t=r} (-1)^{dp(W)+s} Li_{f'(V sh T0^s)} L^t/t!
//   (c) W = T0^r:       L^r / r!
TruncSeries g01_coefficient(const Word& w, SeriesCaps caps);

using JTable = std::map<Word, TruncSeries>;
JTable build_j_table(int wmax, SeriesCaps caps);

struct Mat2 {
    std::array<std::array<TruncSeries, 2>, 2> e;

    explicit Mat2(SeriesCaps caps)
        : e{{{TruncSeries::zero(caps), TruncSeries::zero(caps)},
             {TruncSeries::zero(caps), TruncSeries::zero(caps)}}} {}
    static Mat2 identity(SeriesCaps caps);
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend Mat2 operator+(const Mat2& x, const Mat2& y);
    Mat2 scaled(const TruncSeries& s) const;
};

// X = [[0, b], [0, -c1]], Y = [[0, 0], [a, a+b-c1]] (u = -c1, v = a+b-c1).
Mat2 mat_X(SeriesCaps caps);
Mat2 mat_Y(SeriesCaps caps);
Mat2 mat_neg(const Mat2& m);

// Graded substitution of the letter matrices into 1 + sum_W J(W) W:
// T0 -> M0, T1 -> M1. Pass M0 = Y - X, M1 = -Y for the T_infty rewriting.
Mat2 matrix_substitution(const JTable& jt, const Mat2& M0, const Mat2& M1, SeriesCaps caps);

// Hypergeometric series sum_n poch(A,n) poch(B,n) / (poch(C,n) n!) w^n with
// series-valued parameters; C's constant term must avoid 0, -1, -2, ...
TruncSeries hg_series_from(const TruncSeries& A, const TruncSeries& B, const TruncSeries& C,
                           SeriesCaps caps);

// The formal expansion in Q[[a, b, c1, w]]: parameters (a, b, 1 + c1).
TruncSeries hg_formal_series(SeriesCaps caps);

// v * F(a, b; v; w) with v = a+b-c1 in the lower slot (the 1/v pole cleared).
TruncSeries v_times_hg_lower_v(SeriesCaps caps);

// g_0(k, n, s): sum of Li over admissible indices with wt k, dp n, ht s.
TruncSeries g0_series(int k, int n, int s, SeriesCaps caps);

// 1 + ab sum g_0(k,n,s) u^{k-n-s} v^{n-s} (ab+uv)^{s-1}.
TruncSeries oi_rhs(SeriesCaps caps);

struct OiCheck {
    TruncSeries kz_minus_series;  // [G(X,-Y)]_11 - sum-series
    TruncSeries series_minus_oi;  // sum-series - Oi RHS
    bool ok() const { return kz_minus_series.is_zero() && series_minus_oi.is_zero(); }
};
OiCheck oi_formula_check(SeriesCaps caps);

// Residual of (d/dz - T0/z - T1/(z-1)) applied to 1 + sum J(W) W, multiplied
// through by z(z-1); one series per word up to the weight cap, all expected 0.
std::map<Word, TruncSeries> kz_ode_residual(int wmax, SeriesCaps caps);

// Defining-sum vs ODE-recursion agreement for every index of weight <= wt_max.
bool mpl_methods_agree(int wt_max, SeriesCaps caps, std::string* first_mismatch = nullptr);

struct IdentityItem {
    std::string name;
    TruncSeries residual;
    bool ok() const { return residual.is_zero(); }
};

// Euler transformation and the Kummer-row identities for the solution
// matrices at 0 and (optionally) at 1. Identities that clear a 1/b or 1/v
// pole are checked with the pole multiplied out, at param_deg+1 internally,
// which certifies them at the stated cap.
std::vector<IdentityItem> identity_checks(SeriesCaps caps, bool include_v10 = true);

} // namespace phg
