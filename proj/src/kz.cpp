#include "phg/kz.hpp"

#include <stdexcept>

namespace phg {

TruncSeries mpl_series(const std::vector<int>& index, SeriesCaps caps, MplMethod method) {
    for (int k : index)
        if (k < 1)
            throw std::invalid_argument("mpl_series: index entries must be positive");
    if (index.empty())
        return TruncSeries::one(caps);

    if (method == MplMethod::DefiningSum) {
        // A_j(m) = sum over 0 < m_1 < ... < m_j = m of 1/(m_1^{k_1}...m_j^{k_j})
        int D = caps.w_ord;
        std::vector<Rational> prev(static_cast<std::size_t>(D) + 1, Rational(0));
        for (int m = 1; m <= D; ++m)
            prev[static_cast<std::size_t>(m)] =
                Rational(1, pow_int(m, index[0]));
        for (std::size_t j = 1; j < index.size(); ++j) {
            std::vector<Rational> cur(static_cast<std::size_t>(D) + 1, Rational(0));
            Rational partial = 0;
            for (int m = 1; m <= D; ++m) {
                partial += prev[static_cast<std::size_t>(m - 1)];
                cur[static_cast<std::size_t>(m)] =
                    partial / Rational(pow_int(m, index[j]));
            }
            prev = std::move(cur);
        }
        TruncSeries out(caps);
        for (int m = 1; m <= D; ++m)
            out.set_coeff(Mono{0, 0, 0, m, 0}, prev[static_cast<std::size_t>(m)]);
        return out;
    }

    // OdeRecursion: integrate d/dw Li = (1/w) Li_minus  (k_last > 1)
    //                         d/dw Li = 1/(1-w) Li_drop (k_last = 1)
    std::vector<int> inner = index;
    TruncSeries out(caps);
    if (index.back() > 1) {
        inner.back() -= 1;
        TruncSeries D = mpl_series(inner, caps, MplMethod::OdeRecursion);
        for (int m = 1; m <= caps.w_ord; ++m) {
            Rational dm = D.coeff(Mono{0, 0, 0, m, 0});
            out.set_coeff(Mono{0, 0, 0, m, 0}, dm / m);
        }
    } else {
        inner.pop_back();
        TruncSeries D = mpl_series(inner, caps, MplMethod::OdeRecursion);
        Rational acc = 0;
        for (int m = 1; m <= caps.w_ord; ++m) {
            acc += D.coeff(Mono{0, 0, 0, m - 1, 0});
            out.set_coeff(Mono{0, 0, 0, m, 0}, acc / m);
        }
    }
    return out;
}

TruncSeries li_of_ncpoly(const NCPoly& poly, SeriesCaps caps) {
    if (poly.unit_coeff != 0)
        throw std::invalid_argument("li_of_ncpoly: unit component has no Li value");
    TruncSeries out(caps);
    for (const auto& [w, c] : poly.terms)
        out = out + mpl_series(word_to_index(w), caps).scaled(c);
    return out;
}

TruncSeries g01_coefficient(const Word& w, SeriesCaps caps) {
    if (w.empty())
        return TruncSeries::one(caps);
    int r = 0;
    while (r < w.weight() && w.letters[static_cast<std::size_t>(w.weight() - 1 - r)] == Letter::T0)
        ++r;
    int dp = w.depth();
    if (r == w.weight()) {
        // case (c): L^r / r!
        Rational fact = 1;
        for (int j = 2; j <= r; ++j)
            fact *= j;
        return TruncSeries::monomial(Mono{0, 0, 0, 0, r}, 1 / fact, caps);
    }
    Word V = w.prefix(w.weight() - r);
    if (r == 0)
        return mpl_series(word_to_index(V), caps).scaled((dp % 2) ? Rational(-1) : Rational(1));
    // case (b)
    TruncSeries out(caps);
    for (int s = 0, t = r; s <= r; ++s, --t) {
        NCPoly sh = (s == 0) ? NCPoly::word(V)
                             : shuffle_words(V, Word(std::vector<Letter>(
                                                    static_cast<std::size_t>(s), Letter::T0)));
        TruncSeries li = li_of_ncpoly(fprime(sh), caps);
        Rational sign = ((dp + s) % 2) ? Rational(-1) : Rational(1);
        Rational fact = 1;
        for (int j = 2; j <= t; ++j)
            fact *= j;
        out = out + (li * TruncSeries::monomial(Mono{0, 0, 0, 0, t}, sign / fact, caps));
    }
    return out;
}

JTable build_j_table(int wmax, SeriesCaps caps) {
    JTable table;
    for (int wt = 1; wt <= wmax; ++wt)
        for (const Word& w : enumerate_words(wt))
            table.emplace(w, g01_coefficient(w, caps));
    return table;
}

Mat2 Mat2::identity(SeriesCaps caps) {
    Mat2 m(caps);
    m.e[0][0] = TruncSeries::one(caps);
    m.e[1][1] = TruncSeries::one(caps);
    return m;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 out(x.e[0][0].caps());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                x.e[static_cast<std::size_t>(i)][0] * y.e[0][static_cast<std::size_t>(j)] +
                x.e[static_cast<std::size_t>(i)][1] * y.e[1][static_cast<std::size_t>(j)];
    return out;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
    Mat2 out(x.e[0][0].caps());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                x.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                y.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

Mat2 Mat2::scaled(const TruncSeries& s) const {
    Mat2 out(s.caps());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * s;
    return out;
}

Mat2 mat_X(SeriesCaps caps) {
    Mat2 m(caps);
    m.e[0][1] = TruncSeries::var_b(caps);
    m.e[1][1] = -TruncSeries::var_c1(caps); // u = 1 - c = -c1
    return m;
}

Mat2 mat_Y(SeriesCaps caps) {
    Mat2 m(caps);
    m.e[1][0] = TruncSeries::var_a(caps);
    // v = a + b + 1 - c = a + b - c1
    m.e[1][1] = TruncSeries::var_a(caps) + TruncSeries::var_b(caps) - TruncSeries::var_c1(caps);
    return m;
}

Mat2 mat_neg(const Mat2& m) {
    Mat2 out(m.e[0][0].caps());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                -m.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

Mat2 matrix_substitution(const JTable& jt, const Mat2& M0, const Mat2& M1, SeriesCaps caps) {
    Mat2 acc = Mat2::identity(caps);
    for (const auto& [word, coeff] : jt) {
        // letter-matrix entries carry parameter degree 1 each, so words
        // heavier than the parameter cap contribute nothing
        if (word.weight() > caps.param_deg)
            continue;
        Mat2 wm = Mat2::identity(caps);
        for (Letter l : word.letters)
            wm = wm * (l == Letter::T0 ? M0 : M1);
        acc = acc + wm.scaled(coeff);
    }
    return acc;
}

TruncSeries hg_series_from(const TruncSeries& A, const TruncSeries& B, const TruncSeries& C,
                           SeriesCaps caps) {
    TruncSeries acc = TruncSeries::one(caps);
    TruncSeries num = TruncSeries::one(caps);
    TruncSeries den_inv = TruncSeries::one(caps);
    Rational fact = 1;
    TruncSeries w = TruncSeries::var_w(caps);
    TruncSeries wpow = TruncSeries::one(caps);
    for (int n = 1; n <= caps.w_ord; ++n) {
        TruncSeries shift = TruncSeries::constant(n - 1, caps);
        num = num * (A + shift) * (B + shift);
        TruncSeries cfac = C + shift;
        if (cfac.coeff(Mono{}) == 0)
            throw std::invalid_argument(
                "hg_series_from: lower parameter hits a nonpositive integer");
        den_inv = den_inv * cfac.inverse();
        fact *= n;
        wpow = wpow * w;
        acc = acc + (num * den_inv * wpow).scaled(1 / fact);
    }
    return acc;
}

TruncSeries hg_formal_series(SeriesCaps caps) {
    return hg_series_from(TruncSeries::var_a(caps), TruncSeries::var_b(caps),
                          TruncSeries::one(caps) + TruncSeries::var_c1(caps), caps);
}

TruncSeries v_times_hg_lower_v(SeriesCaps caps) {
    TruncSeries a = TruncSeries::var_a(caps), b = TruncSeries::var_b(caps);
    TruncSeries v = a + b - TruncSeries::var_c1(caps);
    // v * F(a,b;v;w) = v + sum_{n>=1} (a)_n (b)_n / ((v+1)_{n-1} n!) w^n
    TruncSeries acc = v;
    TruncSeries num = TruncSeries::one(caps);
    TruncSeries den_inv = TruncSeries::one(caps);
    Rational fact = 1;
    TruncSeries w = TruncSeries::var_w(caps);
    TruncSeries wpow = TruncSeries::one(caps);
    for (int n = 1; n <= caps.w_ord; ++n) {
        TruncSeries shift = TruncSeries::constant(n - 1, caps);
        num = num * (a + shift) * (b + shift);
        if (n >= 2)
            den_inv = den_inv * (v + shift).inverse(); // (v+1)...(v+n-1)
        fact *= n;
        wpow = wpow * w;
        acc = acc + (num * den_inv * wpow).scaled(1 / fact);
    }
    return acc;
}

TruncSeries g0_series(int k, int n, int s, SeriesCaps caps) {
    TruncSeries acc(caps);
    for (const auto& idx : enumerate_admissible(k, n, s))
        acc = acc + mpl_series(idx.entries, caps);
    return acc;
}

TruncSeries oi_rhs(SeriesCaps caps) {
    TruncSeries a = TruncSeries::var_a(caps), b = TruncSeries::var_b(caps);
    TruncSeries u = -TruncSeries::var_c1(caps);
    TruncSeries v = a + b + u;
    TruncSeries ab = a * b;
    TruncSeries abuv = ab + u * v;
    TruncSeries acc = TruncSeries::one(caps);
    for (int k = 2; k <= caps.param_deg; ++k) {
        for (int n = 1; n < k; ++n) {
            for (int s = 1; s <= n && n + s <= k; ++s) {
                TruncSeries g0 = g0_series(k, n, s, caps);
                if (g0.is_zero())
                    continue;
                TruncSeries term = ab.scaled(1);
                for (int j = 0; j < k - n - s; ++j)
                    term = term * u;
                for (int j = 0; j < n - s; ++j)
                    term = term * v;
                for (int j = 0; j < s - 1; ++j)
                    term = term * abuv;
                acc = acc + term * g0;
            }
        }
    }
    return acc;
}

OiCheck oi_formula_check(SeriesCaps caps) {
    if (caps.l_deg < caps.param_deg)
        throw std::invalid_argument("oi_formula_check: need l_deg >= param_deg for T0^r words");
    JTable jt = build_j_table(caps.param_deg, caps);
    Mat2 G = matrix_substitution(jt, mat_X(caps), mat_neg(mat_Y(caps)), caps);
    TruncSeries series = hg_formal_series(caps);
    return OiCheck{G.e[0][0] - series, series - oi_rhs(caps)};
}

std::map<Word, TruncSeries> kz_ode_residual(int wmax, SeriesCaps caps) {
    if (caps.l_deg < wmax)
        throw std::invalid_argument("kz_ode_residual: need l_deg >= wmax");
    JTable jt = build_j_table(wmax, caps);
    TruncSeries w = TruncSeries::var_w(caps);
    TruncSeries one = TruncSeries::one(caps);
    TruncSeries wm1 = w - one;
    std::map<Word, TruncSeries> out;
    for (const auto& [word, jw] : jt) {
        TruncSeries res = wm1 * jw.z_times_ddz();
        Word t = word.tail();
        const TruncSeries& jtail = t.empty() ? one : jt.at(t);
        if (word.starts_with(Letter::T0))
            res = res - wm1 * jtail;
        else
            res = res - w * jtail;
        out.emplace(word, std::move(res));
    }
    return out;
}

bool mpl_methods_agree(int wt_max, SeriesCaps caps, std::string* first_mismatch) {
    for (int wt = 1; wt <= wt_max; ++wt) {
        for (const auto& idx : enumerate_compositions(wt)) {
            TruncSeries s1 = mpl_series(idx, caps, MplMethod::DefiningSum);
            TruncSeries s2 = mpl_series(idx, caps, MplMethod::OdeRecursion);
            if (!(s1 - s2).is_zero()) {
                if (first_mismatch) {
                    std::string name = "Li_(";
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        name += (i ? "," : "") + std::to_string(idx[i]);
                    *first_mismatch = name + ")";
                }
                return false;
            }
        }
    }
    return true;
}

namespace {

// log(1-w) as an honest w-series (no symbol involved).
TruncSeries log_one_minus_w(SeriesCaps caps) {
    TruncSeries out(caps);
    for (int i = 1; i <= caps.w_ord; ++i)
        out.set_coeff(Mono{0, 0, 0, i, 0}, Rational(-1, Int(i)));
    return out;
}

} // namespace

std::vector<IdentityItem> identity_checks(SeriesCaps caps, bool include_v10) {
    std::vector<IdentityItem> items;

    // Euler transformation: F(a,b;c;z) = (1-z)^{c-a-b} F(c-a,c-b;c;z),
    // with (1-z)^{c-a-b} = (1-z) * exp((c1-a-b) log(1-z)).
    {
        TruncSeries a = TruncSeries::var_a(caps), b = TruncSeries::var_b(caps);
        TruncSeries c1 = TruncSeries::var_c1(caps);
        TruncSeries one = TruncSeries::one(caps);
        TruncSeries F = hg_formal_series(caps);
        TruncSeries inner = hg_series_from(one + c1 - a, one + c1 - b, one + c1, caps);
        TruncSeries pref =
            (one - TruncSeries::var_w(caps)) * ((c1 - a - b) * log_one_minus_w(caps)).exp();
        items.push_back({"euler", F - pref * inner});
    }

    // Kummer row of the solution matrix at 0, entries (1,1) and (1,2); the
    // second entry clears its 1/b pole, so it runs one parameter degree higher.
    {
        JTable jt = build_j_table(caps.param_deg, caps);
        Mat2 G = matrix_substitution(jt, mat_X(caps), mat_neg(mat_Y(caps)), caps);
        items.push_back({"kummer01_entry11", G.e[0][0] - hg_formal_series(caps)});
    }
    {
        SeriesCaps up = caps;
        up.param_deg += 1;
        up.l_deg = std::max(up.l_deg, up.param_deg);
        JTable jt = build_j_table(up.param_deg, up);
        Mat2 G = matrix_substitution(jt, mat_X(up), mat_neg(mat_Y(up)), up);
        TruncSeries a = TruncSeries::var_a(up), b = TruncSeries::var_b(up);
        TruncSeries c1 = TruncSeries::var_c1(up);
        TruncSeries one = TruncSeries::one(up);
        TruncSeries u = -c1;
        // b*[V01]_12 = b*[G]_11 + u*[G]_12  vs  b * z^{1-c} F(b+1-c, a+1-c; 2-c; z)
        TruncSeries lhs = b * G.e[0][0] + u * G.e[0][1];
        TruncSeries rhs =
            b * (TruncSeries::var_l(up) * u).exp() * hg_series_from(b - c1, a - c1, one - c1, up);
        items.push_back({"kummer01_entry12", lhs - rhs});
    }

    if (include_v10) {
        SeriesCaps up = caps;
        up.param_deg += 1;
        up.l_deg = std::max(up.l_deg, up.param_deg);
        JTable jt = build_j_table(up.param_deg, up);
        // G_10(X,-Y)(z) = G_01(-Y, X)(1-z): letters swap to (-Y, X), and the
        // w coordinate now plays the role of 1-z.
        Mat2 G10 = matrix_substitution(jt, mat_neg(mat_Y(up)), mat_X(up), up);
        TruncSeries a = TruncSeries::var_a(up), b = TruncSeries::var_b(up);
        TruncSeries c1 = TruncSeries::var_c1(up);
        TruncSeries one = TruncSeries::one(up);
        TruncSeries v = a + b - c1;
        // v*[V10]_11 = v*[G10]_11 - a*[G10]_12  vs  v * F(a,b;v;w)
        items.push_back(
            {"v10_entry11", v * G10.e[0][0] - a * G10.e[0][1] - v_times_hg_lower_v(up)});
        // b*[V10]_12 = (v-1)*[G10]_12  vs  b * (1-z)^{c-a-b} F(c-a,c-b;c-a-b+1;1-z)
        // with (1-z)^{c-a-b} = w^{1-v} = w * exp(-v L1) in the w chart.
        TruncSeries rhs = b * TruncSeries::var_w(up) *
                          (-(TruncSeries::var_l(up) * v)).exp() *
                          hg_series_from(one + c1 - a, one + c1 - b,
                                         TruncSeries::constant(2, up) - v, up);
        items.push_back({"v10_entry12", (v - one) * G10.e[0][1] - rhs});
    }

    {
        // Row identity behind the disk-infinity basis pair:
        // G_inf1(X,-Y)(z) = G_01(Y-X, -Y)(1/z), post-multiplied by
        // [[1,1],[-a/b,-1]]; in the chart w = 1/z with L = Log(1/z),
        //   [V_inf1]_11 = z^-a F(a, a+1-c; a-b+1; w) = exp(aL) F(a, a-c1; 1+a-b; w)
        //   [V_inf1]_12 = z^-b F(b, b+1-c; b-a+1; w) = exp(bL) F(b, b-c1; 1+b-a; w)
        SeriesCaps up = caps;
        up.param_deg += 1;
        up.l_deg = std::max(up.l_deg, up.param_deg);
        JTable jt = build_j_table(up.param_deg, up);
        Mat2 YmX = mat_Y(up);
        {
            Mat2 X = mat_X(up);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    YmX.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        YmX.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                        X.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        Mat2 G = matrix_substitution(jt, YmX, mat_neg(mat_Y(up)), up);
        TruncSeries a = TruncSeries::var_a(up), b = TruncSeries::var_b(up);
        TruncSeries c1 = TruncSeries::var_c1(up);
        TruncSeries one = TruncSeries::one(up);
        TruncSeries L = TruncSeries::var_l(up);
        // b*[V]_11 = b*[G]_11 - a*[G]_12, b*[V]_12 = b*[G]_11 - b*[G]_12
        TruncSeries lhs11 = b * G.e[0][0] - a * G.e[0][1];
        TruncSeries rhs11 = b * (a * L).exp() * hg_series_from(a, a - c1, one + a - b, up);
        items.push_back({"vinf1_entry11", lhs11 - rhs11});
        TruncSeries lhs12 = b * G.e[0][0] - b * G.e[0][1];
        TruncSeries rhs12 = b * (b * L).exp() * hg_series_from(b, b - c1, one + b - a, up);
        items.push_back({"vinf1_entry12", lhs12 - rhs12});
    }

    return items;
}

} // namespace phg
