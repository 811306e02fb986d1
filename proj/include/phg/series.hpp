#pragma once

#include "phg/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

namespace phg {

// Truncation caps: total degree in the parameters (a, b, c1), order in the
// disk coordinate w, and degree in the formal log symbol L. Arithmetic
// truncates symmetrically, so ring axioms hold exactly within the caps.
struct SeriesCaps {
    int param_deg = 5;
    int w_ord = 10;
    int l_deg = 5;

    friend bool operator==(const SeriesCaps&, const SeriesCaps&) = default;
};

struct Mono {
    int a = 0, b = 0, c1 = 0, w = 0, l = 0;

    int param_total() const { return a + b + c1; }
    std::string str() const;
};

// Exact-rational power series in Q[a, b, c1][[w]][L], truncated to caps.
// Every value records the caps it was computed under.
class TruncSeries {
public:
    explicit TruncSeries(SeriesCaps caps) : caps_(caps) {}

    static TruncSeries zero(SeriesCaps caps) { return TruncSeries(caps); }
    static TruncSeries constant(const Rational& c, SeriesCaps caps);
    static TruncSeries one(SeriesCaps caps) { return constant(1, caps); }
    static TruncSeries var_a(SeriesCaps caps) { return monomial({1, 0, 0, 0, 0}, 1, caps); }
    static TruncSeries var_b(SeriesCaps caps) { return monomial({0, 1, 0, 0, 0}, 1, caps); }
    static TruncSeries var_c1(SeriesCaps caps) { return monomial({0, 0, 1, 0, 0}, 1, caps); }
    static TruncSeries var_w(SeriesCaps caps) { return monomial({0, 0, 0, 1, 0}, 1, caps); }
    static TruncSeries var_l(SeriesCaps caps) { return monomial({0, 0, 0, 0, 1}, 1, caps); }
    static TruncSeries monomial(const Mono& m, const Rational& c, SeriesCaps caps);

    const SeriesCaps& caps() const { return caps_; }

    Rational coeff(const Mono& m) const;
    void set_coeff(const Mono& m, const Rational& c);
    void add_coeff(const Mono& m, const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y);
    friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y);
    friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y);
    TruncSeries scaled(const Rational& c) const;

    // Multiplicative inverse; requires nonzero constant term.
    TruncSeries inverse() const;
    // exp of a series with zero constant term (nilpotent within caps).
    TruncSeries exp() const;
    // w * d/dw acting on Q[[w]][L] with d/dw L = 1/w:
    // w^n L^j -> n w^n L^j + j w^n L^(j-1).
    TruncSeries z_times_ddz() const;

    // Substitute zero-constant-term images for the parameters a, b, c1.
    TruncSeries subst_params(const TruncSeries& ia, const TruncSeries& ib,
                             const TruncSeries& ic1) const;

    // First nonzero monomial in the documented order (w, l, total, a, b, c1).
    std::optional<std::pair<Mono, Rational>> first_nonzero() const;

    std::string str(std::size_t max_terms = 24) const;

private:
    using Key = std::uint32_t;
    static Key key(const Mono& m);
    static Mono unkey(Key k);
    bool within(const Mono& m) const;

    SeriesCaps caps_;
    std::unordered_map<Key, Rational> coeffs_;
};

} // namespace phg
