#include "phg/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace phg {

std::string Mono::str() const {
    std::ostringstream out;
    auto emit = [&](const char* name, int e) {
        if (e == 0)
            return;
        if (out.tellp() > 0)
            out << "*";
        out << name;
        if (e > 1)
            out << "^" << e;
    };
    emit("a", a);
    emit("b", b);
    emit("c1", c1);
    emit("w", w);
    emit("L", l);
    if (out.tellp() == 0)
        out << "1";
    return out.str();
}

TruncSeries::Key TruncSeries::key(const Mono& m) {
    return static_cast<Key>(m.a) | (static_cast<Key>(m.b) << 4) |
           (static_cast<Key>(m.c1) << 8) | (static_cast<Key>(m.l) << 12) |
           (static_cast<Key>(m.w) << 16);
}

Mono TruncSeries::unkey(Key k) {
    Mono m;
    m.a = static_cast<int>(k & 0xF);
    m.b = static_cast<int>((k >> 4) & 0xF);
    m.c1 = static_cast<int>((k >> 8) & 0xF);
    m.l = static_cast<int>((k >> 12) & 0xF);
    m.w = static_cast<int>(k >> 16);
    return m;
}

bool TruncSeries::within(const Mono& m) const {
    if (m.a < 0 || m.b < 0 || m.c1 < 0 || m.w < 0 || m.l < 0)
        return false;
    if (m.param_total() > caps_.param_deg || m.w > caps_.w_ord || m.l > caps_.l_deg)
        return false;
    if (caps_.param_deg > 15 || caps_.l_deg > 15)
        throw std::invalid_argument("TruncSeries: caps exceed packing width");
    return true;
}

TruncSeries TruncSeries::constant(const Rational& c, SeriesCaps caps) {
    TruncSeries s(caps);
    if (c != 0)
        s.coeffs_.emplace(key(Mono{}), c);
    return s;
}

TruncSeries TruncSeries::monomial(const Mono& m, const Rational& c, SeriesCaps caps) {
    TruncSeries s(caps);
    if (c != 0 && s.within(m))
        s.coeffs_.emplace(key(m), c);
    return s;
}

Rational TruncSeries::coeff(const Mono& m) const {
    auto it = coeffs_.find(key(m));
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncSeries::set_coeff(const Mono& m, const Rational& c) {
    if (!within(m))
        return;
    if (c == 0)
        coeffs_.erase(key(m));
    else
        coeffs_[key(m)] = c;
}

void TruncSeries::add_coeff(const Mono& m, const Rational& c) {
    if (c == 0 || !within(m))
        return;
    auto [it, inserted] = coeffs_.try_emplace(key(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries out(caps_);
    for (const auto& [k, c] : coeffs_)
        out.coeffs_.emplace(k, -c);
    return out;
}

TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
    if (!(x.caps_ == y.caps_))
        throw std::invalid_argument("TruncSeries: caps mismatch");
    TruncSeries out = x;
    for (const auto& [k, c] : y.coeffs_) {
        auto [it, inserted] = out.coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                out.coeffs_.erase(it);
        }
    }
    return out;
}

TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) {
    return x + (-y);
}

TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
    if (!(x.caps_ == y.caps_))
        throw std::invalid_argument("TruncSeries: caps mismatch");
    TruncSeries out(x.caps_);
    for (const auto& [kx, cx] : x.coeffs_) {
        Mono mx = TruncSeries::unkey(kx);
        for (const auto& [ky, cy] : y.coeffs_) {
            Mono my = TruncSeries::unkey(ky);
            Mono m{mx.a + my.a, mx.b + my.b, mx.c1 + my.c1, mx.w + my.w, mx.l + my.l};
            out.add_coeff(m, cx * cy);
        }
    }
    return out;
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
    TruncSeries out(caps_);
    if (c == 0)
        return out;
    for (const auto& [k, v] : coeffs_)
        out.coeffs_.emplace(k, v * c);
    return out;
}

TruncSeries TruncSeries::inverse() const {
    Rational c0 = coeff(Mono{});
    if (c0 == 0)
        throw std::invalid_argument("TruncSeries::inverse: zero constant term");
    // A = c0 (1 - B) with B of positive total degree; 1/A = (1/c0) sum B^j
    TruncSeries B = one(caps_) - scaled(1 / c0);
    TruncSeries acc = one(caps_);
    TruncSeries power = one(caps_);
    int max_steps = caps_.param_deg + caps_.w_ord + caps_.l_deg + 1;
    for (int j = 1; j <= max_steps; ++j) {
        power = power * B;
        if (power.is_zero())
            break;
        acc = acc + power;
    }
    return acc.scaled(1 / c0);
}

TruncSeries TruncSeries::exp() const {
    if (coeff(Mono{}) != 0)
        throw std::invalid_argument("TruncSeries::exp: nonzero constant term");
    TruncSeries acc = one(caps_);
    TruncSeries power = one(caps_);
    Rational fact = 1;
    int max_steps = caps_.param_deg + caps_.w_ord + caps_.l_deg + 1;
    for (int j = 1; j <= max_steps; ++j) {
        power = power * (*this);
        if (power.is_zero())
            break;
        fact *= j;
        acc = acc + power.scaled(1 / fact);
    }
    return acc;
}

TruncSeries TruncSeries::z_times_ddz() const {
    TruncSeries out(caps_);
    for (const auto& [k, c] : coeffs_) {
        Mono m = unkey(k);
        if (m.w != 0)
            out.add_coeff(m, c * m.w);
        if (m.l != 0) {
            Mono shifted = m;
            shifted.l -= 1;
            out.add_coeff(shifted, c * m.l);
        }
    }
    return out;
}

TruncSeries TruncSeries::subst_params(const TruncSeries& ia, const TruncSeries& ib,
                                      const TruncSeries& ic1) const {
    for (const TruncSeries* img : {&ia, &ib, &ic1})
        if (img->coeff(Mono{}) != 0)
            throw std::invalid_argument("subst_params: image has nonzero constant term");
    int cap = caps_.param_deg;
    std::vector<TruncSeries> pa{one(caps_)}, pb{one(caps_)}, pc{one(caps_)};
    for (int j = 1; j <= cap; ++j) {
        pa.push_back(pa.back() * ia);
        pb.push_back(pb.back() * ib);
        pc.push_back(pc.back() * ic1);
    }
    TruncSeries out(caps_);
    for (const auto& [k, c] : coeffs_) {
        Mono m = unkey(k);
        TruncSeries term = pa[static_cast<std::size_t>(m.a)] *
                           pb[static_cast<std::size_t>(m.b)] *
                           pc[static_cast<std::size_t>(m.c1)];
        Mono rest{0, 0, 0, m.w, m.l};
        out = out + (term * monomial(rest, c, caps_));
    }
    return out;
}

std::optional<std::pair<Mono, Rational>> TruncSeries::first_nonzero() const {
    if (coeffs_.empty())
        return std::nullopt;
    auto order = [](const Mono& x, const Mono& y) {
        auto tx = std::tuple(x.w, x.l, x.param_total(), x.a, x.b, x.c1);
        auto ty = std::tuple(y.w, y.l, y.param_total(), y.a, y.b, y.c1);
        return tx < ty;
    };
    const Rational* best_c = nullptr;
    Mono best;
    for (const auto& [k, c] : coeffs_) {
        Mono m = unkey(k);
        if (!best_c || order(m, best)) {
            best = m;
            best_c = &c;
        }
    }
    return std::make_pair(best, *best_c);
}

std::string TruncSeries::str(std::size_t max_terms) const {
    if (coeffs_.empty())
        return "0";
    std::vector<std::pair<Mono, Rational>> terms;
    terms.reserve(coeffs_.size());
    for (const auto& [k, c] : coeffs_)
        terms.emplace_back(unkey(k), c);
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        auto tx = std::tuple(x.first.w, x.first.l, x.first.param_total(), x.first.a, x.first.b,
                             x.first.c1);
        auto ty = std::tuple(y.first.w, y.first.l, y.first.param_total(), y.first.a, y.first.b,
                             y.first.c1);
        return tx < ty;
    });
    std::ostringstream out;
    std::size_t shown = 0;
    for (const auto& [m, c] : terms) {
        if (shown == max_terms) {
            out << " + ...";
            break;
        }
        if (shown > 0)
            out << " + ";
        out << "(" << to_string(c) << ")*" << m.str();
        ++shown;
    }
    return out.str();
}

} // namespace phg
