#include "phg/hg_params.hpp"

namespace phg {

namespace {
bool in_pZ(const Rational& q, std::int64_t p) {
    return ord_rational(q, p).value_or(1) >= 1;
}
bool in_Zp(const Rational& q, std::int64_t p) {
    return ord_rational(q, p).value_or(1) >= 0;
}
} // namespace

HypothesisFlags HGParams::flags(std::int64_t p) const {
    HypothesisFlags f;
    f.alpha_in_pZ = in_pZ(alpha, p);
    f.beta_in_pZ = in_pZ(beta, p);
    f.c_minus_1_in_pZ = in_pZ(gamma - 1, p);
    f.alpha_in_Zp = in_Zp(alpha, p);
    f.beta_in_Zp = in_Zp(beta, p);
    f.gamma_in_Zp = in_Zp(gamma, p);
    f.beta_nonzero = beta != 0;
    f.gamma_not_nonpositive_integer = !is_nonpositive_integer(gamma);
    f.apb_minus_c_not_nonzero_integer = !is_nonzero_integer(alpha + beta - gamma);
    f.a_minus_b_not_nonzero_integer = !is_nonzero_integer(alpha - beta);
    return f;
}

std::vector<std::pair<std::string, bool>> HypothesisFlags::named() const {
    return {
        {"alpha_in_pZ", alpha_in_pZ},
        {"beta_in_pZ", beta_in_pZ},
        {"c_minus_1_in_pZ", c_minus_1_in_pZ},
        {"alpha_in_Zp", alpha_in_Zp},
        {"beta_in_Zp", beta_in_Zp},
        {"gamma_in_Zp", gamma_in_Zp},
        {"beta_nonzero", beta_nonzero},
        {"gamma_not_nonpositive_integer", gamma_not_nonpositive_integer},
        {"apb_minus_c_not_nonzero_integer", apb_minus_c_not_nonzero_integer},
        {"a_minus_b_not_nonzero_integer", a_minus_b_not_nonzero_integer},
    };
}

} // namespace phg
