#pragma once

#include "phg/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace phg {

// Which of the evaluation hypotheses hold for a parameter pack at prime p.
// Every disk evaluator names the flags it needs and refuses to run otherwise.
struct HypothesisFlags {
    bool alpha_in_pZ = false;      // |alpha|_p < 1
    bool beta_in_pZ = false;       // |beta|_p < 1
    bool c_minus_1_in_pZ = false;  // |gamma - 1|_p < 1
    bool alpha_in_Zp = false;
    bool beta_in_Zp = false;
    bool gamma_in_Zp = false;
    bool beta_nonzero = false;
    bool gamma_not_nonpositive_integer = false;
    bool apb_minus_c_not_nonzero_integer = false; // alpha+beta-gamma avoids nonzero integers
    bool a_minus_b_not_nonzero_integer = false;   // alpha-beta avoids nonzero integers

    std::vector<std::pair<std::string, bool>> named() const;
};

// The parameter pack (alpha, beta, gamma) with the derived mu = 1 - gamma
// and nu = alpha + beta + 1 - gamma. Parameters are exact rationals.
struct HGParams {
    Rational alpha;
    Rational beta;
    Rational gamma;

    Rational mu() const { return 1 - gamma; }
    Rational nu() const { return alpha + beta + 1 - gamma; }

    HypothesisFlags flags(std::int64_t p) const;
};

} // namespace phg
