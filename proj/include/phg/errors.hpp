#pragma once

#include <stdexcept>
#include <string>

namespace phg {

// A stated hypothesis of one of the evaluation routines does not hold.
// `flag` names the violated requirement so callers (and the CLI) can
// report exactly which precondition failed.
class hypothesis_error : public std::domain_error {
public:
    hypothesis_error(std::string flag, const std::string& detail)
        : std::domain_error("hypothesis violated [" + flag + "]: " + detail),
          flag_(std::move(flag)) {}

    const std::string& flag() const noexcept { return flag_; }

private:
    std::string flag_;
};

// Input lies on a residue disk the toolkit does not evaluate
// (reduction is a root of unity other than 0, 1, infinity).
class unsupported_disk_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The requested result cannot be produced at the working precision
// (division by an inexact zero, exhausted digits, p^N above the cap).
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace phg
