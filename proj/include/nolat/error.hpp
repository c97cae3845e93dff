#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nolat {

enum class Errc {
    InvalidArgument,
    DimensionMismatch,
    NegativeInput,
    NotSymmetric,
    NotPositiveDefinite,
    RationalizationFailed,
    DimensionGuardExceeded,
    PairCountGuard,
    CombinatorialGuard,
    FewerThanTwoPairs,
    NotWellRounded,
    SearchExhausted,
    VerificationFailed,
    ParseError,
};

std::string_view errc_name(Errc code);

/// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace nolat
