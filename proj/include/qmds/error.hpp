#pragma once

#include <stdexcept>
#include <string>

namespace qmds {

enum class Errc {
    NonPrime,
    TableBudgetExceeded,
    DivisionByZero,
    NotInBaseField,
    ZeroInput,
    DimensionMismatch,
    BadShape,
    NotFound,
    InvalidCode,
    NotSelfOrthogonal,
    DimensionTooLarge,
    NotMds,
    DistanceTooSmall,
    BudgetExceeded,
    HypothesisViolated,
    SolvabilityRouteFailed,
    ParseError,
    VerificationFailed,
};

inline const char* to_string(Errc c) noexcept
{
    switch (c) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::TableBudgetExceeded: return "TableBudgetExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInBaseField: return "NotInBaseField";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadShape: return "BadShape";
    case Errc::NotFound: return "NotFound";
    case Errc::InvalidCode: return "InvalidCode";
    case Errc::NotSelfOrthogonal: return "NotSelfOrthogonal";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::NotMds: return "NotMds";
    case Errc::DistanceTooSmall: return "DistanceTooSmall";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::SolvabilityRouteFailed: return "SolvabilityRouteFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace qmds
