#include "surreal/error.hpp"

namespace surreal {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::zero_division: return "ZeroDivision";
    case ErrorKind::zero_value: return "ZeroValue";
    case ErrorKind::indeterminate: return "Indeterminate";
    case ErrorKind::indeterminate_leading: return "IndeterminateLeading";
    case ErrorKind::indeterminate_split: return "IndeterminateSplit";
    case ErrorKind::not_positive_infinite: return "NotPositiveInfinite";
    case ErrorKind::real_part_not_zero: return "RealPartNotZero";
    case ErrorKind::nonpositive_argument: return "NonpositiveArgument";
    case ErrorKind::nonunital_leading_coefficient: return "NonunitalLeadingCoefficient";
    case ErrorKind::unsupported_tails: return "UnsupportedTails";
    case ErrorKind::not_exact: return "NotExact";
    case ErrorKind::not_log_atomic: return "NotLogAtomic";
    case ErrorKind::truncated_path: return "TruncatedPath";
    case ErrorKind::constant_value: return "ConstantValue";
    case ErrorKind::needs_deeper_kappa: return "NeedsDeeperKappa";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::domain_error: return "DomainError";
    case ErrorKind::unknown_suite: return "UnknownSuite";
    }
    return "Unknown";
}

bool is_indeterminate(ErrorKind kind) noexcept
{
    return kind == ErrorKind::indeterminate || kind == ErrorKind::indeterminate_leading ||
           kind == ErrorKind::indeterminate_split || kind == ErrorKind::truncated_path;
}

void raise(ErrorKind kind, const std::string& what)
{
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

} // namespace surreal
